#include "spinpoly/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>

namespace spinpoly {

long euler_phi(long N) {
  long r = N;
  long n = N;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

std::vector<long> divisors_of(long N) {
  std::vector<long> ds;
  for (long d = 1; d * d <= N; ++d) {
    if (N % d == 0) {
      ds.push_back(d);
      if (d != N / d) ds.push_back(N / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

namespace {

struct FieldData {
  long N = 1;
  int d = 1;                          // phi(N)
  std::vector<Int> phi;               // Phi_N, degrees 0..d, phi[d] = 1
  std::vector<std::vector<Int>> pows; // pows[t] = x^{d+t} mod Phi_N, length d
};

// Exact division of integer polynomials; divisor monic.
std::vector<Int> div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
  SP_CHECK(dn >= dd, "degree underflow in cyclotomic division");
  std::vector<Int> q(dn - dd + 1);
  for (int k = dn - dd; k >= 0; --k) {
    Int c = num[k + dd];
    q[k] = c;
    if (c != 0)
      for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  for (const auto& x : num) SP_CHECK(x == 0, "cyclotomic division remainder nonzero");
  return q;
}

std::vector<Int> phi_poly(long N, std::map<long, std::vector<Int>>& memo) {
  auto it = memo.find(N);
  if (it != memo.end()) return it->second;
  std::vector<Int> poly(N + 1);
  poly[0] = -1;
  poly[N] = 1; // x^N - 1
  for (long e : divisors_of(N))
    if (e < N) poly = div_exact(std::move(poly), phi_poly(e, memo));
  memo[N] = poly;
  return poly;
}

const FieldData& field(long N) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<FieldData>> cache;
  static std::map<long, std::vector<Int>> phimemo;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return *it->second;
  auto fd = std::make_unique<FieldData>();
  fd->N = N;
  fd->phi = phi_poly(N, phimemo);
  fd->d = (int)fd->phi.size() - 1;
  const int d = fd->d;
  const long maxdeg = std::max<long>(2L * d - 2, N - 1);
  std::vector<Int> cur(d);
  for (int j = 0; j < d; ++j) cur[j] = -fd->phi[j]; // x^d mod Phi_N
  for (long e = d; e <= maxdeg; ++e) {
    fd->pows.push_back(cur);
    Int lead = cur[d - 1];
    for (int j = d - 1; j >= 1; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (lead != 0)
      for (int j = 0; j < d; ++j) cur[j] -= lead * fd->phi[j];
  }
  const FieldData& ref = *fd;
  cache[N] = std::move(fd);
  return ref;
}

// Reduce a polynomial (arbitrary degree within the pows table) mod Phi_N.
std::vector<Rat> reduce_poly(const std::vector<Rat>& poly, const FieldData& fd) {
  const int d = fd.d;
  std::vector<Rat> out(d);
  for (int j = 0; j < (int)poly.size(); ++j) {
    if (poly[j] == 0) continue;
    if (j < d) {
      out[j] += poly[j];
    } else {
      SP_CHECK(j - d < (int)fd.pows.size(), "cyclotomic reduction table exceeded");
      const auto& row = fd.pows[j - d];
      for (int t = 0; t < d; ++t)
        if (row[t] != 0) out[t] += poly[j] * Rat(row[t]);
    }
  }
  return out;
}

int pdeg(const std::vector<Rat>& p) {
  for (int j = (int)p.size() - 1; j >= 0; --j)
    if (p[j] != 0) return j;
  return -1;
}

// Polynomial division over Q: returns remainder, exposes quotient via out-arg.
std::vector<Rat> pdivmod(std::vector<Rat> num, const std::vector<Rat>& den,
                         std::vector<Rat>& quot) {
  int dn = pdeg(num), dd = pdeg(den);
  SP_CHECK(dd >= 0, "polynomial division by zero");
  quot.assign(std::max(dn - dd + 1, 1), Rat(0));
  while (dn >= dd) {
    Rat c = num[dn] / den[dd];
    quot[dn - dd] = c;
    for (int j = 0; j <= dd; ++j) num[dn - dd + j] -= c * den[j];
    dn = pdeg(num);
  }
  return num;
}

// Solve A x = b exactly (A has linearly independent columns). Returns false
// when inconsistent.
bool solve_exact(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                 int rows, int cols, std::vector<Rat>& x) {
  std::vector<int> pivot_col_of_row(rows, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int j = r; j < rows; ++j)
      if (A[j][c] != 0) { pr = j; break; }
    if (pr < 0) continue;
    std::swap(A[pr], A[r]);
    std::swap(b[pr], b[r]);
    Rat inv = Rat(1) / A[r][c];
    for (int k = c; k < cols; ++k) A[r][k] *= inv;
    b[r] *= inv;
    for (int j = 0; j < rows; ++j) {
      if (j == r || A[j][c] == 0) continue;
      Rat f = A[j][c];
      for (int k = c; k < cols; ++k) A[j][k] -= f * A[r][k];
      b[j] -= f * b[r];
    }
    pivot_col_of_row[r] = c;
    ++r;
  }
  for (int j = r; j < rows; ++j)
    if (b[j] != 0) return false;
  x.assign(cols, Rat(0));
  for (int j = 0; j < r; ++j) x[pivot_col_of_row[j]] = b[j];
  return true;
}

CycNum make_from_poly(long N, const std::vector<Rat>& poly) {
  return CycNum::from_coeffs(N, reduce_poly(poly, field(N)));
}

} // namespace

CycNum::CycNum() : N_(1), c_(1) {}
CycNum::CycNum(long v) : N_(1), c_(1) { c_[0] = Rat(v); }
CycNum::CycNum(const Rat& v) : N_(1), c_(1) { c_[0] = v; }

CycNum CycNum::from_coeffs(long N, std::vector<Rat> coeffs) {
  SP_CHECK((long)coeffs.size() == euler_phi(N), "coefficient vector has wrong length");
  CycNum r;
  r.N_ = N;
  r.c_ = std::move(coeffs);
  return r;
}

CycNum CycNum::root_of_unity(long N, long k) {
  SP_CHECK(N >= 1, "root_of_unity needs positive order");
  k %= N;
  if (k < 0) k += N;
  if (k == 0) return one();
  long g = std::gcd(k, N);
  N /= g;
  k /= g;
  if (N == 1) return one();
  const FieldData& fd = field(N);
  std::vector<Rat> poly(k + 1);
  poly[k] = Rat(1);
  return from_coeffs(N, reduce_poly(poly, fd));
}

CycNum CycNum::sqrt2() { return root_of_unity(8, 1) + root_of_unity(8, 7); }
CycNum CycNum::i() { return root_of_unity(4, 1); }

bool CycNum::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return false;
  return true;
}

bool CycNum::is_integer() const { return is_rational() && c_[0].get_den() == 1; }

Rat CycNum::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
  return c_[0];
}

CycNum CycNum::promoted(long M) const {
  SP_CHECK(M % N_ == 0, "promotion target is not a conductor multiple");
  if (M == N_) return *this;
  const long q = M / N_;
  std::vector<Rat> poly((c_.size() - 1) * q + 1);
  for (size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != 0) poly[j * q] = c_[j];
  return make_from_poly(M, poly);
}

CycNum CycNum::reduced() const {
  if (is_rational()) return CycNum(c_[0]);
  const int dN = (int)c_.size();
  for (long m : divisors_of(N_)) {
    if (m == 1 || m == N_) continue;
    const int dm = (int)euler_phi(m);
    std::vector<std::vector<Rat>> A(dN, std::vector<Rat>(dm));
    for (int t = 0; t < dm; ++t) {
      std::vector<Rat> basis(dm);
      basis[t] = Rat(1);
      CycNum col = from_coeffs(m, std::move(basis)).promoted(N_);
      for (int r = 0; r < dN; ++r) A[r][t] = col.c_[r];
    }
    std::vector<Rat> x;
    if (solve_exact(std::move(A), c_, dN, dm, x)) return from_coeffs(m, std::move(x));
  }
  return *this;
}

CycNum CycNum::galois(long k) const {
  k %= N_;
  if (k < 0) k += N_;
  SP_CHECK(std::gcd(k, N_) == 1, "galois exponent not coprime to conductor");
  if (N_ <= 2 || k == 1) return *this;
  std::vector<Rat> poly(N_);
  for (size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != 0) poly[(j * k) % N_] += c_[j];
  return make_from_poly(N_, poly);
}

CycNum CycNum::conjugate() const {
  if (N_ <= 2) return *this;
  return galois(N_ - 1);
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycNum operator+(const CycNum& a, const CycNum& b) {
  if (a.N_ == b.N_) {
    CycNum r = a;
    for (size_t j = 0; j < r.c_.size(); ++j) r.c_[j] += b.c_[j];
    return r;
  }
  long M = lcm_ll(a.N_, b.N_);
  return a.promoted(M) + b.promoted(M);
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (a.N_ == 1) return b * a.c_[0];
  if (b.N_ == 1) return a * b.c_[0];
  if (a.N_ != b.N_) {
    long M = lcm_ll(a.N_, b.N_);
    return a.promoted(M) * b.promoted(M);
  }
  const FieldData& fd = field(a.N_);
  std::vector<Rat> conv(2 * fd.d - 1);
  for (int j = 0; j < fd.d; ++j) {
    if (a.c_[j] == 0) continue;
    for (int k = 0; k < fd.d; ++k)
      if (b.c_[k] != 0) conv[j + k] += a.c_[j] * b.c_[k];
  }
  return CycNum::from_coeffs(a.N_, reduce_poly(conv, fd));
}

CycNum operator*(const CycNum& a, const Rat& s) {
  CycNum r = a;
  for (auto& x : r.c_) x *= s;
  return r;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  if (is_rational()) return CycNum(Rat(1) / c_[0]);
  const FieldData& fd = field(N_);
  // Extended Euclid: track u with u * this ≡ gcd (mod Phi_N).
  std::vector<Rat> r0(fd.phi.size());
  for (size_t j = 0; j < fd.phi.size(); ++j) r0[j] = Rat(fd.phi[j]);
  std::vector<Rat> r1 = c_;
  std::vector<Rat> s0(1, Rat(0)), s1(1, Rat(1));
  while (pdeg(r1) > 0) {
    std::vector<Rat> q;
    std::vector<Rat> rem = pdivmod(r0, r1, q);
    r0 = std::move(r1);
    r1 = std::move(rem);
    // s_next = s0 - q * s1
    std::vector<Rat> s2(std::max(s0.size(), q.size() + s1.size()), Rat(0));
    for (size_t j = 0; j < s0.size(); ++j) s2[j] = s0[j];
    for (size_t j = 0; j < q.size(); ++j) {
      if (q[j] == 0) continue;
      for (size_t k = 0; k < s1.size(); ++k) s2[j + k] -= q[j] * s1[k];
    }
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  SP_CHECK(pdeg(r1) == 0, "cyclotomic gcd degenerated"); // gcd is a nonzero constant
  Rat inv = Rat(1) / r1[0];
  for (auto& x : s1) x *= inv;
  return make_from_poly(N_, s1);
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

bool CycNum::operator==(const CycNum& o) const {
  if (N_ == o.N_) return c_ == o.c_;
  long M = lcm_ll(N_, o.N_);
  return promoted(M).c_ == o.promoted(M).c_;
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum r = one(), base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

CycNum CycNum::sqrt_int(long m) {
  SP_CHECK(m >= 0, "sqrt_int needs a non-negative argument");
  static std::mutex mu;
  static std::map<long, CycNum> memo;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
  }
  CycNum result;
  if (m == 0) {
    result = zero();
  } else {
    long square = 1, free = 1, rest = m;
    for (long p = 2; p * p <= rest; ++p) {
      int e = 0;
      while (rest % p == 0) { rest /= p; ++e; }
      for (int t = 0; t < e / 2; ++t) square *= p;
      if (e % 2) free *= p;
    }
    if (rest > 1) free *= rest;
    result = CycNum(square);
    std::vector<long> primes;
    {
      long f = free;
      for (long p = 2; p * p <= f; ++p)
        if (f % p == 0) { primes.push_back(p); f /= p; }
      if (f > 1) primes.push_back(f);
    }
    for (long p : primes) {
      if (p == 2) {
        result *= sqrt2();
        continue;
      }
      // Quadratic Gauss sum g_p = sum legendre(k,p) zeta_p^k equals sqrt(p)
      // for p = 1 mod 4 and i*sqrt(p) for p = 3 mod 4.
      CycNum g = zero();
      for (long k = 1; k < p; ++k) {
        long ls = 1, base = k % p, e = (p - 1) / 2;
        while (e > 0) { // k^((p-1)/2) mod p
          if (e & 1) ls = (ls * base) % p;
          base = (base * base) % p;
          e >>= 1;
        }
        CycNum term = root_of_unity(p, k);
        g += (ls == 1) ? term : -term;
      }
      if (p % 4 == 3) g *= root_of_unity(4, 3); // divide out the i
      result *= g;
    }
    SP_CHECK(result * result == CycNum(m), "sqrt_int result fails to square back");
  }
  std::lock_guard<std::mutex> lk(mu);
  memo.emplace(m, result);
  return result;
}

std::string CycNum::str() const {
  if (is_rational()) return rat_to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 0) {
      os << rat_to_string(c_[0]);
      continue;
    }
    if (c_[j] != 1) os << "(" << rat_to_string(c_[j]) << ")*";
    os << "z" << N_;
    if (j > 1) os << "^" << j;
  }
  if (first) os << "0";
  return os.str();
}

std::complex<double> CycNum::approx() const {
  std::complex<double> z = 0;
  const double tau = 8.0 * std::atan(1.0);
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    double v = c_[j].get_d();
    z += v * std::polar(1.0, tau * double(j) / double(N_));
  }
  return z;
}

} // namespace spinpoly
