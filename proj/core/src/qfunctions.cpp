#include "spinpoly/qfunctions.hpp"
#include "spinpoly/linsolve.hpp"

#include <mutex>
#include <sstream>

namespace spinpoly {

QPoly QPoly::one() {
  QPoly p;
  p.terms[Partition{}] = Rat(1);
  return p;
}

QPoly QPoly::power_sum(int k) {
  SP_CHECK(k >= 1 && k % 2 == 1, "power_sum index must be odd");
  QPoly p;
  p.terms[Partition({k})] = Rat(1);
  return p;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [mono, c] : o.terms) {
    Rat& dst = terms[mono];
    dst += c;
    if (dst == 0) terms.erase(mono);
  }
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [mono, c] : o.terms) {
    Rat& dst = terms[mono];
    dst -= c;
    if (dst == 0) terms.erase(mono);
  }
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Partition key = union_parts(ma, mb);
      Rat& dst = r.terms[key];
      dst += ca * cb;
      if (dst == 0) r.terms.erase(key);
    }
  return r;
}

QPoly QPoly::operator*(const Rat& s) const {
  QPoly r;
  if (s == 0) return r;
  for (const auto& [mono, c] : terms) r.terms[mono] = c * s;
  return r;
}

Rat QPoly::coeff(const Partition& alpha) const {
  auto it = terms.find(alpha);
  return it == terms.end() ? Rat(0) : it->second;
}

std::string QPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << rat_to_string(c) << ")";
    for (int p : mono.parts) os << "*p" << p;
  }
  return os.str();
}

QPoly q_row(int r) {
  static std::mutex mu;
  static std::vector<QPoly> memo;
  std::lock_guard<std::mutex> lk(mu);
  if (memo.empty()) memo.push_back(QPoly::one());
  while ((int)memo.size() <= r) {
    int m = (int)memo.size();
    QPoly acc;
    for (int k = 1; k <= m; k += 2)
      acc += QPoly::power_sum(k) * memo[m - k] * Rat(2);
    memo.push_back(acc * rat(1, m));
  }
  SP_CHECK(r >= 0, "q_row index negative");
  return memo[r];
}

namespace {

// Q_{(a,b)} for a > b >= 0 (two-row alternating-sum formula).
QPoly q_two_row(int a, int b) {
  if (b == 0) return q_row(a);
  QPoly r = q_row(a) * q_row(b);
  for (int i = 1; i <= b; ++i) {
    QPoly t = q_row(a + i) * q_row(b - i) * Rat(2);
    if (i % 2)
      r -= t;
    else
      r += t;
  }
  return r;
}

// Pfaffian expansion along the first row over the padded part list.
QPoly q_pfaffian(const std::vector<int>& xs) {
  if (xs.empty()) return QPoly::one();
  QPoly r;
  for (size_t j = 1; j < xs.size(); ++j) {
    std::vector<int> rest;
    for (size_t t = 1; t < xs.size(); ++t)
      if (t != j) rest.push_back(xs[t]);
    QPoly term = q_two_row(xs[0], xs[j]) * q_pfaffian(rest);
    if (j % 2)
      r += term;
    else
      r -= term;
  }
  return r;
}

} // namespace

QPoly q_function(const StrictPartition& lambda) {
  static std::mutex mu;
  static std::map<StrictPartition, QPoly> memo;
  std::lock_guard<std::mutex> lk(mu);
  auto it = memo.find(lambda);
  if (it != memo.end()) return it->second;
  std::vector<int> xs = lambda.parts;
  if (xs.size() % 2) xs.push_back(0);
  QPoly q = q_pfaffian(xs);
  memo.emplace(lambda, q);
  return q;
}

std::map<StrictPartition, Rat> decompose_in_q_basis(const QPoly& f, int n) {
  std::vector<StrictPartition> basis = strict_partitions_of(n);
  std::vector<Partition> monos = odd_partitions_of(n);
  const int rows = (int)monos.size(), cols = (int)basis.size();
  SP_CHECK(rows == cols, "OP/DP bases must have equal size");
  std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(cols));
  for (int c = 0; c < cols; ++c) {
    QPoly q = q_function(basis[c]);
    for (int r = 0; r < rows; ++r) A[r][c] = q.coeff(monos[r]);
  }
  std::vector<Rat> b(rows);
  for (int r = 0; r < rows; ++r) b[r] = f.coeff(monos[r]);
  // Every key of f must be a degree-n odd monomial.
  for (const auto& [mono, c] : f.terms)
    SP_CHECK(mono.n() == n && classify_partition(mono).in_OP,
             "decompose_in_q_basis input not homogeneous odd of degree n");
  std::vector<Rat> x;
  SP_CHECK(solve_exact_rat(std::move(A), std::move(b), rows, cols, x),
           "element does not lie in the span of the Q basis");
  std::map<StrictPartition, Rat> out;
  for (int c = 0; c < cols; ++c)
    if (x[c] != 0) out[basis[c]] = x[c];
  return out;
}

Rat q_structure_constant(const StrictPartition& mu, const StrictPartition& nu,
                         const StrictPartition& lambda) {
  SP_CHECK(mu.n() + nu.n() == lambda.n(),
           "structure constant needs |mu|+|nu| = |lambda|");
  QPoly prod = q_function(mu) * q_function(nu);
  auto dec = decompose_in_q_basis(prod, lambda.n());
  auto it = dec.find(lambda);
  return it == dec.end() ? Rat(0) : it->second;
}

} // namespace spinpoly
