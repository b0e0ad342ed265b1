#pragma once
#include "spinpoly/rational.hpp"
#include <complex>
#include <vector>

namespace spinpoly {

// Element of the cyclotomic field Q(zeta_N) in the power basis
// 1, zeta, ..., zeta^{phi(N)-1} of Q[x]/Phi_N(x).
//
// The conductor is explicit and grows lazily to the lcm on mixed-conductor
// arithmetic; reduced() finds the minimal conductor (used for serialization).
// Representation is the canonical reduction mod Phi_N, so equality at a fixed
// conductor is component-wise. Values are immutable in spirit: all operations
// return fresh values, and the only shared mutable state is the thread-safe
// Phi_N field cache.
class CycNum {
 public:
  CycNum();                     // zero, conductor 1
  explicit CycNum(long v);      // integer, conductor 1
  explicit CycNum(const Rat& v);

  static CycNum zero() { return CycNum(); }
  static CycNum one() { return CycNum(1); }
  // zeta_N^k (k arbitrary, reduced mod N; conductor lowered by gcd).
  static CycNum root_of_unity(long N, long k);
  static CycNum sqrt2();                    // zeta_8 + zeta_8^7
  static CycNum i();                        // zeta_4
  // Exact square root of a non-negative integer, via Gauss sums; the result
  // is verified to square back to m.
  static CycNum sqrt_int(long m);

  long conductor() const { return N_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_integer() const;
  Rat to_rational() const; // throws std::domain_error when not rational

  CycNum promoted(long M) const; // requires N | M; value-preserving
  CycNum reduced() const;        // minimal-conductor representative

  CycNum conjugate() const;   // zeta -> zeta^{-1}
  CycNum galois(long k) const; // zeta -> zeta^k, gcd(k, N) = 1
  CycNum inverse() const;      // throws std::domain_error on zero

  CycNum operator-() const;
  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b);
  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
  CycNum& operator/=(const CycNum& o) { return *this = *this / o; }

  friend CycNum operator*(const CycNum& a, const Rat& s);
  friend CycNum operator*(const Rat& s, const CycNum& a) { return a * s; }

  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }
  bool operator==(long v) const { return *this == CycNum(v); }
  bool operator!=(long v) const { return !(*this == v); }

  CycNum pow(long e) const;

  std::string str() const;             // debug rendering
  std::complex<double> approx() const; // debug only; never drives decisions

  // Construct from raw power-basis coefficients (length phi(N)).
  static CycNum from_coeffs(long N, std::vector<Rat> coeffs);

 private:
  long N_;
  std::vector<Rat> c_; // length phi(N_)
};

long euler_phi(long N);
std::vector<long> divisors_of(long N);

} // namespace spinpoly
