#pragma once
#include "spinpoly/partitions.hpp"
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace spinpoly {

// Number of the form m / sqrt(2)^e with integer m and e >= 0.
// Canonical: zero is (0,0); otherwise reduce while m is even and e >= 2.
struct Zroot2 {
  Int m{0};
  int e{0};

  Zroot2() = default;
  Zroot2(Int mm, int ee);

  bool is_zero() const { return m == 0; }
  Zroot2 operator-() const;
  Zroot2 operator*(const Zroot2& o) const;
  Zroot2 operator+(const Zroot2& o) const;
  bool operator==(const Zroot2& o) const { return m == o.m && e == o.e; }
  Rat as_rational() const; // e must be even
  std::string str() const;
};

// Element of the real Clifford algebra on anticommuting generators
// e_1..e_n with e_i^2 = -1, stored as a sparse sum of square-free
// monomials e_S (bitmask S, bit i-1 for e_i, factors in increasing index
// order). The double cover of the symmetric group embeds here through
// t_j = (e_j - e_{j+1})/sqrt(2), with the central element z acting as the
// scalar -1.
struct CoverElement {
  int n{1};
  std::map<std::uint64_t, Zroot2> terms; // zero coefficients never stored

  static CoverElement zero(int n);
  static CoverElement one(int n);
  static CoverElement central(int n);           // z, the scalar -1
  static CoverElement generator(int n, int j);  // t_j, 1 <= j <= n-1

  bool operator==(const CoverElement& o) const { return terms == o.terms; }
  bool is_scalar(int value) const; // equals the scalar +-1 (value = +-1)
  std::string str() const;         // signed sum of e-monomials
};

CoverElement add(const CoverElement& a, const CoverElement& b);
CoverElement scale(const CoverElement& a, const Zroot2& c);
CoverElement multiply(const CoverElement& a, const CoverElement& b);
// Inverse of a group element (a product of generators and the center).
CoverElement inverse(const CoverElement& g);
CoverElement element_power(const CoverElement& g, long k); // any integer k
// Product t_{w_1} t_{w_2} ... over generator indices, left to right.
CoverElement generator_word(int n, const std::vector<int>& word);

// The permutation w with g e_i g^{-1} = +-e_{w(i)}; returns 1-based images.
std::vector<int> projection(const CoverElement& g);

// Adjacent-transposition word whose left-to-right generator product
// projects onto w (the word canonical_lift multiplies out).
std::vector<int> sorting_word(const std::vector<int>& w);

// t_W g t_W^{-1} for the generator word W, evaluated one generator at a
// time so the cost stays linear in the support of g.
CoverElement conjugate_by_word(const CoverElement& g, const std::vector<int>& word);

Partition cycle_type_of_permutation(const std::vector<int>& w);
int permutation_parity(const std::vector<int>& w); // 0 even, 1 odd

// A lift along the permutation's adjacent-transposition sorting word; the
// repo-wide sign convention for relative signs of lifted permutations.
CoverElement canonical_lift(const std::vector<int>& w, int n);

// +1 if g is the canonical lift of its projection, -1 if z times it;
// anything else is an internal error.
int sign_rel_canonical(const CoverElement& g);

} // namespace spinpoly
