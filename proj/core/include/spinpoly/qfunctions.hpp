#pragma once
#include "spinpoly/partitions.hpp"
#include <map>

namespace spinpoly {

// Polynomial in the odd power sums p_1, p_3, p_5, ... with rational
// coefficients. Monomial keys are all-odd-parts partitions.
struct QPoly {
  std::map<Partition, Rat> terms; // zero coefficients never stored

  static QPoly zero() { return {}; }
  static QPoly one();
  static QPoly power_sum(int k); // p_k, k odd

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator*(const Rat& s) const;
  bool operator==(const QPoly&) const = default;

  Rat coeff(const Partition& alpha) const;
  bool is_zero() const { return terms.empty(); }
  std::string str() const;
};

// One-row Schur Q-polynomial q_r from the generating-function recurrence
// r q_r = sum_{k odd <= r} 2 p_k q_{r-k}.
QPoly q_row(int r);

// Schur Q-function Q_lambda in odd power-sum coordinates: q_r rows, the
// two-row alternating-sum formula, Pfaffian assembly for longer shapes.
QPoly q_function(const StrictPartition& lambda);

// Decompose a homogeneous degree-n element of the odd power-sum ring in the
// basis {Q_kappa : kappa in DP_n}. Hard-errors when f is not in the span.
std::map<StrictPartition, Rat> decompose_in_q_basis(const QPoly& f, int n);

// Coefficient of Q_lambda in Q_mu * Q_nu. Requires |mu| + |nu| = |lambda|.
Rat q_structure_constant(const StrictPartition& mu, const StrictPartition& nu,
                         const StrictPartition& lambda);

} // namespace spinpoly
