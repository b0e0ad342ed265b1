#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinpoly/qfunctions.hpp"

using namespace spinpoly;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
StrictPartition SP(std::vector<int> v) { return StrictPartition(std::move(v)); }
QPoly p(int k) { return QPoly::power_sum(k); }
} // namespace

TEST_CASE("one-row polynomials from the generating function") {
  CHECK(q_row(0) == QPoly::one());
  CHECK(q_row(1) == p(1) * Rat(2));
  CHECK(q_row(2) == p(1) * p(1) * Rat(2));
  CHECK(q_row(3) == p(1) * p(1) * p(1) * rat(4, 3) + p(3) * rat(2, 3));
  CHECK(q_row(4) == p(1) * p(1) * p(1) * p(1) * rat(2, 3) + p(1) * p(3) * rat(4, 3));
  CHECK(q_row(5) == p(5) * rat(2, 5) + p(1) * p(1) * p(3) * rat(4, 3) +
                        p(1) * p(1) * p(1) * p(1) * p(1) * rat(4, 15));
}

TEST_CASE("Q for short shapes") {
  CHECK(q_function(SP({})) == QPoly::one());
  CHECK(q_function(SP({1})) == p(1) * Rat(2));
  CHECK(q_function(SP({2})).coeff(P({1, 1})) == 2);
  CHECK(q_function(SP({2, 1})) == p(1) * p(1) * p(1) * rat(4, 3) - p(3) * rat(4, 3));
  CHECK(q_function(SP({3, 1})) ==
        p(1) * p(1) * p(1) * p(1) * rat(4, 3) - p(1) * p(3) * rat(4, 3));
}

TEST_CASE("homogeneity on odd power sums") {
  for (int n = 1; n <= 10; ++n)
    for (auto& lam : strict_partitions_of(n)) {
      QPoly q = q_function(lam);
      CHECK(!q.is_zero());
      for (const auto& [mono, c] : q.terms) {
        CHECK(mono.n() == n);
        CHECK(classify_partition(mono).in_OP);
        (void)c;
      }
    }
}

TEST_CASE("decomposition in the Q basis is exact and sparse") {
  for (int n = 1; n <= 8; ++n)
    for (auto& lam : strict_partitions_of(n)) {
      auto dec = decompose_in_q_basis(q_function(lam), n);
      CHECK(dec.size() == 1);
      CHECK(dec.begin()->first == lam);
      CHECK(dec.begin()->second == 1);
    }
}

TEST_CASE("Q-function orthogonality for the 2^{-l(alpha)} z_alpha pairing") {
  // With <p_alpha, p_beta> = delta z_alpha 2^{-l(alpha)}, the Q-functions
  // satisfy <Q_lambda, Q_mu> = delta_{lambda,mu} 2^{l(lambda)}.
  for (int n = 1; n <= 9; ++n) {
    auto dps = strict_partitions_of(n);
    for (size_t a = 0; a < dps.size(); ++a)
      for (size_t b = a; b < dps.size(); ++b) {
        QPoly qa = q_function(dps[a]), qb = q_function(dps[b]);
        Rat pairing = 0;
        for (auto& [alpha, ca] : qa.terms) {
          Rat cb = qb.coeff(alpha);
          if (cb == 0) continue;
          Rat z{centralizer_order(alpha)};
          Rat half_pow{Int(1), Int(1) << alpha.parts.size()};
          pairing += ca * cb * z * half_pow;
        }
        Rat expect = 0;
        if (a == b) expect = Rat(Int(1) << dps[a].parts.size());
        CHECK(pairing == expect);
      }
  }
}

TEST_CASE("structure constants") {
  // Top term of a one-row product.
  CHECK(q_structure_constant(SP({3}), SP({2}), SP({5})) > 0);
  CHECK(q_structure_constant(SP({4}), SP({1}), SP({5})) > 0);
  // Q_{21} * Q_3 = 2 Q_{51} + 2 Q_{42} + Q_{321}.  The Q_{321} coefficient is
  // forced by the exact p-basis expansion (cross-checked by the principal
  // specialization at three variables: 8*19 = 80 + 64 + 8), so
  // f_{(2,1),(3)}^{(3,2,1)} = 1 while f_{(2,1),(2,1)}^{(3,2,1)} = 0.
  CHECK(q_structure_constant(SP({2, 1}), SP({3}), SP({3, 2, 1})) == 1);
  CHECK(q_structure_constant(SP({2, 1}), SP({2, 1}), SP({3, 2, 1})) == 0);
  CHECK(q_structure_constant(SP({2, 1}), SP({3}), SP({5, 1})) == 2);
  CHECK(q_structure_constant(SP({2, 1}), SP({3}), SP({4, 2})) == 2);
  CHECK(q_structure_constant(SP({2, 1}), SP({2, 1}), SP({4, 2})) == 4);
  // Symmetry in mu <-> nu, and non-negativity, over a small sweep.
  for (int n = 2; n <= 7; ++n)
    for (auto& lam : strict_partitions_of(n))
      for (int m = 1; m < n; ++m)
        for (auto& mu : strict_partitions_of(m))
          for (auto& nu : strict_partitions_of(n - m)) {
            Rat c1 = q_structure_constant(mu, nu, lam);
            Rat c2 = q_structure_constant(nu, mu, lam);
            CHECK(c1 == c2);
            CHECK(c1 >= 0);
          }
}
