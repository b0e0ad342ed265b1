#pragma once
#include "spinpoly/character_table.hpp"
#include <set>
#include <utility>
#include <vector>

namespace spinpoly {

// Eigenvalue angles as reduced fractions j/d of a full turn: the pair
// (num, den) with 0 <= num < den and gcd(num, den) = 1 stands for
// exp(2*pi*i*num/den). Sets of them compare exactly.
using RootFrac = std::pair<long, long>;
using RootSet = std::set<RootFrac>;

RootFrac root_frac(long j, long d);
// The root as an exact cyclotomic number.
CycNum root_value(const RootFrac& r);
// All zeta with zeta^k = (+1 or -1 per eps), as reduced fractions.
RootSet full_root_set(long k, int eps);
// {-zeta : zeta in s}.
RootSet negated(const RootSet& s);

// Exact eigenvalue multiplicities of a group element acting in one spin
// representation, recovered from character values at its powers.
struct EigenSpectrum {
  long d{1};               // order of the group element
  long k{1};               // order of its image permutation (lcm of the type)
  int eps{1};              // +1 when g^k = 1, -1 when g^k = z
  std::vector<long> mult;  // size d; mult[j] = multiplicity of zeta_d^j

  long degree() const;          // sum of multiplicities
  long distinct_count() const;  // number of nonzero entries
  RootSet support() const;      // reduced fractions with positive multiplicity
};

// +1 when the k-th power of the class representative is the identity, -1
// when it is the central element z (k = lcm of the cycle type).
int class_epsilon(int n, const ClassLabel& label);

// Eigenvalue multiplicities of rho_row(g) for g in the given class, via the
// discrete Fourier transform of i -> chi(g^i) over Z/d. Exactness is
// enforced: a non-integer or negative multiplicity is an internal error.
EigenSpectrum spectrum(const SpinCharacterTable& table, const RowLabel& row,
                       const ClassLabel& label);

}  // namespace spinpoly
