#pragma once
#include "spinpoly/exception_tables.hpp"
#include "spinpoly/minimal_polynomial.hpp"

namespace spinpoly {

// Ranks where exceptional cells come from the embedded tables instead of
// the closed-form families.
inline bool table_covered(CoverGroup group, int n) {
  return group == CoverGroup::Sym ? n <= 8 : n <= 10;
}

// Which closed-form family (if any) the cell (lambda, mu) belongs to for
// ranks beyond table coverage:
//   - Family3:    lambda = (n), 3 is the unique part of mu divisible by 3,
//                 and 5 is not the unique part divisible by 5;
//   - Family5:    the 3 <-> 5 mirror image of Family3;
//   - Family15:   lambda = (n), 3 and 5 are parts of mu and every other
//                 part is coprime to 15;
//   - BasicStd15: lambda = (n-1,1) under the same condition on mu;
//   - Full otherwise (k = lcm(mu) distinct roots).
MinPolyTag family_tag(const StrictPartition& lambda, int n, const Partition& mu);

// Eigenvalue support of the family's closed form: all zeta with
// zeta^k = eps minus the roots removed by the denominator factors (every
// sign resolves to eps, the sign of the central k-th power).
RootSet family_support(MinPolyTag tag, long k, int eps);

// Process-wide memoized character tables (built once per (group, n)).
const SpinCharacterTable& shared_table(CoverGroup group, int n);

// Predicted minimal polynomial of the class acting in the given row: the
// embedded exception tables decide covered ranks (table cell if listed,
// full k-root polynomial otherwise); the closed-form families decide
// larger ranks. Signs are resolved concretely, never left as plus-minus.
MinPolyForm classify(CoverGroup group, int n, const RowLabel& row, const ClassLabel& label);

}  // namespace spinpoly
