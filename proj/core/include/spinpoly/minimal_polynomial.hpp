#pragma once
#include "spinpoly/spectrum.hpp"
#include <string>
#include <vector>

namespace spinpoly {

// Dense polynomial over the cyclotomic field, coefficients by ascending
// degree; the empty vector is the zero polynomial, and nonzero polynomials
// carry a nonzero leading coefficient.
using CycPoly = std::vector<CycNum>;

CycPoly poly_zero();
CycPoly poly_const(const CycNum& c);
// x^e with coefficient c.
CycPoly poly_monomial(const CycNum& c, long e);
long poly_degree(const CycPoly& p);  // -1 for zero
CycPoly poly_add(const CycPoly& a, const CycPoly& b);
CycPoly poly_neg(const CycPoly& a);
CycPoly poly_mul(const CycPoly& a, const CycPoly& b);
// Quotient/remainder with an invertible leading divisor coefficient.
void poly_divmod(const CycPoly& num, const CycPoly& den, CycPoly& quot, CycPoly& rem);
bool poly_equal(const CycPoly& a, const CycPoly& b);
CycNum poly_eval(const CycPoly& p, const CycNum& x);
// Monic product of (x - root) over the set.
CycPoly poly_from_roots(const RootSet& roots);
std::string poly_str(const CycPoly& p);

// Shape of a minimal polynomial. Full means all k-th roots of eps (the
// generic "k distinct roots" case); Family3/Family5/Family15/BasicStd15 are
// the four closed-form exception families; TableException marks a support
// listed in the embedded small-rank exception tables; Generic is anything
// else (rendered through its expanded form only).
enum class MinPolyTag { Full, Family3, Family5, Family15, BasicStd15, TableException, Generic };

std::string tag_str(MinPolyTag tag);

// One factor (x^k - eps)^exponent of a factored minimal polynomial.
struct MinPolyFactor {
  long k{1};
  int eps{1};
  int exponent{1};
};

struct MinPolyForm {
  MinPolyTag tag{MinPolyTag::Generic};
  std::vector<MinPolyFactor> factors;  // empty for Generic/TableException
  RootSet support;
  CycPoly expanded;  // monic product of (x - zeta) over the support
  long k{1};         // order of the underlying permutation
  int eps{1};        // sign of the central k-th power

  long degree() const { return (long)support.size(); }
  // "(x^15 - 1)/((x^5 - 1)(x^3 - 1))" when factors are known, otherwise the
  // expanded polynomial.
  std::string str() const;
};

bool same_polynomial(const MinPolyForm& a, const MinPolyForm& b);

// Known exceptional supports (used to tag small-rank table cases).
using SupportPool = std::set<RootSet>;

// Recognize the closed form of a support set (all elements must satisfy
// zeta^k = eps) and expand the monic polynomial. When table_pool is given,
// supports found in it that admit no factored family form are tagged
// TableException instead of Generic.
MinPolyForm form_from_support(const RootSet& support, long k, int eps,
                              const SupportPool* table_pool = nullptr);

// Minimal polynomial of the operator behind a spectrum: the monic product
// over its distinct eigenvalues, with the recognized closed form attached.
MinPolyForm minimal_polynomial(const EigenSpectrum& sp,
                               const SupportPool* table_pool = nullptr);

}  // namespace spinpoly
