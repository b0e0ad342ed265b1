#include "spinpoly/minimal_polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace spinpoly {

namespace {

void poly_trim(CycPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

}  // namespace

CycPoly poly_zero() { return {}; }

CycPoly poly_const(const CycNum& c) {
  CycPoly p{c};
  poly_trim(p);
  return p;
}

CycPoly poly_monomial(const CycNum& c, long e) {
  SP_CHECK(e >= 0, "poly_monomial: negative exponent");
  if (c.is_zero()) return {};
  CycPoly p((size_t)e + 1, CycNum::zero());
  p[(size_t)e] = c;
  return p;
}

long poly_degree(const CycPoly& p) { return (long)p.size() - 1; }

CycPoly poly_add(const CycPoly& a, const CycPoly& b) {
  CycPoly out(std::max(a.size(), b.size()), CycNum::zero());
  for (size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
  poly_trim(out);
  return out;
}

CycPoly poly_neg(const CycPoly& a) {
  CycPoly out(a);
  for (auto& c : out) c = c * Rat(-1);
  return out;
}

CycPoly poly_mul(const CycPoly& a, const CycPoly& b) {
  if (a.empty() || b.empty()) return {};
  CycPoly out(a.size() + b.size() - 1, CycNum::zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] = out[i + j] + a[i] * b[j];
    }
  }
  poly_trim(out);
  return out;
}

void poly_divmod(const CycPoly& num, const CycPoly& den, CycPoly& quot, CycPoly& rem) {
  SP_CHECK(!den.empty(), "poly_divmod: division by zero polynomial");
  rem = num;
  poly_trim(rem);
  quot.clear();
  long dd = poly_degree(den);
  if (poly_degree(rem) >= dd) quot.assign((size_t)(poly_degree(rem) - dd + 1), CycNum::zero());
  CycNum lead_inv = den.back().inverse();
  while (poly_degree(rem) >= dd) {
    long shift = poly_degree(rem) - dd;
    CycNum coeff = rem.back() * lead_inv;
    quot[(size_t)shift] = coeff;
    for (long i = 0; i <= dd; ++i) {
      rem[(size_t)(shift + i)] = rem[(size_t)(shift + i)] - coeff * den[(size_t)i];
    }
    poly_trim(rem);
  }
  poly_trim(quot);
}

bool poly_equal(const CycPoly& a, const CycPoly& b) {
  return poly_add(a, poly_neg(b)).empty();
}

CycNum poly_eval(const CycPoly& p, const CycNum& x) {
  CycNum acc = CycNum::zero();
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

CycPoly poly_from_roots(const RootSet& roots) {
  CycPoly acc = poly_const(CycNum::one());
  for (const auto& r : roots) {
    CycPoly lin{CycNum::zero() - root_value(r), CycNum::one()};
    acc = poly_mul(acc, lin);
  }
  return acc;
}

std::string poly_str(const CycPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = p.size(); i-- > 0;) {
    const CycNum& c = p[i];
    if (c.is_zero()) continue;
    bool neg = false;
    std::string body;
    if (c.is_rational()) {
      Rat r = c.to_rational();
      if (r < 0) {
        neg = true;
        r = -r;
      }
      bool unit = (r == 1);
      if (!unit || i == 0) body = rat_to_string(r);
    } else {
      body = "(" + c.str() + ")";
    }
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    os << body;
    if (i > 0) {
      if (!body.empty()) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string tag_str(MinPolyTag tag) {
  switch (tag) {
    case MinPolyTag::Full: return "full";
    case MinPolyTag::Family3: return "family3";
    case MinPolyTag::Family5: return "family5";
    case MinPolyTag::Family15: return "family15";
    case MinPolyTag::BasicStd15: return "basic-std-15";
    case MinPolyTag::TableException: return "table-exception";
    case MinPolyTag::Generic: return "generic";
  }
  return "?";
}

namespace {

RootSet set_minus(const RootSet& a, const RootSet& b) {
  RootSet out;
  for (const auto& r : a)
    if (!b.count(r)) out.insert(r);
  return out;
}

RootSet set_union(const RootSet& a, const RootSet& b) {
  RootSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

std::string factor_str(const MinPolyFactor& f) {
  std::ostringstream os;
  os << "(x";
  if (f.k > 1) os << "^" << f.k;
  os << (f.eps == 1 ? " - 1" : " + 1") << ")";
  return os.str();
}

// Expand the factored form (product of (x^k - eps)^exponent) exactly.
CycPoly expand_factors(const std::vector<MinPolyFactor>& factors) {
  CycPoly num = poly_const(CycNum::one());
  CycPoly den = poly_const(CycNum::one());
  for (const auto& f : factors) {
    CycPoly base = poly_add(poly_monomial(CycNum::one(), f.k), poly_const(CycNum(-(long)f.eps)));
    int reps = f.exponent > 0 ? f.exponent : -f.exponent;
    for (int i = 0; i < reps; ++i) {
      if (f.exponent > 0)
        num = poly_mul(num, base);
      else
        den = poly_mul(den, base);
    }
  }
  CycPoly quot, rem;
  poly_divmod(num, den, quot, rem);
  SP_CHECK(rem.empty(), "expand_factors: factored form does not divide exactly");
  return quot;
}

}  // namespace

std::string MinPolyForm::str() const {
  if (factors.empty()) return poly_str(expanded);
  std::string num, den;
  int nnum = 0, nden = 0;
  for (const auto& f : factors) {
    int reps = f.exponent > 0 ? f.exponent : -f.exponent;
    for (int i = 0; i < reps; ++i) {
      if (f.exponent > 0) {
        num += factor_str(f);
        ++nnum;
      } else {
        den += factor_str(f);
        ++nden;
      }
    }
  }
  if (nden == 0) {
    if (nnum == 1) {
      // Single factor: drop the enclosing parentheses.
      return num.substr(1, num.size() - 2);
    }
    return num;
  }
  if (nden > 1) den = "(" + den + ")";
  return num + "/" + den;
}

bool same_polynomial(const MinPolyForm& a, const MinPolyForm& b) {
  return a.support == b.support;
}

MinPolyForm form_from_support(const RootSet& support, long k, int eps,
                              const SupportPool* table_pool) {
  SP_CHECK(k >= 1 && !support.empty(), "form_from_support: empty support");
  for (const auto& r : support) {
    long rem = (r.first * k) % r.second;
    if (eps == 1)
      SP_CHECK(rem == 0, "form_from_support: root is not a k-th root of 1");
    else
      SP_CHECK(2 * rem == r.second, "form_from_support: root is not a k-th root of -1");
  }

  MinPolyForm form;
  form.support = support;
  form.k = k;
  form.eps = eps;
  form.expanded = poly_from_roots(support);

  RootSet full = full_root_set(k, eps);
  if (support == full) {
    form.tag = MinPolyTag::Full;
    form.factors = {{k, eps, 1}};
  } else if (k % 3 == 0 && support == set_minus(full, full_root_set(k / 3, eps))) {
    form.tag = MinPolyTag::Family3;
    form.factors = {{k, eps, 1}, {k / 3, eps, -1}};
  } else if (k % 5 == 0 && support == set_minus(full, full_root_set(k / 5, eps))) {
    form.tag = MinPolyTag::Family5;
    form.factors = {{k, eps, 1}, {k / 5, eps, -1}};
  } else if (k % 15 == 0 &&
             support == set_minus(full, set_union(full_root_set(k / 3, eps),
                                                  full_root_set(k / 5, eps)))) {
    form.tag = MinPolyTag::Family15;
    form.factors = {{k, eps, 1}, {k / 15, eps, 1}, {k / 3, eps, -1}, {k / 5, eps, -1}};
  } else if (k % 15 == 0 && support == set_minus(full, full_root_set(k / 15, eps))) {
    form.tag = MinPolyTag::BasicStd15;
    form.factors = {{k, eps, 1}, {k / 15, eps, -1}};
  } else if (table_pool && table_pool->count(support)) {
    form.tag = MinPolyTag::TableException;
  } else {
    form.tag = MinPolyTag::Generic;
  }

  if (!form.factors.empty()) {
    SP_CHECK(poly_equal(expand_factors(form.factors), form.expanded),
             "form_from_support: factored form disagrees with expansion");
  }
  return form;
}

MinPolyForm minimal_polynomial(const EigenSpectrum& sp, const SupportPool* table_pool) {
  return form_from_support(sp.support(), sp.k, sp.eps, table_pool);
}

}  // namespace spinpoly
