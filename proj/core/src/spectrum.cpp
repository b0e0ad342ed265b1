#include "spinpoly/spectrum.hpp"

#include <numeric>

namespace spinpoly {

RootFrac root_frac(long j, long d) {
  SP_CHECK(d >= 1, "root denominator must be positive");
  j %= d;
  if (j < 0) j += d;
  long g = std::gcd(j, d);
  return {j / g, d / g};
}

CycNum root_value(const RootFrac& r) { return CycNum::root_of_unity(r.second, r.first); }

RootSet full_root_set(long k, int eps) {
  SP_CHECK(k >= 1 && (eps == 1 || eps == -1), "invalid root-set parameters");
  RootSet out;
  if (eps == 1) {
    for (long j = 0; j < k; ++j) out.insert(root_frac(j, k));
  } else {
    for (long j = 0; j < k; ++j) out.insert(root_frac(2 * j + 1, 2 * k));
  }
  return out;
}

RootSet negated(const RootSet& s) {
  RootSet out;
  for (const auto& [num, den] : s) {
    // Multiplying by -1 adds a half turn.
    long d2 = den % 2 == 0 ? den : 2 * den;
    long j2 = num * (d2 / den) + d2 / 2;
    out.insert(root_frac(j2, d2));
  }
  return out;
}

long EigenSpectrum::degree() const {
  long s = 0;
  for (long m : mult) s += m;
  return s;
}

long EigenSpectrum::distinct_count() const {
  long s = 0;
  for (long m : mult) s += m > 0 ? 1 : 0;
  return s;
}

RootSet EigenSpectrum::support() const {
  RootSet out;
  for (long j = 0; j < d; ++j)
    if (mult[j] > 0) out.insert(root_frac(j, d));
  return out;
}

int class_epsilon(int n, const ClassLabel& label) {
  long k = classify_partition(label.cycle_type).lcm;
  ClassLabel power = power_class(n, label, k);
  for (int part : power.cycle_type.parts)
    SP_CHECK(part == 1, "lcm-th power of a class must be central");
  SP_CHECK(power.z_sign == 1 || power.z_sign == -1, "central class must be z-split");
  return power.z_sign;
}

EigenSpectrum spectrum(const SpinCharacterTable& table, const RowLabel& row,
                       const ClassLabel& label) {
  int n = table.n;
  EigenSpectrum sp;
  sp.k = classify_partition(label.cycle_type).lcm;
  sp.eps = class_epsilon(n, label);
  sp.d = class_order(n, label);
  SP_CHECK(sp.d == (sp.eps == 1 ? sp.k : 2 * sp.k), "element order must be k or 2k");

  std::vector<CycNum> values;
  values.reserve(sp.d);
  for (long i = 0; i < sp.d; ++i) values.push_back(table.value(row, power_class(n, label, i)));

  Rat inv_d = rat(1, sp.d);
  sp.mult.assign(sp.d, 0);
  for (long j = 0; j < sp.d; ++j) {
    CycNum acc;
    for (long i = 0; i < sp.d; ++i) {
      if (values[i].is_zero()) continue;
      acc += values[i] * CycNum::root_of_unity(sp.d, -i * j);
    }
    acc = acc * inv_d;
    SP_CHECK(acc.is_integer(), "eigenvalue multiplicity must be an integer");
    Rat r = acc.to_rational();
    Int num = r.get_num();
    SP_CHECK(num >= 0, "eigenvalue multiplicity must be non-negative");
    SP_CHECK(num.fits_slong_p(), "eigenvalue multiplicity out of range");
    sp.mult[j] = num.get_si();
    // Eigenvalues obey zeta^k = eps because g^k is central.
    if (sp.mult[j] > 0) {
      long rem = (j * sp.k) % sp.d;
      SP_CHECK(sp.eps == 1 ? rem == 0 : 2 * rem == sp.d,
               "eigenvalue escapes the root set fixed by the central power");
    }
  }
  return sp;
}

}  // namespace spinpoly
