#pragma once
#include <gmpxx.h>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spinpoly {

using Int = mpz_class; // arbitrary-precision integer
using Rat = mpq_class; // arbitrary-precision rational; canonical: gcd 1, den > 0

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parse decimal-string numerator/denominator (cache file format).
Rat rat_from_strings(const std::string& num, const std::string& den);
std::string rat_to_string(const Rat& r);

long long lcm_ll(long long a, long long b);

// Invariant checks that signal implementation bugs, never user errors.
[[noreturn]] void check_failed(const char* what);
#define SP_CHECK(cond, what) \
  do {                       \
    if (!(cond)) ::spinpoly::check_failed(what); \
  } while (0)

} // namespace spinpoly
