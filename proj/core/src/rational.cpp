#include "spinpoly/rational.hpp"

namespace spinpoly {

Rat rat_from_strings(const std::string& num, const std::string& den) {
  Int n(num, 10), d(den, 10);
  if (sgn(d) == 0) throw std::domain_error("rational with zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

void check_failed(const char* what) {
  throw std::logic_error(std::string("internal consistency check failed: ") + what);
}

} // namespace spinpoly
