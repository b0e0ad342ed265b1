#include "spinpoly/clifford.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace spinpoly {

Zroot2::Zroot2(Int mm, int ee) : m(std::move(mm)), e(ee) {
  SP_CHECK(e >= 0, "clifford: negative root-two exponent");
  if (m == 0) {
    e = 0;
    return;
  }
  while (e >= 2 && mpz_even_p(m.get_mpz_t())) {
    m /= 2;
    e -= 2;
  }
}

Zroot2 Zroot2::operator-() const {
  Zroot2 r;
  r.m = -m;
  r.e = e;
  return r;
}

Zroot2 Zroot2::operator*(const Zroot2& o) const { return Zroot2(m * o.m, e + o.e); }

Zroot2 Zroot2::operator+(const Zroot2& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  SP_CHECK((e - o.e) % 2 == 0, "clifford: sum mixes rational and root-two parts");
  if (e == o.e) return Zroot2(m + o.m, e);
  const Zroot2& lo = e < o.e ? *this : o;
  const Zroot2& hi = e < o.e ? o : *this;
  Int scaled = lo.m;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), (hi.e - lo.e) / 2);
  return Zroot2(scaled + hi.m, hi.e);
}

Rat Zroot2::as_rational() const {
  SP_CHECK(e % 2 == 0, "clifford: coefficient is not rational");
  Int den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), e / 2);
  Rat q(m, den);
  q.canonicalize();
  return q;
}

std::string Zroot2::str() const {
  if (e == 0) return m.get_str();
  return m.get_str() + "/r2^" + std::to_string(e);
}

CoverElement CoverElement::zero(int n) {
  CoverElement g;
  g.n = n;
  return g;
}

CoverElement CoverElement::one(int n) {
  CoverElement g;
  g.n = n;
  g.terms[0] = Zroot2(1, 0);
  return g;
}

CoverElement CoverElement::central(int n) {
  CoverElement g;
  g.n = n;
  g.terms[0] = Zroot2(-1, 0);
  return g;
}

CoverElement CoverElement::generator(int n, int j) {
  SP_CHECK(j >= 1 && j + 1 <= n, "clifford: generator index out of range");
  CoverElement g;
  g.n = n;
  g.terms[std::uint64_t{1} << (j - 1)] = Zroot2(1, 1);
  g.terms[std::uint64_t{1} << j] = Zroot2(-1, 1);
  return g;
}

bool CoverElement::is_scalar(int value) const {
  return terms.size() == 1 && terms.begin()->first == 0 &&
         terms.begin()->second == Zroot2(value, 0);
}

std::string CoverElement::str() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mask, coef] : terms) {
    if (!first) out << " + ";
    first = false;
    out << "(" << coef.str() << ")";
    if (mask != 0) {
      out << "e{";
      bool inner = true;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) {
          if (!inner) out << ",";
          inner = false;
          out << (i + 1);
        }
      out << "}";
    }
  }
  return out.str();
}

CoverElement add(const CoverElement& a, const CoverElement& b) {
  SP_CHECK(a.n == b.n, "clifford: rank mismatch");
  CoverElement r = a;
  for (const auto& [mask, coef] : b.terms) {
    auto it = r.terms.find(mask);
    if (it == r.terms.end()) {
      r.terms[mask] = coef;
    } else {
      it->second = it->second + coef;
      if (it->second.is_zero()) r.terms.erase(it);
    }
  }
  return r;
}

CoverElement scale(const CoverElement& a, const Zroot2& c) {
  CoverElement r = CoverElement::zero(a.n);
  if (c.is_zero()) return r;
  for (const auto& [mask, coef] : a.terms) r.terms[mask] = coef * c;
  return r;
}

CoverElement multiply(const CoverElement& a, const CoverElement& b) {
  SP_CHECK(a.n == b.n, "clifford: rank mismatch");
  CoverElement r = CoverElement::zero(a.n);
  for (const auto& [s, cs] : a.terms) {
    for (const auto& [t, ct] : b.terms) {
      // Move every factor of e_t leftwards through e_s, then contract the
      // shared indices with e_i * e_i = -1.
      int swaps = 0;
      std::uint64_t rest = t;
      while (rest) {
        int bit = std::countr_zero(rest);
        swaps += std::popcount(s >> (bit + 1));
        rest &= rest - 1;
      }
      swaps += std::popcount(s & t);
      Zroot2 coef = cs * ct;
      if (swaps & 1) coef = -coef;
      std::uint64_t mask = s ^ t;
      auto it = r.terms.find(mask);
      if (it == r.terms.end()) {
        if (!coef.is_zero()) r.terms[mask] = coef;
      } else {
        it->second = it->second + coef;
        if (it->second.is_zero()) r.terms.erase(it);
      }
    }
  }
  return r;
}

CoverElement inverse(const CoverElement& g) {
  SP_CHECK(!g.terms.empty(), "clifford: inverse of zero");
  int grade = std::popcount(g.terms.begin()->first) & 1;
  CoverElement r = CoverElement::zero(g.n);
  for (const auto& [mask, coef] : g.terms) {
    int k = std::popcount(mask);
    SP_CHECK((k & 1) == grade, "clifford: inverse of a mixed-grade element");
    // Reversing a product of k distinct unit vectors costs k(k-1)/2 swaps,
    // and each unit-vector factor inverts to its own negative.
    int sgn = (k * (k - 1) / 2 + grade) & 1;
    r.terms[mask] = sgn ? -coef : coef;
  }
  return r;
}

CoverElement element_power(const CoverElement& g, long k) {
  CoverElement base = g;
  if (k < 0) {
    base = inverse(g);
    k = -k;
  }
  CoverElement r = CoverElement::one(g.n);
  while (k > 0) {
    if (k & 1) r = multiply(r, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return r;
}

CoverElement generator_word(int n, const std::vector<int>& word) {
  CoverElement g = CoverElement::one(n);
  for (int j : word) g = multiply(g, CoverElement::generator(n, j));
  return g;
}

std::vector<int> projection(const CoverElement& g) {
  const int n = g.n;
  SP_CHECK(!g.terms.empty(), "clifford: projection of zero");
  // g e_i g^{-1} = +-e_j is equivalent to g e_i = +-e_j g, which avoids
  // the quadratic-cost product with the inverse.
  std::vector<CoverElement> left(n + 1);
  for (int j = 1; j <= n; ++j) {
    CoverElement ej = CoverElement::zero(n);
    ej.terms[std::uint64_t{1} << (j - 1)] = Zroot2(1, 0);
    left[j] = multiply(ej, g);
  }
  std::vector<int> w(n, 0);
  std::vector<char> seen(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    CoverElement ei = CoverElement::zero(n);
    ei.terms[std::uint64_t{1} << (i - 1)] = Zroot2(1, 0);
    CoverElement x = multiply(g, ei);
    int found = 0;
    for (int j = 1; j <= n && !found; ++j)
      if (x == left[j] || x == scale(left[j], Zroot2(-1, 0))) found = j;
    SP_CHECK(found, "clifford: conjugate of a generator is not a signed generator");
    SP_CHECK(!seen[found], "clifford: projection is not a permutation");
    seen[found] = 1;
    w[i - 1] = found;
  }
  return w;
}

Partition cycle_type_of_permutation(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<char> seen(n + 1, 0);
  std::vector<int> lens;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = w[j - 1]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<int>());
  Partition p;
  p.parts = lens;
  return p;
}

int permutation_parity(const std::vector<int>& w) {
  Partition type = cycle_type_of_permutation(w);
  int par = 0;
  for (int a : type.parts) par ^= (a - 1) & 1;
  return par;
}

std::vector<int> sorting_word(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> a = w;
  std::vector<int> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 0; j + 1 < n; ++j) {
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        swaps.push_back(j + 1);
        moved = true;
      }
    }
  }
  // Each swap right-multiplied the running permutation by an adjacent
  // transposition, so the original is the product of those transpositions
  // in reverse order.
  return std::vector<int>(swaps.rbegin(), swaps.rend());
}

CoverElement conjugate_by_word(const CoverElement& g, const std::vector<int>& word) {
  CoverElement x = g;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    CoverElement t = CoverElement::generator(x.n, *it);
    // t_j^{-1} = z t_j, so t_j x t_j^{-1} = -(t_j x t_j).
    x = scale(multiply(t, multiply(x, t)), Zroot2(-1, 0));
  }
  return x;
}

CoverElement canonical_lift(const std::vector<int>& w, int n) {
  SP_CHECK(static_cast<int>(w.size()) == n, "clifford: permutation length mismatch");
  CoverElement g = generator_word(n, sorting_word(w));
  SP_CHECK(projection(g) == w, "clifford: lift projects to the wrong permutation");
  return g;
}

int sign_rel_canonical(const CoverElement& g) {
  CoverElement lift = canonical_lift(projection(g), g.n);
  if (g == lift) return 1;
  if (g == multiply(CoverElement::central(g.n), lift)) return -1;
  SP_CHECK(false, "clifford: element is not plus or minus a lifted permutation");
  return 0;
}

} // namespace spinpoly
