#include "spinpoly/cover_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace spinpoly {

namespace {

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int exact_quotient(const Int& num, const Int& den, const char* what) {
  SP_CHECK(den != 0 && num % den == 0, what);
  return num / den;
}

// Cycles of w, each listed from its smallest element following the
// permutation, sorted by length (longest first) then by smallest element.
std::vector<std::vector<int>> canonical_cycles(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<char> seen(n + 1, 0);
  std::vector<std::vector<int>> cycles;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = w[j - 1]) {
      seen[j] = 1;
      cyc.push_back(j);
    }
    cycles.push_back(std::move(cyc));
  }
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     return a.size() > b.size();
                   });
  return cycles;
}

// A permutation c with c . from . c^{-1} = to (cyclewise alignment).
std::vector<int> conjugator_permutation(const std::vector<int>& from,
                                        const std::vector<int>& to) {
  auto fc = canonical_cycles(from);
  auto tc = canonical_cycles(to);
  SP_CHECK(fc.size() == tc.size(), "cover: conjugator cycle-type mismatch");
  const int n = static_cast<int>(from.size());
  std::vector<int> c(n, 0);
  for (size_t k = 0; k < fc.size(); ++k) {
    SP_CHECK(fc[k].size() == tc[k].size(), "cover: conjugator cycle-type mismatch");
    for (size_t i = 0; i < fc[k].size(); ++i) c[fc[k][i] - 1] = tc[k][i];
  }
  for (int x = 1; x <= n; ++x)
    SP_CHECK(c[from[x - 1] - 1] == to[c[x - 1] - 1], "cover: conjugator does not conjugate");
  return c;
}

// (c after u)(x) = c(u(x)).
std::vector<int> compose(const std::vector<int>& c, const std::vector<int>& u) {
  std::vector<int> r(c.size());
  for (size_t x = 0; x < c.size(); ++x) r[x] = c[u[x] - 1];
  return r;
}

// Generator word (plus a central power) describing a canonical
// representative; powers of representatives are evaluated by repeating the
// word one generator at a time, which is linear in the support size.
struct RepWord {
  std::vector<int> word;
  int zpow = 0;
};

RepWord type_word(const Partition& type) {
  RepWord rw;
  int s = 0;
  for (int part : type.parts) {
    for (int i = 1; i < part; ++i) rw.word.push_back(s + i);
    s += part;
  }
  return rw;
}

RepWord label_word(int n, const ClassLabel& label) {
  RepWord rw = type_word(label.cycle_type);
  if (label.z_sign == -1) rw.zpow ^= 1;
  if (label.alt_tag == 2) {
    // t_1 g t_1^{-1} = -(t_1 g t_1).
    rw.word.insert(rw.word.begin(), 1);
    rw.word.push_back(1);
    rw.zpow ^= 1;
  }
  return rw;
}

CoverElement word_power(int n, const RepWord& rw, long i) {
  std::vector<int> word = rw.word;
  int zpow = rw.zpow & 1;
  if (i < 0) {
    // (t_a)^{-1} = z t_a, so inverting reverses the word and adds one
    // central factor per letter.
    std::reverse(word.begin(), word.end());
    zpow ^= static_cast<int>(word.size()) & 1;
    i = -i;
  }
  CoverElement g = CoverElement::one(n);
  for (long rep = 0; rep < i; ++rep)
    for (int j : word) g = multiply(g, CoverElement::generator(n, j));
  if ((static_cast<long>(zpow) * i) & 1) g = scale(g, Zroot2(-1, 0));
  return g;
}

// An even-length cycle of w as a permutation: an odd element of the
// centralizer of w.
std::vector<int> odd_centralizer_element(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> u(n);
  std::iota(u.begin(), u.end(), 1);
  for (const auto& cyc : canonical_cycles(w)) {
    if (cyc.size() % 2 != 0) continue;
    for (size_t i = 0; i < cyc.size(); ++i) u[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
    return u;
  }
  SP_CHECK(false, "cover: centralizer has no odd element");
  return u;
}

} // namespace

bool operator<(const ClassLabel& a, const ClassLabel& b) {
  auto zrank = [](int s) { return s == 1 ? 0 : s == -1 ? 1 : 2; };
  return std::make_tuple(static_cast<int>(a.group), a.cycle_type.parts, a.alt_tag,
                         zrank(a.z_sign)) <
         std::make_tuple(static_cast<int>(b.group), b.cycle_type.parts, b.alt_tag,
                         zrank(b.z_sign));
}

std::string ClassLabel::str() const {
  std::ostringstream out;
  out << "{\"type\":[";
  for (size_t i = 0; i < cycle_type.parts.size(); ++i) {
    if (i) out << ",";
    out << cycle_type.parts[i];
  }
  out << "],\"z\":";
  if (z_sign == 1)
    out << "\"+\"";
  else if (z_sign == -1)
    out << "\"-\"";
  else
    out << "null";
  out << ",\"alt\":";
  if (alt_tag == 1)
    out << "\"a\"";
  else if (alt_tag == 2)
    out << "\"b\"";
  else
    out << "null";
  out << "}";
  return out.str();
}

bool type_splits_over_z(CoverGroup group, const Partition& type) {
  PartitionClass cls = classify_partition(type);
  if (group == CoverGroup::Sym) return cls.in_OP || (cls.in_DP && cls.dp_sign == -1);
  return cls.in_OP;
}

bool type_splits_in_alt(int n, const Partition& type) {
  if (n < 2) return false;
  PartitionClass cls = classify_partition(type);
  return cls.in_DP && cls.dp_sign == 1;
}

CoverElement canonical_rep(int n, const Partition& type, int z_sign) {
  SP_CHECK(type.n() == n, "cover: type does not partition n");
  SP_CHECK(z_sign == 0 || z_sign == 1 || z_sign == -1, "cover: bad sign");
  std::vector<int> word;
  int s = 0;
  for (int part : type.parts) {
    for (int i = 1; i < part; ++i) word.push_back(s + i);
    s += part;
  }
  CoverElement g = generator_word(n, word);
  if (z_sign == -1) g = multiply(CoverElement::central(n), g);
  return g;
}

CoverElement canonical_rep(int n, const ClassLabel& label) {
  PartitionClass cls = classify_partition(label.cycle_type);
  bool zs = type_splits_over_z(label.group, label.cycle_type);
  SP_CHECK((label.z_sign != 0) == zs, "cover: label sign does not match the type");
  bool as = label.group == CoverGroup::Alt && type_splits_in_alt(n, label.cycle_type);
  SP_CHECK((label.alt_tag != 0) == as, "cover: label tag does not match the type");
  if (label.group == CoverGroup::Alt)
    SP_CHECK(cls.perm_parity == 0, "cover: type is not in the alternating cover");
  CoverElement g = canonical_rep(n, label.cycle_type, label.z_sign);
  if (label.alt_tag == 2) {
    CoverElement t1 = CoverElement::generator(n, 1);
    g = multiply(multiply(t1, g), inverse(t1));
  }
  return g;
}

ClassLabel class_of(const CoverElement& g, int n, CoverGroup group) {
  std::vector<int> w = projection(g);
  Partition type = cycle_type_of_permutation(w);
  PartitionClass cls = classify_partition(type);

  ClassLabel label;
  label.group = group;
  label.cycle_type = type;
  if (group == CoverGroup::Alt)
    SP_CHECK(cls.perm_parity == 0, "cover: element is not in the alternating cover");

  bool z_split = type_splits_over_z(group, type);
  bool alt_split = group == CoverGroup::Alt && type_splits_in_alt(n, type);
  if (!z_split && !alt_split) return label;

  CoverElement rep = canonical_rep(n, type, 0);
  std::vector<int> wa = projection(rep);
  std::vector<int> c = conjugator_permutation(w, wa);
  if (alt_split && !cls.in_OP && permutation_parity(c) == 1) {
    // The class tag below needs an even conjugator; an even-length cycle of
    // w centralizes w and flips the parity.
    c = compose(c, odd_centralizer_element(w));
    SP_CHECK(permutation_parity(c) == 0, "cover: conjugator parity fix failed");
  }
  CoverElement x = conjugate_by_word(g, sorting_word(c));
  int k;
  if (x == rep) {
    k = 0;
  } else {
    SP_CHECK(x == multiply(CoverElement::central(n), rep),
             "cover: conjugation missed the canonical representative");
    k = 1;
  }

  if (!alt_split) {
    if (z_split) label.z_sign = k ? -1 : 1;
    return label;
  }
  if (cls.in_OP) {
    // Four classes: the conjugator parity is an invariant here because the
    // centralizer of a permutation with distinct odd cycles is all even.
    label.z_sign = k ? -1 : 1;
    label.alt_tag = permutation_parity(c) ? 2 : 1;
  } else {
    // Two classes swapped by z (equivalently by any odd conjugation).
    label.alt_tag = k ? 2 : 1;
  }
  return label;
}

ClassLabel power_class(int n, const ClassLabel& label, long i) {
  CoverElement g = word_power(n, label_word(n, label), i);
  return class_of(g, n, label.group);
}

int epsilon_sign(int n, const Partition& type) {
  PartitionClass cls = classify_partition(type);
  CoverElement p = word_power(n, type_word(type), cls.lcm);
  if (p.is_scalar(1)) return 1;
  SP_CHECK(p.is_scalar(-1), "cover: power at the lcm is not central");
  return -1;
}

long class_order(int n, const ClassLabel& label) {
  PartitionClass cls = classify_partition(label.cycle_type);
  CoverElement p = word_power(n, label_word(n, label), cls.lcm);
  if (p.is_scalar(1)) return cls.lcm;
  SP_CHECK(p.is_scalar(-1), "cover: power at the lcm is not central");
  return 2 * cls.lcm;
}

Int class_size(int n, const ClassLabel& label) {
  SP_CHECK(label.cycle_type.n() == n, "cover: type does not partition n");
  PartitionClass cls = classify_partition(label.cycle_type);
  Int nf = factorial(n);
  Int z = centralizer_order(label.cycle_type);
  const char* what = "cover: class size is not integral";
  if (label.group == CoverGroup::Sym) {
    bool split = type_splits_over_z(CoverGroup::Sym, label.cycle_type);
    return split ? exact_quotient(nf, z, what) : exact_quotient(2 * nf, z, what);
  }
  SP_CHECK(cls.perm_parity == 0, "cover: type is not in the alternating cover");
  bool as = type_splits_in_alt(n, label.cycle_type);
  if (cls.in_OP && as) return exact_quotient(nf, 2 * z, what);
  if (cls.in_OP || as) return exact_quotient(nf, z, what);
  return exact_quotient(2 * nf, z, what);
}

std::vector<ClassLabel> conjugacy_classes(CoverGroup group, int n) {
  std::vector<ClassLabel> out;
  for (const Partition& type : partitions_of(n)) {
    PartitionClass cls = classify_partition(type);
    if (group == CoverGroup::Alt && cls.perm_parity != 0) continue;
    std::vector<int> alts =
        (group == CoverGroup::Alt && type_splits_in_alt(n, type)) ? std::vector<int>{1, 2}
                                                                  : std::vector<int>{0};
    std::vector<int> signs =
        type_splits_over_z(group, type) ? std::vector<int>{1, -1} : std::vector<int>{0};
    for (int a : alts)
      for (int s : signs) {
        ClassLabel label;
        label.group = group;
        label.cycle_type = type;
        label.z_sign = s;
        label.alt_tag = a;
        out.push_back(label);
      }
  }
  return out;
}

} // namespace spinpoly
