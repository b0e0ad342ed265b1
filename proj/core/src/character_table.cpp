#include "spinpoly/character_table.hpp"

#include "spinpoly/qfunctions.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>

namespace spinpoly {

namespace {

// 2^e as an exact rational, e of either sign.
Rat pow2(long e) {
  Int num = 1, den = 1;
  if (e >= 0)
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), (mp_bitcnt_t)e);
  else
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), (mp_bitcnt_t)(-e));
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// sqrt(2)^e as an exact cyclotomic, e of either sign.
CycNum sqrt2_pow(long e) {
  CycNum r(pow2(e >= 0 ? e / 2 : (e - 1) / 2));
  if (e & 1) r *= CycNum::sqrt2();
  return r;
}

Partition ones_partition(int n) { return Partition(std::vector<int>(n, 1)); }

ClassLabel identity_class(CoverGroup group, int n) {
  return ClassLabel{group, ones_partition(n), +1, 0};
}

// The class containing z times the elements of this class.
ClassLabel z_partner(const ClassLabel& c) {
  ClassLabel p = c;
  if (c.z_sign != 0) {
    p.z_sign = -c.z_sign;
  } else if (c.alt_tag != 0) {
    // Even-type split classes without a central sign: the central element
    // exchanges the two alternating-cover classes.
    p.alt_tag = 3 - c.alt_tag;
  }
  return p;
}

// The symmetric-cover class containing the elements of an alternating-cover
// class.
ClassLabel sym_label_of(const ClassLabel& c) {
  int z = type_splits_over_z(CoverGroup::Sym, c.cycle_type) ? c.z_sign : 0;
  return ClassLabel{CoverGroup::Sym, c.cycle_type, z, 0};
}

long product_of_parts(const StrictPartition& lambda) {
  long p = 1;
  for (int x : lambda.parts) p *= x;
  return p;
}

// Hard check that r = 2^k with k >= 0; returns k.
long exact_log2(const Rat& r) {
  SP_CHECK(r.get_den() == 1, "row normalization ratio must be an integer");
  Int num = r.get_num();
  SP_CHECK(sgn(num) > 0, "row normalization ratio must be positive");
  long k = (long)mpz_scan1(num.get_mpz_t(), 0);
  Int back = 1;
  mpz_mul_2exp(back.get_mpz_t(), back.get_mpz_t(), (mp_bitcnt_t)k);
  SP_CHECK(back == num, "row normalization ratio must be a power of two");
  return k;
}

void validate_orthogonality(const SpinCharacterTable& t) {
  // Rows: orthonormal under the class-size-weighted Hermitian product.
  for (auto a = t.rows.begin(); a != t.rows.end(); ++a)
    for (auto b = a; b != t.rows.end(); ++b) {
      CycNum got = t.inner(a->first, b->first);
      CycNum want = (a == b) ? CycNum::one() : CycNum::zero();
      SP_CHECK(got == want, "character rows must be orthonormal");
    }
  // Columns: summing phi(c1) * conj(phi(c2)) over the rows gives half the
  // centralizer order at c1 = c2, minus that at the central partner, and
  // zero otherwise.
  Int order = t.group_order();
  for (const ClassLabel& c1 : t.classes)
    for (const ClassLabel& c2 : t.classes) {
      CycNum sum = CycNum::zero();
      for (const auto& [row, values] : t.rows)
        sum += values.at(c1) * values.at(c2).conjugate();
      Rat half_centralizer(order, 2 * t.class_sizes.at(c1));
      half_centralizer.canonicalize();
      Rat coef = 0; // a class equal to its own central partner gets zero
      if (c2 == c1) coef += half_centralizer;
      if (c2 == z_partner(c1)) coef -= half_centralizer;
      SP_CHECK(sum == CycNum(coef), "character columns must be orthogonal");
    }
}

SpinCharacterTable build_sym_table(int n) {
  SpinCharacterTable t;
  t.group = CoverGroup::Sym;
  t.n = n;
  t.classes = conjugacy_classes(CoverGroup::Sym, n);
  for (const ClassLabel& c : t.classes) t.class_sizes[c] = class_size(n, c);

  std::vector<Partition> op = odd_partitions_of(n);

  for (const StrictPartition& lambda : strict_partitions_of(n)) {
    PartitionClass lc = classify_partition(lambda);

    // Values on odd-type classes from the power-sum expansion of the
    // Q-function, scaled by the unique nonnegative power of sqrt(2) that
    // makes the row an exact unit vector (the odd-type part contributes
    // everything for a self-associate row, half for an associate pair).
    QPoly q = q_function(lambda);
    std::map<Partition, CycNum> pre;
    Rat norm2 = 0;
    for (const Partition& alpha : op) {
      Rat c = q.coeff(alpha);
      Int z_alpha = centralizer_order(alpha);
      pre[alpha] = CycNum(Rat(c * z_alpha)) * sqrt2_pow(-alpha.length());
      norm2 += c * c * z_alpha * pow2(-alpha.length());
    }
    Rat target = lc.dp_sign < 0 ? rat(1, 2) : rat(1);
    long k = exact_log2(norm2 / target);
    CycNum scale = sqrt2_pow(-k);
    std::map<Partition, CycNum> v;
    for (const Partition& alpha : op) v[alpha] = pre[alpha] * scale;

    CycNum deg = v[ones_partition(n)];
    SP_CHECK(deg.is_integer() && sgn(deg.to_rational()) > 0,
             "row degree must be a positive integer");

    auto odd_type_values = [&](const ClassLabel& c) -> CycNum {
      auto it = v.find(c.cycle_type);
      if (it == v.end()) return CycNum::zero();
      return c.z_sign < 0 ? -it->second : it->second;
    };

    if (lc.dp_sign > 0) {
      std::map<ClassLabel, CycNum> row;
      for (const ClassLabel& c : t.classes) row[c] = odd_type_values(c);
      t.rows[RowLabel{lambda, Assoc::Plain}] = std::move(row);
    } else {
      // Associate pair: equal on odd-type classes; opposite values on the
      // two classes of cycle type lambda, fixed in magnitude by column
      // orthogonality there. The "+" row takes the value whose argument
      // lies in [0, pi).
      long z_lambda = product_of_parts(lambda);
      SP_CHECK(z_lambda % 2 == 0, "associate-pair types contain an even part");
      int m = n - lambda.length() + 1;
      SP_CHECK(m % 2 == 0, "associate-pair types are odd permutations");
      CycNum diag = CycNum::sqrt_int(z_lambda / 2);
      if ((m / 2) % 2 != 0) diag *= CycNum::i();

      ClassLabel diag_plus{CoverGroup::Sym, lambda.as_partition(), +1, 0};
      ClassLabel diag_minus = z_partner(diag_plus);
      for (Assoc assoc : {Assoc::Plus, Assoc::Minus}) {
        CycNum d = assoc == Assoc::Plus ? diag : -diag;
        std::map<ClassLabel, CycNum> row;
        for (const ClassLabel& c : t.classes) {
          if (c == diag_plus)
            row[c] = d;
          else if (c == diag_minus)
            row[c] = -d;
          else
            row[c] = odd_type_values(c);
        }
        t.rows[RowLabel{lambda, assoc}] = std::move(row);
      }
    }
  }

  validate_orthogonality(t);
  return t;
}

SpinCharacterTable build_alt_table(int n) {
  SpinCharacterTable t;
  t.group = CoverGroup::Alt;
  t.n = n;
  t.classes = conjugacy_classes(CoverGroup::Alt, n);
  for (const ClassLabel& c : t.classes) t.class_sizes[c] = class_size(n, c);

  if (n == 1) {
    // Rank one: the alternating cover is the whole cover, so the single
    // faithful row does not split.
    std::map<ClassLabel, CycNum> row;
    for (const ClassLabel& c : t.classes)
      row[c] = c.z_sign < 0 ? -CycNum::one() : CycNum::one();
    t.rows[RowLabel{StrictPartition({1}), Assoc::Plain}] = std::move(row);
    validate_orthogonality(t);
    return t;
  }

  SpinCharacterTable sym = build_sym_table(n);
  CycNum half(rat(1, 2));

  for (const StrictPartition& lambda : strict_partitions_of(n)) {
    PartitionClass lc = classify_partition(lambda);
    if (lc.dp_sign < 0) {
      // The two associates restrict to one row.
      RowLabel src{lambda, Assoc::Plus};
      std::map<ClassLabel, CycNum> row;
      for (const ClassLabel& c : t.classes)
        row[c] = sym.value(src, sym_label_of(c));
      t.rows[RowLabel{lambda, Assoc::Plain}] = std::move(row);
    } else {
      // A self-associate row restricts to a pair split by the difference
      // character on the classes of cycle type lambda.
      RowLabel src{lambda, Assoc::Plain};
      for (Assoc assoc : {Assoc::Plus, Assoc::Minus}) {
        std::map<ClassLabel, CycNum> row;
        for (const ClassLabel& c : t.classes) {
          CycNum restricted = sym.value(src, sym_label_of(c));
          CycNum d = delta_value(n, lambda, c);
          row[c] = (assoc == Assoc::Plus ? restricted + d : restricted - d) * half;
        }
        t.rows[RowLabel{lambda, assoc}] = std::move(row);
      }
    }
  }

  validate_orthogonality(t);
  return t;
}

const SpinCharacterTable& memoized_table(CoverGroup group, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, SpinCharacterTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair((int)group, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_table(group, n)).first;
  return it->second;
}

// ---- JSON serialization ----------------------------------------------

using nlohmann::json;

json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const json& j) {
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return rat_from_strings(s, "1");
  return rat_from_strings(s.substr(0, slash), s.substr(slash + 1));
}

json cyc_to_json(const CycNum& x) {
  CycNum r = x.reduced();
  json c = json::array();
  for (const Rat& q : r.coeffs()) c.push_back(rat_to_json(q));
  return json{{"N", r.conductor()}, {"c", c}};
}

CycNum cyc_from_json(const json& j) {
  long N = j.at("N").get<long>();
  std::vector<Rat> coeffs;
  for (const json& q : j.at("c")) coeffs.push_back(rat_from_json(q));
  return CycNum::from_coeffs(N, std::move(coeffs));
}

json class_to_json(const ClassLabel& c) {
  json type = json::array();
  for (int p : c.cycle_type.parts) type.push_back(p);
  json z = nullptr, alt = nullptr;
  if (c.z_sign != 0) z = c.z_sign > 0 ? "+" : "-";
  if (c.alt_tag != 0) alt = c.alt_tag == 1 ? "a" : "b";
  return json{{"type", type}, {"z", z}, {"alt", alt}};
}

ClassLabel class_from_json(CoverGroup group, const json& j) {
  ClassLabel c;
  c.group = group;
  std::vector<int> parts;
  for (const json& p : j.at("type")) parts.push_back(p.get<int>());
  c.cycle_type = Partition(std::move(parts));
  if (!j.at("z").is_null()) c.z_sign = j.at("z").get<std::string>() == "+" ? +1 : -1;
  if (!j.at("alt").is_null()) c.alt_tag = j.at("alt").get<std::string>() == "a" ? 1 : 2;
  return c;
}

} // namespace

std::string assoc_str(Assoc a) {
  switch (a) {
    case Assoc::Plain: return "plain";
    case Assoc::Plus: return "+";
    case Assoc::Minus: return "-";
  }
  SP_CHECK(false, "unreachable associate tag");
}

Assoc assoc_parse(const std::string& s) {
  if (s == "plain") return Assoc::Plain;
  if (s == "+") return Assoc::Plus;
  if (s == "-") return Assoc::Minus;
  throw std::invalid_argument("unknown associate tag: " + s);
}

std::string RowLabel::str() const {
  std::string s = "(" + lambda.str() + ")";
  if (assoc != Assoc::Plain) s += assoc_str(assoc);
  return s;
}

Int SpinCharacterTable::group_order() const {
  Int total = 0;
  for (const auto& [c, size] : class_sizes) total += size;
  return total;
}

const CycNum& SpinCharacterTable::value(const RowLabel& row, const ClassLabel& cls) const {
  return rows.at(row).at(cls);
}

CycNum SpinCharacterTable::degree(const RowLabel& row) const {
  return value(row, identity_class(group, n));
}

CycNum SpinCharacterTable::inner(const RowLabel& a, const RowLabel& b) const {
  const auto& ra = rows.at(a);
  const auto& rb = rows.at(b);
  Int order = group_order();
  CycNum sum = CycNum::zero();
  for (const ClassLabel& c : classes) {
    Rat w(class_sizes.at(c), order);
    w.canonicalize();
    sum += ra.at(c) * rb.at(c).conjugate() * w;
  }
  return sum;
}

CycNum row_norm_constant(const StrictPartition& lambda) {
  int evens = 0;
  for (int p : lambda.parts)
    if (p % 2 == 0) ++evens;
  return evens % 2 != 0 ? CycNum::sqrt2() : CycNum::one();
}

CycNum delta_value(int n, const StrictPartition& lambda, const ClassLabel& alt_class) {
  SP_CHECK(alt_class.group == CoverGroup::Alt,
           "difference characters live on the alternating cover");
  PartitionClass lc = classify_partition(lambda);
  SP_CHECK(lc.in_DP && lc.dp_sign > 0,
           "difference characters exist for self-associate rows only");
  if (alt_class.cycle_type != lambda.as_partition()) return CycNum::zero();
  int m = n - lambda.length();
  SP_CHECK(m % 2 == 0, "self-associate types are even permutations");
  CycNum d = CycNum::sqrt_int(product_of_parts(lambda));
  if ((m / 2) % 2 != 0) d *= CycNum::i();
  if (alt_class.z_sign < 0) d = -d;
  if (alt_class.alt_tag == 2) d = -d;
  return d;
}

SpinCharacterTable build_table(CoverGroup group, int n) {
  SP_CHECK(n >= 1, "table rank must be positive");
  return group == CoverGroup::Sym ? build_sym_table(n) : build_alt_table(n);
}

std::string table_to_json(const SpinCharacterTable& t) {
  json j;
  j["schema"] = 1;
  j["group"] = t.group == CoverGroup::Sym ? "S" : "A";
  j["n"] = t.n;
  json classes = json::array();
  json sizes = json::array();
  for (const ClassLabel& c : t.classes) {
    classes.push_back(class_to_json(c));
    sizes.push_back(t.class_sizes.at(c).get_str());
  }
  j["classes"] = classes;
  j["sizes"] = sizes;
  json rows = json::array();
  for (const auto& [label, values] : t.rows) {
    json lam = json::array();
    for (int p : label.lambda.parts) lam.push_back(p);
    json vals = json::array();
    for (const ClassLabel& c : t.classes) vals.push_back(cyc_to_json(values.at(c)));
    rows.push_back(json{{"lambda", lam}, {"assoc", assoc_str(label.assoc)}, {"values", vals}});
  }
  j["rows"] = rows;
  return j.dump();
}

SpinCharacterTable table_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.at("schema").get<int>() != 1)
    throw std::invalid_argument("unsupported character table schema");
  SpinCharacterTable t;
  std::string g = j.at("group").get<std::string>();
  if (g != "S" && g != "A") throw std::invalid_argument("unknown group tag: " + g);
  t.group = g == "S" ? CoverGroup::Sym : CoverGroup::Alt;
  t.n = j.at("n").get<int>();
  const json& classes = j.at("classes");
  const json& sizes = j.at("sizes");
  if (classes.size() != sizes.size())
    throw std::invalid_argument("class and size arrays disagree");
  for (size_t k = 0; k < classes.size(); ++k) {
    ClassLabel c = class_from_json(t.group, classes[k]);
    t.classes.push_back(c);
    t.class_sizes[c] = Int(sizes[k].get<std::string>(), 10);
  }
  for (const json& row : j.at("rows")) {
    std::vector<int> parts;
    for (const json& p : row.at("lambda")) parts.push_back(p.get<int>());
    RowLabel label{StrictPartition(std::move(parts)),
                   assoc_parse(row.at("assoc").get<std::string>())};
    const json& vals = row.at("values");
    if (vals.size() != t.classes.size())
      throw std::invalid_argument("row length disagrees with class count");
    std::map<ClassLabel, CycNum> values;
    for (size_t k = 0; k < t.classes.size(); ++k)
      values[t.classes[k]] = cyc_from_json(vals[k]);
    t.rows[label] = std::move(values);
  }
  return t;
}

SpinCharacterTable build_table_cached(CoverGroup group, int n, const std::string& cache_dir) {
  if (cache_dir.empty()) return build_table(group, n);
  std::filesystem::path dir(cache_dir);
  std::filesystem::path file =
      dir / ("spinchars_" + std::string(group == CoverGroup::Sym ? "S" : "A") + "_" +
             std::to_string(n) + ".json");
  if (std::filesystem::exists(file)) {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    SpinCharacterTable t = table_from_json(buf.str());
    if (t.group != group || t.n != n)
      throw std::invalid_argument("cache file does not match its name: " + file.string());
    return t;
  }
  SpinCharacterTable t = build_table(group, n);
  std::filesystem::create_directories(dir);
  std::ofstream out(file);
  out << table_to_json(t);
  return t;
}

// ---- Product characters on parabolic subgroups -------------------------

CycNum reduced_product_char(const std::vector<ProductFactor>& factors,
                            const std::vector<ClassLabel>& slot_classes) {
  SP_CHECK(factors.size() == slot_classes.size(),
           "one class label per product factor");
  size_t l = factors.size();
  SP_CHECK(l >= 1, "empty products are not characters");

  int s = 0; // factors that are one of an associate pair
  for (const ProductFactor& f : factors)
    if (f.row.assoc != Assoc::Plain) ++s;

  std::vector<int> slot_parity(l);
  bool all_even = true, split_pattern = true;
  for (size_t j = 0; j < l; ++j) {
    SP_CHECK(slot_classes[j].cycle_type.n() == factors[j].n,
             "slot class must match the factor's rank");
    slot_parity[j] = classify_partition(slot_classes[j].cycle_type).perm_parity;
    if (slot_parity[j] != 0) all_even = false;
    bool self_assoc = factors[j].row.assoc == Assoc::Plain;
    if (slot_parity[j] != (self_assoc ? 0 : 1)) split_pattern = false;
  }

  if (all_even) {
    // Every block even: the product of the block values, carrying one
    // factor 2 per pair of associate-type blocks.
    CycNum v = CycNum(pow2(s / 2));
    for (size_t j = 0; j < l; ++j) {
      const SpinCharacterTable& tab = memoized_table(CoverGroup::Sym, factors[j].n);
      v *= tab.value(factors[j].row, sym_label_of(slot_classes[j]));
      if (v.is_zero()) return v;
    }
    return v;
  }
  if (s % 2 != 0 && split_pattern) {
    // Self-associate blocks even, associate-pair blocks odd: difference
    // characters on the former, row values on the latter, with the fixed
    // choice of the two global signs.
    CycNum v = (CycNum(2) * CycNum::i()).pow(s / 2);
    for (size_t j = 0; j < l; ++j) {
      if (factors[j].row.assoc == Assoc::Plain) {
        v *= delta_value(factors[j].n, factors[j].row.lambda, slot_classes[j]);
      } else {
        const SpinCharacterTable& tab = memoized_table(CoverGroup::Sym, factors[j].n);
        v *= tab.value(factors[j].row, sym_label_of(slot_classes[j]));
      }
      if (v.is_zero()) return v;
    }
    return v;
  }
  return CycNum::zero();
}

namespace {

// Remap a rank-m element onto generators offset+1 .. offset+m of a rank-n
// algebra. Bit shifts preserve the relative order of the factors, so this
// is an algebra embedding.
CoverElement embed_block(const CoverElement& g, int n, int offset) {
  CoverElement out = CoverElement::zero(n);
  for (const auto& [mask, coef] : g.terms) out.terms[mask << offset] = coef;
  return out;
}

void enumerate_tuples(const std::vector<std::vector<ClassLabel>>& choices, size_t j,
                      std::vector<ClassLabel>& current,
                      const std::function<void(const std::vector<ClassLabel>&)>& visit) {
  if (j == choices.size()) {
    visit(current);
    return;
  }
  for (const ClassLabel& c : choices[j]) {
    current.push_back(c);
    enumerate_tuples(choices, j + 1, current, visit);
    current.pop_back();
  }
}

} // namespace

std::map<RowLabel, Rat> induce_and_decompose(const std::vector<ProductFactor>& factors,
                                             const SpinCharacterTable& table) {
  SP_CHECK(table.group == CoverGroup::Sym,
           "induction decomposes against the symmetric-cover table");
  size_t l = factors.size();
  SP_CHECK(l >= 1, "empty products are not characters");
  int n = 0;
  Int subgroup_order = 2;
  for (const ProductFactor& f : factors) {
    PartitionClass lc = classify_partition(f.row.lambda);
    SP_CHECK(lc.in_DP && f.row.lambda.n() == f.n, "factor rows are strict partitions of the rank");
    SP_CHECK((f.row.assoc == Assoc::Plain) == (lc.dp_sign > 0),
             "factor associate tag must match the partition kind");
    n += f.n;
    Int fact = 1;
    for (int k = 2; k <= f.n; ++k) fact *= k;
    subgroup_order *= fact;
  }
  SP_CHECK(table.n == n, "factor ranks must add up to the table rank");

  int s = 0;
  for (const ProductFactor& f : factors)
    if (f.row.assoc != Assoc::Plain) ++s;

  // Sum phi(p) conj(chi(p)) over the parabolic subgroup by running over
  // tuples of per-block classes; products of representatives of one tuple
  // all fuse into a single class of the big cover wherever phi is nonzero.
  std::map<ClassLabel, CycNum> fused; // weighted phi mass per fused class

  auto accumulate = [&](const std::vector<ClassLabel>& tuple) {
    CycNum v = reduced_product_char(factors, tuple);
    if (v.is_zero()) return;
    CoverElement x = CoverElement::one(n);
    int offset = 0;
    Rat weight = 1;
    for (size_t j = 0; j < l; ++j) {
      x = multiply(x, embed_block(canonical_rep(factors[j].n, tuple[j]), n, offset));
      offset += factors[j].n;
      weight *= Rat(class_size(factors[j].n, tuple[j]));
    }
    ClassLabel c = class_of(x, n, CoverGroup::Sym);
    auto [it, inserted] = fused.emplace(c, CycNum::zero());
    it->second += v * weight;
  };

  // All-even tuples: every block ranges over its odd-cycle-type classes.
  {
    std::vector<std::vector<ClassLabel>> choices(l);
    for (size_t j = 0; j < l; ++j)
      for (const ClassLabel& c : conjugacy_classes(CoverGroup::Sym, factors[j].n))
        if (classify_partition(c.cycle_type).in_OP) choices[j].push_back(c);
    std::vector<ClassLabel> current;
    enumerate_tuples(choices, 0, current, accumulate);
  }
  // Split-pattern tuples: self-associate blocks range over the alternating
  // classes of their own cycle type, associate-pair blocks over the two
  // classes of theirs.
  if (s % 2 != 0) {
    std::vector<std::vector<ClassLabel>> choices(l);
    for (size_t j = 0; j < l; ++j) {
      const Partition type = factors[j].row.lambda.as_partition();
      if (factors[j].row.assoc == Assoc::Plain) {
        for (const ClassLabel& c : conjugacy_classes(CoverGroup::Alt, factors[j].n))
          if (c.cycle_type == type) choices[j].push_back(c);
      } else {
        for (const ClassLabel& c : conjugacy_classes(CoverGroup::Sym, factors[j].n))
          if (c.cycle_type == type) choices[j].push_back(c);
      }
      SP_CHECK(!choices[j].empty(), "every factor type labels at least one class");
    }
    std::vector<ClassLabel> current;
    enumerate_tuples(choices, 0, current, accumulate);
  }

  // Normalize: the multiplication map from the product of the block covers
  // onto the parabolic subgroup identifies 2^{l-1} tuples per element.
  Int denom = subgroup_order;
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), (mp_bitcnt_t)(l - 1));

  std::map<RowLabel, Rat> result;
  for (const auto& [row, values] : table.rows) {
    CycNum sum = CycNum::zero();
    for (const auto& [c, mass] : fused) sum += mass * values.at(c).conjugate();
    SP_CHECK(sum.is_rational(), "induced multiplicities must be rational");
    Rat m = sum.to_rational() / Rat(denom);
    m.canonicalize();
    SP_CHECK(sgn(m) >= 0, "induced multiplicities must be non-negative");
    SP_CHECK(m.get_den() == 1 || m.get_den() == 2,
             "induced multiplicities must be integers or halves");
    result[row] = m;
  }
  return result;
}

} // namespace spinpoly
