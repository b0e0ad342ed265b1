#include "spinpoly/exception_tables.hpp"
#include "spinpoly/exception_data.inc"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>

namespace spinpoly {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Raw data: embedded JSON files parsed once.

struct RawEntry {
  Partition type;
  std::string sel;
  json poly;
  json variant;  // null when absent
  std::string note;
};

struct RawRow {
  int n{0};
  StrictPartition lambda;
  bool pm_marks{false};
  std::vector<RawEntry> entries;
  std::string source;
};

struct RawData {
  std::vector<RawRow> s_rows, a_rows;
};

std::vector<RawRow> parse_rows(const char* text, const std::string& srcname,
                               const std::string& expect_group) {
  json doc = json::parse(text);
  SP_CHECK(doc.at("group").get<std::string>() == expect_group,
           "exception data file has the wrong group tag");
  std::vector<RawRow> rows;
  for (const auto& rj : doc.at("rows")) {
    RawRow r;
    r.n = rj.at("n").get<int>();
    r.lambda = StrictPartition(rj.at("lambda").get<std::vector<int>>());
    const std::string marks = rj.at("marks").get<std::string>();
    SP_CHECK(marks == "pm" || marks == "plain", "bad row marks in exception data");
    r.pm_marks = marks == "pm";
    r.source = srcname;
    for (const auto& ej : rj.at("entries")) {
      RawEntry e;
      e.type = Partition(ej.at("cls").at("type").get<std::vector<int>>());
      e.sel = ej.at("cls").at("sel").get<std::string>();
      SP_CHECK(e.sel == "+" || e.sel == "-" || e.sel == "pm" || e.sel == "none",
               "bad class selector in exception data");
      e.poly = ej.at("poly");
      e.variant = ej.value("variant", json());
      e.note = ej.value("note", std::string());
      SP_CHECK(e.variant.is_null() || !e.note.empty(),
               "exception data variant without a note");
      r.entries.push_back(std::move(e));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

const RawData& raw_data() {
  static const RawData* data = [] {
    auto* d = new RawData;
    d->s_rows = parse_rows(detail::kExceptionDataS18, "table:s:1-8", "S");
    d->a_rows = parse_rows(detail::kExceptionDataA18, "table:a:1-8", "A");
    auto more = parse_rows(detail::kExceptionDataA910, "table:a:9-10", "A");
    d->a_rows.insert(d->a_rows.end(), more.begin(), more.end());
    return d;
  }();
  return *data;
}

// ---------------------------------------------------------------------------
// AST evaluation. Failures that a misprinted table entry can legitimately
// produce (a denominator that does not divide, roots that are not roots of
// unity of the class order) are reported as EvalError and become
// ExpansionFailed; structural problems in the data itself abort.

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EvalCtx {
  int lambda_sign{0};
  int class_sign{0};
};

CycNum eval_scalar(const json& node, const EvalCtx& ctx);

long exponent_value(const json& node, const EvalCtx& ctx) {
  if (node.is_number_integer()) return node.get<long>();
  CycNum v = eval_scalar(node, ctx);
  if (!v.is_integer()) throw EvalError("exponent is not an integer");
  return v.to_rational().get_num().get_si();
}

CycNum eval_scalar(const json& node, const EvalCtx& ctx) {
  if (node.is_number_integer()) return CycNum(node.get<long>());
  if (node.is_string()) throw EvalError("polynomial variable used as a constant");
  SP_CHECK(node.is_object(), "bad node in exception data");
  const std::string op = node.at("op").get<std::string>();
  if (op == "add") {
    CycNum acc;
    for (const auto& a : node.at("args")) acc += eval_scalar(a, ctx);
    return acc;
  }
  if (op == "mul") {
    CycNum acc = CycNum::one();
    for (const auto& a : node.at("args")) acc *= eval_scalar(a, ctx);
    return acc;
  }
  if (op == "div") {
    CycNum den = eval_scalar(node.at("den"), ctx);
    if (den.is_zero()) throw EvalError("division by zero");
    return eval_scalar(node.at("num"), ctx) / den;
  }
  if (op == "pow") {
    long e = exponent_value(node.at("exp"), ctx);
    CycNum b = eval_scalar(node.at("base"), ctx);
    if (e >= 0) return b.pow(e);
    if (b.is_zero()) throw EvalError("negative power of zero");
    return b.inverse().pow(-e);
  }
  if (op == "rootu")
    return CycNum::root_of_unity(node.at("n").get<long>(), node.at("k").get<long>());
  if (op == "surd") return CycNum::sqrt_int(node.at("v").get<long>());
  if (op == "rat")
    return CycNum(rat(node.at("num").get<long>(), node.at("den").get<long>()));
  if (op == "sgn") {
    const std::string bind = node.at("bind").get<std::string>();
    const int s = node.at("s").get<int>();
    SP_CHECK(s == 1 || s == -1, "bad sign factor in exception data");
    int bound = 0;
    if (bind == "lambda") bound = ctx.lambda_sign;
    else if (bind == "class") bound = ctx.class_sign;
    else SP_CHECK(false, "bad sign binding in exception data");
    SP_CHECK(bound != 0, "exception data uses a sign with no bound value");
    return CycNum(long(s * bound));
  }
  SP_CHECK(false, "unknown operator in exception data");
  return CycNum();  // unreachable
}

CycPoly eval_poly(const json& node, const EvalCtx& ctx) {
  if (node.is_number_integer()) return poly_const(CycNum(node.get<long>()));
  if (node.is_string()) {
    SP_CHECK(node.get<std::string>() == "x", "unknown symbol in exception data");
    return poly_monomial(CycNum::one(), 1);
  }
  SP_CHECK(node.is_object(), "bad node in exception data");
  const std::string op = node.at("op").get<std::string>();
  if (op == "add") {
    CycPoly acc = poly_zero();
    for (const auto& a : node.at("args")) acc = poly_add(acc, eval_poly(a, ctx));
    return acc;
  }
  if (op == "mul") {
    CycPoly acc = poly_const(CycNum::one());
    for (const auto& a : node.at("args")) acc = poly_mul(acc, eval_poly(a, ctx));
    return acc;
  }
  if (op == "div") {
    CycPoly num = eval_poly(node.at("num"), ctx);
    CycPoly den = eval_poly(node.at("den"), ctx);
    if (poly_degree(den) < 0) throw EvalError("division by zero");
    CycPoly quot, rem;
    poly_divmod(num, den, quot, rem);
    if (poly_degree(rem) >= 0)
      throw EvalError("denominator does not divide numerator");
    return quot;
  }
  if (op == "pow") {
    long e = exponent_value(node.at("exp"), ctx);
    CycPoly b = eval_poly(node.at("base"), ctx);
    long d = poly_degree(b);
    if (d <= 0) {
      CycNum c = d < 0 ? CycNum() : b[0];
      if (e >= 0) return poly_const(c.pow(e));
      if (c.is_zero()) throw EvalError("negative power of zero");
      return poly_const(c.inverse().pow(-e));
    }
    if (e < 0) throw EvalError("negative power of a polynomial");
    CycPoly acc = poly_const(CycNum::one());
    for (long i = 0; i < e; ++i) acc = poly_mul(acc, b);
    return acc;
  }
  return poly_const(eval_scalar(node, ctx));
}

EntryExpansion expand_ast(const json& ast, const EvalCtx& ctx, long k) {
  CycPoly p;
  try {
    p = eval_poly(ast, ctx);
  } catch (const EvalError& e) {
    return {false, {}, 0, e.what()};
  }
  const long deg = poly_degree(p);
  if (deg <= 0) return {false, {}, 0, "expression is not a nonconstant polynomial"};
  RootSet roots;
  for (long j = 0; j < 2 * k; ++j) {
    RootFrac rf = root_frac(j, 2 * k);
    if (poly_eval(p, root_value(rf)).is_zero()) roots.insert(rf);
  }
  if ((long)roots.size() != deg)
    return {false, {}, 0,
            "expansion does not split into distinct roots of unity of twice the class order"};
  return {true, roots, support_epsilon(roots, k), ""};
}

long type_lcm(const Partition& type) {
  long k = 1;
  for (int v : type.parts) k = (long)lcm_ll(k, v);
  return k;
}

// ---------------------------------------------------------------------------
// Resolution of the raw rows against a computed character table.

// Rows applying to one cover/rank: the native rows, and for the alternating
// cover also the symmetric-cover rows restricted to it — keeping the classes
// that survive restriction (even cycle type) away from the diagonal
// (type == lambda), where restriction leaves the eigenvalue sets unchanged.
std::vector<RawRow> rows_for(CoverGroup g, int n) {
  const RawData& D = raw_data();
  std::vector<RawRow> out;
  if (g == CoverGroup::Sym) {
    for (const auto& r : D.s_rows)
      if (r.n == n) out.push_back(r);
    return out;
  }
  for (const auto& r : D.a_rows)
    if (r.n == n) out.push_back(r);
  for (const auto& r : D.s_rows) {
    if (r.n != n) continue;
    RawRow d = r;
    d.source = "derived:" + r.source;
    d.entries.clear();
    for (const auto& e : r.entries) {
      if ((n - e.type.length()) % 2 != 0) continue;   // odd permutation
      if (e.type.parts == r.lambda.parts) continue;   // diagonal
      d.entries.push_back(e);
    }
    if (!d.entries.empty()) out.push_back(std::move(d));
  }
  return out;
}

struct Resolver {
  const SpinCharacterTable& T;
  std::map<std::pair<RowLabel, ClassLabel>, RootSet> spec_memo;

  explicit Resolver(const SpinCharacterTable& t) : T(t) {}

  const RootSet& support_at(const RowLabel& row, const ClassLabel& cls) {
    auto key = std::make_pair(row, cls);
    auto it = spec_memo.find(key);
    if (it == spec_memo.end())
      it = spec_memo.emplace(key, spectrum(T, row, cls).support()).first;
    return it->second;
  }

  std::vector<ClassLabel> classes_of_type(const Partition& type) const {
    std::vector<ClassLabel> out;
    for (const auto& c : T.classes)
      if (c.cycle_type == type) out.push_back(c);
    return out;
  }

  // Resolve every entry of `raw` for one row instance. Returns the number of
  // instances whose printed (or variant) polynomial matched a computed cell;
  // records and cells are emitted only when `out` is given.
  //
  // Distinct printed class decorations on one cycle type name distinct
  // classes, so their entries must land on distinct cells: once an entry has
  // matched a cell, a later entry with a different decoration may not claim
  // the same cell again (repeats of the same decoration are benign printed
  // duplicates and stay shared). This keeps a pair of entries that
  // misprints one polynomial twice from passing as consistent.
  int process(const RawRow& raw, const RowLabel& row, int lambda_sign,
              ResolvedExceptions* out) {
    int matched = 0;
    std::map<Partition, std::vector<std::pair<std::string, ClassLabel>>> claimed;
    for (const auto& e : raw.entries) {
      std::vector<int> class_signs;
      if (e.sel == "pm") class_signs = {+1, -1};
      else if (e.sel == "+") class_signs = {+1};
      else if (e.sel == "-") class_signs = {-1};
      else class_signs = {0};
      const long k = type_lcm(e.type);
      const auto candidates = classes_of_type(e.type);
      for (int cs : class_signs) {
        EvalCtx ctx{lambda_sign, cs};
        EntryExpansion lit = expand_ast(e.poly, ctx, k);
        EntryExpansion var;
        const bool has_var = !e.variant.is_null();
        if (has_var) var = expand_ast(e.variant, ctx, k);

        ResolvedEntry rec;
        rec.group = T.group;
        rec.n = T.n;
        rec.row = row;
        rec.cls_type = e.type;
        rec.sel = e.sel;
        rec.class_sign = cs;
        rec.lambda_sign = lambda_sign;
        rec.note = e.note;
        rec.source = raw.source;

        if (candidates.empty()) {
          rec.outcome = EntryOutcome::ClassNotInGroup;
          rec.entry_support =
              lit.ok ? lit.support : (has_var && var.ok ? var.support : RootSet{});
          if (out) out->records.push_back(std::move(rec));
          continue;
        }

        auto blocked = [&](const ClassLabel& c) {
          auto it = claimed.find(e.type);
          if (it == claimed.end()) return false;
          for (const auto& kv : it->second)
            if (kv.first != e.sel && kv.second == c) return true;
          return false;
        };
        auto match_cells = [&](const RootSet& s) {
          std::vector<ClassLabel> v;
          for (const auto& c : candidates)
            if (!blocked(c) && support_at(row, c) == s) v.push_back(c);
          return v;
        };

        std::vector<ClassLabel> cells;
        if (lit.ok && !(cells = match_cells(lit.support)).empty()) {
          rec.outcome = EntryOutcome::MatchedVerbatim;
          rec.entry_support = lit.support;
          ++matched;
        } else if (has_var && var.ok && !(cells = match_cells(var.support)).empty()) {
          rec.outcome = EntryOutcome::MatchedVariant;
          rec.used_variant = true;
          rec.entry_support = var.support;
          ++matched;
        } else if (lit.ok || (has_var && var.ok)) {
          rec.outcome = EntryOutcome::Unmatched;
          rec.entry_support = lit.ok ? lit.support : var.support;
          const int eps = support_epsilon(rec.entry_support, k);
          for (const auto& c : candidates) {
            if (class_epsilon(T.n, c) != eps) continue;
            if ((long)support_at(row, c).size() >= k) continue;
            cells.push_back(c);
          }
        } else {
          rec.outcome = EntryOutcome::ExpansionFailed;
          rec.why = lit.why;
          for (const auto& c : candidates) {
            if (c.z_sign != cs) continue;
            if ((long)support_at(row, c).size() >= k) continue;
            cells.push_back(c);
          }
        }
        if (rec.outcome == EntryOutcome::MatchedVerbatim ||
            rec.outcome == EntryOutcome::MatchedVariant)
          for (const auto& c : cells) claimed[e.type].emplace_back(e.sel, c);
        rec.cells = cells;
        if (out) {
          for (const auto& c : cells) out->cells[row][c] = support_at(row, c);
          out->records.push_back(std::move(rec));
        }
      }
    }
    return matched;
  }
};

ResolvedExceptions resolve_impl(const SpinCharacterTable& T) {
  ResolvedExceptions R;
  R.group = T.group;
  R.n = T.n;
  R.covered = (T.group == CoverGroup::Sym) ? T.n <= 8 : T.n <= 10;
  if (!R.covered) return R;

  Resolver res(T);
  for (const auto& raw : rows_for(T.group, T.n)) {
    std::vector<RowLabel> ours;
    for (const auto& kv : T.rows)
      if (kv.first.lambda == raw.lambda) ours.push_back(kv.first);
    SP_CHECK(!ours.empty(), "exception table row names an unknown representation");
    SP_CHECK(ours.size() <= 2, "more than two rows share a label");

    if (ours.size() == 2 && raw.pm_marks) {
      // A printed +/- pair naming two representations: decide which printed
      // sign is which row by the total number of matched entries.
      RowLabel rplus = ours[0], rminus = ours[1];
      if (rplus.assoc != Assoc::Plus) std::swap(rplus, rminus);
      SP_CHECK(rplus.assoc == Assoc::Plus && rminus.assoc == Assoc::Minus,
               "paired rows lack +/- labels");
      const int score_id =
          res.process(raw, rplus, +1, nullptr) + res.process(raw, rminus, -1, nullptr);
      const int score_sw =
          res.process(raw, rminus, +1, nullptr) + res.process(raw, rplus, -1, nullptr);
      const int sigma = score_sw > score_id ? -1 : +1;
      R.row_bijection[raw.lambda] = sigma;
      const RowLabel& bp = sigma == +1 ? rplus : rminus;
      const RowLabel& bm = sigma == +1 ? rminus : rplus;
      res.process(raw, bp, +1, &R);
      res.process(raw, bm, -1, &R);
    } else {
      for (const auto& r : ours) res.process(raw, r, 0, &R);
    }
  }

  // Every split class determines its central twin: the twin cell carries the
  // negated eigenvalue set, so it is exceptional exactly when the resolved
  // cell is. Fill the twins the tables leave implicit.
  for (auto& rowcells : R.cells) {
    std::vector<std::pair<ClassLabel, RootSet>> add;
    for (const auto& kv : rowcells.second) {
      if (kv.first.z_sign == 0) continue;
      ClassLabel partner = kv.first;
      partner.z_sign = -partner.z_sign;
      if (!rowcells.second.count(partner))
        add.emplace_back(partner, res.support_at(rowcells.first, partner));
    }
    for (auto& kv : add) rowcells.second.insert(std::move(kv));
  }

  // Completeness: the resolved cells must be exactly the cells with fewer
  // than k distinct eigenvalues.
  for (const auto& kv : T.rows) {
    const RowLabel& row = kv.first;
    for (const auto& cls : T.classes) {
      const long k = type_lcm(cls.cycle_type);
      const bool exceptional = (long)res.support_at(row, cls).size() < k;
      const bool resolved = R.find(row, cls) != nullptr;
      if (exceptional && !resolved)
        R.cell_set_diff.push_back("unlisted exceptional cell: " + row.str() + " at " +
                                  cls.str());
      if (!exceptional && resolved)
        R.cell_set_diff.push_back("listed cell is not exceptional: " + row.str() +
                                  " at " + cls.str());
    }
  }
  R.cell_set_equal = R.cell_set_diff.empty();
  return R;
}

}  // namespace

std::string outcome_str(EntryOutcome o) {
  switch (o) {
    case EntryOutcome::MatchedVerbatim: return "matched-verbatim";
    case EntryOutcome::MatchedVariant: return "matched-variant";
    case EntryOutcome::Unmatched: return "unmatched";
    case EntryOutcome::ClassNotInGroup: return "class-not-in-group";
    case EntryOutcome::ExpansionFailed: return "expansion-failed";
  }
  return "?";
}

const RootSet* ResolvedExceptions::find(const RowLabel& row, const ClassLabel& cls) const {
  auto it = cells.find(row);
  if (it == cells.end()) return nullptr;
  auto jt = it->second.find(cls);
  if (jt == it->second.end()) return nullptr;
  return &jt->second;
}

SupportPool ResolvedExceptions::pool() const {
  SupportPool p;
  for (const auto& rowcells : cells)
    for (const auto& kv : rowcells.second) p.insert(kv.second);
  return p;
}

int support_epsilon(const RootSet& support, long k) {
  int eps = 0;
  for (const auto& rf : support) {
    // rf = num/den of a turn; zeta^k is at (num*k/den) mod 1.
    const long r = (rf.first * k) % rf.second;
    int e;
    if (r == 0) e = 1;
    else if (2 * r == rf.second) e = -1;
    else return 0;
    if (eps == 0) eps = e;
    else if (eps != e) return 0;
  }
  return eps;
}

const ResolvedExceptions& resolve_exceptions(const SpinCharacterTable& table) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<ResolvedExceptions>> memo;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair((int)table.group, table.n);
  auto it = memo.find(key);
  if (it == memo.end())
    it = memo.emplace(key, std::make_unique<ResolvedExceptions>(resolve_impl(table))).first;
  return *it->second;
}

EntryExpansion expand_table_entry(CoverGroup group, int n,
                                  const std::vector<int>& lambda,
                                  const std::vector<int>& cls_type,
                                  const std::string& sel, int occurrence,
                                  int lambda_sign, int class_sign, long k,
                                  bool prefer_variant) {
  const RawData& D = raw_data();
  const auto& rows = group == CoverGroup::Sym ? D.s_rows : D.a_rows;
  int seen = 0;
  for (const auto& r : rows) {
    if (r.n != n || r.lambda.parts != lambda) continue;
    for (const auto& e : r.entries) {
      if (e.type.parts != cls_type || e.sel != sel) continue;
      if (seen++ < occurrence) continue;
      const EvalCtx ctx{lambda_sign, class_sign};
      if (prefer_variant && !e.variant.is_null()) return expand_ast(e.variant, ctx, k);
      return expand_ast(e.poly, ctx, k);
    }
  }
  return {false, {}, 0, "no such table entry"};
}

}  // namespace spinpoly
