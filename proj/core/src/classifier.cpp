#include "spinpoly/classifier.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace spinpoly {

namespace {

RootSet set_minus(const RootSet& a, const RootSet& b) {
  RootSet out;
  for (const auto& r : a)
    if (!b.count(r)) out.insert(r);
  return out;
}

}  // namespace

MinPolyTag family_tag(const StrictPartition& lambda, int n, const Partition& mu) {
  const bool basic = lambda.parts.size() == 1 && lambda.parts[0] == n;
  const bool second =
      lambda.parts.size() == 2 && lambda.parts[0] == n - 1 && lambda.parts[1] == 1;
  if (!basic && !second) return MinPolyTag::Full;

  int div3 = 0, div5 = 0;
  bool has3 = false, has5 = false;
  for (int p : mu.parts) {
    if (p % 3 == 0) ++div3;
    if (p % 5 == 0) ++div5;
    if (p == 3) has3 = true;
    if (p == 5) has5 = true;
  }
  const bool unique3 = has3 && div3 == 1;  // 3 is the unique part divisible by 3
  const bool unique5 = has5 && div5 == 1;  // 5 is the unique part divisible by 5

  if (second) return unique3 && unique5 ? MinPolyTag::BasicStd15 : MinPolyTag::Full;
  if (unique3 && unique5) return MinPolyTag::Family15;
  if (unique3) return MinPolyTag::Family3;
  if (unique5) return MinPolyTag::Family5;
  return MinPolyTag::Full;
}

RootSet family_support(MinPolyTag tag, long k, int eps) {
  RootSet full = full_root_set(k, eps);
  switch (tag) {
    case MinPolyTag::Full:
      return full;
    case MinPolyTag::Family3:
      SP_CHECK(k % 3 == 0, "family denominator needs 3 | k");
      return set_minus(full, full_root_set(k / 3, eps));
    case MinPolyTag::Family5:
      SP_CHECK(k % 5 == 0, "family denominator needs 5 | k");
      return set_minus(full, full_root_set(k / 5, eps));
    case MinPolyTag::Family15: {
      SP_CHECK(k % 15 == 0, "family denominator needs 15 | k");
      RootSet s = set_minus(full, full_root_set(k / 3, eps));
      return set_minus(s, full_root_set(k / 5, eps));
    }
    case MinPolyTag::BasicStd15:
      SP_CHECK(k % 15 == 0, "family denominator needs 15 | k");
      return set_minus(full, full_root_set(k / 15, eps));
    default:
      SP_CHECK(false, "family_support: not a family tag");
      return {};
  }
}

const SpinCharacterTable& shared_table(CoverGroup group, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<SpinCharacterTable>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair((int)group, n);
  auto it = memo.find(key);
  if (it == memo.end()) {
    auto built = std::make_unique<SpinCharacterTable>(build_table(group, n));
    it = memo.emplace(key, std::move(built)).first;
  }
  return *it->second;
}

MinPolyForm classify(CoverGroup group, int n, const RowLabel& row, const ClassLabel& label) {
  SP_CHECK(label.group == group, "classify: label group mismatch");
  const long k = classify_partition(label.cycle_type).lcm;
  const int eps = class_epsilon(n, label);

  if (table_covered(group, n)) {
    const ResolvedExceptions& res = resolve_exceptions(shared_table(group, n));
    const RootSet* cell = res.find(row, label);
    if (cell != nullptr) {
      SupportPool pool = res.pool();
      MinPolyForm form = form_from_support(*cell, k, eps, &pool);
      return form;
    }
    return form_from_support(full_root_set(k, eps), k, eps, nullptr);
  }

  const MinPolyTag tag = family_tag(row.lambda, n, label.cycle_type);
  MinPolyForm form = form_from_support(family_support(tag, k, eps), k, eps, nullptr);
  SP_CHECK(form.tag == tag, "classify: family form not recognized as its own tag");
  return form;
}

}  // namespace spinpoly
