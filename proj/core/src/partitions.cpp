#include "spinpoly/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace spinpoly {

namespace {
bool weakly_decreasing(const std::vector<int>& p) {
  for (size_t j = 0; j + 1 < p.size(); ++j)
    if (p[j] < p[j + 1]) return false;
  return p.empty() || p.back() >= 1;
}
bool strictly_decreasing(const std::vector<int>& p) {
  for (size_t j = 0; j + 1 < p.size(); ++j)
    if (p[j] <= p[j + 1]) return false;
  return p.empty() || p.back() >= 1;
}
std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  if (text.empty() || text == "-") return parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  return parts;
}
std::string parts_str(const std::vector<int>& parts) {
  if (parts.empty()) return "-";
  std::ostringstream os;
  for (size_t j = 0; j < parts.size(); ++j) {
    if (j) os << ",";
    os << parts[j];
  }
  return os.str();
}
} // namespace

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  SP_CHECK(weakly_decreasing(parts), "partition parts must decrease weakly");
}

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
std::string Partition::str() const { return parts_str(parts); }
Partition Partition::parse(const std::string& text) { return Partition(parse_parts(text)); }

StrictPartition::StrictPartition(std::vector<int> p) : parts(std::move(p)) {
  SP_CHECK(strictly_decreasing(parts), "strict partition parts must decrease strictly");
}

int StrictPartition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
std::string StrictPartition::str() const { return parts_str(parts); }
StrictPartition StrictPartition::parse(const std::string& text) {
  return StrictPartition(parse_parts(text));
}

PartitionClass classify_partition(const Partition& alpha) {
  PartitionClass c;
  c.in_OP = true;
  c.in_DP = true;
  int evens = 0;
  for (size_t j = 0; j < alpha.parts.size(); ++j) {
    int p = alpha.parts[j];
    if (p % 2 == 0) {
      c.in_OP = false;
      ++evens;
    }
    if (j + 1 < alpha.parts.size() && alpha.parts[j + 1] == p) c.in_DP = false;
    c.lcm = std::lcm(c.lcm, (long)p);
  }
  c.dp_sign = c.in_DP ? (evens % 2 == 0 ? +1 : -1) : 0;
  c.perm_parity = (alpha.n() - alpha.length()) % 2;
  return c;
}

Int centralizer_order(const Partition& alpha) {
  std::map<int, int> mult;
  for (int p : alpha.parts) ++mult[p];
  Int z = 1;
  for (auto [part, m] : mult) {
    for (int t = 0; t < m; ++t) z *= part;
    for (int t = 2; t <= m; ++t) z *= t;
  }
  return z;
}

namespace {
void gen_partitions(int n, int maxpart, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}
} // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  return out;
}

std::vector<Partition> odd_partitions_of(int n) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(n))
    if (classify_partition(p).in_OP) out.push_back(p);
  return out;
}

std::vector<StrictPartition> strict_partitions_of(int n) {
  std::vector<StrictPartition> out;
  for (auto& p : partitions_of(n))
    if (classify_partition(p).in_DP) out.push_back(StrictPartition(p.parts));
  return out;
}

std::vector<StrictPartition> strict_partitions_of(int n, int sign) {
  std::vector<StrictPartition> out;
  for (auto& p : strict_partitions_of(n))
    if (classify_partition(p).dp_sign == sign) out.push_back(p);
  return out;
}

StrictPartition dominant_partition(const StrictPartition& lambda, int m) {
  SP_CHECK(0 <= m && m <= lambda.n(), "dominant_partition cell count out of range");
  std::vector<int> parts;
  int rest = m;
  for (int row : lambda.parts) {
    if (rest == 0) break;
    int take = std::min(row, rest);
    parts.push_back(take);
    rest -= take;
  }
  return StrictPartition(std::move(parts));
}

Partition union_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts;
  parts.insert(parts.end(), b.parts.begin(), b.parts.end());
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

bool contains(const StrictPartition& outer, const StrictPartition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int j = 0; j < inner.length(); ++j)
    if (inner.parts[j] > outer.parts[j]) return false;
  return true;
}

} // namespace spinpoly
