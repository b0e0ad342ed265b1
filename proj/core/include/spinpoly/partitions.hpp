#pragma once
#include "spinpoly/rational.hpp"
#include <compare>
#include <string>
#include <vector>

namespace spinpoly {

// Integer partition: weakly decreasing positive parts. Value type.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int n() const;             // sum of parts
  int length() const { return (int)parts.size(); }
  bool empty() const { return parts.empty(); }

  auto operator<=>(const Partition&) const = default;

  std::string str() const;                  // "7,5,4,3,2,1"; "-" when empty
  static Partition parse(const std::string& text);
};

// Partition with strictly decreasing parts.
struct StrictPartition {
  std::vector<int> parts;

  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> p);

  int n() const;
  int length() const { return (int)parts.size(); }
  bool empty() const { return parts.empty(); }
  Partition as_partition() const { return Partition(parts); }

  auto operator<=>(const StrictPartition&) const = default;

  std::string str() const;
  static StrictPartition parse(const std::string& text);
};

struct PartitionClass {
  bool in_OP = false;      // all parts odd
  bool in_DP = false;      // parts distinct
  int dp_sign = 0;         // +1 / -1 when in_DP (parity of the even-part count), else 0
  int perm_parity = 0;     // 0 even, 1 odd: parity of n - length
  long lcm = 1;            // lcm of the parts (1 for the empty partition)
};

PartitionClass classify_partition(const Partition& alpha);
inline PartitionClass classify_partition(const StrictPartition& alpha) {
  return classify_partition(alpha.as_partition());
}

// Centralizer order of a permutation of cycle type alpha in S_n:
// prod_i i^{m_i} m_i!.
Int centralizer_order(const Partition& alpha);

// All partitions of n, in a fixed deterministic order (lexicographically
// decreasing by part sequence).
std::vector<Partition> partitions_of(int n);
std::vector<Partition> odd_partitions_of(int n);           // OP_n
std::vector<StrictPartition> strict_partitions_of(int n);  // DP_n
// DP_n^+ (sign=+1) or DP_n^- (sign=-1).
std::vector<StrictPartition> strict_partitions_of(int n, int sign);

// The strict partition formed by the first m cells of lambda's shifted
// diagram read row by row.
StrictPartition dominant_partition(const StrictPartition& lambda, int m);

// Union of parts (multiset merge, resorted decreasing).
Partition union_parts(const Partition& a, const Partition& b);

bool contains(const StrictPartition& outer, const StrictPartition& inner);

} // namespace spinpoly
