#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinpoly/partitions.hpp"
#include <numeric>

using namespace spinpoly;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
StrictPartition SP(std::vector<int> v) { return StrictPartition(std::move(v)); }

bool dominates(const StrictPartition& mu, const StrictPartition& nu) {
  int smu = 0, snu = 0;
  size_t k = std::max(mu.parts.size(), nu.parts.size());
  for (size_t j = 0; j < k; ++j) {
    smu += j < mu.parts.size() ? mu.parts[j] : 0;
    snu += j < nu.parts.size() ? nu.parts[j] : 0;
    if (smu < snu) return false;
  }
  return true;
}
} // namespace

TEST_CASE("classification predicates") {
  auto c1 = classify_partition(P({3, 3, 1}));
  CHECK(c1.in_OP);
  CHECK(!c1.in_DP);
  CHECK(c1.perm_parity == 0);
  CHECK(c1.lcm == 3);

  auto c2 = classify_partition(P({4, 3, 2, 1}));
  CHECK(c2.in_DP);
  CHECK(c2.dp_sign == +1);
  CHECK(!c2.in_OP);

  auto c3 = classify_partition(P({5, 3}));
  CHECK(c3.in_OP);
  CHECK(c3.in_DP);
  CHECK(c3.dp_sign == +1);
  CHECK(c3.lcm == 15);

  auto c4 = classify_partition(P({2, 1}));
  CHECK(c4.in_DP);
  CHECK(c4.dp_sign == -1);
  CHECK(c4.perm_parity == 1);

  // Permutation parity equals the parity of the number of even parts.
  for (int n = 1; n <= 9; ++n)
    for (auto& a : partitions_of(n)) {
      int evens = 0;
      for (int p : a.parts) evens += (p % 2 == 0);
      CHECK(classify_partition(a).perm_parity == evens % 2);
    }
}

TEST_CASE("enumeration counts") {
  // Euler: #OP_n = #DP_n.
  for (int n = 1; n <= 12; ++n)
    CHECK(odd_partitions_of(n).size() == strict_partitions_of(n).size());
  CHECK(partitions_of(6).size() == 11);
  CHECK(strict_partitions_of(6).size() == 4); // (6),(5,1),(4,2),(3,2,1)
  CHECK(strict_partitions_of(6, -1).size() == 2); // (6),(4,2) have odd even-part count? no: (6):1 even part -> -, (5,1): 0 -> +, (4,2): 2 -> +, (3,2,1): 1 -> -
}

TEST_CASE("centralizer orders") {
  CHECK(centralizer_order(P({1, 1, 1})) == 6);   // identity: |S_3|
  CHECK(centralizer_order(P({3})) == 3);
  CHECK(centralizer_order(P({2, 1})) == 2);
  CHECK(centralizer_order(P({2, 2})) == 8);      // 2*2*2!
  // Class equation: sum over alpha of n!/z_alpha = n!.
  for (int n = 1; n <= 9; ++n) {
    Int fact = 1;
    for (int j = 2; j <= n; ++j) fact *= j;
    Int total = 0;
    for (auto& a : partitions_of(n)) total += fact / centralizer_order(a);
    CHECK(total == fact);
  }
}

TEST_CASE("dominant partition of the first m shifted cells") {
  CHECK(dominant_partition(SP({7, 5, 4, 3, 2, 1}), 8) == SP({7, 1}));
  CHECK(dominant_partition(SP({7, 6, 5, 4, 3, 1}), 9) == SP({7, 2}));
  CHECK(dominant_partition(SP({4, 1}), 4) == SP({4}));
  CHECK(dominant_partition(SP({4, 1}), 0) == SP({}));

  for (int n = 1; n <= 14; ++n)
    for (auto& lam : strict_partitions_of(n))
      for (int m = 0; m <= n; ++m) {
        StrictPartition mu = dominant_partition(lam, m);
        CHECK(mu.n() == m);
        CHECK(contains(lam, mu)); // strictness enforced by the type itself
      }

  // Dominance over all strict nu of the same size contained in lambda.
  for (int n = 1; n <= 10; ++n)
    for (auto& lam : strict_partitions_of(n))
      for (int m = 0; m <= n; ++m) {
        StrictPartition mu = dominant_partition(lam, m);
        for (auto& nu : strict_partitions_of(m))
          if (contains(lam, nu)) CHECK(dominates(mu, nu));
      }
}

TEST_CASE("string round trips") {
  CHECK(P({7, 5, 4, 3, 2, 1}).str() == "7,5,4,3,2,1");
  CHECK(Partition::parse("7,5,4,3,2,1") == P({7, 5, 4, 3, 2, 1}));
  CHECK(StrictPartition::parse("-") == SP({}));
  CHECK(union_parts(P({5, 3}), P({4, 3, 1})) == P({5, 4, 3, 3, 1}));
}
