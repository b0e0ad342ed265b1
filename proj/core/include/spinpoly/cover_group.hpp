#pragma once
#include "spinpoly/clifford.hpp"
#include "spinpoly/partitions.hpp"
#include <compare>
#include <string>
#include <vector>

namespace spinpoly {

enum class CoverGroup { Sym, Alt };

// Conjugacy class of the double cover of the symmetric (Sym) or
// alternating (Alt) group. z_sign is +1/-1 when the class is separated
// from z times itself (otherwise 0); alt_tag is 1 ("a") or 2 ("b") when a
// symmetric-cover class breaks into two alternating-cover classes
// (otherwise 0).
struct ClassLabel {
  CoverGroup group{CoverGroup::Sym};
  Partition cycle_type;
  int z_sign{0};
  int alt_tag{0};

  friend bool operator==(const ClassLabel& a, const ClassLabel& b) {
    return a.group == b.group && a.cycle_type.parts == b.cycle_type.parts &&
           a.z_sign == b.z_sign && a.alt_tag == b.alt_tag;
  }
  friend bool operator<(const ClassLabel& a, const ClassLabel& b);
  std::string str() const; // {"type":[...],"z":"+","alt":null}
};

// Whether classes of this cycle type are separated from their z-partners
// (type in OP, or in DP with an odd number of even... see implementation),
// and whether they split on restriction to the alternating cover.
bool type_splits_over_z(CoverGroup group, const Partition& type);
bool type_splits_in_alt(int n, const Partition& type);

// Canonical representative: the standard block word for the cycle type,
// times z when z_sign is -1, conjugated by t_1 when alt_tag is "b".
CoverElement canonical_rep(int n, const ClassLabel& label);
CoverElement canonical_rep(int n, const Partition& type, int z_sign);

ClassLabel class_of(const CoverElement& g, int n, CoverGroup group);
ClassLabel power_class(int n, const ClassLabel& label, long i);

// +1 when the canonical representative of the type has order lcm(type),
// -1 when the order is twice that.
int epsilon_sign(int n, const Partition& type);
long class_order(int n, const ClassLabel& label);
Int class_size(int n, const ClassLabel& label);

std::vector<ClassLabel> conjugacy_classes(CoverGroup group, int n);

} // namespace spinpoly
