#pragma once
#include "spinpoly/cover_group.hpp"
#include "spinpoly/cyclotomic.hpp"
#include "spinpoly/partitions.hpp"
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace spinpoly {

// Which member of an associate pair a table row is. Rows come in pairs
// (Plus/Minus) exactly when the underlying representation is not
// isomorphic to its sign twist; otherwise the single row is Plain.
enum class Assoc { Plain, Plus, Minus };

std::string assoc_str(Assoc a);
Assoc assoc_parse(const std::string& s);

struct RowLabel {
  StrictPartition lambda;
  Assoc assoc{Assoc::Plain};

  auto operator<=>(const RowLabel&) const = default;
  std::string str() const;
};

// Complete table of projective (spin) character values for the double
// cover of the symmetric or alternating group of rank n.
struct SpinCharacterTable {
  CoverGroup group{CoverGroup::Sym};
  int n{1};
  std::vector<ClassLabel> classes; // fixed column order
  std::map<ClassLabel, Int> class_sizes;
  std::map<RowLabel, std::map<ClassLabel, CycNum>> rows;

  Int group_order() const;
  const CycNum& value(const RowLabel& row, const ClassLabel& cls) const;
  CycNum degree(const RowLabel& row) const;
  // Class-size-weighted Hermitian inner product of two rows.
  CycNum inner(const RowLabel& a, const RowLabel& b) const;
};

// sqrt2 when lambda has an odd number of even parts, 1 otherwise.
CycNum row_norm_constant(const StrictPartition& lambda);

// The difference character supported on the classes whose cycle type is
// exactly lambda (lambda with all parts distinct and evenly many even
// parts): value i^{(n-l)/2} sqrt(prod lambda_i) on the (+/a) class, negated
// by a central twist and negated again on the "b" classes. The phase is
// normalized into the upper half plane.
CycNum delta_value(int n, const StrictPartition& lambda, const ClassLabel& alt_class);

SpinCharacterTable build_table(CoverGroup group, int n);
// Cache-aware build: loads group/n table from dir when present, otherwise
// builds and stores it. Empty dir disables caching.
SpinCharacterTable build_table_cached(CoverGroup group, int n, const std::string& cache_dir);

std::string table_to_json(const SpinCharacterTable& table);
SpinCharacterTable table_from_json(const std::string& text);

// One tensor factor of a product character on a parabolic subgroup: the
// row lambda/assoc of the rank-n table for its block.
struct ProductFactor {
  int n{1};
  RowLabel row;
};

// Value of the product character at a tuple of per-block classes. Blocks
// whose evaluation needs the finer alternating-cover label (the difference
// character of a self-associate factor) must pass an Alt label; other
// blocks pass Sym labels.
CycNum reduced_product_char(const std::vector<ProductFactor>& factors,
                            const std::vector<ClassLabel>& slot_classes);

// Multiplicity of every row of `table` in the character induced from the
// product of the factors over the parabolic subgroup of their composition.
std::map<RowLabel, Rat> induce_and_decompose(const std::vector<ProductFactor>& factors,
                                             const SpinCharacterTable& table);

} // namespace spinpoly
