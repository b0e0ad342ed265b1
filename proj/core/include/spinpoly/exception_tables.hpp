#pragma once
#include "spinpoly/minimal_polynomial.hpp"
#include <map>
#include <string>
#include <vector>

namespace spinpoly {

// Resolution outcome of one instantiated exception-table entry (a printed
// table formula with its row sign and class sign fixed), matched against the
// computed spectra. The embedded data records the tables verbatim, so some
// entries carry misprints; the outcome records how each one was settled.
// See docs/exception-data-format.md.
enum class EntryOutcome {
  MatchedVerbatim,  // printed polynomial equals a computed cell
  MatchedVariant,   // only the corrected reading stored with the entry does
  Unmatched,        // expands cleanly but equals no cell; cell chosen by
                    // epsilon consistency, computed support kept
  ClassNotInGroup,  // class column absent from this cover (odd type in the
                    // alternating cover); documents the symmetric-group side
  ExpansionFailed,  // printed expression defines no valid root set
};

std::string outcome_str(EntryOutcome o);

struct ResolvedEntry {
  CoverGroup group{CoverGroup::Sym};
  int n{1};
  RowLabel row;                 // row instance the entry was resolved against
  Partition cls_type;           // printed class column
  std::string sel;              // printed class decoration: +, -, pm, none
  int class_sign{0};            // instantiated class sign (0 when undecorated)
  int lambda_sign{0};           // instantiated row sign (0 for a single row)
  EntryOutcome outcome{EntryOutcome::MatchedVerbatim};
  bool used_variant{false};
  std::string note;             // transcription note from the data file
  std::string why;              // failure detail for ExpansionFailed
  std::string source;           // "table:..." or "derived:..." provenance
  RootSet entry_support;        // root set of the reading that was used
  std::vector<ClassLabel> cells; // cells this instance accounts for
};

// All exceptional cells of one cover/rank together with the per-entry
// provenance records and the table-to-table consistency verdicts.
struct ResolvedExceptions {
  CoverGroup group{CoverGroup::Sym};
  int n{1};
  // Whether this rank is inside the tabulated range (S: n <= 8, A: n <= 10).
  // Everything below is empty when it is not.
  bool covered{false};

  // Computed support of every exceptional cell, keyed by row and class.
  std::map<RowLabel, std::map<ClassLabel, RootSet>> cells;
  std::vector<ResolvedEntry> records;
  // For rows printed as a +/- pair naming two representations: +1 when the
  // printed plus row is our Plus row, -1 when the naming is swapped.
  std::map<StrictPartition, int> row_bijection;
  // Whether the resolved cells coincide exactly with the directly computed
  // exceptional cells (those with fewer than k distinct eigenvalues).
  bool cell_set_equal{false};
  std::vector<std::string> cell_set_diff;

  const RootSet* find(const RowLabel& row, const ClassLabel& cls) const;
  SupportPool pool() const;
};

// Resolve the embedded exception tables for this table's cover and rank
// against its computed spectra. Memoized per (group, n); returns an empty
// resolution for ranks beyond the covered range (S: n <= 8, A: n <= 10).
const ResolvedExceptions& resolve_exceptions(const SpinCharacterTable& table);

// Root set of one printed entry expanded at the given signs, for auditing
// entries independently of resolution (e.g. values recorded for classes
// that vanish in the alternating cover). `occurrence` disambiguates
// repeated (type, sel) columns within a row, in printed order.
struct EntryExpansion {
  bool ok{false};
  RootSet support;
  int eps{0};       // common value of zeta^k over the support; 0 when mixed
  std::string why;  // failure reason when !ok
};
EntryExpansion expand_table_entry(CoverGroup group, int n,
                                  const std::vector<int>& lambda,
                                  const std::vector<int>& cls_type,
                                  const std::string& sel, int occurrence,
                                  int lambda_sign, int class_sign, long k,
                                  bool prefer_variant = false);

// Common value of zeta^k over the set: +1, -1, or 0 when mixed/empty.
int support_epsilon(const RootSet& support, long k);

} // namespace spinpoly
