#pragma once
#include "spinpoly/partitions.hpp"
#include <string>
#include <vector>

namespace spinpoly {

// Letter of the marked alphabet, ordered 1' < 1 < 2' < 2 < 3' < ...
struct MarkedLetter {
  int value = 1;   // >= 1
  bool marked = false;
  int rank() const { return 2 * value - (marked ? 1 : 0); }
  friend bool operator==(const MarkedLetter&, const MarkedLetter&) = default;
};

// Shifted skew shape outer/inner. Row r (1-based) of a strict partition
// occupies shifted columns r .. r+outer_r-1; the inner shape covers the
// first inner_r of those, leaving cells in columns r+inner_r .. r+outer_r-1.
struct ShiftedSkewShape {
  StrictPartition outer, inner;

  ShiftedSkewShape(StrictPartition out, StrictPartition in);
  int rows() const { return (int)outer.parts.size(); }
  int row_begin(int r) const; // first skew column of row r (1-based), inclusive
  int row_end(int r) const;   // one past the last column of row r
  int cells() const;
};

// A filling of a shifted skew shape; rows[r-1][c - row_begin(r)] is the
// letter at row r, shifted column c.
struct MarkedTableau {
  ShiftedSkewShape shape;
  std::vector<std::vector<MarkedLetter>> rows;

  explicit MarkedTableau(ShiftedSkewShape s);
  MarkedLetter& at(int r, int c);
  const MarkedLetter& at(int r, int c) const;
  bool has_cell(int r, int c) const;
  // Multiplicity of each value, marked and unmarked together.
  std::vector<int> content() const;
};

// Rows and columns weakly increase in the marked order; every unmarked
// letter appears at most once per column, every marked letter at most once
// per row.
bool tableau_valid(const MarkedTableau& t);

// Row-reading word: bottom row first, each row left to right.
std::vector<MarkedLetter> reading_word(const MarkedTableau& t);

// Lattice property of a word over the marked alphabet. Statistics: a
// right-to-left pass counting unmarked letters followed by a left-to-right
// pass counting marked letters; whenever the running counts of i and i-1
// tie (i >= 2), the next letter read must not be i or i' in the first pass
// and must not be unmarked i-1 or marked i' in the second.
bool lattice_word(const std::vector<MarkedLetter>& w);

// The first occurrence (in word order) of every value is unmarked.
bool leftmost_unmarked(const std::vector<MarkedLetter>& w);

// f_{mu nu}^lambda: the number of valid marked tableaux of shape
// lambda/mu and content nu whose reading word passes lattice_word and
// leftmost_unmarked. Incompatible inputs (|mu|+|nu| != |lambda| or
// mu not contained in lambda) give 0.
long shifted_LR(const StrictPartition& lambda, const StrictPartition& mu,
                const StrictPartition& nu);

// Early-exit variant: true iff f_{mu nu}^lambda > 0.
bool shifted_LR_positive(const StrictPartition& lambda,
                         const StrictPartition& mu,
                         const StrictPartition& nu);

// Debug rendering in grid notation, one row per line, primes as trailing '.
std::string tableau_grid(const MarkedTableau& t);

// Diagnostic trail of the complement construction.
struct ComplementTrace {
  std::string branch;       // "strict" / "case1" / "case2" / "search"
  std::string witness_grid; // grid dump of the witness tableau (empty for search)
};

// A strict partition nu of |lambda|-|alpha| with f_{alpha nu}^lambda > 0,
// built from the column-filled tableau of lambda/alpha by the marking
// repairs; requires alpha to be the dominant partition of its size in
// lambda, or alpha = (g,1) with g <= lambda_1 and |lambda| > 6. With
// exhaustive_search set, instead scans strict partitions in decreasing
// lexicographic order and returns the first with a positive coefficient.
StrictPartition dominant_complement(const StrictPartition& lambda,
                                    const StrictPartition& alpha,
                                    ComplementTrace* trace = nullptr,
                                    bool exhaustive_search = false);

} // namespace spinpoly
