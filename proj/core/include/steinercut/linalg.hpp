#pragma once

#include <vector>

#include "steinercut/graph.hpp"
#include "steinercut/rational.hpp"

namespace steinercut {

using RatRow = std::vector<Rat>;

// Dense rational matrix, row major. Sized for incidence systems (tens of rows
// and columns), not for numerics work.
class RatMatrix {
 public:
  RatMatrix(int rows, int cols);
  static RatMatrix from_rows(std::vector<RatRow> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  RatRow row(int r) const;

 private:
  int rows_, cols_;
  std::vector<Rat> data_;
};

// Exact rank via fraction-free style Gaussian elimination over Q.
int rank(RatMatrix m);

struct SolveOutcome {
  bool singular = false;
  RatRow solution;  // empty when singular
};

// Solves a x = b for square a; reports singularity instead of failing.
SolveOutcome solve_square(const RatMatrix& a, const RatRow& b);

// Unique positive integer multiple of v with componentwise gcd 1. Requires
// v >= 0 componentwise and v != 0.
EdgeVector minimum_integer_form(const EdgeVector& v);

// Joint scaling of (coeffs, rhs) by the multiplier that puts coeffs into
// minimum integer form.
std::pair<EdgeVector, Rat> minimum_integer_form(const EdgeVector& coeffs, const Rat& rhs);

// Incremental row space: membership tests and rank growth without re-running
// elimination from scratch. Used for root-basis extraction.
class RowSpan {
 public:
  explicit RowSpan(int cols);

  int rank() const { return static_cast<int>(basis_.size()); }
  bool contains(const RatRow& v) const;
  // Adds v to the span; returns false (and leaves the span unchanged) when v
  // is already dependent.
  bool add(const RatRow& v);

 private:
  RatRow reduce(RatRow v) const;

  int cols_;
  std::vector<RatRow> basis_;    // rows in echelon form
  std::vector<int> pivot_cols_;  // pivot column of each basis row
};

}  // namespace steinercut
