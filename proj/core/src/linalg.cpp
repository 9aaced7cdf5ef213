#include "steinercut/linalg.hpp"

#include <algorithm>
#include <utility>

#include "steinercut/error.hpp"

namespace steinercut {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(errc::invalid_input, "matrix: negative dimension");
  data_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

RatMatrix RatMatrix::from_rows(std::vector<RatRow> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RatMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      fail(errc::invalid_input, "matrix: ragged rows");
    }
    for (int j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

RatRow RatMatrix::row(int r) const {
  RatRow out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = at(r, j);
  return out;
}

int rank(RatMatrix m) {
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int j = col; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, col) == 0) continue;
      Rat factor = m.at(i, col) / m.at(r, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(r, j);
    }
    ++r;
  }
  return r;
}

SolveOutcome solve_square(const RatMatrix& a, const RatRow& b) {
  int n = a.rows();
  if (a.cols() != n) fail(errc::invalid_input, "solve: matrix not square");
  if (static_cast<int>(b.size()) != n) fail(errc::invalid_input, "solve: rhs size mismatch");

  // augmented Gaussian elimination with exact pivots
  RatMatrix m(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = a.at(i, j);
    m.at(i, n) = b[i];
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i) {
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return {true, {}};
    for (int j = col; j <= n; ++j) std::swap(m.at(col, j), m.at(pivot, j));
    for (int i = col + 1; i < n; ++i) {
      if (m.at(i, col) == 0) continue;
      Rat factor = m.at(i, col) / m.at(col, col);
      for (int j = col; j <= n; ++j) m.at(i, j) -= factor * m.at(col, j);
    }
  }
  RatRow x(n, Rat(0));
  for (int i = n - 1; i >= 0; --i) {
    Rat acc = m.at(i, n);
    for (int j = i + 1; j < n; ++j) acc -= m.at(i, j) * x[j];
    x[i] = acc / m.at(i, i);
  }
  return {false, std::move(x)};
}

EdgeVector minimum_integer_form(const EdgeVector& v) {
  Int denom_lcm = 1;
  bool all_zero = true;
  for (const Rat& c : v) {
    if (c < 0) fail(errc::invalid_input, "minimum integer form: negative component");
    if (c != 0) all_zero = false;
    denom_lcm = lcm(denom_lcm, denominator(c));
  }
  if (all_zero) fail(errc::invalid_input, "minimum integer form: zero vector");

  Int g = 0;
  for (const Rat& c : v) g = gcd(g, Int(numerator(c) * (denom_lcm / denominator(c))));
  EdgeVector out;
  out.reserve(v.size());
  Rat scale = Rat(denom_lcm) / Rat(g);
  for (const Rat& c : v) out.push_back(c * scale);
  return out;
}

std::pair<EdgeVector, Rat> minimum_integer_form(const EdgeVector& coeffs, const Rat& rhs) {
  Int denom_lcm = 1;
  bool all_zero = true;
  for (const Rat& c : coeffs) {
    if (c < 0) fail(errc::invalid_input, "minimum integer form: negative component");
    if (c != 0) all_zero = false;
    denom_lcm = lcm(denom_lcm, denominator(c));
  }
  if (all_zero) fail(errc::invalid_input, "minimum integer form: zero vector");
  Int g = 0;
  for (const Rat& c : coeffs) g = gcd(g, Int(numerator(c) * (denom_lcm / denominator(c))));
  Rat scale = Rat(denom_lcm) / Rat(g);
  EdgeVector out;
  out.reserve(coeffs.size());
  for (const Rat& c : coeffs) out.push_back(c * scale);
  return {std::move(out), rhs * scale};
}

RowSpan::RowSpan(int cols) : cols_(cols) {}

RatRow RowSpan::reduce(RatRow v) const {
  for (size_t i = 0; i < basis_.size(); ++i) {
    const Rat& lead = v[pivot_cols_[i]];
    if (lead == 0) continue;
    Rat factor = lead / basis_[i][pivot_cols_[i]];
    for (int j = 0; j < cols_; ++j) v[j] -= factor * basis_[i][j];
  }
  return v;
}

bool RowSpan::contains(const RatRow& v) const {
  if (static_cast<int>(v.size()) != cols_) fail(errc::invalid_input, "row span: size mismatch");
  RatRow r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rat& c) { return c == 0; });
}

bool RowSpan::add(const RatRow& v) {
  if (static_cast<int>(v.size()) != cols_) fail(errc::invalid_input, "row span: size mismatch");
  RatRow r = reduce(v);
  for (int j = 0; j < cols_; ++j) {
    if (r[j] != 0) {
      basis_.push_back(std::move(r));
      pivot_cols_.push_back(j);
      return true;
    }
  }
  return false;
}

}  // namespace steinercut
