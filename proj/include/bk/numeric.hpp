#pragma once

// Exact scalar types and the small exact linear-algebra kit used everywhere.
// Integer lattice work runs on Eigen int64 matrices; rational elimination runs
// on plain buffers of boost::multiprecision scalars (coefficient access only,
// no Eigen expressions on multiprecision types).

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace bk {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested computation is outside the supported surface (CLI exit code 3).
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

// An internal invariant failed; indicates a convention bug, never bad input.
class InconsistencyError : public Error {
 public:
  explicit InconsistencyError(const std::string& msg) : Error(msg) {}
};

inline Int to_int_checked(const Rational& q, const char* what) {
  if (boost::multiprecision::denominator(q) != 1)
    throw InconsistencyError(std::string(what) + ": value is not an integer");
  BigInt n = boost::multiprecision::numerator(q);
  if (n > std::numeric_limits<Int>::max() || n < std::numeric_limits<Int>::min())
    throw Error(std::string(what) + ": integer overflow");
  return static_cast<Int>(n);
}

// Dense rational matrix, row-major plain storage.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  static RatMat from_int(const IntMat& m) {
    RatMat r(int(m.rows()), int(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
  }

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

using RatVec = std::vector<Rational>;

// In-place reduced row echelon form. Returns the pivot column of each pivot
// row; pivots are only sought in columns < pivot_col_limit when given.
inline std::vector<int> rref(RatMat& m, int pivot_col_limit = -1) {
  std::vector<int> pivots;
  int row = 0;
  const int col_end = pivot_col_limit < 0 ? m.cols() : pivot_col_limit;
  for (int col = 0; col < col_end && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational inv = m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) /= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Exact inverse of an integer matrix (must be invertible over Q).
inline RatMat rat_inverse(const IntMat& m) {
  const int n = int(m.rows());
  if (m.cols() != n) throw Error("rat_inverse: matrix not square");
  RatMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (int(pivots.size()) != n || pivots.back() != n - 1)
    throw Error("rat_inverse: singular matrix");
  RatMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// Exact integer inverse of a matrix known to be unimodular-up-to-sign
// (Weyl group actions). Throws if the exact inverse is not integral.
inline IntMat int_inverse(const IntMat& m) {
  RatMat inv = rat_inverse(m);
  IntMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      r(i, j) = to_int_checked(inv(i, j), "int_inverse");
  return r;
}

inline Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) { Int t = a % b; a = b; b = t; }
  return a;
}

// Divide out the gcd of the coordinates; zero vectors pass through.
inline IntVec make_primitive(IntVec v) {
  Int g = 0;
  for (int i = 0; i < v.size(); ++i) g = gcd_int(g, v[i]);
  if (g > 1)
    for (int i = 0; i < v.size(); ++i) v[i] /= g;
  return v;
}

// Primitive integer generator of the kernel of the linear forms given by
// `rows` acting on Q^dim. Requires nullity exactly one.
inline IntVec kernel_primitive(const std::vector<IntVec>& rows, int dim) {
  RatMat m(int(rows.size()), dim);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < dim; ++j) m(int(i), j) = rows[i][j];
  auto pivots = rref(m);
  if (int(pivots.size()) != dim - 1)
    throw Error("kernel_primitive: nullity is not one");
  // The non-pivot column parametrizes the kernel.
  std::vector<bool> is_pivot(dim, false);
  for (int c : pivots) is_pivot[c] = true;
  int free_col = -1;
  for (int j = 0; j < dim; ++j)
    if (!is_pivot[j]) { free_col = j; break; }
  RatVec sol(dim, Rational(0));
  sol[free_col] = 1;
  for (size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = -m(int(r), free_col);
  BigInt lcm = 1;
  for (const auto& q : sol)
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(q));
  IntVec out(dim);
  for (int j = 0; j < dim; ++j) {
    BigInt n = boost::multiprecision::numerator(sol[j]) *
               (lcm / boost::multiprecision::denominator(sol[j]));
    out[j] = static_cast<Int>(n);
  }
  return make_primitive(out);
}

struct IntVecHash {
  size_t operator()(const IntVec& v) const {
    size_t h = 1469598103934665603ull;
    for (int i = 0; i < v.size(); ++i) {
      h ^= static_cast<size_t>(v[i]) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct IntVecEq {
  bool operator()(const IntVec& a, const IntVec& b) const {
    return a.size() == b.size() && a == b;
  }
};

}  // namespace bk
