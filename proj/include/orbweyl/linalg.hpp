#pragma once

// Dense exact-rational matrices. Echelon forms are canonical: Gauss-Jordan
// with first-nonzero pivoting and normalised leading ones, so two equal
// row spaces always produce bit-identical bases.

#include "orbweyl/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace orbweyl {

using Vec = std::vector<Rational>;

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  void append_row(const Vec& v);

  bool is_zero() const;
  Mat transpose() const;

  bool operator==(const Mat& other) const = default;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  Mat scaled(const Rational& c) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Vec mat_vec(const Mat& m, const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
bool vec_is_zero(const Vec& v);
Rational dot(const Vec& a, const Vec& b);

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(Mat m);

// Canonical RREF basis of {v : m v = 0}, one row per basis vector.
Mat kernel(const Mat& m);

// Canonical RREF basis of the row space, zero rows dropped.
Mat row_space(Mat m);

// One solution x of a x = b (free variables zero), or nullopt.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Is v a combination of the rows? `rows` need not be echelonised.
bool in_row_space(const Mat& rows, const Vec& v);

}  // namespace orbweyl
