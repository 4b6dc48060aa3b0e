#include "orbweyl/linalg.hpp"

#include <stdexcept>

namespace orbweyl {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Mat::append_row(const Vec& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Mat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j) == 0) continue;
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  return c;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum shape mismatch");
  Mat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

Mat Mat::scaled(const Rational& c) const {
  Mat m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j) * c;
  return m;
}

Vec mat_vec(const Mat& m, const Vec& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0 && v[j] != 0) acc += m.at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sum shape mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector difference shape mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec vec_scale(const Rational& c, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product shape mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
  return acc;
}

std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(lead_row, j));
    Rational inv = Rational(1) / m.at(lead_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m.at(r, col) == 0) continue;
      Rational factor = m.at(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) -= factor * m.at(lead_row, j);
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

Mat kernel(const Mat& m) {
  Mat work = m;
  std::vector<std::size_t> pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  Mat basis(0, m.cols());
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(m.cols());
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work.at(r, free_col);
    basis.append_row(v);
  }
  return row_space(basis);
}

Mat row_space(Mat m) {
  std::vector<std::size_t> pivots = rref(m);
  Mat out(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  return out;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve shape mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
  Vec x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

bool in_row_space(const Mat& rows, const Vec& v) {
  if (vec_is_zero(v)) return true;
  Mat a = rows.transpose();
  return solve(a, v).has_value();
}

}  // namespace orbweyl
