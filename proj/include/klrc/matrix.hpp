#ifndef KLRC_MATRIX_HPP
#define KLRC_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "field.hpp"

namespace klrc {

/// Dense row-major matrix over an exact field. The field object is carried
/// along so that constants can be produced without a global context.
template <class Field>
class Matrix {
public:
  using value_type = typename Field::value_type;

  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

  static Matrix identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const value_type& v) { return Field::is_zero(v); });
  }

  std::vector<value_type> row(std::size_t i) const {
    return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
  }
  std::vector<value_type> column(std::size_t j) const {
    std::vector<value_type> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const value_type& aik = a(i, k);
        if (Field::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!Field::is_zero(b(k, j))) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend std::vector<value_type> operator*(const Matrix& a, const std::vector<value_type>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("Matrix: dimension mismatch in product");
    std::vector<value_type> out(a.rows_, a.field_.zero());
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (Field::is_zero(v[k])) continue;
      for (std::size_t i = 0; i < a.rows_; ++i)
        if (!Field::is_zero(a(i, k))) out[i] += a(i, k) * v[k];
    }
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const value_type& s, Matrix a) {
    for (auto& v : a.data_) v *= s;
    return a;
  }
  Matrix& operator+=(const Matrix& b) { return *this = *this + b; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
  void check_same(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

/// Reduced row echelon form. Pivot rule: leftmost nonzero column, first
/// available row with a nonzero entry in it.
template <class Field>
struct Echelon {
  Matrix<Field> reduced;
  std::vector<std::size_t> pivots;  // pivot column of row k
  std::size_t rank() const { return pivots.size(); }
};

template <class Field>
Echelon<Field> rref(Matrix<Field> m) {
  const auto& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && Field::is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    auto inv = f.one() / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || Field::is_zero(m(i, col))) continue;
      auto factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!Field::is_zero(m(row, j))) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  // Drop zero rows.
  Matrix<Field> out(f, pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return {std::move(out), std::move(pivots)};
}

template <class Field>
std::size_t rank(const Matrix<Field>& m) {
  return rref(m).rank();
}

/// Basis (as columns of the returned matrix) of {v : m v = 0}.
template <class Field>
Matrix<Field> nullspace(const Matrix<Field>& m) {
  const auto& f = m.field();
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix<Field> basis(f, m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, free_cols[k]);
  }
  return basis;
}

/// Outcome of solving A x = b exactly.
template <class Field>
struct SolveResult {
  std::optional<std::vector<typename Field::value_type>> solution;
  std::size_t coefficient_rank = 0;
  std::size_t augmented_rank = 0;
  bool consistent() const { return solution.has_value(); }
};

template <class Field>
SolveResult<Field> solve(const Matrix<Field>& a, const std::vector<typename Field::value_type>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  const auto& f = a.field();
  Matrix<Field> aug(f, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto e = rref(aug);
  SolveResult<Field> res;
  res.augmented_rank = e.rank();
  res.coefficient_rank = e.rank();
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) {
    res.coefficient_rank = e.rank() - 1;
    return res;
  }
  std::vector<typename Field::value_type> x(a.cols(), f.zero());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  res.solution = std::move(x);
  return res;
}

/// Subspace of F^ambient stored by a canonical basis (rows in reduced
/// echelon form).
template <class Field>
class Subspace {
public:
  using value_type = typename Field::value_type;
  using Vector = std::vector<value_type>;

  Subspace(const Field& f, std::size_t ambient) : basis_(f, 0, ambient) {}

  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vector>& vectors) {
    Subspace s(f, ambient);
    for (const auto& v : vectors) s.add(v);
    return s;
  }
  static Subspace whole(const Field& f, std::size_t ambient) {
    return from_echelon(rref(Matrix<Field>::identity(f, ambient)));
  }

  const Field& field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<Field>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  /// v minus its projection along the echelon basis; zero iff v lies in the space.
  Vector reduce(Vector v) const {
    if (v.size() != ambient()) throw std::invalid_argument("Subspace: vector of wrong length");
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      auto c = v[pivots_[r]];
      if (Field::is_zero(c)) continue;
      for (std::size_t j = 0; j < ambient(); ++j)
        if (!Field::is_zero(basis_(r, j))) v[j] -= c * basis_(r, j);
    }
    return v;
  }
  bool contains(const Vector& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const value_type& x) { return Field::is_zero(x); });
  }

  /// Adds v; returns true iff the dimension grew.
  bool add(const Vector& v) {
    if (contains(v)) return false;
    Matrix<Field> m(field(), dim() + 1, ambient());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < ambient(); ++j) m(i, j) = basis_(i, j);
    for (std::size_t j = 0; j < ambient(); ++j) m(dim(), j) = v[j];
    auto e = rref(std::move(m));
    basis_ = std::move(e.reduced);
    pivots_ = std::move(e.pivots);
    return true;
  }

  bool contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient() == b.ambient() && a.basis_ == b.basis_;
  }

private:
  static Subspace from_echelon(Echelon<Field> e) {
    Subspace s(e.reduced.field(), e.reduced.cols());
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  Matrix<Field> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace klrc

#endif  // KLRC_MATRIX_HPP
