#include <algorithm>
#include <map>
#include <sstream>

#include "ncph/algebra.hpp"
#include "ncph/error.hpp"

namespace ncph {

Vector zero_vector(const NumberField& field, std::size_t n) { return Vector(n, Scalar(field)); }

Vector unit_vector(const NumberField& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v[i] = Scalar(field, Rational(1));
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator-(const Vector& a) {
  Vector out = a;
  for (auto& x : out) x = -x;
  return out;
}

Vector operator*(const Scalar& s, const Vector& a) {
  Vector out = a;
  for (auto& x : out) x = s * x;
  return out;
}

Scalar dot(const Vector& a, const Vector& b) {
  Scalar acc = a.empty() ? Scalar() : Scalar(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector normalize_leading(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return x.inverse() * v;
  }
  throw AlgebraError("cannot normalize the zero vector");
}

std::string vector_key(const Vector& v) {
  std::string out;
  for (const auto& s : v) {
    for (const auto& c : s.coordinates()) {
      out += c.get_str();
      out += ',';
    }
    out += ';';
  }
  return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const NumberField& field)
    : rows_(rows), cols_(cols), field_(&field), data_(rows * cols, Scalar(field)) {}

Matrix Matrix::identity(std::size_t n, const NumberField& field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(field, Rational(1));
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) {
  if (columns.empty() || columns[0].empty()) throw AlgebraError("empty column list");
  Matrix m(columns[0].size(), columns.size(), columns[0][0].field());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = columns[c][r];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty() || rows[0].empty()) throw AlgebraError("empty row list");
  Matrix m(rows.size(), rows[0].size(), rows[0][0].field());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, *field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw AlgebraError("matrix dimension mismatch");
  Matrix out(rows_, rhs.cols_, *field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar& b = rhs(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

Vector Matrix::operator*(const Vector& rhs) const {
  if (cols_ != rhs.size()) throw AlgebraError("matrix-vector dimension mismatch");
  Vector out = zero_vector(*field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (!a.is_zero() && !rhs[k].is_zero()) out[i] += a * rhs[k];
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix operator*(const Scalar& s, Matrix m) {
  for (auto& x : m.data_) x = s * x;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::key() const { return vector_key(data_); }

namespace {

// In-place reduced row echelon form; returns pivot columns. Only the first
// `limit` columns are eligible as pivots.
std::vector<std::size_t> rref(Matrix& m, std::size_t limit, int* swaps = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
      if (swaps) ++*swaps;
    }
    Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = inv * m(row, c);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Matrix w = m;
  return rref(w, w.cols()).size();
}

std::vector<Vector> kernel(const Matrix& m) {
  Matrix w = m;
  auto pivots = rref(w, w.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x = zero_vector(m.field(), m.cols());
    x[free] = Scalar(m.field(), Rational(1));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -w(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw AlgebraError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(m.field(), Rational(1));
  }
  if (rref(aug, n).size() != n) throw AlgebraError("inverse of a singular matrix");
  Matrix out(n, n, m.field());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw AlgebraError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix w = m;
  Scalar det(m.field(), Rational(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && w(piv, col).is_zero()) ++piv;
    if (piv == n) return Scalar(m.field());
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(w(piv, c), w(col, c));
      det = -det;
    }
    det *= w(col, col);
    Scalar inv = w(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (w(r, col).is_zero()) continue;
      Scalar factor = w(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) w(r, c) -= factor * w(col, c);
    }
  }
  return det;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (m.rows() != m.cols() || b.size() != m.rows()) throw AlgebraError("solve: dimension mismatch");
  const std::size_t n = m.rows();
  Matrix aug(n, n + 1, m.field());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  if (rref(aug, n).size() != n) return std::nullopt;
  Vector x;
  x.reserve(n);
  for (std::size_t r = 0; r < n; ++r) x.push_back(aug(r, n));
  return x;
}

std::size_t sparse_rank(std::vector<SparseColumn> columns) {
  // Column reduction keyed on the lowest (largest-index) nonzero row.
  std::map<std::size_t, SparseColumn> pivot_of_row;
  for (auto& col : columns) {
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    col.erase(std::remove_if(col.begin(), col.end(), [](const auto& e) { return e.second == 0; }),
              col.end());
    while (!col.empty()) {
      auto it = pivot_of_row.find(col.back().first);
      if (it == pivot_of_row.end()) {
        std::size_t low = col.back().first;
        pivot_of_row.emplace(low, std::move(col));
        break;
      }
      const SparseColumn& piv = it->second;
      Rational factor = col.back().second / piv.back().second;
      SparseColumn merged;
      merged.reserve(col.size() + piv.size());
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
          merged.push_back(col[i++]);
        } else if (i == col.size() || piv[j].first < col[i].first) {
          merged.emplace_back(piv[j].first, -factor * piv[j].second);
          ++j;
        } else {
          Rational v = col[i].second - factor * piv[j].second;
          if (v != 0) merged.emplace_back(col[i].first, v);
          ++i;
          ++j;
        }
      }
      col = std::move(merged);
    }
  }
  return pivot_of_row.size();
}

}  // namespace ncph
