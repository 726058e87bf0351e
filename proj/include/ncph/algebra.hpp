#ifndef NCPH_ALGEBRA_HPP
#define NCPH_ALGEBRA_HPP

// Exact arithmetic in a real algebraic number field Q(theta) and dense exact
// linear algebra on top of it.
//
// A field is described by an integer minimal polynomial for theta together
// with a rational interval isolating the intended real root. Elements are
// stored in the power basis 1, theta, ..., theta^(d-1). Zero testing is exact
// coordinate comparison; the sign of a nonzero element is found by evaluating
// it on the isolating interval with rational interval arithmetic and bisecting
// until the enclosure excludes zero.

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ncph {

using Integer = mpz_class;
using Rational = mpq_class;

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class NumberField {
 public:
  // Default bound on bisection steps spent deciding a single sign.
  static constexpr int kDefaultRefinementDepth = 20000;

  // The rationals, as a degree-1 field. Shared singleton.
  static FieldPtr rationals();

  // Validates and builds Q(theta). Coefficients are listed from the constant
  // term upward. Throws AlgebraError when the polynomial is reducible, has a
  // zero constant term (theta = 0 is not a generator), or when (lo, hi) does
  // not contain exactly one root.
  static FieldPtr create(std::vector<Integer> minimal_polynomial, Rational lo,
                         Rational hi,
                         int refinement_depth = kDefaultRefinementDepth);

  int degree() const { return degree_; }
  bool is_rationals() const { return degree_ == 1; }
  const std::vector<Integer>& minimal_polynomial() const { return poly_; }
  std::pair<Rational, Rational> isolating_interval() const { return {lo_, hi_}; }
  int refinement_depth() const { return depth_; }

  // Power-basis coordinates of theta^k for d <= k <= 2d-2.
  const std::vector<Rational>& reduced_power(int k) const {
    return powers_[static_cast<std::size_t>(k - degree_)];
  }

  int sign_of(std::span<const Rational> coordinates) const;
  double approximate(std::span<const Rational> coordinates) const;
  // A double close to theta; display only.
  double theta_approximation() const { return theta_approx_; }

  bool same_as(const NumberField& other) const;
  std::string describe() const;

 private:
  NumberField() = default;

  int degree_ = 1;
  std::vector<Integer> poly_;
  Rational lo_, hi_;
  // Narrowed copy of the isolating interval; the starting point of every
  // sign computation so the common case needs no bisection.
  Rational fine_lo_, fine_hi_;
  int fine_lo_sign_ = 0;
  int depth_ = kDefaultRefinementDepth;
  double theta_approx_ = 0.0;
  std::vector<std::vector<Rational>> powers_;
};

// Element of a number field. The referenced field must outlive the value;
// every factory in this library keeps its fields alive via FieldPtr.
class Scalar {
 public:
  Scalar();  // zero in Q
  explicit Scalar(const NumberField& field);  // zero in field
  Scalar(const NumberField& field, const Rational& value);
  Scalar(const NumberField& field, std::vector<Rational> coordinates);

  static Scalar generator(const NumberField& field);

  const NumberField& field() const { return *field_; }
  std::span<const Rational> coordinates() const { return coords_; }
  const Rational& coordinate(std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  int sign() const { return field_->sign_of(coords_); }
  std::optional<Rational> as_rational() const;
  double to_double() const { return field_->approximate(coords_); }
  Scalar inverse() const;
  std::string to_string() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }
  Scalar& operator*=(const Rational& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator*(Scalar a, const Rational& b) { return a *= b; }
  friend Scalar operator*(const Rational& b, Scalar a) { return a *= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return (a - b).sign() > 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return (a - b).sign() <= 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return (a - b).sign() >= 0; }

 private:
  // Brings a rational-field operand into this field.
  void adopt_field(const Scalar& rhs);

  const NumberField* field_;
  std::vector<Rational> coords_;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(const NumberField& field, std::size_t n);
Vector unit_vector(const NumberField& field, std::size_t n, std::size_t i);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& a);
// Plain coordinate dot product (no metric).
Scalar dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);
// Scales so the first nonzero coordinate is 1. Canonical representative of
// the line spanned by a nonzero vector.
Vector normalize_leading(const Vector& v);
// Stable textual key; equal vectors give equal keys.
std::string vector_key(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const NumberField& field);
  static Matrix identity(std::size_t n, const NumberField& field);
  static Matrix from_columns(const std::vector<Vector>& columns);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const NumberField& field() const { return *field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;

  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(const Vector& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  // Stable textual key over all entries.
  std::string key() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  const NumberField* field_ = nullptr;
  std::vector<Scalar> data_;
};

// Exact Gaussian elimination. All results are exact over the matrix field.
std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0}; every basis vector is nonzero.
std::vector<Vector> kernel(const Matrix& m);
// Throws AlgebraError for non-square or singular input.
Matrix inverse(const Matrix& m);
Scalar determinant(const Matrix& m);
// Unique solution of m x = b for square nonsingular m; nullopt if singular.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// Rank over Q of a sparse matrix given column by column; each column is a
// list of (row, value) pairs with distinct rows.
using SparseColumn = std::vector<std::pair<std::size_t, Rational>>;
std::size_t sparse_rank(std::vector<SparseColumn> columns);

// Helpers on integer polynomials (coefficients from the constant term up).
namespace poly {
// Number of distinct real roots in the open interval (lo, hi), by Sturm's
// theorem. Requires f(lo) != 0 and f(hi) != 0.
int count_real_roots(const std::vector<Integer>& f, const Rational& lo,
                     const Rational& hi);
Rational evaluate(const std::vector<Integer>& f, const Rational& x);
// Kronecker's method: true when f has no factor of degree 1..deg/2 over Q.
bool is_irreducible(const std::vector<Integer>& f);
}  // namespace poly

}  // namespace ncph

#endif  // NCPH_ALGEBRA_HPP
