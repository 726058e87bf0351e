#include <algorithm>
#include <sstream>

#include "ncph/algebra.hpp"
#include "ncph/error.hpp"

namespace ncph {

namespace {

std::size_t udeg(const NumberField& f) { return static_cast<std::size_t>(f.degree()); }

// Dense solve over Q for the inverse in the power basis. a is square.
std::vector<Rational> rational_solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw AlgebraError("division by zero");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace

Scalar::Scalar() : field_(NumberField::rationals().get()), coords_(1, Rational(0)) {}

Scalar::Scalar(const NumberField& field) : field_(&field), coords_(udeg(field), Rational(0)) {}

Scalar::Scalar(const NumberField& field, const Rational& value)
    : field_(&field), coords_(udeg(field), Rational(0)) {
  coords_[0] = value;
}

Scalar::Scalar(const NumberField& field, std::vector<Rational> coordinates)
    : field_(&field), coords_(std::move(coordinates)) {
  if (coords_.size() != udeg(field)) throw AlgebraError("coordinate count does not match field degree");
}

Scalar Scalar::generator(const NumberField& field) {
  if (field.degree() == 1) {
    const auto& p = field.minimal_polynomial();
    Rational root(-p[0], p[1]);
    root.canonicalize();
    return Scalar(field, root);
  }
  Scalar s(field);
  s.coords_[1] = 1;
  return s;
}

bool Scalar::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

std::optional<Rational> Scalar::as_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return std::nullopt;
  return coords_[0];
}

void Scalar::adopt_field(const Scalar& rhs) {
  if (field_ == rhs.field_) return;
  if (rhs.field_->degree() == 1) return;
  if (field_->degree() == 1) {
    Rational v = coords_[0];
    field_ = rhs.field_;
    coords_.assign(udeg(*field_), Rational(0));
    coords_[0] = v;
    return;
  }
  if (!field_->same_as(*rhs.field_)) throw AlgebraError("operands live in different number fields");
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  adopt_field(rhs);
  if (rhs.field_->degree() == 1 && field_->degree() != 1) {
    coords_[0] += rhs.coords_[0];
    return *this;
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  adopt_field(rhs);
  if (rhs.field_->degree() == 1 && field_->degree() != 1) {
    coords_[0] -= rhs.coords_[0];
    return *this;
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Rational& rhs) {
  for (auto& c : coords_) c *= rhs;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (rhs.field_->degree() == 1) return *this *= rhs.coords_[0];
  if (field_->degree() == 1) {
    Rational v = coords_[0];
    *this = rhs;
    return *this *= v;
  }
  adopt_field(rhs);
  const std::size_t d = coords_.size();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (rhs.coords_[j] == 0) continue;
      prod[i + j] += coords_[i] * rhs.coords_[j];
    }
  }
  for (std::size_t i = 0; i < d; ++i) coords_[i] = prod[i];
  for (std::size_t k = d; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& pw = field_->reduced_power(static_cast<int>(k));
    for (std::size_t i = 0; i < d; ++i) coords_[i] += prod[k] * pw[i];
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw AlgebraError("division by zero");
  const std::size_t d = coords_.size();
  if (d == 1) return Scalar(*field_, Rational(1) / coords_[0]);
  // Column j of the multiplication-by-x map is x * theta^j.
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (std::size_t j = 0; j < d; ++j) {
    Scalar basis(*field_);
    basis.coords_[j] = 1;
    Scalar col = *this * basis;
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coords_[i];
  }
  std::vector<Rational> e0(d, Rational(0));
  e0[0] = 1;
  return Scalar(*field_, rational_solve(std::move(m), std::move(e0)));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ == b.field_ || (a.field_->degree() > 1 && b.field_->degree() > 1))
    return a.coords_ == b.coords_;
  const Scalar& big = a.field_->degree() >= b.field_->degree() ? a : b;
  const Scalar& small = a.field_->degree() >= b.field_->degree() ? b : a;
  auto r = big.as_rational();
  return r && *r == small.coords_[0];
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  if (coords_.size() == 1) {
    os << coords_[0];
    return os.str();
  }
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << coords_[i];
  os << ")";
  return os.str();
}

}  // namespace ncph
