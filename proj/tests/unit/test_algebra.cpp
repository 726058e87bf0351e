#include <doctest.h>

#include <cmath>
#include <random>

#include "ncph/algebra.hpp"
#include "ncph/error.hpp"

using namespace ncph;

namespace {

FieldPtr sqrt5() { return NumberField::create({Integer(-5), Integer(0), Integer(1)}, 2, 3); }

// x^3 + x^2 - 2x - 1, the minimal polynomial of 2cos(2pi/7); root near 1.247.
FieldPtr cubic() {
  return NumberField::create({Integer(-1), Integer(-2), Integer(1), Integer(1)}, Rational(6, 5),
                             Rational(13, 10));
}

Scalar random_scalar(const NumberField& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  std::vector<Rational> c;
  for (int i = 0; i < f.degree(); ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return Scalar(f, c);
}

}  // namespace

TEST_CASE("field_create validates its input") {
  SUBCASE("zero constant term is rejected") {
    CHECK_THROWS_AS(NumberField::create({Integer(0), Integer(1)}, -1, 1), AlgebraError);
  }
  SUBCASE("reducible polynomials are rejected") {
    CHECK_THROWS_AS(NumberField::create({Integer(-4), Integer(0), Integer(1)}, 1, 3), AlgebraError);
    // x^4 + 4 has no rational root but factors into two quadratics.
    CHECK_THROWS_AS(NumberField::create({Integer(4), Integer(0), Integer(0), Integer(0), Integer(1)}, 0, 1),
                    AlgebraError);
  }
  SUBCASE("interval must isolate exactly one root") {
    CHECK_THROWS_AS(NumberField::create({Integer(-5), Integer(0), Integer(1)}, -3, 3), AlgebraError);
    CHECK_THROWS_AS(NumberField::create({Integer(-5), Integer(0), Integer(1)}, 0, 1), AlgebraError);
  }
  SUBCASE("x^2 - 5 on (2, 3) gives a quadratic field") {
    // Bisection oracle: the sign change of x^2 - 5 is confined to (2, 3) and
    // narrows toward 2.2360679...
    Rational lo = 2, hi = 3;
    for (int i = 0; i < 40; ++i) {
      Rational mid = (lo + hi) / 2;
      if (mid * mid - 5 < 0) lo = mid; else hi = mid;
    }
    CHECK(lo.get_d() == doctest::Approx(2.2360679775).epsilon(1e-9));
    auto f = sqrt5();
    CHECK(f->degree() == 2);
    CHECK_FALSE(f->is_rationals());
  }
  SUBCASE("degree one is the rationals") {
    auto q = NumberField::rationals();
    Scalar a(*q, Rational(3, 2)), b(*q, Rational(2, 3));
    CHECK(a * b == Scalar(*q, Rational(1)));
  }
}

TEST_CASE("polynomial helpers") {
  CHECK(poly::is_irreducible({Integer(-1), Integer(-1), Integer(0), Integer(1)}));
  CHECK_FALSE(poly::is_irreducible({Integer(2), Integer(-3), Integer(1)}));
  CHECK(poly::count_real_roots({Integer(-5), Integer(0), Integer(1)}, -3, 3) == 2);
  CHECK(poly::count_real_roots({Integer(1), Integer(0), Integer(1)}, -3, 3) == 0);
}

TEST_CASE("scalar_sign is exact") {
  auto f = sqrt5();
  Scalar t = Scalar::generator(*f);
  CHECK(Scalar(*f).sign() == 0);
  CHECK((t - Scalar(*f, 2)).sign() == 1);
  CHECK((Scalar(*f, 2) - t).sign() == -1);
  CHECK((t * t - Scalar(*f, 5)).is_zero());
  CHECK((t * t - Scalar(*f, 5)).sign() == 0);
  // sqrt(5) = 2.23606797749978969...
  CHECK((t - Scalar(*f, Rational(2236067977, 1000000000))).sign() == 1);
  CHECK((t - Scalar(*f, Rational(2236067978, 1000000000))).sign() == -1);
  // Forces refinement far beyond the cached interval width.
  // truncation of sqrt(5) = 2.23606797749978969640917366873127...
  Rational close("2236067977499789696409173668731/1000000000000000000000000000000");
  Rational above("2236067977499789696409173668732/1000000000000000000000000000000");
  CHECK((t - Scalar(*f, close)).sign() == 1);
  CHECK((t - Scalar(*f, above)).sign() == -1);
}

TEST_CASE("field axioms hold on random scalars") {
  std::mt19937 rng(7);
  for (auto f : {sqrt5(), cubic()}) {
    for (int trial = 0; trial < 200; ++trial) {
      Scalar x = random_scalar(*f, rng), y = random_scalar(*f, rng), z = random_scalar(*f, rng);
      CHECK((x + y) * z == x * z + y * z);
      CHECK(x * y == y * x);
      if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(*f, Rational(1)));
    }
  }
}

TEST_CASE("sign agrees with a 64-bit interval evaluation") {
  std::mt19937 rng(11);
  int decided = 0;
  for (auto f : {sqrt5(), cubic()}) {
    const double theta = f->theta_approximation();
    for (int trial = 0; trial < 500; ++trial) {
      Scalar x = random_scalar(*f, rng);
      double value = 0.0, magnitude = 0.0, power = 1.0;
      for (std::size_t i = 0; i < x.coordinates().size(); ++i) {
        double c = x.coordinate(i).get_d();
        value += c * power;
        magnitude += std::fabs(c) * std::fabs(power);
        power *= theta;
      }
      const double radius = 64 * 1e-15 * (magnitude + 1.0);
      if (value - radius > 0) {
        CHECK(x.sign() == 1);
        ++decided;
      } else if (value + radius < 0) {
        CHECK(x.sign() == -1);
        ++decided;
      }
    }
  }
  CHECK(decided > 900);
}

TEST_CASE("dense linear algebra") {
  auto q = NumberField::rationals();
  CHECK(rank(Matrix::identity(3, *q)) == 3);

  SUBCASE("kernel of two independent normals in rank 3 is a line") {
    Matrix m = Matrix::from_rows({{Scalar(*q, 2), Scalar(*q, -1), Scalar(*q, 0)},
                                  {Scalar(*q, -1), Scalar(*q, 2), Scalar(*q, -1)}});
    auto k = kernel(m);
    REQUIRE(k.size() == 1);
    CHECK_FALSE(is_zero(k[0]));
    CHECK(is_zero(m * k[0]));
  }

  SUBCASE("A2 rotation: det(I - c) = 3") {
    // Oracle in doubles with alpha1 = (1, 0), alpha2 = (-1/2, sqrt3/2).
    const double a2x = -0.5, a2y = std::sqrt(3.0) / 2;
    auto refl = [](double x, double y) {
      return std::array<double, 4>{1 - 2 * x * x, -2 * x * y, -2 * x * y, 1 - 2 * y * y};
    };
    auto r1 = refl(1, 0), r2 = refl(a2x, a2y);
    std::array<double, 4> c{r1[0] * r2[0] + r1[1] * r2[2], r1[0] * r2[1] + r1[1] * r2[3],
                            r1[2] * r2[0] + r1[3] * r2[2], r1[2] * r2[1] + r1[3] * r2[3]};
    const double det_oracle = (1 - c[0]) * (1 - c[3]) - c[1] * c[2];
    CHECK(det_oracle == doctest::Approx(3.0));

    // Same computation exactly, in Q(sqrt 3).
    auto f = NumberField::create({Integer(-3), Integer(0), Integer(1)}, 1, 2);
    Scalar s3 = Scalar::generator(*f);
    Vector al1{Scalar(*f, 1), Scalar(*f, 0)};
    Vector al2{Scalar(*f, Rational(-1, 2)), s3 * Rational(1, 2)};
    auto reflection = [&](const Vector& a) {
      Matrix m = Matrix::identity(2, *f);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(i, j) -= Rational(2) * a[i] * a[j];
      return m;
    };
    Matrix cox = reflection(al1) * reflection(al2);
    Scalar det = determinant(Matrix::identity(2, *f) - cox);
    CHECK(det == Scalar(*f, 3));
  }

  SUBCASE("inverse of a singular matrix throws") {
    Matrix m(2, 2, *q);
    m(0, 0) = Scalar(*q, 1);
    m(0, 1) = Scalar(*q, 2);
    m(1, 0) = Scalar(*q, 2);
    m(1, 1) = Scalar(*q, 4);
    CHECK_THROWS_AS(inverse(m), AlgebraError);
    CHECK_FALSE(solve(m, {Scalar(*q, 1), Scalar(*q, 1)}).has_value());
  }
}

TEST_CASE("inverse(M) * M = I on random nonsingular matrices") {
  std::mt19937 rng(3);
  auto f = sqrt5();
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      Matrix m(n, n, *f);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar(*f, rng);
      if (determinant(m).is_zero()) continue;
      CHECK(inverse(m) * m == Matrix::identity(n, *f));
      CHECK(rank(m) == n);
    }
  }
}

TEST_CASE("sparse_rank matches dense rank") {
  std::mt19937 rng(5);
  auto q = NumberField::rationals();
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 6, cols = 7;
    Matrix dense(rows, cols, *q);
    std::vector<SparseColumn> sparse(cols);
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t r = 0; r < rows; ++r) {
        int v = (trial % 3 == 0 && r == 5) ? 0 : entry(rng) * (entry(rng) == 0);
        dense(r, c) = Scalar(*q, v);
        if (v) sparse[c].emplace_back(r, Rational(v));
      }
    CHECK(sparse_rank(sparse) == rank(dense));
  }
}
