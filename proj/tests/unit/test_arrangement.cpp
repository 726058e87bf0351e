#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "ncph/arrangement.hpp"
#include "ncph/error.hpp"

using namespace ncph;
using ncph::testing::built;

namespace {

// Floating oracle: orthonormal coordinates from a Cholesky factor of the
// Gram matrix, rays as normalized cross products (rank 3) or perpendiculars
// (rank 2), deduplicated up to sign with a tolerance.
std::size_t float_ray_count(const CoxeterSystem& sys, const ReflectionSet& t) {
  const auto n = static_cast<std::size_t>(sys.rank());
  std::vector<std::vector<double>> g(n, std::vector<double>(n)), l(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = sys.gram()(i, j).to_double();
  for (std::size_t j = 0; j < n; ++j) {
    double s = g[j][j];
    for (std::size_t k = 0; k < j; ++k) s -= l[j][k] * l[j][k];
    l[j][j] = std::sqrt(s);
    for (std::size_t i = j + 1; i < n; ++i) {
      double x = g[i][j];
      for (std::size_t k = 0; k < j; ++k) x -= l[i][k] * l[j][k];
      l[i][j] = x / l[j][j];
    }
  }
  // Simple root i has Euclidean coordinates row i of l.
  std::vector<std::vector<double>> roots;
  for (const auto& r : t.roots) {
    std::vector<double> e(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) e[k] += r[i].to_double() * l[i][k];
    roots.push_back(e);
  }
  std::vector<std::vector<double>> found;
  auto add = [&](std::vector<double> x) {
    double norm = 0;
    for (double c : x) norm += c * c;
    norm = std::sqrt(norm);
    if (norm < 1e-9) return;
    for (auto& c : x) c /= norm;
    for (const auto& y : found) {
      double d = 0;
      for (std::size_t k = 0; k < n; ++k) d += x[k] * y[k];
      if (std::abs(std::abs(d) - 1) < 1e-9) return;
    }
    found.push_back(x);
  };
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (n == 2) add({-roots[i][1], roots[i][0]});
    for (std::size_t j = i + 1; n == 3 && j < roots.size(); ++j) {
      const auto& a = roots[i];
      const auto& b = roots[j];
      add({a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]});
    }
  }
  return found.size();
}

}  // namespace

TEST_CASE("enumerate_rays") {
  CHECK(enumerate_rays(*built('A', 1).system, built('A', 1).t).empty());
  // Frozen from the floating oracle: A2 3, A3 7, B2 4, B3 13, H3 31, I2(m) m.
  const std::vector<std::tuple<char, int, int, std::size_t>> cases{
      {'A', 2, 0, 3}, {'A', 3, 0, 7}, {'B', 2, 0, 4}, {'B', 3, 0, 13}, {'H', 3, 0, 31}, {'I', 2, 5, 5}, {'I', 2, 8, 8}};
  for (auto [type, rank, m, expected] : cases) {
    const auto& b = built(type, rank, m);
    auto rays = enumerate_rays(*b.system, b.t);
    CAPTURE(type);
    CAPTURE(rank);
    CHECK(rays.size() == float_ray_count(*b.system, b.t));
    CHECK(rays.size() == expected);
    for (const auto& r : rays) {
      // Leading coordinate 1, and at least n - 1 independent normals vanish on r.
      auto lead = std::find_if(r.begin(), r.end(), [](const Scalar& x) { return !x.is_zero(); });
      REQUIRE(lead != r.end());
      CHECK(*lead == Scalar(b.system->field(), 1));
      std::vector<Vector> vanishing;
      for (const auto& root : b.t.roots)
        if (b.system->inner(root, r).is_zero()) vanishing.push_back(root);
      CHECK(ncph::rank(Matrix::from_rows(vanishing)) == static_cast<std::size_t>(rank - 1));
    }
  }
}

TEST_CASE("lambda_bound") {
  SUBCASE("A2: lambda = sqrt(3)/2 and 6/7 lies below it") {
    const auto& b = built('A', 2);
    auto rays = enumerate_rays(*b.system, b.t);
    Rational lambda = lambda_bound(*b.system, b.t, rays);
    CHECK(lambda >= Rational(6, 7));
    CHECK(lambda * lambda <= Rational(3, 4));
    // Best rational with denominator <= 64 below 0.8660254: 45/52 = 0.8653846.
    CHECK(lambda == Rational(45, 52));
  }
  SUBCASE("positive for every group, and 1 for rank 1") {
    CHECK(lambda_bound(*built('A', 1).system, built('A', 1).t, {}) == 1);
    for (auto [type, rank, m] : {std::tuple{'A', 3, 0}, {'B', 3, 0}, {'H', 3, 0}, {'I', 2, 7}}) {
      const auto& b = built(type, rank, m);
      auto rays = enumerate_rays(*b.system, b.t);
      Rational lambda = lambda_bound(*b.system, b.t, rays);
      CHECK(lambda > 0);
      CHECK(lambda <= 1);
    }
  }
  SUBCASE("small denominators fall back to a power of two") {
    const auto& b = built('H', 3);
    auto rays = enumerate_rays(*b.system, b.t);
    Rational lambda = lambda_bound(*b.system, b.t, rays, 1);
    CHECK(lambda > 0);
    CHECK(lambda < 1);
    CHECK(lambda.get_num() == 1);
  }
}

TEST_CASE("generic_vector and chambers") {
  // Bounded-slice counts frozen from the product of the exponents:
  // A2 2, A3 6, B2 3, B3 15, H3 45, I2(m) m - 1.
  const std::vector<std::tuple<char, int, int, std::size_t>> cases{
      {'A', 1, 0, 1}, {'A', 2, 0, 2},  {'A', 3, 0, 6},  {'B', 2, 0, 3},
      {'B', 3, 0, 15}, {'H', 3, 0, 45}, {'I', 2, 5, 4}, {'I', 2, 8, 7}};
  for (auto [type, rank, m, expected] : cases) {
    const auto& b = built(type, rank, m);
    CAPTURE(type);
    CAPTURE(rank);
    CAPTURE(m);
    auto rays = enumerate_rays(*b.system, b.t);
    auto gv = generic_vector(*b.system, b.order.tau, lambda_bound(*b.system, b.t, rays), rays);
    CHECK(check_generic(*b.system, gv, rays).ok());
    auto chambers = enumerate_chambers(*b.group, b.t, gv.v);
    CHECK(chambers.size() == b.group->size());
    CHECK(bounded_slice_count(chambers) == expected);
    auto report = check_chambers(*b.group, chambers, rays);
    CHECK(report.ok());
  }
  SUBCASE("rank 1: v = tau_1") {
    const auto& b = built('A', 1);
    auto gv = generic_vector(*b.system, b.order.tau, Rational(1), {});
    CHECK(gv.v == b.order.tau[0]);
    CHECK(gv.a == Scalar(b.system->field(), 2));
  }
  SUBCASE("a ray orthogonal to v is rejected") {
    const auto& b = built('A', 2);
    auto rays = enumerate_rays(*b.system, b.t);
    // alpha_1 is orthogonal to the ray spanned by omega_2.
    std::vector<Vector> tau{b.system->simple_root(0)};
    CHECK_THROWS_AS(generic_vector(*b.system, tau, Rational(1), rays), InvariantViolation);
  }
}
