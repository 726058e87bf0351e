#include "ncph/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "ncph/error.hpp"

namespace ncph {

namespace {

// Calls visit(indices) for every k-subset of {0, ..., n-1}.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Vector> enumerate_rays(const CoxeterSystem& system, const ReflectionSet& t) {
  const auto n = static_cast<std::size_t>(system.rank());
  if (n < 2) return {};
  std::vector<Vector> normals;
  for (const auto& root : t.roots) normals.push_back(system.covector(root));
  std::map<std::string, Vector> found;
  for_each_subset(normals.size(), n - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<Vector> rows;
    for (auto i : idx) rows.push_back(normals[i]);
    auto ker = kernel(Matrix::from_rows(rows));
    if (ker.size() != 1) return;
    Vector ray = normalize_leading(ker.front());
    found.emplace(vector_key(ray), std::move(ray));
  });
  std::vector<Vector> rays;
  for (auto& [key, ray] : found) rays.push_back(std::move(ray));
  return rays;
}

Rational lambda_bound(const CoxeterSystem& system, const ReflectionSet& t, const std::vector<Vector>& rays,
                      int max_denominator) {
  if (rays.empty()) return Rational(1);
  if (max_denominator < 1) throw Error("lambda denominator must be positive");
  std::optional<Scalar> least;
  for (const auto& r : rays) {
    Scalar rr = system.inner(r, r);
    for (const auto& root : t.roots) {
      Scalar d = system.inner(r, root);
      if (d.is_zero()) continue;
      Scalar q = d * d / rr;
      if (!least || q < *least) least = q;
    }
  }
  if (!least) throw InvariantViolation("every ray is orthogonal to every root");
  const Scalar& m = *least;
  const NumberField& field = m.field();
  auto fits = [&](const Rational& x) { return Scalar(field, x * x) <= m; };

  Rational best(0);
  const double root = std::sqrt(std::max(m.to_double(), 0.0));
  for (int q = 1; q <= max_denominator; ++q) {
    // Start just above the floating estimate and walk down exactly.
    long p = static_cast<long>(std::floor(root * q)) + 2;
    while (p > 0 && !fits(Rational(p, q))) --p;
    Rational candidate(p, q);
    candidate.canonicalize();
    if (candidate > best) best = candidate;
  }
  if (best > 0) return best;
  Rational power(1, 2);
  while (!fits(power)) power /= 2;
  return power;
}

GenericVector generic_vector(const CoxeterSystem& system, const std::vector<Vector>& tau, const Rational& lambda,
                             const std::vector<Vector>& rays) {
  if (tau.empty()) throw Error("generic vector needs at least one root");
  if (lambda <= 0) throw Error("lambda bound must be positive");
  const NumberField& field = system.field();
  GenericVector gv;
  gv.lambda = lambda;
  gv.a = Scalar(field, Rational(1) + Rational(1) / lambda);
  gv.v = zero_vector(field, tau.front().size());
  Scalar coefficient(field, 1);
  for (const auto& root : tau) {
    gv.v = gv.v + coefficient * root;
    coefficient = coefficient * gv.a;
  }
  for (const auto& r : rays)
    if (system.inner(r, gv.v).is_zero()) throw InvariantViolation("a ray lies in the hyperplane normal to v");
  return gv;
}

CheckReport check_generic(const CoxeterSystem& system, const GenericVector& gv, const std::vector<Vector>& rays) {
  CheckReport report;
  const NumberField& field = system.field();
  const Scalar lambda_sq(field, gv.lambda * gv.lambda);
  for (std::size_t i = 0; i < rays.size(); ++i) {
    ++report.checked;
    Scalar rv = system.inner(rays[i], gv.v);
    if (rv.is_zero()) report.fail("ray " + std::to_string(i) + " is orthogonal to v");
    else if (rv * rv < lambda_sq * system.inner(rays[i], rays[i]))
      report.fail("ray " + std::to_string(i) + " violates |r.v| >= lambda |r|");
  }
  ++report.checked;
  if (system.inner(gv.v, gv.v).sign() <= 0) report.fail("v.v is not positive");
  return report;
}

bool bounded_slice(const CoxeterSystem& system, const Chamber& chamber, const Vector& v) {
  bool all_positive = true;
  for (const auto& x : chamber.rays) {
    int s = system.inner(v, x).sign();
    if (s == 0) throw InvariantViolation("v is orthogonal to an extreme ray of a chamber");
    all_positive = all_positive && s > 0;
  }
  return all_positive;
}

std::vector<Chamber> enumerate_chambers(const CoxeterGroup& group, const ReflectionSet& t, const Vector& v) {
  const CoxeterSystem& system = group.system();
  std::vector<Vector> root_covectors;
  for (const auto& root : t.roots) root_covectors.push_back(system.covector(root));
  std::vector<Chamber> out;
  out.reserve(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    Chamber ch;
    ch.w = static_cast<ElementId>(i);
    const Matrix& m = group.matrix(ch.w);
    for (const auto& omega : system.dual_basis()) ch.rays.push_back(m * omega);
    ch.interior = m * system.chamber_interior();
    for (const auto& cov : root_covectors) ch.signs.push_back(dot(cov, ch.interior).sign());
    ch.bounded_slice = bounded_slice(system, ch, v);
    out.push_back(std::move(ch));
  }
  return out;
}

std::size_t bounded_slice_count(const std::vector<Chamber>& chambers) {
  return static_cast<std::size_t>(
      std::count_if(chambers.begin(), chambers.end(), [](const Chamber& c) { return c.bounded_slice; }));
}

CheckReport check_chambers(const CoxeterGroup& group, const std::vector<Chamber>& chambers,
                           const std::vector<Vector>& rays) {
  CheckReport report;
  std::set<std::string> ray_keys;
  for (const auto& r : rays) ray_keys.insert(vector_key(r));
  std::map<std::vector<int>, std::size_t> by_signs;
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    const auto& ch = chambers[i];
    ++report.checked;
    if (std::count(ch.signs.begin(), ch.signs.end(), 0) > 0)
      report.fail("chamber " + std::to_string(i) + " has a zero sign");
    if (!by_signs.emplace(ch.signs, i).second) report.fail("chamber " + std::to_string(i) + " repeats a sign vector");
    if (group.system().rank() >= 2)
      for (const auto& x : ch.rays)
        if (!ray_keys.count(vector_key(normalize_leading(x))))
          report.fail("chamber " + std::to_string(i) + " has an extreme ray outside the ray set");
  }
  if (chambers.size() != group.size()) report.fail("chambers are not in bijection with the group");

  // -wC has the negated sign vector.
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    ++report.checked;
    std::vector<int> negated = chambers[i].signs;
    for (auto& s : negated) s = -s;
    auto it = by_signs.find(negated);
    if (it == by_signs.end()) report.fail("chamber " + std::to_string(i) + " has no antipode");
    else if (chambers[i].bounded_slice && chambers[it->second].bounded_slice)
      report.fail("chamber " + std::to_string(i) + " and its antipode are both bounded-slice");
  }
  return report;
}

}  // namespace ncph
