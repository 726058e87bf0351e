#include "ncph/embed.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ncph/error.hpp"

namespace ncph {

Matrix mu_operator(const CoxeterSystem& system) {
  const NumberField& field = system.field();
  const auto n = static_cast<std::size_t>(system.rank());
  Matrix i_minus_c = Matrix::identity(n, field) - system.coxeter_element();
  if (rank(i_minus_c) != n) throw InvariantViolation("I - c is singular");
  return Scalar(field, 2) * inverse(i_minus_c);
}

MuComplex build_mu_complex(const CoxeterSystem& system, const OrderedRoots& ordered, const SimplicialComplex& xc) {
  MuComplex mc;
  mc.mu = mu_operator(system);
  for (const auto& root : ordered.roots) mc.vertices.push_back(mc.mu * root);
  mc.facets = xc.facets();
  return mc;
}

CheckReport check_mu_dots(const CoxeterSystem& system, const OrderedRoots& ordered, const MuComplex& mc) {
  CheckReport report;
  const std::size_t count = ordered.size();
  const auto n = static_cast<std::size_t>(system.rank());
  auto label = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
  };
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i; j < count; ++j) {
      ++report.checked;
      if (system.inner(mc.vertices[i], ordered.roots[j]).sign() < 0) report.fail("mu(rho_i).rho_j < 0 at " + label(i, j));
    }
    for (std::size_t t = 1; t < n && i + t < count; ++t) {
      ++report.checked;
      if (!system.inner(mc.vertices[i + t], ordered.roots[i]).is_zero())
        report.fail("mu(rho_{i+t}).rho_i != 0 at " + label(i + t, i));
    }
  }
  return report;
}

CheckReport check_mu_positive(const CoxeterSystem& system, const MuComplex& mc, const Vector& v) {
  CheckReport report;
  for (std::size_t i = 0; i < mc.vertices.size(); ++i) {
    ++report.checked;
    if (system.inner(mc.vertices[i], v).sign() <= 0) report.fail("mu(rho_" + std::to_string(i + 1) + ").v <= 0");
  }
  return report;
}

Vector project_to_hv(const CoxeterSystem& system, const Vector& x, const Vector& v) {
  Scalar vx = system.inner(v, x);
  if (vx.sign() <= 0) throw Error("central projection needs v.x > 0");
  return (system.inner(v, v) / vx) * x;
}

std::vector<std::vector<bool>> IntersectionLattice::strict() const {
  auto out = leq;
  for (std::size_t i = 0; i < out.size(); ++i) out[i][i] = false;
  return out;
}

std::vector<bool> IntersectionLattice::proper_mask() const {
  std::vector<bool> mask(size(), true);
  if (!mask.empty()) mask.front() = mask.back() = false;
  return mask;
}

IntersectionLattice build_intersection_lattice(const CoxeterSystem& system, const ReflectionSet& t) {
  const auto n = static_cast<std::size_t>(system.rank());
  std::vector<Vector> normals;
  for (const auto& root : t.roots) normals.push_back(system.covector(root));

  // Hyperplanes containing the intersection of those in `generators`.
  auto close = [&](const std::vector<std::size_t>& generators) {
    std::vector<Vector> rows;
    for (auto i : generators) rows.push_back(normals[i]);
    auto basis = kernel(Matrix::from_rows(rows));
    std::vector<std::size_t> closed;
    for (std::size_t j = 0; j < normals.size(); ++j)
      if (std::all_of(basis.begin(), basis.end(), [&](const Vector& x) { return dot(normals[j], x).is_zero(); }))
        closed.push_back(j);
    return std::make_pair(closed, static_cast<int>(n - basis.size()));
  };

  std::vector<std::set<std::vector<std::size_t>>> levels(n + 1);
  levels[0].insert(std::vector<std::size_t>{});
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& flat : levels[k])
      for (std::size_t j = 0; j < normals.size(); ++j) {
        if (std::binary_search(flat.begin(), flat.end(), j)) continue;
        auto gens = flat;
        gens.push_back(j);
        auto [closed, codim] = close(gens);
        if (codim != static_cast<int>(k + 1)) throw InvariantViolation("flat codimension did not grow by one");
        levels[k + 1].insert(std::move(closed));
      }

  IntersectionLattice lat;
  for (std::size_t k = 0; k <= n; ++k)
    for (const auto& flat : levels[k]) {
      lat.flats.push_back(flat);
      lat.codimension.push_back(static_cast<int>(k));
    }
  const std::size_t m = lat.size();
  lat.leq.assign(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      lat.leq[a][b] = std::includes(lat.flats[b].begin(), lat.flats[b].end(), lat.flats[a].begin(), lat.flats[a].end());
  if (levels[n].size() != 1) throw InvariantViolation("the arrangement is not essential");
  return lat;
}

std::vector<std::size_t> facet_chambers(const CoxeterSystem& system, const MuComplex& mc, const Simplex& facet,
                                        const std::vector<Chamber>& chambers) {
  const auto n = static_cast<std::size_t>(system.rank());
  std::vector<Vector> corners;
  for (auto p : facet) corners.push_back(mc.vertices[p]);
  Matrix v = Matrix::from_columns(corners);
  if (corners.size() != n || rank(v) != n) throw InvariantViolation("facet vertices are linearly dependent");
  Matrix to_facet_basis = inverse(v);
  auto nonnegative = [](const Vector& y) {
    return std::all_of(y.begin(), y.end(), [](const Scalar& s) { return s.sign() >= 0; });
  };
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    const auto& ch = chambers[i];
    Vector inner_point = to_facet_basis * ch.interior;
    if (!std::all_of(inner_point.begin(), inner_point.end(), [](const Scalar& s) { return s.sign() > 0; })) continue;
    if (std::all_of(ch.rays.begin(), ch.rays.end(), [&](const Vector& x) { return nonnegative(to_facet_basis * x); }))
      out.push_back(i);
  }
  return out;
}

EmbeddingReport pstar_matrix(const CoxeterSystem& system, const MuComplex& mc, const std::vector<Chamber>& chambers) {
  EmbeddingReport rep;
  rep.facets = mc.facets;
  std::map<std::size_t, std::size_t> row_of;
  for (std::size_t i = 0; i < chambers.size(); ++i)
    if (chambers[i].bounded_slice) {
      row_of[i] = rep.bounded.size();
      rep.bounded.push_back(i);
    }
  rep.matrix.assign(rep.bounded.size(), std::vector<int>(rep.facets.size(), 0));
  rep.disjoint = rep.nonempty = rep.inside_bounded = true;
  std::vector<int> hits(chambers.size(), 0);
  std::vector<SparseColumn> columns;
  for (std::size_t f = 0; f < rep.facets.size(); ++f) {
    auto cells = facet_chambers(system, mc, rep.facets[f], chambers);
    if (cells.empty()) rep.nonempty = false;
    SparseColumn col;
    for (auto i : cells) {
      if (++hits[i] > 1) rep.disjoint = false;
      auto row = row_of.find(i);
      if (row == row_of.end()) {
        rep.inside_bounded = false;
        continue;
      }
      rep.matrix[row->second][f] = 1;
      col.emplace_back(row->second, Rational(1));
    }
    std::sort(col.begin(), col.end());
    columns.push_back(std::move(col));
    rep.incidence.push_back(std::move(cells));
  }
  rep.matrix_rank = sparse_rank(std::move(columns));
  rep.injective = rep.matrix_rank == rep.facets.size();
  for (auto i : rep.bounded) rep.covered += hits[i] > 0;
  return rep;
}

}  // namespace ncph
