#ifndef NCPH_EMBED_HPP
#define NCPH_EMBED_HPP

// mu = 2(I - c)^-1 applied to the ordered roots, central projection onto
// H_v, the intersection lattice of the arrangement, and the incidence of
// facets of mu(X(c)) with bounded-slice chambers.

#include <vector>

#include "ncph/arrangement.hpp"
#include "ncph/complexes.hpp"

namespace ncph {

struct MuComplex {
  Matrix mu;
  std::vector<Vector> vertices;  // mu(rho_1), ..., mu(rho_N)
  std::vector<Simplex> facets;   // those of X(c)
};

// Throws InvariantViolation when I - c is singular.
Matrix mu_operator(const CoxeterSystem& system);
MuComplex build_mu_complex(const CoxeterSystem& system, const OrderedRoots& ordered, const SimplicialComplex& xc);

// mu(rho_i).rho_j >= 0 for i <= j; mu(rho_{i+t}).rho_i = 0 for 1 <= t <= n-1
// and i + t <= N.
CheckReport check_mu_dots(const CoxeterSystem& system, const OrderedRoots& ordered, const MuComplex& mc);
// mu(rho_i).v > 0 for every i.
CheckReport check_mu_positive(const CoxeterSystem& system, const MuComplex& mc, const Vector& v);

// ((v.v)/(v.x)) x. Throws Error when v.x <= 0.
Vector project_to_hv(const CoxeterSystem& system, const Vector& x, const Vector& v);

// Flats as the set of hyperplanes (indices into t) containing them, ordered
// by (codimension, index set); index 0 is R^n and the last is {0}.
struct IntersectionLattice {
  std::vector<std::vector<std::size_t>> flats;
  std::vector<int> codimension;
  std::vector<std::vector<bool>> leq;  // reverse inclusion of subspaces

  std::size_t size() const { return flats.size(); }
  std::vector<std::vector<bool>> strict() const;
  std::vector<bool> proper_mask() const;
};

IntersectionLattice build_intersection_lattice(const CoxeterSystem& system, const ReflectionSet& t);

// Chambers whose closed cone lies in the cone on the facet's vertices.
// Throws InvariantViolation when the vertices are dependent.
std::vector<std::size_t> facet_chambers(const CoxeterSystem& system, const MuComplex& mc, const Simplex& facet,
                                        const std::vector<Chamber>& chambers);

struct EmbeddingReport {
  std::vector<Simplex> facets;
  std::vector<std::size_t> bounded;                  // chamber indices, the rows
  std::vector<std::vector<std::size_t>> incidence;   // per facet, its chamber indices
  std::vector<std::vector<int>> matrix;              // rows = bounded chambers, columns = facets
  std::size_t matrix_rank = 0;
  bool disjoint = false;
  bool nonempty = false;
  bool injective = false;
  bool inside_bounded = false;
  std::size_t covered = 0;  // bounded chambers hit by some facet

  bool ok() const { return disjoint && nonempty && injective && inside_bounded; }
};

EmbeddingReport pstar_matrix(const CoxeterSystem& system, const MuComplex& mc, const std::vector<Chamber>& chambers);

}  // namespace ncph

#endif  // NCPH_EMBED_HPP
