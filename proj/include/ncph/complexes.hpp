#ifndef NCPH_COMPLEXES_HPP
#define NCPH_COMPLEXES_HPP

// The non-crossing partition lattice NCP_c, the flag complex X(c) on the
// ordered positive roots, its subcomplexes X(w), the map f from simplices to
// NCP_c, order complexes and rational simplicial homology.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncph/coxeter.hpp"
#include "ncph/report.hpp"
#include "ncph/rootorder.hpp"

namespace ncph {

// Strictly increasing vertex list. The empty simplex is the (-1)-face of the
// augmented chain complex.
using Simplex = std::vector<std::size_t>;

class SimplicialComplex {
 public:
  static constexpr std::size_t kDefaultBudget = 5'000'000;

  SimplicialComplex() = default;

  // Downward closure of `generators`. Throws BudgetExceeded when the number
  // of faces passes `budget`.
  static SimplicialComplex from_facets(std::size_t vertex_count, std::vector<Simplex> generators,
                                       std::size_t budget = kDefaultBudget);

  std::size_t vertex_count() const { return vertex_count_; }
  // Maximal faces, sorted.
  const std::vector<Simplex>& facets() const { return facets_; }
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  bool empty() const { return faces_.empty(); }
  // All faces of dimension d (0 <= d <= dimension()), sorted.
  const std::vector<Simplex>& faces(int d) const { return faces_[static_cast<std::size_t>(d)]; }
  std::size_t face_count() const;
  bool contains(const Simplex& s) const;

  // Faces of dimension <= k.
  SimplicialComplex skeleton(int k) const;
  // Full subcomplex on the vertices with keep[v] set.
  SimplicialComplex induced(const std::vector<bool>& keep) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Simplex> facets_;
  std::vector<std::vector<Simplex>> faces_;
};

// Formal rational combination of oriented simplices (orientation = sorted
// vertex order).
class Chain {
 public:
  void add(const Simplex& s, const Rational& coefficient);
  const std::map<Simplex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Augmented boundary: a vertex maps to the empty simplex.
  Chain boundary() const;

 private:
  std::map<Simplex, Rational> terms_;
};

// Reduced Betti numbers over Q, for dimensions -1..dimension().
struct ReducedBetti {
  std::vector<long> values;  // values[k + 1] = reduced beta_k

  long at(int k) const {
    auto i = static_cast<std::size_t>(k + 1);
    return k >= -1 && i < values.size() ? values[i] : 0;
  }
  int top_dimension() const { return static_cast<int>(values.size()) - 2; }
};

ReducedBetti homology_ranks(const SimplicialComplex& complex,
                            std::size_t budget = SimplicialComplex::kDefaultBudget);

// Rank of the classes of `cycles` (all of dimension k) in reduced H_k.
std::size_t cycle_rank(const std::vector<Chain>& cycles, const SimplicialComplex& complex, int k);

// Order complex of a finite poset given by its strict order. Indices must be
// a linear extension (less[i][j] implies i < j). `include` restricts to a
// subposet; empty means all elements.
SimplicialComplex order_complex(const std::vector<std::vector<bool>>& less,
                                const std::vector<bool>& include = {},
                                std::size_t budget = SimplicialComplex::kDefaultBudget);

// [e, c] in absolute order, ordered by (length, canonical matrix key).
struct NCPLattice {
  std::vector<ElementId> elements;
  std::vector<int> length;
  // leq[a][b]: elements[a] precedes elements[b].
  std::vector<std::vector<bool>> leq;
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
  std::size_t bottom = 0;
  std::size_t top = 0;
  std::unordered_map<ElementId, std::size_t> index;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> find(ElementId id) const;
  std::vector<std::vector<bool>> strict() const;
  std::vector<bool> proper_mask() const;
};

NCPLattice build_ncp(const CoxeterGroup& group);

// Flag complex on positions 0..N-1: p < q joined when r(rho_q) r(rho_p) has
// length 2 and precedes c. Throws InvariantViolation if a maximal clique has
// size != n or a simplex breaks l(r(tau_1)...r(tau_k) c) = n - k.
SimplicialComplex build_xc(const CoxeterGroup& group, const OrderedRoots& ordered,
                           std::size_t budget = SimplicialComplex::kDefaultBudget);

// Full subcomplex of X(c) on {p : r(rho_p) precedes w}. Throws
// InvariantViolation when w does not precede c.
SimplicialComplex build_xw(const SimplicialComplex& xc, const CoxeterGroup& group,
                           const OrderedRoots& ordered, ElementId w);

// f(sigma) = r(tau_k) ... r(tau_1) for sigma with ordered vertices tau_1 < ... < tau_k.
ElementId f_map(const CoxeterGroup& group, const OrderedRoots& ordered, const Simplex& simplex);

// l(r(tau_1)...r(tau_k) c) = n - k on every simplex, and purity.
CheckReport check_lemma48(const CoxeterGroup& group, const OrderedRoots& ordered, const SimplicialComplex& xc);

// f(theta) strictly precedes f(sigma) for every proper nonempty face theta of
// every simplex sigma; l(f(sigma)) = |sigma|; facets map to c.
CheckReport check_poset_map(const CoxeterGroup& group, const OrderedRoots& ordered,
                            const SimplicialComplex& xc, const NCPLattice& ncp);

// For every proper w: {sigma in the (n-2)-skeleton : f(sigma) precedes w}
// equals the simplex set of X(w).
CheckReport fiber_check(const CoxeterGroup& group, const OrderedRoots& ordered, const SimplicialComplex& xc,
                        const NCPLattice& ncp);

// One cycle per facet F of X(c): the barycentric sphere of the boundary of
// F pushed through f into the order complex of the proper part of NCP_c.
// Vertex ids are NCP lattice indices.
std::vector<Chain> ncp_basis_cycles(const CoxeterGroup& group, const OrderedRoots& ordered,
                                    const SimplicialComplex& xc, const NCPLattice& ncp);

// Moebius number mu(0, 1) of the lattice.
long mobius_number(const NCPLattice& ncp);
// Same for any bounded poset given by its non-strict order (index 0 bottom,
// last index top).
long mobius_number(const std::vector<std::vector<bool>>& leq);

}  // namespace ncph

#endif  // NCPH_COMPLEXES_HPP
