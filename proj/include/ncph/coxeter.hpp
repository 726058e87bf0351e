#ifndef NCPH_COXETER_HPP
#define NCPH_COXETER_HPP

// Finite Coxeter systems realized with unit simple roots.
//
// Vectors are written in the basis of simple roots alpha_1..alpha_n and the
// Euclidean inner product is the Gram form G_ij = -cos(pi/m_ij). Every entry
// of G lies in Q(2cos(pi/L)) with L the lcm of the labels m_ij >= 4, so the
// whole group, its roots and its chambers are exact in a single field.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncph/algebra.hpp"

namespace ncph {

struct CoxeterDiagram {
  int rank = 0;
  // Symmetric Coxeter matrix: m[i][i] = 1, m[i][j] >= 2.
  std::vector<std::vector<int>> m;
  std::string label;
};

// Irreducible finite types by letter: A_n, B_n, C_n, D_n, E_6..8, F_4, G_2,
// H_3, H_4, and I_2(m) via `dihedral_m`. B_n and C_n are the same group with
// the path numbered from opposite ends (4 on the last edge for B_n, on the
// first for C_n). Throws DiagramError for an unknown or out-of-range type.
CoxeterDiagram standard_diagram(char type, int rank, int dihedral_m = 0);

// Validates shape and symmetry only; finiteness is checked by build.
CoxeterDiagram diagram_from_matrix(std::vector<std::vector<int>> m, std::string label = "custom");

// Two-coloring of the Coxeter graph (edges where m_ij >= 3). `order[k]` is
// the input index placed at position k; positions [0, s) hold one color
// class and [s, n) the other, each in input order.
struct Bipartition {
  std::vector<int> order;
  int s = 0;
};
Bipartition bipartite_order(const CoxeterDiagram& diagram, bool swap_classes = false);

class CoxeterSystem {
 public:
  // Throws DiagramError when the Gram matrix is not positive definite.
  static CoxeterSystem build(const CoxeterDiagram& diagram, bool swap_classes = false);

  int rank() const { return diagram_.rank; }
  // Diagram after the bipartite reordering; all indices below refer to it.
  const CoxeterDiagram& diagram() const { return diagram_; }
  const CoxeterDiagram& input_diagram() const { return input_; }
  const Bipartition& bipartition() const { return bipartition_; }
  int s() const { return bipartition_.s; }
  bool classes_swapped() const { return swapped_; }

  const NumberField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  const Matrix& gram() const { return gram_; }
  const Matrix& gram_inverse() const { return gram_inv_; }
  const Matrix& simple_reflection(int i) const { return simple_reflections_[static_cast<std::size_t>(i)]; }
  const Matrix& coxeter_element() const { return coxeter_; }
  int coxeter_number() const { return h_; }

  Vector simple_root(int i) const;
  Scalar inner(const Vector& x, const Vector& y) const;
  // G x: the row that pairs with coordinate vectors.
  Vector covector(const Vector& x) const { return gram_ * x; }
  // Reflection in the hyperplane orthogonal to a unit vector.
  Matrix reflection_matrix(const Vector& unit_root) const;
  // M^T G M = G.
  bool is_orthogonal(const Matrix& m) const;

  // Dual basis omega_i with omega_i . alpha_j = delta_ij; extreme rays of C.
  const std::vector<Vector>& dual_basis() const { return dual_basis_; }
  // Sum of the dual basis: a canonical interior point of C.
  const Vector& chamber_interior() const { return interior_; }

  Scalar cos_pi_over(int m) const;

 private:
  CoxeterSystem() = default;

  CoxeterDiagram input_;
  CoxeterDiagram diagram_;
  Bipartition bipartition_;
  bool swapped_ = false;
  int lcm_ = 1;
  FieldPtr field_;
  Matrix gram_, gram_inv_, coxeter_;
  std::vector<Matrix> simple_reflections_;
  std::vector<Vector> dual_basis_;
  Vector interior_;
  int h_ = 0;
};

using ElementId = std::uint32_t;

struct GroupElement {
  Matrix matrix;
  int fixed_dimension = 0;
  // n - dim Fix(w), equal to the minimal number of reflections in a T-word.
  int reflection_length = 0;
};

class CoxeterGroup {
 public:
  static constexpr std::size_t kDefaultCap = 2'000'000;

  // Breadth-first closure from the identity under right multiplication by
  // the simple reflections. Throws BudgetExceeded past `cap` elements.
  static CoxeterGroup generate(const CoxeterSystem& system, std::size_t cap = kDefaultCap);
  // Rebuilds the store from previously generated matrices (cache path).
  // Throws InvariantViolation if the list is not closed under the generators.
  static CoxeterGroup from_matrices(const CoxeterSystem& system, std::vector<Matrix> matrices);

  const CoxeterSystem& system() const { return *system_; }
  std::size_t size() const { return elements_.size(); }
  ElementId identity() const { return 0; }
  ElementId coxeter_element() const { return coxeter_; }
  const GroupElement& element(ElementId id) const { return elements_[id]; }
  const Matrix& matrix(ElementId id) const { return elements_[id].matrix; }

  std::optional<ElementId> find(const Matrix& m) const;
  // Throws InvariantViolation if m is not in the group.
  ElementId id_of(const Matrix& m) const;
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId id) const { return inverses_[id]; }

  int reflection_length(ElementId id) const { return elements_[id].reflection_length; }
  // u precedes w in absolute order: l(w) = l(u) + l(u^-1 w).
  bool precedes(ElementId u, ElementId w) const;

 private:
  explicit CoxeterGroup(const CoxeterSystem& system) : system_(&system) {}
  void finalize();

  const CoxeterSystem* system_;
  std::vector<GroupElement> elements_;
  std::unordered_map<std::string, ElementId> index_;
  std::vector<ElementId> inverses_;
  ElementId coxeter_ = 0;
};

// The reflection set T paired with unit positive roots (positive against the
// chamber interior). Roots are listed in discovery order: group elements in
// generation order, applied to each simple root.
struct ReflectionSet {
  std::vector<Vector> roots;
  std::vector<ElementId> reflections;
  std::unordered_map<std::string, std::size_t> root_index;

  std::size_t size() const { return roots.size(); }
  // Index of a positive root, or of the negative of one.
  std::optional<std::size_t> find_root(const Vector& root) const;
};

ReflectionSet reflections(const CoxeterGroup& group);

// Breadth-first minimal word length over the alphabet T, for every element.
std::vector<int> reflection_word_lengths(const CoxeterGroup& group, const ReflectionSet& t);

}  // namespace ncph

#endif  // NCPH_COXETER_HPP
