#ifndef NCPH_ROOTORDER_HPP
#define NCPH_ROOTORDER_HPP

#include <cstddef>
#include <vector>

#include "ncph/coxeter.hpp"

namespace ncph {

// Positive roots in the order rho_i = r_1 ... r_{i-1} alpha_i (indices of the
// simple roots and reflections taken cyclically mod n). Positions are
// 0-based in code; position p holds rho_{p+1}.
struct OrderedRoots {
  std::vector<Vector> roots;
  // Reflection r(rho_{p+1}) for each position.
  std::vector<ElementId> reflections;
  // Position -> index in the ReflectionSet, and back.
  std::vector<std::size_t> reflection_index;
  std::vector<std::size_t> position_of;
  // tau_i = rho_{N-n+i}, the last n roots.
  std::vector<Vector> tau;

  std::size_t size() const { return roots.size(); }
};

// rho_i for any i >= 1 (1-based), following the cyclic definition past nh/2.
Vector cyclic_root(const CoxeterSystem& system, std::size_t i);

// Throws InvariantViolation if the sequence is not exactly the positive
// system, or if rho_{N+1}..rho_{2N} are not exactly the negative roots
// (N = nh/2).
OrderedRoots ordered_roots(const CoxeterGroup& group, const ReflectionSet& t);

// Checks that tau is linearly independent and r(tau_n) ... r(tau_1) = c;
// throws InvariantViolation otherwise.
std::vector<Vector> last_n_roots(const CoxeterGroup& group, const OrderedRoots& ordered);

}  // namespace ncph

#endif  // NCPH_ROOTORDER_HPP
