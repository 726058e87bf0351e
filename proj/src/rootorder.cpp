#include "ncph/rootorder.hpp"

#include <sstream>

#include "ncph/error.hpp"

namespace ncph {

Vector cyclic_root(const CoxeterSystem& system, std::size_t i) {
  const std::size_t n = static_cast<std::size_t>(system.rank());
  Vector root = system.simple_root(static_cast<int>((i - 1) % n));
  for (std::size_t k = i - 1; k-- > 0;) root = system.simple_reflection(static_cast<int>(k % n)) * root;
  return root;
}

OrderedRoots ordered_roots(const CoxeterGroup& group, const ReflectionSet& t) {
  const CoxeterSystem& sys = group.system();
  const std::size_t n = static_cast<std::size_t>(sys.rank());
  const std::size_t nh = n * static_cast<std::size_t>(sys.coxeter_number());
  if (nh % 2 != 0) throw InvariantViolation("nh is odd");
  const std::size_t count = nh / 2;
  if (count != t.size()) {
    std::ostringstream os;
    os << "|T| = " << t.size() << " but nh/2 = " << count;
    throw InvariantViolation(os.str());
  }

  OrderedRoots out;
  out.position_of.assign(count, count);
  // Prefix products r_1 ... r_{i-1} accumulate left to right.
  Matrix prefix = Matrix::identity(n, sys.field());
  std::vector<Vector> extended;
  for (std::size_t i = 1; i <= nh; ++i) {
    extended.push_back(prefix * sys.simple_root(static_cast<int>((i - 1) % n)));
    prefix = prefix * sys.simple_reflection(static_cast<int>((i - 1) % n));
  }
  for (std::size_t p = 0; p < count; ++p) {
    const Vector& root = extended[p];
    if (sys.inner(root, sys.chamber_interior()).sign() <= 0) {
      std::ostringstream os;
      os << "rho_" << p + 1 << " is not a positive root";
      throw InvariantViolation(os.str());
    }
    auto it = t.root_index.find(vector_key(root));
    if (it == t.root_index.end()) throw InvariantViolation("ordered root missing from the reflection set");
    if (out.position_of[it->second] != count) throw InvariantViolation("duplicate root in the ordering");
    out.position_of[it->second] = p;
    out.reflection_index.push_back(it->second);
    out.reflections.push_back(t.reflections[it->second]);
    out.roots.push_back(root);
  }
  // The second half-period must be exactly the negative system.
  std::vector<bool> negated(count, false);
  for (std::size_t p = count; p < nh; ++p) {
    auto it = t.root_index.find(vector_key(-extended[p]));
    if (it == t.root_index.end() || negated[it->second]) {
      std::ostringstream os;
      os << "rho_" << p + 1 << " is not the negative of a fresh positive root";
      throw InvariantViolation(os.str());
    }
    negated[it->second] = true;
  }
  out.tau.assign(out.roots.end() - static_cast<std::ptrdiff_t>(n), out.roots.end());
  return out;
}

std::vector<Vector> last_n_roots(const CoxeterGroup& group, const OrderedRoots& ordered) {
  const CoxeterSystem& sys = group.system();
  const std::size_t n = static_cast<std::size_t>(sys.rank());
  const std::size_t count = ordered.size();
  std::vector<Vector> tau(ordered.roots.end() - static_cast<std::ptrdiff_t>(n), ordered.roots.end());
  if (rank(Matrix::from_columns(tau)) != n) throw InvariantViolation("last n roots are linearly dependent");
  ElementId product = group.identity();
  for (std::size_t p = count; p-- > count - n;) product = group.multiply(product, ordered.reflections[p]);
  if (product != group.coxeter_element()) throw InvariantViolation("r(tau_n)...r(tau_1) != c");
  return tau;
}

}  // namespace ncph
