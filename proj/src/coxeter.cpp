#include "ncph/coxeter.hpp"

#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>

#include "ncph/error.hpp"

namespace ncph {

namespace {

void add_edge(std::vector<std::vector<int>>& m, int i, int j, int label) {
  m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = label;
  m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = label;
}

std::vector<std::vector<int>> empty_matrix(int n) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

// Minimal polynomial of 2cos(pi/L) with an isolating interval. The conjugates
// are 2cos(pi j/L) for odd j coprime to 2L; the product is rounded to integers
// and then validated exactly by NumberField::create.
FieldPtr cyclotomic_real_field(int L) {
  std::vector<double> roots;
  for (int j = 1; j < 2 * L; j += 2)
    if (std::gcd(j, 2 * L) == 1 && j < L) roots.push_back(2 * std::cos(M_PI * j / L));
  std::vector<double> coeffs{1.0};
  for (double r : roots) {
    std::vector<double> next(coeffs.size() + 1, 0.0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= r * coeffs[i];
    }
    coeffs = std::move(next);
  }
  std::vector<Integer> poly;
  for (double c : coeffs) {
    double rounded = std::round(c);
    if (std::fabs(rounded - c) > 1e-6) throw DiagramError("label too large for exact field construction");
    poly.emplace_back(static_cast<long>(rounded));
  }
  const double theta = 2 * std::cos(M_PI / L);
  double gap = 4.0;
  for (double r : roots)
    if (std::fabs(r - theta) > 1e-12) gap = std::min(gap, std::fabs(r - theta));
  const double scale = 1 << 20;
  Rational lo(static_cast<long>(std::floor((theta - gap / 3) * scale)), static_cast<long>(scale));
  Rational hi(static_cast<long>(std::ceil((theta + gap / 3) * scale)), static_cast<long>(scale));
  lo.canonicalize();
  hi.canonicalize();
  return NumberField::create(std::move(poly), lo, hi);
}

}  // namespace

CoxeterDiagram standard_diagram(char type, int n, int dihedral_m) {
  auto fail = [&](const std::string& why) {
    std::ostringstream os;
    os << "invalid type " << type << n << ": " << why;
    throw DiagramError(os.str());
  };
  if (n < 1) fail("rank must be positive");
  CoxeterDiagram d;
  d.rank = n;
  d.m = empty_matrix(n);
  std::ostringstream label;
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) add_edge(d.m, i, i + 1, 3);
      label << "A" << n;
      break;
    case 'B':
    case 'C':
      // Same group; C_n numbers the path from the 4-labelled end.
      if (n < 2) fail("rank must be at least 2");
      for (int i = 0; i + 1 < n; ++i) {
        bool heavy = type == 'B' ? i + 2 == n : i == 0;
        add_edge(d.m, i, i + 1, heavy ? 4 : 3);
      }
      label << type << n;
      break;
    case 'D':
      if (n < 4) fail("rank must be at least 4");
      for (int i = 0; i + 2 < n; ++i) add_edge(d.m, i, i + 1, 3);
      add_edge(d.m, n - 3, n - 1, 3);
      label << "D" << n;
      break;
    case 'E':
      if (n < 6 || n > 8) fail("rank must be 6, 7 or 8");
      add_edge(d.m, 0, 2, 3);
      add_edge(d.m, 1, 3, 3);
      for (int i = 2; i + 1 < n; ++i) add_edge(d.m, i, i + 1, 3);
      label << "E" << n;
      break;
    case 'F':
      if (n != 4) fail("rank must be 4");
      add_edge(d.m, 0, 1, 3);
      add_edge(d.m, 1, 2, 4);
      add_edge(d.m, 2, 3, 3);
      label << "F4";
      break;
    case 'G':
      if (n != 2) fail("rank must be 2");
      add_edge(d.m, 0, 1, 6);
      label << "G2";
      break;
    case 'H':
      if (n != 3 && n != 4) fail("rank must be 3 or 4");
      add_edge(d.m, 0, 1, 5);
      for (int i = 1; i + 1 < n; ++i) add_edge(d.m, i, i + 1, 3);
      label << "H" << n;
      break;
    case 'I':
      if (n != 2) fail("rank must be 2");
      if (dihedral_m < 2) fail("dihedral label m must be at least 2");
      add_edge(d.m, 0, 1, dihedral_m);
      label << "I2(" << dihedral_m << ")";
      break;
    default:
      fail("unknown type letter");
  }
  d.label = label.str();
  return d;
}

CoxeterDiagram diagram_from_matrix(std::vector<std::vector<int>> m, std::string label) {
  const std::size_t n = m.size();
  if (n == 0) throw DiagramError("Coxeter matrix is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DiagramError("Coxeter matrix is not square");
    if (m[i][i] != 1) throw DiagramError("Coxeter matrix diagonal must be 1");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] != m[j][i]) throw DiagramError("Coxeter matrix is not symmetric");
      if (m[i][j] < 2) throw DiagramError("off-diagonal Coxeter labels must be >= 2");
    }
  return CoxeterDiagram{static_cast<int>(n), std::move(m), std::move(label)};
}

Bipartition bipartite_order(const CoxeterDiagram& d, bool swap_classes) {
  const int n = d.rank;
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (color[static_cast<std::size_t>(start)] != -1) continue;
    color[static_cast<std::size_t>(start)] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        if (u == v || d.m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] < 3) continue;
        auto& cv = color[static_cast<std::size_t>(v)];
        const int want = 1 - color[static_cast<std::size_t>(u)];
        if (cv == -1) {
          cv = want;
          queue.push_back(v);
        } else if (cv != want) {
          throw DiagramError("Coxeter graph is not bipartite");
        }
      }
    }
  }
  const int first = swap_classes ? 1 : 0;
  Bipartition b;
  for (int i = 0; i < n; ++i)
    if (color[static_cast<std::size_t>(i)] == first) b.order.push_back(i);
  b.s = static_cast<int>(b.order.size());
  for (int i = 0; i < n; ++i)
    if (color[static_cast<std::size_t>(i)] != first) b.order.push_back(i);
  return b;
}

CoxeterSystem CoxeterSystem::build(const CoxeterDiagram& input, bool swap_classes) {
  CoxeterSystem sys;
  sys.input_ = diagram_from_matrix(input.m, input.label);
  sys.swapped_ = swap_classes;
  sys.bipartition_ = bipartite_order(sys.input_, swap_classes);
  const int n = input.rank;
  const auto un = static_cast<std::size_t>(n);

  sys.diagram_ = sys.input_;
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j)
      sys.diagram_.m[i][j] =
          sys.input_.m[static_cast<std::size_t>(sys.bipartition_.order[i])][static_cast<std::size_t>(sys.bipartition_.order[j])];

  int L = 1;
  for (const auto& row : sys.diagram_.m)
    for (int label : row)
      if (label >= 4) L = std::lcm(L, label);
  sys.lcm_ = L;
  sys.field_ = L == 1 ? NumberField::rationals() : cyclotomic_real_field(L);
  const NumberField& F = *sys.field_;

  if (L > 1) {
    // 2cos(L * pi/L) = -2 pins theta to the intended root.
    Scalar theta = Scalar::generator(F);
    Scalar prev(F, 2), cur = theta;
    for (int k = 1; k < L; ++k) {
      Scalar next = theta * cur - prev;
      prev = cur;
      cur = next;
    }
    if (!(cur == Scalar(F, -2))) throw InvariantViolation("field generator is not 2cos(pi/L)");
  }

  sys.gram_ = Matrix(un, un, F);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j)
      sys.gram_(i, j) = i == j ? Scalar(F, 1) : -sys.cos_pi_over(sys.diagram_.m[i][j]);

  // Sylvester's criterion on leading principal minors.
  for (std::size_t k = 1; k <= un; ++k) {
    Matrix minor(k, k, F);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = sys.gram_(i, j);
    if (determinant(minor).sign() <= 0)
      throw DiagramError("Gram matrix is not positive definite: " + input.label + " is not of finite type");
  }
  sys.gram_inv_ = inverse(sys.gram_);

  for (int i = 0; i < n; ++i) {
    Matrix r = Matrix::identity(un, F);
    for (std::size_t j = 0; j < un; ++j)
      r(static_cast<std::size_t>(i), j) -= Rational(2) * sys.gram_(static_cast<std::size_t>(i), j);
    sys.simple_reflections_.push_back(std::move(r));
  }
  sys.coxeter_ = Matrix::identity(un, F);
  for (const auto& r : sys.simple_reflections_) sys.coxeter_ = sys.coxeter_ * r;

  const Matrix id = Matrix::identity(un, F);
  Matrix power = sys.coxeter_;
  sys.h_ = 1;
  while (!(power == id)) {
    power = power * sys.coxeter_;
    if (++sys.h_ > 100000) throw DiagramError("Coxeter element has no finite order");
  }

  for (std::size_t i = 0; i < un; ++i) sys.dual_basis_.push_back(sys.gram_inv_.column(i));
  sys.interior_ = zero_vector(F, un);
  for (const auto& w : sys.dual_basis_) sys.interior_ = sys.interior_ + w;
  return sys;
}

Scalar CoxeterSystem::cos_pi_over(int m) const {
  const NumberField& F = *field_;
  if (m == 1) return Scalar(F, 1);
  if (m == 2) return Scalar(F, 0);
  if (m == 3) return Scalar(F, Rational(1, 2));
  if (lcm_ % m != 0) throw DiagramError("label does not divide the field conductor");
  // 2cos(k x) from theta = 2cos(x) via C_{j+1} = theta C_j - C_{j-1}.
  const int k = lcm_ / m;
  Scalar theta = Scalar::generator(F);
  Scalar prev(F, 2), cur = theta;
  for (int j = 1; j < k; ++j) {
    Scalar next = theta * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur * Rational(1, 2);
}

Vector CoxeterSystem::simple_root(int i) const {
  return unit_vector(*field_, static_cast<std::size_t>(rank()), static_cast<std::size_t>(i));
}

Scalar CoxeterSystem::inner(const Vector& x, const Vector& y) const { return dot(x, gram_ * y); }

Matrix CoxeterSystem::reflection_matrix(const Vector& root) const {
  const auto un = static_cast<std::size_t>(rank());
  Vector g = covector(root);
  Matrix r = Matrix::identity(un, *field_);
  for (std::size_t i = 0; i < un; ++i) {
    if (root[i].is_zero()) continue;
    for (std::size_t j = 0; j < un; ++j) r(i, j) -= Rational(2) * root[i] * g[j];
  }
  return r;
}

bool CoxeterSystem::is_orthogonal(const Matrix& m) const { return m.transpose() * gram_ * m == gram_; }

CoxeterGroup CoxeterGroup::generate(const CoxeterSystem& system, std::size_t cap) {
  CoxeterGroup g(system);
  const auto un = static_cast<std::size_t>(system.rank());
  Matrix id = Matrix::identity(un, system.field());
  g.index_.emplace(id.key(), 0);
  g.elements_.push_back({std::move(id), 0, 0});
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (int i = 0; i < system.rank(); ++i) {
      Matrix next = g.elements_[head].matrix * system.simple_reflection(i);
      std::string key = next.key();
      if (g.index_.count(key)) continue;
      if (g.elements_.size() >= cap) {
        std::ostringstream os;
        os << "group generation exceeded the cap of " << cap << " elements";
        throw BudgetExceeded(os.str());
      }
      g.index_.emplace(std::move(key), static_cast<ElementId>(g.elements_.size()));
      g.elements_.push_back({std::move(next), 0, 0});
    }
  }
  g.finalize();
  return g;
}

CoxeterGroup CoxeterGroup::from_matrices(const CoxeterSystem& system, std::vector<Matrix> matrices) {
  CoxeterGroup g(system);
  for (auto& m : matrices) {
    std::string key = m.key();
    if (!g.index_.emplace(std::move(key), static_cast<ElementId>(g.elements_.size())).second)
      throw InvariantViolation("duplicate matrix in cached group");
    g.elements_.push_back({std::move(m), 0, 0});
  }
  if (g.elements_.empty() || !(g.elements_[0].matrix == Matrix::identity(static_cast<std::size_t>(system.rank()), system.field())))
    throw InvariantViolation("cached group does not start with the identity");
  for (const auto& e : g.elements_)
    for (int i = 0; i < system.rank(); ++i)
      if (!g.find(e.matrix * system.simple_reflection(i)))
        throw InvariantViolation("cached group is not closed under the generators");
  g.finalize();
  return g;
}

void CoxeterGroup::finalize() {
  const CoxeterSystem& sys = *system_;
  const int n = sys.rank();
  const Matrix id = Matrix::identity(static_cast<std::size_t>(n), sys.field());
  inverses_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    auto& e = elements_[i];
    int r = static_cast<int>(ncph::rank(e.matrix - id));
    e.reflection_length = r;
    e.fixed_dimension = n - r;
    // Orthogonal for G: M^-1 = G^-1 M^T G.
    inverses_[i] = id_of(sys.gram_inverse() * e.matrix.transpose() * sys.gram());
  }
  coxeter_ = id_of(sys.coxeter_element());
}

std::optional<ElementId> CoxeterGroup::find(const Matrix& m) const {
  auto it = index_.find(m.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId CoxeterGroup::id_of(const Matrix& m) const {
  auto id = find(m);
  if (!id) throw InvariantViolation("matrix is not an element of the group");
  return *id;
}

ElementId CoxeterGroup::multiply(ElementId a, ElementId b) const {
  return id_of(elements_[a].matrix * elements_[b].matrix);
}

bool CoxeterGroup::precedes(ElementId u, ElementId w) const {
  const int lw = reflection_length(w), lu = reflection_length(u);
  if (lu > lw) return false;
  return lw == lu + reflection_length(multiply(inverse(u), w));
}

std::optional<std::size_t> ReflectionSet::find_root(const Vector& root) const {
  auto it = root_index.find(vector_key(root));
  if (it != root_index.end()) return it->second;
  it = root_index.find(vector_key(-root));
  if (it != root_index.end()) return it->second;
  return std::nullopt;
}

ReflectionSet reflections(const CoxeterGroup& group) {
  const CoxeterSystem& sys = group.system();
  ReflectionSet t;
  const Vector& interior = sys.chamber_interior();
  for (std::size_t id = 0; id < group.size(); ++id) {
    const Matrix& w = group.matrix(static_cast<ElementId>(id));
    for (int i = 0; i < sys.rank(); ++i) {
      Vector root = w.column(static_cast<std::size_t>(i));
      int side = sys.inner(root, interior).sign();
      if (side == 0) throw InvariantViolation("root orthogonal to the chamber interior");
      if (side < 0) root = -root;
      std::string key = vector_key(root);
      if (t.root_index.count(key)) continue;
      t.root_index.emplace(std::move(key), t.roots.size());
      t.reflections.push_back(group.id_of(sys.reflection_matrix(root)));
      t.roots.push_back(std::move(root));
    }
  }
  return t;
}

std::vector<int> reflection_word_lengths(const CoxeterGroup& group, const ReflectionSet& t) {
  std::vector<int> dist(group.size(), -1);
  dist[group.identity()] = 0;
  std::deque<ElementId> queue{group.identity()};
  while (!queue.empty()) {
    ElementId u = queue.front();
    queue.pop_front();
    for (ElementId r : t.reflections) {
      ElementId v = group.multiply(u, r);
      if (dist[v] != -1) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

}  // namespace ncph
