#include <algorithm>
#include <set>
#include <sstream>

#include "ncph/complexes.hpp"
#include "ncph/error.hpp"

namespace ncph {

namespace {

void budget_exceeded(std::size_t budget) {
  std::ostringstream os;
  os << "simplex budget of " << budget << " faces exceeded";
  throw BudgetExceeded(os.str());
}

// Column of the boundary matrix for one oriented simplex.
SparseColumn boundary_column(const Simplex& s, const std::vector<Simplex>& lower) {
  SparseColumn col;
  if (s.size() == 1) {
    col.emplace_back(0, Rational(1));
    return col;
  }
  Simplex face(s.size() - 1);
  for (std::size_t drop = 0; drop < s.size(); ++drop) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (i != drop) face[k++] = s[i];
    auto it = std::lower_bound(lower.begin(), lower.end(), face);
    col.emplace_back(static_cast<std::size_t>(it - lower.begin()), Rational(drop % 2 == 0 ? 1 : -1));
  }
  return col;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count, std::vector<Simplex> generators,
                                                 std::size_t budget) {
  SimplicialComplex out;
  out.vertex_count_ = vertex_count;
  for (auto& g : generators) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    for (auto v : g)
      if (v >= vertex_count) throw InvariantViolation("simplex vertex out of range");
  }
  generators.erase(std::remove_if(generators.begin(), generators.end(), [](const Simplex& s) { return s.empty(); }),
                   generators.end());

  std::vector<std::set<Simplex>> by_dim;
  std::size_t total = 0;
  for (const auto& g : generators) {
    if (g.size() > 62) throw BudgetExceeded("simplex too large to enumerate its faces");
    if (by_dim.size() < g.size()) by_dim.resize(g.size());
    const std::uint64_t subsets = std::uint64_t{1} << g.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (mask >> i & 1U) face.push_back(g[i]);
      if (by_dim[face.size() - 1].insert(std::move(face)).second && ++total > budget) budget_exceeded(budget);
    }
  }
  for (auto& level : by_dim) out.faces_.emplace_back(level.begin(), level.end());

  // Maximal faces: those not contained in a face one dimension up.
  for (std::size_t d = 0; d < out.faces_.size(); ++d) {
    std::set<Simplex> covered;
    if (d + 1 < out.faces_.size()) {
      for (const auto& up : out.faces_[d + 1]) {
        for (std::size_t drop = 0; drop < up.size(); ++drop) {
          Simplex f;
          for (std::size_t i = 0; i < up.size(); ++i)
            if (i != drop) f.push_back(up[i]);
          covered.insert(std::move(f));
        }
      }
    }
    for (const auto& s : out.faces_[d])
      if (!covered.count(s)) out.facets_.push_back(s);
  }
  std::sort(out.facets_.begin(), out.facets_.end());
  return out;
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t total = 0;
  for (const auto& level : faces_) total += level.size();
  return total;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return true;
  if (s.size() > faces_.size()) return false;
  const auto& level = faces_[s.size() - 1];
  return std::binary_search(level.begin(), level.end(), s);
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
  std::vector<Simplex> gens;
  for (int d = 0; d <= std::min(k, dimension()); ++d)
    for (const auto& s : faces(d)) gens.push_back(s);
  return from_facets(vertex_count_, std::move(gens), std::max<std::size_t>(face_count(), 1));
}

SimplicialComplex SimplicialComplex::induced(const std::vector<bool>& keep) const {
  std::vector<Simplex> gens;
  for (int d = 0; d <= dimension(); ++d)
    for (const auto& s : faces(d))
      if (std::all_of(s.begin(), s.end(), [&](std::size_t v) { return keep[v]; })) gens.push_back(s);
  return from_facets(vertex_count_, std::move(gens), std::max<std::size_t>(face_count(), 1));
}

void Chain::add(const Simplex& s, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(s, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Chain Chain::boundary() const {
  Chain out;
  for (const auto& [s, coef] : terms_) {
    if (s.empty()) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      out.add(face, drop % 2 == 0 ? coef : Rational(-coef));
    }
  }
  return out;
}

ReducedBetti homology_ranks(const SimplicialComplex& complex, std::size_t budget) {
  if (complex.face_count() > budget) budget_exceeded(budget);
  const int top = complex.dimension();
  // rank_of[d + 1] = rank of the boundary map out of dimension d (d >= 0).
  std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top + 2), 0);
  static const std::vector<Simplex> augmentation{Simplex{}};
  for (int d = 0; d <= top; ++d) {
    const auto& lower = d == 0 ? augmentation : complex.faces(d - 1);
    std::vector<SparseColumn> cols;
    cols.reserve(complex.faces(d).size());
    for (const auto& s : complex.faces(d)) cols.push_back(boundary_column(s, lower));
    boundary_rank[static_cast<std::size_t>(d + 1)] = sparse_rank(std::move(cols));
  }
  ReducedBetti betti;
  for (int d = -1; d <= top; ++d) {
    long chains = d == -1 ? 1 : static_cast<long>(complex.faces(d).size());
    long out_rank = d == -1 ? 0 : static_cast<long>(boundary_rank[static_cast<std::size_t>(d + 1)]);
    long in_rank = d + 1 <= top ? static_cast<long>(boundary_rank[static_cast<std::size_t>(d + 2)]) : 0;
    betti.values.push_back(chains - out_rank - in_rank);
  }
  return betti;
}

std::size_t cycle_rank(const std::vector<Chain>& cycles, const SimplicialComplex& complex, int k) {
  static const std::vector<Simplex> augmentation{Simplex{}};
  const auto& basis = k == -1 ? augmentation : complex.faces(k);
  std::vector<SparseColumn> boundaries;
  if (k + 1 <= complex.dimension()) {
    const auto& upper = complex.faces(k + 1);
    for (const auto& s : upper) boundaries.push_back(boundary_column(s, basis));
  }
  std::size_t base = sparse_rank(boundaries);
  for (const auto& z : cycles) {
    SparseColumn col;
    for (const auto& [s, coef] : z.terms()) {
      auto it = std::lower_bound(basis.begin(), basis.end(), s);
      if (it == basis.end() || *it != s) throw InvariantViolation("cycle term is not a face of the complex");
      col.emplace_back(static_cast<std::size_t>(it - basis.begin()), coef);
    }
    boundaries.push_back(std::move(col));
  }
  return sparse_rank(std::move(boundaries)) - base;
}

SimplicialComplex order_complex(const std::vector<std::vector<bool>>& less, const std::vector<bool>& include,
                                std::size_t budget) {
  const std::size_t n = less.size();
  auto in = [&](std::size_t i) { return include.empty() || include[i]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (less[i][j]) throw InvariantViolation("poset indices are not a linear extension");

  // Maximal chains by depth-first extension; closure gives every chain.
  std::vector<Simplex> maximal;
  std::size_t produced = 0;
  Simplex chain;
  auto extend = [&](auto&& self, std::size_t last) -> void {
    bool extended = false;
    for (std::size_t j = last + 1; j < n; ++j) {
      if (!in(j) || !less[last][j]) continue;
      extended = true;
      chain.push_back(j);
      self(self, j);
      chain.pop_back();
    }
    if (!extended) {
      if (++produced > budget) budget_exceeded(budget);
      maximal.push_back(chain);
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!in(i)) continue;
    bool has_lower = false;
    for (std::size_t j = 0; j < i && !has_lower; ++j) has_lower = in(j) && less[j][i];
    if (has_lower) continue;
    chain = {i};
    extend(extend, i);
  }
  return SimplicialComplex::from_facets(n, std::move(maximal), budget);
}

}  // namespace ncph
