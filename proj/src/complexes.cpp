#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ncph/complexes.hpp"
#include "ncph/error.hpp"

namespace ncph {

namespace {

std::string simplex_string(const Simplex& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i] + 1;
  os << '}';
  return os.str();
}

// r(tau_1) ... r(tau_k) c
ElementId lemma48_product(const CoxeterGroup& group, const OrderedRoots& ordered, const Simplex& s) {
  ElementId acc = group.identity();
  for (auto p : s) acc = group.multiply(acc, ordered.reflections[p]);
  return group.multiply(acc, group.coxeter_element());
}

std::vector<Simplex> all_simplices(const SimplicialComplex& complex, int max_dim) {
  std::vector<Simplex> out;
  for (int d = 0; d <= std::min(max_dim, complex.dimension()); ++d)
    out.insert(out.end(), complex.faces(d).begin(), complex.faces(d).end());
  return out;
}

void bron_kerbosch(const std::vector<std::vector<bool>>& adj, Simplex& r, std::vector<std::size_t> p,
                   std::vector<std::size_t> x, std::vector<Simplex>& out) {
  if (p.empty() && x.empty()) {
    Simplex clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  // Pivot with the most neighbours in p.
  std::size_t pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x})
    for (auto u : *set) {
      std::size_t c = 0;
      for (auto v : p) c += adj[u][v];
      if (c >= best) best = c, pivot = u;
    }
  std::vector<std::size_t> candidates;
  for (auto v : p)
    if (!adj[pivot][v]) candidates.push_back(v);
  for (auto v : candidates) {
    std::vector<std::size_t> p2, x2;
    for (auto u : p)
      if (adj[v][u]) p2.push_back(u);
    for (auto u : x)
      if (adj[v][u]) x2.push_back(u);
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::optional<std::size_t> NCPLattice::find(ElementId id) const {
  auto it = index.find(id);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<bool>> NCPLattice::strict() const {
  auto out = leq;
  for (std::size_t i = 0; i < out.size(); ++i) out[i][i] = false;
  return out;
}

std::vector<bool> NCPLattice::proper_mask() const {
  std::vector<bool> mask(size(), true);
  if (!mask.empty()) {
    mask[bottom] = false;
    mask[top] = false;
  }
  return mask;
}

NCPLattice build_ncp(const CoxeterGroup& group) {
  const ElementId c = group.coxeter_element();
  std::vector<std::pair<std::pair<int, std::string>, ElementId>> keyed;
  for (std::size_t i = 0; i < group.size(); ++i) {
    auto id = static_cast<ElementId>(i);
    if (group.precedes(id, c)) keyed.push_back({{group.reflection_length(id), group.matrix(id).key()}, id});
  }
  std::sort(keyed.begin(), keyed.end());

  NCPLattice ncp;
  for (const auto& [key, id] : keyed) {
    ncp.index[id] = ncp.elements.size();
    ncp.elements.push_back(id);
    ncp.length.push_back(key.first);
  }
  const std::size_t m = ncp.size();
  ncp.leq.assign(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) ncp.leq[a][b] = group.precedes(ncp.elements[a], ncp.elements[b]);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (ncp.leq[a][b] && ncp.length[b] == ncp.length[a] + 1) ncp.hasse.emplace_back(a, b);
  ncp.bottom = 0;
  ncp.top = m - 1;
  if (ncp.elements[ncp.bottom] != group.identity() || ncp.elements[ncp.top] != c)
    throw InvariantViolation("interval [e, c] is not bounded by e and c");
  return ncp;
}

SimplicialComplex build_xc(const CoxeterGroup& group, const OrderedRoots& ordered, std::size_t budget) {
  const std::size_t count = ordered.size();
  const int n = group.system().rank();
  const ElementId c = group.coxeter_element();
  std::vector<std::vector<bool>> adj(count, std::vector<bool>(count, false));
  for (std::size_t p = 0; p < count; ++p)
    for (std::size_t q = p + 1; q < count; ++q) {
      ElementId prod = group.multiply(ordered.reflections[q], ordered.reflections[p]);
      adj[p][q] = adj[q][p] = group.reflection_length(prod) == 2 && group.precedes(prod, c);
    }

  std::vector<Simplex> cliques;
  std::vector<std::size_t> all(count);
  std::iota(all.begin(), all.end(), 0);
  Simplex r;
  bron_kerbosch(adj, r, all, {}, cliques);
  for (const auto& q : cliques)
    if (q.size() != static_cast<std::size_t>(n))
      throw InvariantViolation("X(c) is not pure: maximal simplex " + simplex_string(q));

  auto xc = SimplicialComplex::from_facets(count, std::move(cliques), budget);
  auto report = check_lemma48(group, ordered, xc);
  if (!report.ok()) throw InvariantViolation("length identity fails on X(c): " + report.failures.front());
  return xc;
}

SimplicialComplex build_xw(const SimplicialComplex& xc, const CoxeterGroup& group, const OrderedRoots& ordered,
                           ElementId w) {
  if (!group.precedes(w, group.coxeter_element())) throw InvariantViolation("X(w) needs w to precede c");
  std::vector<bool> keep(ordered.size());
  for (std::size_t p = 0; p < ordered.size(); ++p) keep[p] = group.precedes(ordered.reflections[p], w);
  return xc.induced(keep);
}

ElementId f_map(const CoxeterGroup& group, const OrderedRoots& ordered, const Simplex& simplex) {
  ElementId acc = group.identity();
  for (auto p : simplex) acc = group.multiply(ordered.reflections[p], acc);
  return acc;
}

CheckReport check_lemma48(const CoxeterGroup& group, const OrderedRoots& ordered, const SimplicialComplex& xc) {
  CheckReport report;
  const int n = group.system().rank();
  for (const auto& s : all_simplices(xc, xc.dimension())) {
    ++report.checked;
    int len = group.reflection_length(lemma48_product(group, ordered, s));
    if (len != n - static_cast<int>(s.size()))
      report.fail(simplex_string(s) + ": length " + std::to_string(len));
  }
  for (const auto& f : xc.facets()) {
    ++report.checked;
    if (f.size() != static_cast<std::size_t>(n)) report.fail("facet " + simplex_string(f) + " has wrong size");
  }
  return report;
}

CheckReport check_poset_map(const CoxeterGroup& group, const OrderedRoots& ordered, const SimplicialComplex& xc,
                            const NCPLattice& ncp) {
  CheckReport report;
  const ElementId c = group.coxeter_element();
  for (const auto& s : all_simplices(xc, xc.dimension())) {
    ++report.checked;
    ElementId fs = f_map(group, ordered, s);
    if (!ncp.find(fs)) report.fail(simplex_string(s) + ": f does not precede c");
    if (group.reflection_length(fs) != static_cast<int>(s.size()))
      report.fail(simplex_string(s) + ": l(f) != |sigma|");
    const std::uint64_t subsets = std::uint64_t{1} << s.size();
    for (std::uint64_t mask = 1; mask + 1 < subsets; ++mask) {
      Simplex theta;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask >> i & 1U) theta.push_back(s[i]);
      ElementId ft = f_map(group, ordered, theta);
      if (ft == fs || !group.precedes(ft, fs))
        report.fail(simplex_string(theta) + " -> " + simplex_string(s) + ": not strictly below");
    }
  }
  for (const auto& f : xc.facets()) {
    ++report.checked;
    if (f_map(group, ordered, f) != c) report.fail("facet " + simplex_string(f) + " does not map to c");
  }
  return report;
}

CheckReport fiber_check(const CoxeterGroup& group, const OrderedRoots& ordered, const SimplicialComplex& xc,
                        const NCPLattice& ncp) {
  CheckReport report;
  const int n = group.system().rank();
  auto skeleton = all_simplices(xc, n - 2);
  std::vector<ElementId> images;
  images.reserve(skeleton.size());
  for (const auto& s : skeleton) images.push_back(f_map(group, ordered, s));
  auto proper = ncp.proper_mask();
  for (std::size_t a = 0; a < ncp.size(); ++a) {
    if (!proper[a]) continue;
    ++report.checked;
    const ElementId w = ncp.elements[a];
    std::set<Simplex> lhs;
    for (std::size_t i = 0; i < skeleton.size(); ++i)
      if (group.precedes(images[i], w)) lhs.insert(skeleton[i]);
    auto xw = build_xw(xc, group, ordered, w);
    std::set<Simplex> rhs;
    for (int d = 0; d <= xw.dimension(); ++d) rhs.insert(xw.faces(d).begin(), xw.faces(d).end());
    if (lhs != rhs) {
      std::ostringstream os;
      os << "lattice element " << a << ": " << lhs.size() << " simplices below vs " << rhs.size() << " in X(w)";
      report.fail(os.str());
    }
  }
  return report;
}

std::vector<Chain> ncp_basis_cycles(const CoxeterGroup& group, const OrderedRoots& ordered,
                                    const SimplicialComplex& xc, const NCPLattice& ncp) {
  std::vector<Chain> cycles;
  auto proper = ncp.proper_mask();
  for (const auto& facet : xc.facets()) {
    const std::size_t k = facet.size();
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Chain z;
    do {
      // The last prefix is the facet itself, which is not a proper face.
      Simplex chain;
      Simplex prefix;
      for (std::size_t i = 0; i + 1 < k; ++i) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), facet[perm[i]]), facet[perm[i]]);
        auto at = ncp.find(f_map(group, ordered, prefix));
        if (!at || !proper[*at]) throw InvariantViolation("proper face of a facet leaves the proper part");
        chain.push_back(*at);
      }
      for (std::size_t i = 1; i < chain.size(); ++i)
        if (!(ncp.length[chain[i - 1]] < ncp.length[chain[i]]))
          throw InvariantViolation("face chain of facet " + simplex_string(facet) + " degenerates under f");
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
      std::sort(chain.begin(), chain.end());
      z.add(chain, Rational(inversions % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    cycles.push_back(std::move(z));
  }
  return cycles;
}

long mobius_number(const std::vector<std::vector<bool>>& leq) {
  const std::size_t m = leq.size();
  if (m == 0) throw InvariantViolation("empty poset has no Moebius number");
  std::vector<long> mu(m, 0);
  mu[0] = 1;
  for (std::size_t y = 1; y < m; ++y) {
    long sum = 0;
    for (std::size_t x = 0; x < y; ++x)
      if (leq[x][y]) sum += mu[x];
    mu[y] = -sum;
  }
  return mu[m - 1];
}

long mobius_number(const NCPLattice& ncp) { return mobius_number(ncp.leq); }

}  // namespace ncph
