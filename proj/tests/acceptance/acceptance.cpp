// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "../support/homology_oracle.hpp"
#include "ncph/error.hpp"
#include "ncph/session.hpp"

using namespace ncph;

namespace {

struct Group {
  std::string type;
  int rank;
};

// A2, A3, B2, B3, H3, I2(3..8).
std::vector<Group> main_list() {
  std::vector<Group> out{{"A", 2}, {"A", 3}, {"B", 2}, {"B", 3}, {"H", 3}};
  for (int m = 3; m <= 8; ++m) out.push_back({"I" + std::to_string(m), 2});
  return out;
}

// Every rank <= 3 group exercised here, including A1 and the C3 numbering.
std::vector<Group> small_list() {
  auto out = main_list();
  out.insert(out.begin(), {"A", 1});
  out.push_back({"C", 3});
  return out;
}

std::map<std::string, std::unique_ptr<Session>> sessions;

Session& session(const Group& g) {
  std::string key = g.type + std::to_string(g.rank);
  auto it = sessions.find(key);
  if (it != sessions.end()) return *it->second;
  RunConfig config;
  config.type = g.type;
  config.rank = g.rank;
  config.cache = false;
  return *sessions.emplace(key, std::make_unique<Session>(config)).first->second;
}

std::string name(Session& s) { return s.system().input_diagram().label; }

struct Verdict {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

std::vector<std::vector<std::size_t>> facets_of(const SimplicialComplex& k) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : k.facets()) out.emplace_back(f.begin(), f.end());
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict criterion1() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  RunConfig config;
  config.type = "B";
  config.rank = 3;
  config.cache = false;
  Session s(config);
  auto bounded = bounded_slice_count(s.chambers());
  auto facets = s.mu_complex().facets.size();
  double secs = seconds_since(t0);
  if (bounded != 15) v.fail("bounded-slice chambers " + std::to_string(bounded));
  if (facets != 10) v.fail("facets " + std::to_string(facets));
  if (secs >= 30) v.fail("took " + std::to_string(secs) + " s");
  v.note += (v.note.empty() ? "" : "; ") + std::string("15 chambers, 10 facets in ") + std::to_string(secs) + " s";
  return v;
}

Verdict criterion2() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& g : main_list()) {
    auto& s = session(g);
    const auto& ncp = s.ncp();
    const int n = s.system().rank();
    auto proper = order_complex(ncp.strict(), ncp.proper_mask());
    auto betti = homology_ranks(proper);
    const auto facets = static_cast<long>(s.xc().facets().size());
    for (int d = -1; d <= std::max(proper.dimension(), n - 2); ++d)
      if (betti.at(d) != (d == n - 2 ? facets : 0))
        v.fail(name(s) + ": reduced beta_" + std::to_string(d) + " = " + std::to_string(betti.at(d)));
  }
  double secs = seconds_since(t0);
  if (secs >= 120) v.fail("took " + std::to_string(secs) + " s");
  return v;
}

Verdict criterion3() {
  Verdict v;
  for (const auto& g : main_list()) {
    auto& s = session(g);
    long facets = static_cast<long>(s.xc().facets().size());
    long expected = s.system().rank() % 2 ? -facets : facets;
    long mu = mobius_number(s.ncp());
    if (mu != expected) v.fail(name(s) + ": mobius " + std::to_string(mu));
  }
  return v;
}

Verdict criterion4() {
  Verdict v;
  for (const auto& g : main_list()) {
    auto& s = session(g);
    const auto& sys = s.system();
    const auto& gv = s.generic();
    Scalar l2 = Scalar(sys.field(), gv.lambda * gv.lambda);
    for (const auto& r : s.rays()) {
      Scalar rv = sys.inner(r, gv.v);
      if (rv.sign() == 0) v.fail(name(s) + ": ray orthogonal to v");
      if ((rv * rv - l2 * sys.inner(r, r)).sign() < 0) v.fail(name(s) + ": ray below the lambda' bound");
    }
  }
  return v;
}

Verdict criterion5() {
  Verdict v;
  for (const auto& g : main_list()) {
    auto& s = session(g);
    const auto& sys = s.system();
    const auto& ordered = s.ordered();
    const auto& mc = s.mu_complex();
    const std::size_t N = ordered.size();
    const std::size_t n = static_cast<std::size_t>(sys.rank());
    for (std::size_t i = 0; i < N; ++i) {
      Vector mu_i = mc.mu * ordered.roots[i];
      if (sys.inner(mu_i, s.generic().v).sign() <= 0) v.fail(name(s) + ": mu(rho_" + std::to_string(i + 1) + ").v <= 0");
      for (std::size_t j = i; j < N; ++j)
        if (sys.inner(mu_i, ordered.roots[j]).sign() < 0)
          v.fail(name(s) + ": mu(rho_" + std::to_string(i + 1) + ").rho_" + std::to_string(j + 1) + " < 0");
      for (std::size_t t = 1; t < n && i + t < N; ++t)
        if (sys.inner(mc.mu * ordered.roots[i + t], ordered.roots[i]).sign() != 0)
          v.fail(name(s) + ": mu(rho_" + std::to_string(i + t + 1) + ").rho_" + std::to_string(i + 1) + " != 0");
    }
  }
  return v;
}

Verdict criterion6() {
  Verdict v;
  for (const auto& g : small_list()) {
    auto& s = session(g);
    auto poset = check_poset_map(s.group(), s.ordered(), s.xc(), s.ncp());
    auto fibers = fiber_check(s.group(), s.ordered(), s.xc(), s.ncp());
    if (!poset.ok()) v.fail(name(s) + ": " + poset.failures.front());
    if (!fibers.ok()) v.fail(name(s) + ": " + fibers.failures.front());
  }
  return v;
}

Verdict criterion7() {
  Verdict v;
  const std::vector<std::pair<Group, long>> cases{{{"A", 2}, 2}, {{"A", 3}, 6}, {{"B", 3}, 15}};
  for (const auto& [g, expected] : cases) {
    auto& s = session(g);
    const auto& lat = s.lattice();
    const int n = s.system().rank();
    auto proper = order_complex(lat.strict(), lat.proper_mask());
    long exact = homology_ranks(proper).at(n - 2);
    long bounded = static_cast<long>(bounded_slice_count(s.chambers()));
    if (exact != bounded) v.fail(name(s) + ": beta " + std::to_string(exact) + " vs " + std::to_string(bounded));
    if (exact != expected) v.fail(name(s) + ": beta " + std::to_string(exact));
    if (g.type == "A") {
      auto oracle = oracle::reduced_betti(facets_of(proper));
      long o = static_cast<std::size_t>(n - 1) < oracle.size() ? oracle[static_cast<std::size_t>(n - 1)] : 0;
      if (o != expected) v.fail(name(s) + ": oracle beta " + std::to_string(o));
    }
  }
  return v;
}

Verdict criterion8() {
  Verdict v;
  for (const auto& g : small_list()) {
    auto& s = session(g);
    const auto& rep = s.embedding();
    if (!rep.disjoint) v.fail(name(s) + ": supports overlap");
    if (!rep.nonempty) v.fail(name(s) + ": empty column");
    if (rep.matrix_rank != s.xc().facets().size()) v.fail(name(s) + ": rank below facet count");
  }
  // The labelled facet on mu(rho_2), mu(rho_4), mu(rho_8), read in the C3 numbering.
  auto& c3 = session({"C", 3});
  const auto& rep = c3.embedding();
  bool found = false;
  for (std::size_t f = 0; f < rep.facets.size(); ++f) {
    if (rep.facets[f] != Simplex{1, 3, 7}) continue;
    found = true;
    if (rep.incidence[f].size() != 2) v.fail("facet {2,4,8} has weight " + std::to_string(rep.incidence[f].size()));
  }
  if (!found) v.fail("facet {2,4,8} missing");
  return v;
}

Verdict criterion9() {
  Verdict v;
  for (const auto& g : small_list()) {
    auto& s = session(g);
    const auto& ncp = s.ncp();
    const int n = s.system().rank();
    auto cycles = ncp_basis_cycles(s.group(), s.ordered(), s.xc(), ncp);
    for (const auto& c : cycles)
      if (!c.boundary().is_zero()) v.fail(name(s) + ": cycle with nonzero boundary");
    auto proper = order_complex(ncp.strict(), ncp.proper_mask());
    if (cycle_rank(cycles, proper, n - 2) != s.xc().facets().size()) v.fail(name(s) + ": cycle rank below facet count");
  }
  return v;
}

// Breadth-first search over T-words with matrices keyed directly, without the
// group's multiplication table.
Verdict criterion10() {
  Verdict v;
  for (const auto& g : small_list()) {
    auto& s = session(g);
    const auto& group = s.group();
    const auto& t = s.reflections();
    const int n = s.system().rank();
    Matrix e = Matrix::identity(static_cast<std::size_t>(n), s.system().field());
    std::unordered_map<std::string, int> depth{{e.key(), 0}};
    std::deque<Matrix> queue{e};
    while (!queue.empty()) {
      Matrix w = queue.front();
      queue.pop_front();
      int d = depth.at(w.key());
      for (auto r : t.reflections) {
        Matrix x = w * group.matrix(r);
        if (depth.emplace(x.key(), d + 1).second) queue.push_back(x);
      }
    }
    if (depth.size() != group.size()) v.fail(name(s) + ": T generates " + std::to_string(depth.size()) + " elements");
    for (std::size_t i = 0; i < group.size(); ++i) {
      auto id = static_cast<ElementId>(i);
      auto it = depth.find(group.matrix(id).key());
      if (it == depth.end() || it->second != group.reflection_length(id))
        v.fail(name(s) + ": element " + std::to_string(i) + " length mismatch");
    }
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"B3 end-to-end: 15 bounded-slice chambers, 10 facets", criterion1},
      {"reduced Betti of the NCP proper part = facet count", criterion2},
      {"Mobius number = (-1)^n facet count", criterion3},
      {"lambda' certificate on every ray", criterion4},
      {"mu dot-product properties and mu(rho_i).v > 0", criterion5},
      {"poset map and fiber identity", criterion6},
      {"intersection lattice homology = bounded-slice count", criterion7},
      {"embedding incidence matrix", criterion8},
      {"explicit NCP homology basis", criterion9},
      {"reflection length = T-word length", criterion10}};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    failed += !v.ok;
    std::printf("%s %zu: %s%s%s\n", v.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                v.note.empty() ? "" : " | ", v.note.c_str());
  }
  return failed ? 1 : 0;
}
