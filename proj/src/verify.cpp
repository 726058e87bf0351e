#include <functional>
#include <map>

#include "ncph/error.hpp"
#include "ncph/session.hpp"

namespace ncph {

namespace {

using Suite = std::function<void(Session&, SuiteResult&)>;

void coxeter_suite(Session& s, SuiteResult& out) {
  const auto& sys = s.system();
  const auto& group = s.group();
  const auto& t = s.reflections();
  auto& r = out.report;
  const int n = sys.rank();
  const int h = sys.coxeter_number();

  ++r.checked;
  ElementId power = group.identity();
  for (int k = 1; k <= h; ++k) {
    power = group.multiply(power, group.coxeter_element());
    if (k < h && power == group.identity()) r.fail("c has order below h");
  }
  if (power != group.identity()) r.fail("c^h != e");
  ++r.checked;
  if (2 * t.size() != static_cast<std::size_t>(n * h)) r.fail("|T| != nh/2");
  for (std::size_t i = 0; i < group.size(); ++i) {
    ++r.checked;
    if (!sys.is_orthogonal(group.matrix(static_cast<ElementId>(i))))
      r.fail("element " + std::to_string(i) + " is not orthogonal");
  }
  auto words = reflection_word_lengths(group, t);
  for (std::size_t i = 0; i < group.size(); ++i) {
    ++r.checked;
    if (words[i] != group.reflection_length(static_cast<ElementId>(i)))
      r.fail("element " + std::to_string(i) + ": codimension length differs from T-word length");
  }
  out.details = {{"n", n}, {"h", h}, {"order", group.size()}, {"reflections", t.size()}};
}

void rootorder_suite(Session& s, SuiteResult& out) {
  // ordered_roots and last_n_roots throw on any violated invariant.
  const auto& ordered = s.ordered();
  const auto& sys = s.system();
  auto& r = out.report;
  for (std::size_t p = 0; p < ordered.size(); ++p) {
    ++r.checked;
    if (sys.inner(ordered.roots[p], sys.chamber_interior()).sign() <= 0)
      r.fail("rho_" + std::to_string(p + 1) + " is not positive");
  }
  ++r.checked;
  if (ordered.roots.front() != sys.simple_root(0)) r.fail("rho_1 != alpha_1");
  out.details = {{"roots", ordered.size()}, {"tauStart", ordered.size() - ordered.tau.size() + 1}};
}

void lemma48_suite(Session& s, SuiteResult& out) {
  out.report = check_lemma48(s.group(), s.ordered(), s.xc());
  out.details = {{"facets", s.xc().facets().size()}, {"faces", s.xc().face_count()}};
}

void poset_map_suite(Session& s, SuiteResult& out) {
  out.report = check_poset_map(s.group(), s.ordered(), s.xc(), s.ncp());
}

void fibers_suite(Session& s, SuiteResult& out) {
  out.report = fiber_check(s.group(), s.ordered(), s.xc(), s.ncp());
  out.details = {{"properElements", s.ncp().size() - 2}};
}

void betti_suite(Session& s, SuiteResult& out) {
  const auto& ncp = s.ncp();
  const int n = s.system().rank();
  auto proper = order_complex(ncp.strict(), ncp.proper_mask(), s.config().simplex_budget);
  auto betti = homology_ranks(proper, s.config().simplex_budget);
  const auto facets = static_cast<long>(s.xc().facets().size());
  auto& r = out.report;
  for (int d = -1; d <= std::max(proper.dimension(), n - 2); ++d) {
    ++r.checked;
    long expected = d == n - 2 ? facets : 0;
    if (betti.at(d) != expected)
      r.fail("reduced beta_" + std::to_string(d) + " = " + std::to_string(betti.at(d)) + ", expected " +
             std::to_string(expected));
  }
  out.details = {{"reducedBetti", betti.values}, {"facets", facets}, {"ncpSize", ncp.size()}};
}

void basis_suite(Session& s, SuiteResult& out) {
  const auto& ncp = s.ncp();
  const int n = s.system().rank();
  auto proper = order_complex(ncp.strict(), ncp.proper_mask(), s.config().simplex_budget);
  auto cycles = ncp_basis_cycles(s.group(), s.ordered(), s.xc(), ncp);
  auto& r = out.report;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    ++r.checked;
    if (cycles[i].is_zero()) r.fail("cycle " + std::to_string(i) + " is zero");
    if (!cycles[i].boundary().is_zero()) r.fail("cycle " + std::to_string(i) + " has nonzero boundary");
  }
  ++r.checked;
  auto rank = cycle_rank(cycles, proper, n - 2);
  if (rank != s.xc().facets().size()) r.fail("cycle rank " + std::to_string(rank) + " below the facet count");
  out.details = {{"cycles", cycles.size()}, {"rank", rank}};
}

void mobius_suite(Session& s, SuiteResult& out) {
  const long mu = mobius_number(s.ncp());
  const auto facets = static_cast<long>(s.xc().facets().size());
  const long expected = s.system().rank() % 2 ? -facets : facets;
  ++out.report.checked;
  if (mu != expected) out.report.fail("mobius " + std::to_string(mu) + " != " + std::to_string(expected));
  out.details = {{"mobius", mu}, {"facets", facets}};
}

void prop41_suite(Session& s, SuiteResult& out) {
  const auto& gv = s.generic();
  out.report = check_generic(s.system(), gv, s.rays());
  ++out.report.checked;
  if (gv.lambda <= 0) out.report.fail("lambda' is not positive");
  out.report.merge(check_chambers(s.group(), s.chambers(), s.rays()));
  out.details = {{"rays", s.rays().size()},
                 {"lambda", gv.lambda.get_str()},
                 {"v", vector_json(gv.v)},
                 {"boundedSlice", bounded_slice_count(s.chambers())}};
}

void prop42_suite(Session& s, SuiteResult& out) {
  out.report = check_mu_positive(s.system(), s.mu_complex(), s.generic().v);
}

void mu_dots_suite(Session& s, SuiteResult& out) {
  out.report = check_mu_dots(s.system(), s.ordered(), s.mu_complex());
}

void embed_suite(Session& s, SuiteResult& out) {
  const auto& rep = s.embedding();
  auto& r = out.report;
  auto verdict = [&](bool ok, const char* what) {
    ++r.checked;
    if (!ok) r.fail(what);
  };
  verdict(rep.disjoint, "facet chamber sets are not disjoint");
  verdict(rep.nonempty, "a facet contains no chamber");
  verdict(rep.inside_bounded, "a facet contains a chamber that is not bounded-slice");
  verdict(rep.injective, "incidence matrix rank is below the facet count");
  Json multi = Json::array();
  for (std::size_t f = 0; f < rep.facets.size(); ++f)
    if (rep.incidence[f].size() > 1) {
      Json facet = Json::array();
      for (auto p : rep.facets[f]) facet.push_back(p + 1);
      multi.push_back({{"facet", facet}, {"chambers", rep.incidence[f].size()}});
    }
  out.details = {{"facets", rep.facets.size()}, {"boundedSlice", rep.bounded.size()}, {"rank", rep.matrix_rank},
                 {"covered", rep.covered},      {"multiChamberFacets", multi}};
}

void bw_suite(Session& s, SuiteResult& out) {
  const auto& lat = s.lattice();
  const int n = s.system().rank();
  auto proper = order_complex(lat.strict(), lat.proper_mask(), s.config().simplex_budget);
  auto betti = homology_ranks(proper, s.config().simplex_budget);
  const auto bounded = static_cast<long>(bounded_slice_count(s.chambers()));
  auto& r = out.report;
  for (int d = -1; d <= std::max(proper.dimension(), n - 2); ++d) {
    ++r.checked;
    long expected = d == n - 2 ? bounded : 0;
    if (betti.at(d) != expected)
      r.fail("lattice reduced beta_" + std::to_string(d) + " = " + std::to_string(betti.at(d)) + ", expected " +
             std::to_string(expected));
  }
  out.details = {{"flats", lat.size()}, {"reducedBetti", betti.values}, {"boundedSlice", bounded}};
}

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> all{
      {"coxeter", coxeter_suite}, {"rootorder", rootorder_suite}, {"lemma48", lemma48_suite},
      {"poset-map", poset_map_suite}, {"fibers", fibers_suite},    {"betti", betti_suite},
      {"basis", basis_suite},     {"mobius", mobius_suite},        {"prop41", prop41_suite},
      {"prop42", prop42_suite},   {"mu-dots", mu_dots_suite},      {"embed", embed_suite},
      {"bw", bw_suite}};
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(Session& session, const std::string& name) {
  for (const auto& [suite_name, fn] : suites()) {
    if (suite_name != name) continue;
    SuiteResult result;
    result.name = name;
    try {
      fn(session, result);
    } catch (const InvariantViolation& e) {
      result.report.fail(std::string("invariant violated while building: ") + e.what());
    }
    return result;
  }
  throw Error("unknown suite '" + name + "'");
}

Json verify_json(const std::vector<SuiteResult>& results) {
  Json suites_out = Json::array();
  bool passed = true;
  for (const auto& r : results) {
    passed = passed && r.report.ok();
    suites_out.push_back({{"name", r.name},
                          {"passed", r.report.ok()},
                          {"checked", r.report.checked},
                          {"failures", r.report.failures},
                          {"details", r.details}});
  }
  return {{"passed", passed}, {"suites", suites_out}};
}

}  // namespace ncph
