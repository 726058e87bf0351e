#include <algorithm>

#include "ncph/error.hpp"
#include "ncph/session.hpp"

namespace ncph {

namespace {

// Root positions are written 1-based so that vertex i is rho_i.
Json simplex_json(const Simplex& s) {
  Json out = Json::array();
  for (auto p : s) out.push_back(p + 1);
  return out;
}

Json header(Session& s, const std::string& target) {
  const auto& sys = s.system();
  Json config = s.config().to_json();
  config.erase("outputDir");
  config.erase("cache");
  return {{"format", "ncph-export"},
          {"version", 1},
          {"target", target},
          {"group", sys.input_diagram().label},
          {"config", config},
          {"field", field_json(sys.field())},
          {"basis", "simple-roots"},
          {"gram", matrix_json(sys.gram())}};
}

Json export_ncp(Session& s) {
  const auto& ncp = s.ncp();
  const auto& group = s.group();
  Json elements = Json::array();
  for (std::size_t a = 0; a < ncp.size(); ++a)
    elements.push_back({{"id", a}, {"length", ncp.length[a]}, {"matrix", matrix_json(group.matrix(ncp.elements[a]))}});
  Json hasse = Json::array();
  for (auto [lo, hi] : ncp.hasse) hasse.push_back({lo, hi});
  return {{"elements", elements}, {"hasse", hasse}, {"bottom", ncp.bottom}, {"top", ncp.top}};
}

Json export_xc(Session& s) {
  const auto& xc = s.xc();
  Json vertices = Json::array();
  for (const auto& r : s.ordered().roots) vertices.push_back(vector_json(r));
  Json edges = Json::array();
  if (xc.dimension() >= 1)
    for (const auto& e : xc.faces(1)) edges.push_back(simplex_json(e));
  Json facets = Json::array();
  for (const auto& f : xc.facets()) facets.push_back(simplex_json(f));
  return {{"vertices", vertices}, {"edges", edges}, {"facets", facets}};
}

Json export_lattice(Session& s) {
  const auto& lat = s.lattice();
  const auto& t = s.reflections();
  const auto& ordered = s.ordered();
  // Hyperplanes are listed in rho-order; flats refer to those positions.
  std::vector<std::size_t> position(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) position[j] = ordered.position_of[j];
  Json hyperplanes = Json::array();
  for (const auto& r : ordered.roots) hyperplanes.push_back(vector_json(r));
  Json flats = Json::array();
  for (std::size_t a = 0; a < lat.size(); ++a) {
    Simplex members;
    for (auto j : lat.flats[a]) members.push_back(position[j]);
    std::sort(members.begin(), members.end());
    flats.push_back({{"id", a}, {"codimension", lat.codimension[a]}, {"hyperplanes", simplex_json(members)}});
  }
  Json covers = Json::array();
  for (std::size_t a = 0; a < lat.size(); ++a)
    for (std::size_t b = 0; b < lat.size(); ++b)
      if (lat.leq[a][b] && lat.codimension[b] == lat.codimension[a] + 1) covers.push_back({a, b});
  auto proper = order_complex(lat.strict(), lat.proper_mask(), s.config().simplex_budget);
  return {{"hyperplanes", hyperplanes},
          {"flats", flats},
          {"covers", covers},
          {"properPartReducedBetti", homology_ranks(proper, s.config().simplex_budget).values}};
}

Json export_embed(Session& s) {
  const auto& rep = s.embedding();
  const auto& chambers = s.chambers();
  const auto& gv = s.generic();
  Json facets = Json::array();
  for (const auto& f : rep.facets) facets.push_back(simplex_json(f));
  Json chamber_list = Json::array();
  for (std::size_t i = 0; i < chambers.size(); ++i)
    chamber_list.push_back({{"id", i}, {"element", chambers[i].w}, {"boundedSlice", chambers[i].bounded_slice}});
  Json mu_vertices = Json::array();
  for (const auto& x : s.mu_complex().vertices) mu_vertices.push_back(vector_json(x));
  return {{"facets", facets},
          {"chambers", chamber_list},
          {"incidenceRows", rep.bounded},
          {"incidence", rep.matrix},
          {"rank", rep.matrix_rank},
          {"injective", rep.injective},
          {"disjoint", rep.disjoint},
          {"nonempty", rep.nonempty},
          {"insideBoundedSlice", rep.inside_bounded},
          {"coveredBoundedChambers", rep.covered},
          {"mu", matrix_json(s.mu_complex().mu)},
          {"muVertices", mu_vertices},
          {"lambda", gv.lambda.get_str()},
          {"v", vector_json(gv.v)}};
}

}  // namespace

const std::vector<std::string>& export_targets() {
  static const std::vector<std::string> targets{"ncp", "xc", "lattice", "embed"};
  return targets;
}

Json export_json(Session& session, const std::string& target) {
  Json body;
  if (target == "ncp") body = export_ncp(session);
  else if (target == "xc") body = export_xc(session);
  else if (target == "lattice") body = export_lattice(session);
  else if (target == "embed") body = export_embed(session);
  else throw Error("unknown export target '" + target + "'");
  Json out = header(session, target);
  out.update(body);
  return out;
}

}  // namespace ncph
