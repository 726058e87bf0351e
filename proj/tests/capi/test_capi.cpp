#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <string>

#include "ncph/ncph.h"

namespace {

using nlohmann::json;

struct Owned {
  char* p = nullptr;
  ~Owned() { ncph_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Handle {
  ncph_session* p = nullptr;
  ~Handle() { ncph_session_destroy(p); }
};

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("ncph_capi_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

json config(const std::string& type, int rank, bool cache = false, const std::string& out = "") {
  json c{{"type", type}, {"rank", rank}, {"cache", cache}};
  if (!out.empty()) c["outputDir"] = out;
  return c;
}

ncph_status open(const json& c, Handle& h) { return ncph_session_create(c.dump().c_str(), &h.p); }

json info(const json& c) {
  Handle h;
  REQUIRE(open(c, h) == NCPH_OK);
  Owned out;
  REQUIRE(ncph_info(h.p, &out.p) == NCPH_OK);
  return json::parse(out.str());
}

std::string exported(const json& c, const char* target) {
  Handle h;
  REQUIRE(open(c, h) == NCPH_OK);
  Owned out;
  REQUIRE(ncph_export(h.p, target, &out.p) == NCPH_OK);
  return out.str();
}

}  // namespace

TEST_CASE("info values") {
  auto a1 = info(config("A", 1));
  CHECK(a1["n"] == 1);
  CHECK(a1["h"] == 2);
  CHECK(a1["reflections"] == 1);
  auto a2 = info(config("A", 2));
  CHECK(a2["n"] == 2);
  CHECK(a2["h"] == 3);
  CHECK(a2["reflections"] == 3);
  CHECK(a2["s"] == 1);
  auto b3 = info(config("B", 3));
  CHECK(b3["n"] == 3);
  CHECK(b3["h"] == 6);
  CHECK(b3["order"] == 48);
  CHECK(b3["reflections"] == 9);
  CHECK(b3["rho"].size() == 9);
  auto i5 = info(config("I2(5)", 2));
  CHECK(i5["h"] == 5);
  CHECK(i5["order"] == 10);
}

TEST_CASE("exports match the frozen counts") {
  auto ncp = json::parse(exported(config("A", 2), "ncp"));
  CHECK(ncp["elements"].size() == 5);
  CHECK(ncp["hasse"].size() == 6);
  CHECK(ncp["field"].is_object());

  auto xc = json::parse(exported(config("A", 1), "xc"));
  CHECK(xc["vertices"].size() == 1);
  CHECK(xc["edges"].empty());
  CHECK(xc["facets"] == json::array({json::array({1})}));

  auto embed = json::parse(exported(config("B", 3), "embed"));
  CHECK(embed["incidence"].size() == 15);
  for (const auto& row : embed["incidence"]) CHECK(row.size() == 10);
  CHECK(embed["rank"] == 10);
  CHECK(embed["injective"] == true);
  std::size_t bounded = 0;
  for (const auto& ch : embed["chambers"]) bounded += ch["boundedSlice"].get<bool>();
  CHECK(bounded == 15);

  auto lattice = json::parse(exported(config("A", 3), "lattice"));
  CHECK(lattice["hyperplanes"].size() == 6);
  CHECK(lattice["properPartReducedBetti"].back() == 6);
}

TEST_CASE("exports and SVG are byte-identical across sessions") {
  for (const char* target : {"ncp", "xc", "lattice", "embed"})
    CHECK(exported(config("B", 3), target) == exported(config("B", 3), target));
  auto svg = [] {
    Handle h;
    REQUIRE(open(config("B", 3), h) == NCPH_OK);
    Owned out;
    REQUIRE(ncph_render_svg(h.p, &out.p) == NCPH_OK);
    return out.str();
  };
  auto first = svg();
  CHECK(first == svg());
  CHECK(first.find("viewBox=\"0 0 1000 1000\"") != std::string::npos);
}

TEST_CASE("the cache round-trips to identical output") {
  auto dir = scratch("cache").string();
  auto c = config("H", 3, true, dir);
  Handle cold;
  REQUIRE(open(c, cold) == NCPH_OK);
  Owned cold_info;
  REQUIRE(ncph_info(cold.p, &cold_info.p) == NCPH_OK);
  CHECK(json::parse(cold_info.str())["cached"] == false);
  CHECK(std::filesystem::exists(std::filesystem::path(dir) / "cache"));

  Handle warm;
  REQUIRE(open(c, warm) == NCPH_OK);
  Owned warm_info;
  REQUIRE(ncph_info(warm.p, &warm_info.p) == NCPH_OK);
  auto warm_json = json::parse(warm_info.str());
  CHECK(warm_json["cached"] == true);
  auto cold_json = json::parse(cold_info.str());
  cold_json.erase("cached");
  warm_json.erase("cached");
  CHECK(cold_json == warm_json);
  CHECK(exported(c, "embed") == exported(config("H", 3), "embed"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify reports per-suite verdicts") {
  Handle h;
  REQUIRE(open(config("B", 3), h) == NCPH_OK);
  Owned out;
  int failed = -1;
  REQUIRE(ncph_verify(h.p, nullptr, &out.p, &failed) == NCPH_OK);
  CHECK(failed == 0);
  auto report = json::parse(out.str());
  CHECK(report["passed"] == true);
  CHECK(report["group"] == "B3");
  std::string names = ncph_suite_names();
  for (const char* suite : {"rootorder", "lemma48", "poset-map", "fibers", "betti", "mobius", "prop41", "prop42",
                            "mu-dots", "embed"})
    CHECK(names.find(suite) != std::string::npos);
  CHECK(report["suites"].size() == static_cast<std::size_t>(std::count(names.begin(), names.end(), ',') + 1));
}

TEST_CASE("error codes") {
  Handle h;
  CHECK(ncph_session_create("{not json", &h.p) == NCPH_INVALID_ARGUMENT);
  CHECK(h.p == nullptr);
  CHECK(std::string(ncph_last_error()).size() > 0);
  CHECK(open(json{{"type", "Q"}, {"rank", 3}}, h) == NCPH_INVALID_DIAGRAM);
  CHECK(open(json{{"matrix", json::array({json::array({1, 3, 3}), json::array({3, 1, 3}), json::array({3, 3, 1})})}},
             h) == NCPH_INVALID_DIAGRAM);
  CHECK(open(json{{"type", "A"}, {"rank", 2}, {"bogus", 1}}, h) == NCPH_INVALID_ARGUMENT);
  CHECK(ncph_session_create(nullptr, &h.p) == NCPH_INVALID_ARGUMENT);

  Handle a2;
  REQUIRE(open(config("A", 2), a2) == NCPH_OK);
  Owned out;
  CHECK(ncph_render_svg(a2.p, &out.p) == NCPH_INVALID_ARGUMENT);
  CHECK(ncph_export(a2.p, "nope", &out.p) == NCPH_INVALID_ARGUMENT);
  CHECK(ncph_verify(a2.p, "nope", &out.p, nullptr) == NCPH_INVALID_ARGUMENT);
  CHECK(out.p == nullptr);

  Handle capped;
  auto small = config("B", 3);
  small["groupCap"] = 20;
  REQUIRE(open(small, capped) == NCPH_OK);
  CHECK(ncph_info(capped.p, &out.p) == NCPH_BUDGET_EXCEEDED);

  Handle budget;
  auto tight = config("H", 3);
  tight["simplexBudget"] = 10;
  REQUIRE(open(tight, budget) == NCPH_OK);
  int failed = 0;
  CHECK(ncph_verify(budget.p, "betti", &out.p, &failed) == NCPH_BUDGET_EXCEEDED);
  CHECK(std::string(ncph_status_name(NCPH_BUDGET_EXCEEDED)) != ncph_status_name(NCPH_INVARIANT));
}

TEST_CASE("diagram text rewriting") {
  Owned out;
  REQUIRE(ncph_config_apply_diagram_text("{}", "m = [[1,4,2],[4,1,3],[2,3,1]]", &out.p) == NCPH_OK);
  auto c = json::parse(out.str());
  Handle h;
  REQUIRE(open(c, h) == NCPH_OK);
  Owned i;
  REQUIRE(ncph_info(h.p, &i.p) == NCPH_OK);
  CHECK(json::parse(i.str())["order"] == 48);
}
