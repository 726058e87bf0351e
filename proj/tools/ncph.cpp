// ncph <info|verify|render|export> ... : command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "ncph/ncph.h"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3, kError = 4 };

int exit_for(ncph_status status) {
  switch (status) {
    case NCPH_OK: return kPass;
    case NCPH_INVALID_ARGUMENT:
    case NCPH_INVALID_DIAGRAM: return kUsage;
    case NCPH_BUDGET_EXCEEDED: return kBudget;
    case NCPH_INVARIANT: return kFail;
    default: return kError;
  }
}

int report(ncph_status status) {
  std::cerr << "ncph: " << ncph_status_name(status) << ": " << ncph_last_error() << '\n';
  return exit_for(status);
}

struct LibString {
  char* p = nullptr;
  ~LibString() { ncph_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct SessionHandle {
  ncph_session* p = nullptr;
  ~SessionHandle() { ncph_session_destroy(p); }
};

struct Options {
  std::string type;
  int rank = 0;
  std::string matrix_file;
  std::string out = "ncph_out";
  std::string suite;
  bool all = false;
  int lambda_denom = 64;
  bool no_cache = false;
  bool swap_classes = false;
  std::size_t group_cap = 2'000'000;
  std::size_t simplex_budget = 5'000'000;
  bool json = false;
  std::string target;
};

std::string file_stem(std::string label) {
  std::string out;
  for (char ch : label)
    if (std::isalnum(static_cast<unsigned char>(ch))) out += ch;
  return out.empty() ? "group" : out;
}

bool write_file(const std::filesystem::path& path, const std::string& body) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  out << body;
  return static_cast<bool>(out);
}

// Builds the session from the command line; returns an exit code on failure.
int open_session(const Options& o, SessionHandle& session) {
  nlohmann::json config{{"type", o.type},
                        {"rank", o.rank},
                        {"swapClasses", o.swap_classes},
                        {"lambdaDenominator", o.lambda_denom},
                        {"groupCap", o.group_cap},
                        {"simplexBudget", o.simplex_budget},
                        {"outputDir", o.out},
                        {"cache", !o.no_cache}};
  std::string text = config.dump();
  if (!o.matrix_file.empty()) {
    std::ifstream in(o.matrix_file);
    if (!in) {
      std::cerr << "ncph: cannot read " << o.matrix_file << '\n';
      return kUsage;
    }
    std::stringstream body;
    body << in.rdbuf();
    LibString rewritten;
    if (auto st = ncph_config_apply_diagram_text(text.c_str(), body.str().c_str(), &rewritten.p); st != NCPH_OK)
      return report(st);
    text = rewritten.str();
  } else if (o.type.empty()) {
    std::cerr << "ncph: give TYPE [RANK] or --matrix FILE\n";
    return kUsage;
  }
  if (auto st = ncph_session_create(text.c_str(), &session.p); st != NCPH_OK) return report(st);
  return kPass;
}

int cmd_info(const Options& o) {
  SessionHandle s;
  if (int rc = open_session(o, s)) return rc;
  LibString out;
  auto st = o.json ? ncph_info(s.p, &out.p) : ncph_info_text(s.p, &out.p);
  if (st != NCPH_OK) return report(st);
  std::cout << out.str();
  return kPass;
}

int cmd_verify(const Options& o) {
  SessionHandle s;
  if (int rc = open_session(o, s)) return rc;
  if (o.all == !o.suite.empty()) {
    std::cerr << "ncph: verify needs exactly one of --all or --suite NAME (" << ncph_suite_names() << ")\n";
    return kUsage;
  }
  LibString out;
  int failed = 0;
  auto st = ncph_verify(s.p, o.all ? nullptr : o.suite.c_str(), &out.p, &failed);
  if (st != NCPH_OK) return report(st);
  auto j = nlohmann::json::parse(out.str());
  for (const auto& suite : j.at("suites")) {
    std::cout << (suite.at("passed").get<bool>() ? "PASS " : "FAIL ") << suite.at("name").get<std::string>() << " ("
              << suite.at("checked") << " checks)";
    const auto& d = suite.at("details");
    for (const char* key : {"boundedSlice", "facets", "rank", "mobius"})
      if (d.contains(key)) std::cout << ' ' << key << '=' << d.at(key);
    std::cout << '\n';
    for (const auto& f : suite.at("failures")) std::cout << "  " << f.get<std::string>() << '\n';
  }
  auto path = std::filesystem::path(o.out) / ("verify-" + file_stem(j.at("group")) + ".json");
  if (!write_file(path, out.str())) {
    std::cerr << "ncph: cannot write " << path << '\n';
    return kError;
  }
  std::cout << "report: " << path.string() << '\n';
  return failed ? kFail : kPass;
}

int cmd_export(const Options& o) {
  SessionHandle s;
  if (int rc = open_session(o, s)) return rc;
  LibString out;
  if (auto st = ncph_export(s.p, o.target.c_str(), &out.p); st != NCPH_OK) return report(st);
  auto group = nlohmann::json::parse(out.str()).at("group").get<std::string>();
  auto path = std::filesystem::path(o.out) / (o.target + "-" + file_stem(group) + ".json");
  if (!write_file(path, out.str())) {
    std::cerr << "ncph: cannot write " << path << '\n';
    return kError;
  }
  std::cout << path.string() << '\n';
  return kPass;
}

int cmd_render(const Options& o) {
  SessionHandle s;
  if (int rc = open_session(o, s)) return rc;
  LibString info;
  if (auto st = ncph_info(s.p, &info.p); st != NCPH_OK) return report(st);
  auto group = nlohmann::json::parse(info.str()).at("group").get<std::string>();
  LibString svg;
  if (auto st = ncph_render_svg(s.p, &svg.p); st != NCPH_OK) return report(st);
  auto path = std::filesystem::path(o.out) / (file_stem(group) + ".svg");
  if (!write_file(path, svg.str())) {
    std::cerr << "ncph: cannot write " << path << '\n';
    return kError;
  }
  std::cout << path.string() << '\n';
  return kPass;
}

void group_options(CLI::App* cmd, Options& o) {
  cmd->add_option("type", o.type, "Coxeter type: A B C D E F G H, or I5 / I2(5)");
  cmd->add_option("rank", o.rank, "rank (optional when the type carries it)");
  cmd->add_option("--matrix", o.matrix_file, "file with 'm = [[...]]' or 'type=B rank=3'");
  cmd->add_option("--out", o.out, "output directory")->capture_default_str();
  cmd->add_option("--lambda-denom", o.lambda_denom, "largest denominator for lambda'")->capture_default_str();
  cmd->add_flag("--no-cache", o.no_cache, "do not read or write the group cache");
  cmd->add_flag("--swap-classes", o.swap_classes, "put the other color class first in c");
  cmd->add_option("--group-cap", o.group_cap, "maximum group order")->capture_default_str();
  cmd->add_option("--simplex-budget", o.simplex_budget, "maximum faces per complex")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-crossing partition homology and the reflection arrangement"};
  app.set_version_flag("--version", std::string(ncph_version()));
  app.require_subcommand(1);
  Options o;

  auto* info = app.add_subcommand("info", "n, h, |W|, |T|, s and the ordered roots");
  group_options(info, o);
  info->add_flag("--json", o.json, "print JSON");

  auto* verify = app.add_subcommand("verify", "run invariant suites");
  group_options(verify, o);
  verify->add_option("--suite", o.suite, std::string("one of: ") + ncph_suite_names());
  verify->add_flag("--all", o.all, "run every suite");

  auto* render = app.add_subcommand("render", "SVG of the hemisphere v.x > 0 (rank 3)");
  group_options(render, o);

  auto* exp = app.add_subcommand("export", "JSON export: ncp, xc, lattice or embed");
  exp->add_option("target", o.target, "ncp | xc | lattice | embed")
      ->required()
      ->check(CLI::IsMember({"ncp", "xc", "lattice", "embed"}));
  group_options(exp, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }
  if (info->parsed()) return cmd_info(o);
  if (verify->parsed()) return cmd_verify(o);
  if (render->parsed()) return cmd_render(o);
  return cmd_export(o);
}
