#include "ncph/ncph.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <new>
#include <sstream>

#include "ncph/error.hpp"
#include "ncph/session.hpp"

struct ncph_session {
  ncph::Session session;
  explicit ncph_session(ncph::RunConfig c) : session(std::move(c)) {}
};

namespace {

thread_local std::string last_error;

ncph_status fail(ncph_status status, const std::string& what) {
  last_error = what;
  return status;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Maps the library's exceptions onto status codes.
template <typename F>
ncph_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const ncph::DiagramError& e) {
    return fail(NCPH_INVALID_DIAGRAM, e.what());
  } catch (const ncph::BudgetExceeded& e) {
    return fail(NCPH_BUDGET_EXCEEDED, e.what());
  } catch (const ncph::InvariantViolation& e) {
    return fail(NCPH_INVARIANT, e.what());
  } catch (const ncph::AlgebraError& e) {
    return fail(NCPH_INTERNAL, e.what());
  } catch (const ncph::Error& e) {
    return fail(NCPH_INVALID_ARGUMENT, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(NCPH_INVALID_ARGUMENT, std::string("malformed JSON: ") + e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(NCPH_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(NCPH_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NCPH_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* ncph_version(void) { return "0.1.0"; }

const char* ncph_last_error(void) { return last_error.c_str(); }

const char* ncph_status_name(ncph_status status) {
  switch (status) {
    case NCPH_OK: return "ok";
    case NCPH_INVALID_ARGUMENT: return "invalid argument";
    case NCPH_INVALID_DIAGRAM: return "invalid diagram";
    case NCPH_BUDGET_EXCEEDED: return "budget exceeded";
    case NCPH_INVARIANT: return "invariant violated";
    case NCPH_IO: return "i/o error";
    case NCPH_INTERNAL: return "internal error";
  }
  return "unknown status";
}

ncph_status ncph_session_create(const char* config_json, ncph_session** out) {
  if (!config_json || !out) return fail(NCPH_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto config = ncph::RunConfig::from_json(ncph::Json::parse(config_json));
    config.diagram();
    auto session = std::make_unique<ncph_session>(std::move(config));
    session->session.system();
    *out = session.release();
    return NCPH_OK;
  });
}

void ncph_session_destroy(ncph_session* session) { delete session; }

ncph_status ncph_config_apply_diagram_text(const char* config_json, const char* diagram_text, char** out_json) {
  if (!config_json || !diagram_text || !out_json) return fail(NCPH_INVALID_ARGUMENT, "null argument");
  *out_json = nullptr;
  return guarded([&] {
    auto config = ncph::RunConfig::from_json(ncph::Json::parse(config_json));
    ncph::apply_diagram_text(config, diagram_text);
    *out_json = copy_out(config.to_json().dump());
    return NCPH_OK;
  });
}

ncph_status ncph_info(ncph_session* session, char** json_out) {
  if (!session || !json_out) return fail(NCPH_INVALID_ARGUMENT, "null argument");
  *json_out = nullptr;
  return guarded([&] {
    *json_out = copy_out(ncph::info_json(session->session).dump(2) + "\n");
    return NCPH_OK;
  });
}

ncph_status ncph_info_text(ncph_session* session, char** text_out) {
  if (!session || !text_out) return fail(NCPH_INVALID_ARGUMENT, "null argument");
  *text_out = nullptr;
  return guarded([&] {
    *text_out = copy_out(ncph::info_text(ncph::info_json(session->session)));
    return NCPH_OK;
  });
}

const char* ncph_suite_names(void) {
  static const std::string joined = [] {
    std::string out;
    for (const auto& name : ncph::suite_names()) out += (out.empty() ? "" : ",") + name;
    return out;
  }();
  return joined.c_str();
}

ncph_status ncph_verify(ncph_session* session, const char* suite, char** report_out, int* failed_out) {
  if (!session || !report_out) return fail(NCPH_INVALID_ARGUMENT, "null argument");
  *report_out = nullptr;
  return guarded([&] {
    std::vector<std::string> names = suite ? std::vector<std::string>{suite} : ncph::suite_names();
    std::vector<ncph::SuiteResult> results;
    for (const auto& name : names) results.push_back(ncph::run_suite(session->session, name));
    int failed = 0;
    for (const auto& r : results) failed += !r.report.ok();
    auto report = ncph::verify_json(results);
    report["group"] = session->session.system().input_diagram().label;
    *report_out = copy_out(report.dump(2) + "\n");
    if (failed_out) *failed_out = failed;
    return NCPH_OK;
  });
}

ncph_status ncph_export(ncph_session* session, const char* target, char** json_out) {
  if (!session || !target || !json_out) return fail(NCPH_INVALID_ARGUMENT, "null argument");
  *json_out = nullptr;
  return guarded([&] {
    *json_out = copy_out(ncph::export_json(session->session, target).dump(2) + "\n");
    return NCPH_OK;
  });
}

ncph_status ncph_render_svg(ncph_session* session, char** svg_out) {
  if (!session || !svg_out) return fail(NCPH_INVALID_ARGUMENT, "null argument");
  *svg_out = nullptr;
  return guarded([&] {
    *svg_out = copy_out(ncph::render_svg(session->session));
    return NCPH_OK;
  });
}

void ncph_string_free(char* s) { std::free(s); }

}  // extern "C"
