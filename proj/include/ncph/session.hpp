#ifndef NCPH_SESSION_HPP
#define NCPH_SESSION_HPP

// Run configuration and a lazily built pipeline over one Coxeter system,
// plus the verification suites, JSON exports and the SVG renderer that the
// C API and command-line tool expose.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncph/arrangement.hpp"
#include "ncph/complexes.hpp"
#include "ncph/embed.hpp"

namespace ncph {

using Json = nlohmann::json;

struct RunConfig {
  // Type letter with optional dihedral label: "A", "C", "G", "I5", "I2(5)".
  std::string type;
  int rank = 0;
  // Explicit Coxeter matrix; overrides type/rank when present.
  std::optional<std::vector<std::vector<int>>> matrix;
  bool swap_classes = false;
  int lambda_denominator = 64;
  std::size_t group_cap = CoxeterGroup::kDefaultCap;
  std::size_t simplex_budget = SimplicialComplex::kDefaultBudget;
  std::string output_dir = "ncph_out";
  bool cache = true;

  // Throws Error on unknown keys or wrong value types.
  static RunConfig from_json(const Json& j);
  Json to_json() const;
  CoxeterDiagram diagram() const;
  // FNV-1a over the canonical JSON of the fields that determine the group.
  std::string group_hash() const;
};

// Parses the contents of a --matrix file: either "m = [[1,3],[3,1]]" (the
// "m =" is optional) or "type=B rank=3". Fills the corresponding fields.
void apply_diagram_text(RunConfig& config, const std::string& text);

class Session {
 public:
  explicit Session(RunConfig config);
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  const RunConfig& config() const { return config_; }
  const CoxeterSystem& system();
  const CoxeterGroup& group();
  // True when the group came from the on-disk cache.
  bool group_from_cache();
  const ReflectionSet& reflections();
  const OrderedRoots& ordered();
  const NCPLattice& ncp();
  const SimplicialComplex& xc();
  const std::vector<Vector>& rays();
  const GenericVector& generic();
  const std::vector<Chamber>& chambers();
  const MuComplex& mu_complex();
  const IntersectionLattice& lattice();
  const EmbeddingReport& embedding();

 private:
  void load_or_generate_group();

  RunConfig config_;
  std::unique_ptr<CoxeterSystem> system_;
  std::unique_ptr<CoxeterGroup> group_;
  bool from_cache_ = false;
  std::optional<ReflectionSet> t_;
  std::optional<OrderedRoots> ordered_;
  std::optional<NCPLattice> ncp_;
  std::optional<SimplicialComplex> xc_;
  std::optional<std::vector<Vector>> rays_;
  std::optional<GenericVector> generic_;
  std::optional<std::vector<Chamber>> chambers_;
  std::optional<MuComplex> mu_;
  std::optional<IntersectionLattice> lattice_;
  std::optional<EmbeddingReport> embedding_;
};

Json scalar_json(const Scalar& s);
Json vector_json(const Vector& v);
Json matrix_json(const Matrix& m);
Json field_json(const NumberField& field);

Json info_json(Session& session);
std::string info_text(const Json& info);

// Suite names in execution order.
const std::vector<std::string>& suite_names();

struct SuiteResult {
  std::string name;
  CheckReport report;
  Json details = Json::object();
};

// Runs one suite. Throws Error for an unknown name; BudgetExceeded
// propagates. An InvariantViolation raised while building becomes a failure.
SuiteResult run_suite(Session& session, const std::string& name);
Json verify_json(const std::vector<SuiteResult>& results);

// Targets: ncp, xc, lattice, embed.
Json export_json(Session& session, const std::string& target);
const std::vector<std::string>& export_targets();

// Rank 3 only; throws Error otherwise.
std::string render_svg(Session& session);

}  // namespace ncph

#endif  // NCPH_SESSION_HPP
