#include "ncph/session.hpp"

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>

#include "ncph/error.hpp"

namespace ncph {

namespace {

const char* const kConfigKeys[] = {"type",      "rank",      "matrix",        "swapClasses", "lambdaDenominator",
                                   "groupCap",  "simplexBudget", "outputDir", "cache"};

template <typename T>
T get_as(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(std::string("config field '") + key + "' has the wrong type");
  }
}

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Rational parse_rational(const std::string& text) {
  try {
    Rational q(text, 10);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error("malformed rational '" + text + "'");
  }
}

Scalar scalar_from_json(const NumberField& field, const Json& j) {
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(parse_rational(c.get<std::string>()));
  if (coords.size() != static_cast<std::size_t>(field.degree())) throw Error("scalar has the wrong degree");
  return Scalar(field, std::move(coords));
}

Matrix matrix_from_json(const NumberField& field, const Json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  Matrix m(rows, cols, field);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw Error("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(field, j[r][c]);
  }
  return m;
}

}  // namespace

RunConfig RunConfig::from_json(const Json& j) {
  if (!j.is_object()) throw Error("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(std::begin(kConfigKeys), std::end(kConfigKeys), key) == std::end(kConfigKeys))
      throw Error("unknown config field '" + key + "'");
  }
  RunConfig c;
  if (j.contains("type")) c.type = get_as<std::string>(j, "type");
  if (j.contains("rank")) c.rank = get_as<int>(j, "rank");
  if (j.contains("matrix") && !j.at("matrix").is_null())
    c.matrix = get_as<std::vector<std::vector<int>>>(j, "matrix");
  if (j.contains("swapClasses")) c.swap_classes = get_as<bool>(j, "swapClasses");
  if (j.contains("lambdaDenominator")) c.lambda_denominator = get_as<int>(j, "lambdaDenominator");
  if (j.contains("groupCap")) c.group_cap = get_as<std::size_t>(j, "groupCap");
  if (j.contains("simplexBudget")) c.simplex_budget = get_as<std::size_t>(j, "simplexBudget");
  if (j.contains("outputDir")) c.output_dir = get_as<std::string>(j, "outputDir");
  if (j.contains("cache")) c.cache = get_as<bool>(j, "cache");
  if (c.lambda_denominator < 1) throw Error("lambdaDenominator must be at least 1");
  if (c.group_cap < 1 || c.simplex_budget < 1) throw Error("budgets must be positive");
  return c;
}

Json RunConfig::to_json() const {
  Json j;
  j["type"] = type;
  j["rank"] = rank;
  j["matrix"] = matrix ? Json(*matrix) : Json(nullptr);
  j["swapClasses"] = swap_classes;
  j["lambdaDenominator"] = lambda_denominator;
  j["groupCap"] = group_cap;
  j["simplexBudget"] = simplex_budget;
  j["outputDir"] = output_dir;
  j["cache"] = cache;
  return j;
}

CoxeterDiagram RunConfig::diagram() const {
  if (matrix) return diagram_from_matrix(*matrix);
  if (type.empty()) throw DiagramError("missing Coxeter type");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  std::string rest = type.substr(1);
  int n = rank;
  int m = 0;
  std::smatch match;
  if (letter == 'I') {
    // I5, I2(5), I(5)
    if (!std::regex_match(rest, match, std::regex(R"((?:2?\((\d+)\))|(\d+))")))
      throw DiagramError("dihedral type needs a label, as in I5 or I2(5)");
    m = std::stoi(match[1].matched ? match[1].str() : match[2].str());
    if (n != 0 && n != 2) throw DiagramError("dihedral types have rank 2");
    n = 2;
  } else if (!rest.empty()) {
    if (!std::regex_match(rest, std::regex(R"(\d+)"))) throw DiagramError("unrecognized type '" + type + "'");
    int from_type = std::stoi(rest);
    if (n != 0 && n != from_type) throw DiagramError("type " + type + " disagrees with rank " + std::to_string(n));
    n = from_type;
  } else if (letter == 'G' && n == 0) {
    n = 2;
  }
  if (n < 1) throw DiagramError("rank must be positive");
  return standard_diagram(letter, n, m);
}

std::string RunConfig::group_hash() const {
  Json key;
  key["format"] = 1;
  key["matrix"] = diagram().m;
  key["swapClasses"] = swap_classes;
  return fnv1a(key.dump());
}

void apply_diagram_text(RunConfig& config, const std::string& text) {
  std::smatch match;
  if (std::regex_search(text, match, std::regex(R"(type\s*=\s*([A-Za-z][A-Za-z0-9()]*))"))) {
    config.type = match[1].str();
    config.matrix.reset();
    if (std::regex_search(text, match, std::regex(R"(rank\s*=\s*(\d+))"))) config.rank = std::stoi(match[1].str());
    return;
  }
  auto open = text.find('[');
  if (open == std::string::npos) throw Error("matrix file has neither 'm = [[...]]' nor 'type=... rank=...'");
  Json parsed;
  try {
    parsed = Json::parse(text.substr(open));
  } catch (const nlohmann::json::exception&) {
    throw Error("matrix file: malformed matrix literal");
  }
  try {
    config.matrix = parsed.get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    throw Error("matrix file: entries must be integers");
  }
  config.type.clear();
  config.rank = static_cast<int>(config.matrix->size());
}

Session::Session(RunConfig config) : config_(std::move(config)) {}

const CoxeterSystem& Session::system() {
  if (!system_) system_ = std::make_unique<CoxeterSystem>(CoxeterSystem::build(config_.diagram(), config_.swap_classes));
  return *system_;
}

const CoxeterGroup& Session::group() {
  if (!group_) load_or_generate_group();
  return *group_;
}

bool Session::group_from_cache() {
  group();
  return from_cache_;
}

void Session::load_or_generate_group() {
  const CoxeterSystem& sys = system();
  namespace fs = std::filesystem;
  const fs::path path = fs::path(config_.output_dir) / "cache" / (config_.group_hash() + ".json");
  if (config_.cache && fs::exists(path)) {
    // A damaged or mismatched cache entry is ignored and rewritten.
    try {
      std::ifstream in(path);
      Json j = Json::parse(in);
      if (j.at("matrix") == Json(sys.input_diagram().m) && j.at("field") == field_json(sys.field()) &&
          j.at("swapClasses").get<bool>() == config_.swap_classes) {
        std::vector<Matrix> ms;
        for (const auto& e : j.at("elements")) ms.push_back(matrix_from_json(sys.field(), e));
        if (ms.size() > config_.group_cap) throw BudgetExceeded("cached group exceeds the group cap");
        group_ = std::make_unique<CoxeterGroup>(CoxeterGroup::from_matrices(sys, std::move(ms)));
        from_cache_ = true;
        return;
      }
    } catch (const BudgetExceeded&) {
      throw;
    } catch (const std::exception&) {
    }
  }
  group_ = std::make_unique<CoxeterGroup>(CoxeterGroup::generate(sys, config_.group_cap));
  if (!config_.cache) return;
  Json j;
  j["matrix"] = sys.input_diagram().m;
  j["swapClasses"] = config_.swap_classes;
  j["field"] = field_json(sys.field());
  Json elements = Json::array();
  for (std::size_t i = 0; i < group_->size(); ++i) elements.push_back(matrix_json(group_->matrix(static_cast<ElementId>(i))));
  j["elements"] = std::move(elements);
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  const fs::path tmp = path.string() + ".tmp";
  std::ofstream out(tmp);
  if (!out) throw Error("cannot write cache file " + tmp.string());
  out << j.dump() << '\n';
  out.close();
  fs::rename(tmp, path, ec);
  if (ec) throw Error("cannot write cache file " + path.string());
}

const ReflectionSet& Session::reflections() {
  if (!t_) t_ = ncph::reflections(group());
  return *t_;
}

const OrderedRoots& Session::ordered() {
  if (!ordered_) {
    ordered_ = ordered_roots(group(), reflections());
    last_n_roots(group(), *ordered_);
  }
  return *ordered_;
}

const NCPLattice& Session::ncp() {
  if (!ncp_) ncp_ = build_ncp(group());
  return *ncp_;
}

const SimplicialComplex& Session::xc() {
  if (!xc_) xc_ = build_xc(group(), ordered(), config_.simplex_budget);
  return *xc_;
}

const std::vector<Vector>& Session::rays() {
  if (!rays_) rays_ = enumerate_rays(system(), reflections());
  return *rays_;
}

const GenericVector& Session::generic() {
  if (!generic_) {
    Rational lambda = lambda_bound(system(), reflections(), rays(), config_.lambda_denominator);
    generic_ = generic_vector(system(), ordered().tau, lambda, rays());
  }
  return *generic_;
}

const std::vector<Chamber>& Session::chambers() {
  if (!chambers_) chambers_ = enumerate_chambers(group(), reflections(), generic().v);
  return *chambers_;
}

const MuComplex& Session::mu_complex() {
  if (!mu_) mu_ = build_mu_complex(system(), ordered(), xc());
  return *mu_;
}

const IntersectionLattice& Session::lattice() {
  if (!lattice_) lattice_ = build_intersection_lattice(system(), reflections());
  return *lattice_;
}

const EmbeddingReport& Session::embedding() {
  if (!embedding_) embedding_ = pstar_matrix(system(), mu_complex(), chambers());
  return *embedding_;
}

Json scalar_json(const Scalar& s) {
  Json out = Json::array();
  for (const auto& c : s.coordinates()) out.push_back(c.get_str());
  return out;
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

Json field_json(const NumberField& field) {
  Json j;
  j["degree"] = field.degree();
  j["description"] = field.describe();
  Json poly = Json::array();
  for (const auto& c : field.minimal_polynomial()) poly.push_back(c.get_str());
  j["minimalPolynomial"] = std::move(poly);
  const auto& [lo, hi] = field.isolating_interval();
  j["isolatingInterval"] = {lo.get_str(), hi.get_str()};
  return j;
}

Json info_json(Session& session) {
  const auto& sys = session.system();
  const auto& group = session.group();
  const auto& ordered = session.ordered();
  Json j;
  j["group"] = sys.input_diagram().label;
  j["n"] = sys.rank();
  j["h"] = sys.coxeter_number();
  j["order"] = group.size();
  j["reflections"] = session.reflections().size();
  j["s"] = sys.s();
  j["swapClasses"] = sys.classes_swapped();
  j["bipartiteOrder"] = sys.bipartition().order;
  j["field"] = field_json(sys.field());
  j["basis"] = "simple-roots";
  j["gram"] = matrix_json(sys.gram());
  Json roots = Json::array();
  for (const auto& r : ordered.roots) roots.push_back(vector_json(r));
  j["rho"] = std::move(roots);
  j["cached"] = session.group_from_cache();
  return j;
}

std::string info_text(const Json& info) {
  std::ostringstream os;
  os << info.at("group").get<std::string>() << ": n=" << info.at("n") << " h=" << info.at("h")
     << " |W|=" << info.at("order") << " |T|=" << info.at("reflections") << " s=" << info.at("s") << '\n';
  os << "field " << info.at("field").at("description").get<std::string>() << ", coordinates in the simple-root basis"
     << " (node order";
  for (const auto& k : info.at("bipartiteOrder")) os << ' ' << k.get<int>() + 1;
  os << ")\n";
  std::size_t i = 1;
  for (const auto& root : info.at("rho")) {
    os << "rho_" << i++ << " = (";
    bool first = true;
    for (const auto& coord : root) {
      os << (first ? "" : ", ");
      first = false;
      if (coord.size() == 1) {
        os << coord[0].get<std::string>();
        continue;
      }
      os << '[';
      for (std::size_t k = 0; k < coord.size(); ++k) os << (k ? " " : "") << coord[k].get<std::string>();
      os << ']';
    }
    os << ")\n";
  }
  return os.str();
}

}  // namespace ncph
