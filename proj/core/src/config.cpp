#include "wavepart/config.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "wavepart/json_io.hpp"

namespace wavepart {

using nlohmann::json;

ConfigError::ConfigError(std::string field, const std::string& message, std::size_t line, std::size_t column)
    : Error(line > 0 ? fmt::format("config:{}:{}: {}", line, column, message)
                     : fmt::format("config{}: {}", field.empty() ? "" : " " + field, message)),
      field_(std::move(field)),
      line_(line),
      column_(column) {}

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  throw ConfigError("/output/format", fmt::format("unknown format '{}' (expected json or csv)", name));
}

namespace {

std::string join(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }

const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  return j;
}

void check_keys(const json& j, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ConfigError(join(path, key), "unknown field");
  }
}

const json& require(const json& j, const std::string& path, std::string_view key) {
  auto it = j.find(std::string(key));
  if (it == j.end()) throw ConfigError(join(path, key), "missing required field");
  return *it;
}

std::uint64_t as_uint(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  throw ConfigError(path, "expected a non-negative integer");
}

std::size_t as_positive(const json& j, const std::string& path) {
  const auto v = as_uint(j, path);
  if (v == 0) throw ConfigError(path, "must be positive");
  return static_cast<std::size_t>(v);
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path, "expected a string");
  return j.get<std::string>();
}

Matrix as_matrix(const json& j, const std::string& path) {
  try {
    return matrix_from_json(j);
  } catch (const FormatError& e) {
    throw ConfigError(path + e.path(), e.what());
  }
}

std::vector<Matrix> as_matrix_list(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ConfigError(path, "expected a non-empty array of matrices");
  std::vector<Matrix> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_matrix(j[i], fmt::format("{}/{}", path, i)));
  return out;
}

GroupSpec parse_group(const json& j) {
  const std::string path = "/group";
  require_object(j, path);
  const std::string kind = as_string(require(j, path, "kind"), path + "/kind");
  if (kind == "cyclic") {
    check_keys(j, path, {"kind", "n"});
    return CyclicGroupSpec{as_positive(require(j, path, "n"), path + "/n")};
  }
  if (kind == "dihedral") {
    check_keys(j, path, {"kind", "n"});
    const auto n = as_positive(require(j, path, "n"), path + "/n");
    if (n < 3) throw ConfigError(path + "/n", "dihedral group needs n >= 3");
    return DihedralGroupSpec{n};
  }
  if (kind == "cayley") {
    check_keys(j, path, {"kind", "table"});
    const json& t = require(j, path, "table");
    const std::string tpath = path + "/table";
    if (!t.is_array() || t.empty()) throw ConfigError(tpath, "expected a non-empty array of rows");
    CayleyGroupSpec spec;
    for (std::size_t r = 0; r < t.size(); ++r) {
      if (!t[r].is_array()) throw ConfigError(fmt::format("{}/{}", tpath, r), "expected an array of integers");
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < t[r].size(); ++c) {
        const json& e = t[r][c];
        if (!e.is_number_integer()) throw ConfigError(fmt::format("{}/{}/{}", tpath, r, c), "expected an integer");
        row.push_back(e.get<std::int64_t>());
      }
      spec.table.push_back(std::move(row));
    }
    return spec;
  }
  throw ConfigError(path + "/kind", fmt::format("unknown group kind '{}' (expected cyclic, dihedral or cayley)", kind));
}

RepSpec parse_rep(const json& j) {
  const std::string path = "/rep";
  require_object(j, path);
  const std::string kind = as_string(require(j, path, "kind"), path + "/kind");
  if (kind == "regular") {
    check_keys(j, path, {"kind"});
    return RegularRepSpec{};
  }
  if (kind == "matrices") {
    check_keys(j, path, {"kind", "matrices"});
    return MatrixRepSpec{as_matrix_list(require(j, path, "matrices"), path + "/matrices")};
  }
  throw ConfigError(path + "/kind", fmt::format("unknown rep kind '{}' (expected regular or matrices)", kind));
}

StateSpec parse_state(const json& j) {
  const std::string path = "/state";
  require_object(j, path);
  const std::string kind = as_string(require(j, path, "kind"), path + "/kind");
  if (kind == "matrix") {
    check_keys(j, path, {"kind", "matrix"});
    return ExplicitStateSpec{as_matrix(require(j, path, "matrix"), path + "/matrix")};
  }
  if (kind == "random") {
    check_keys(j, path, {"kind", "rank", "seed", "dim"});
    RandomStateSpec spec;
    if (j.contains("rank")) spec.rank = as_positive(j["rank"], path + "/rank");
    if (j.contains("seed")) spec.seed = as_uint(j["seed"], path + "/seed");
    return spec;
  }
  if (kind == "fixture") {
    check_keys(j, path, {"kind", "name", "dim"});
    std::string name = as_string(require(j, path, "name"), path + "/name");
    if (name != "ground" && name != "maximally_mixed" && name != "plus")
      throw ConfigError(path + "/name",
                        fmt::format("unknown fixture '{}' (expected ground, maximally_mixed or plus)", name));
    return FixtureStateSpec{std::move(name)};
  }
  throw ConfigError(path + "/kind", fmt::format("unknown state kind '{}' (expected matrix, random or fixture)", kind));
}

EncoderSpec parse_encoder(const json& j) {
  const std::string path = "/wave_encoder";
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "weyl") return WeylEncoderSpec{};
    if (name == "trivial") return TrivialEncoderSpec{};
    throw ConfigError(path, fmt::format("unknown encoder '{}' (expected weyl, trivial or {{\"matrices\": ...}})", name));
  }
  require_object(j, path);
  check_keys(j, path, {"matrices"});
  return MatrixEncoderSpec{as_matrix_list(require(j, path, "matrices"), path + "/matrices")};
}

void parse_optimizer(const json& j, ExperimentConfig& cfg) {
  const std::string path = "/optimizer";
  require_object(j, path);
  check_keys(j, path, {"restarts", "iterations", "grid_steps", "seed"});
  if (j.contains("restarts")) cfg.budget.restarts = as_positive(j["restarts"], path + "/restarts");
  if (j.contains("iterations")) cfg.budget.iterations = as_positive(j["iterations"], path + "/iterations");
  if (j.contains("grid_steps")) cfg.budget.grid_steps = as_positive(j["grid_steps"], path + "/grid_steps");
  if (j.contains("seed")) cfg.optimizer_seed = as_uint(j["seed"], path + "/seed");
}

void check_square(const Matrix& m, std::size_t dim, const std::string& path) {
  if (static_cast<std::size_t>(m.rows()) != dim || static_cast<std::size_t>(m.cols()) != dim)
    throw ConfigError(path, fmt::format("matrix is {}x{}, expected {}x{}", m.rows(), m.cols(), dim, dim));
}

void cross_check(const json& root, const ExperimentConfig& cfg) {
  const std::size_t order = cfg.group_order();
  if (const auto* m = std::get_if<MatrixRepSpec>(&cfg.rep)) {
    if (m->matrices.size() != order)
      throw ConfigError("/rep/matrices",
                        fmt::format("group has {} elements but {} matrices were given", order, m->matrices.size()));
    for (std::size_t i = 0; i < m->matrices.size(); ++i)
      check_square(m->matrices[i], static_cast<std::size_t>(m->matrices[0].rows()), fmt::format("/rep/matrices/{}", i));
  }
  const std::size_t dim = cfg.dim();
  if (dim > kMaxDim) throw ConfigError("/rep", fmt::format("dimension {} exceeds the supported maximum {}", dim, kMaxDim));

  if (cfg.state) {
    if (const auto* s = std::get_if<ExplicitStateSpec>(&*cfg.state)) check_square(s->matrix, dim, "/state/matrix");
    if (const auto* r = std::get_if<RandomStateSpec>(&*cfg.state); r && r->rank && *r->rank > dim)
      throw ConfigError("/state/rank", fmt::format("rank {} exceeds dimension {}", *r->rank, dim));
    const json& st = root["state"];
    if (st.contains("dim") && as_uint(st["dim"], "/state/dim") != dim)
      throw ConfigError("/state/dim", fmt::format("state dimension {} does not match representation dimension {}",
                                                  as_uint(st["dim"], "/state/dim"), dim));
  }
  if (const auto* e = std::get_if<MatrixEncoderSpec>(&cfg.wave_encoder))
    for (std::size_t i = 0; i < e->matrices.size(); ++i)
      check_square(e->matrices[i], dim, fmt::format("/wave_encoder/matrices/{}", i));
}

}  // namespace

std::size_t ExperimentConfig::group_order() const {
  return std::visit(
      [](const auto& g) -> std::size_t {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, CyclicGroupSpec>) return g.n;
        else if constexpr (std::is_same_v<T, DihedralGroupSpec>) return 2 * g.n;
        else return g.table.size();
      },
      group);
}

std::size_t ExperimentConfig::dim() const {
  if (const auto* m = std::get_if<MatrixRepSpec>(&rep)) return static_cast<std::size_t>(m->matrices.front().rows());
  return group_order();
}

ExperimentConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ConfigError("", msg, line, column);
  }

  require_object(root, "");
  check_keys(root, "", {"group", "rep", "state", "wave_encoder", "optimizer", "sweep", "output", "threads"});

  ExperimentConfig cfg;
  cfg.group = parse_group(require(root, "", "group"));
  if (root.contains("rep")) cfg.rep = parse_rep(root["rep"]);
  if (root.contains("state")) cfg.state = parse_state(root["state"]);
  if (root.contains("wave_encoder")) cfg.wave_encoder = parse_encoder(root["wave_encoder"]);
  if (root.contains("optimizer")) parse_optimizer(root["optimizer"], cfg);
  if (root.contains("sweep")) {
    const json& s = require_object(root["sweep"], "/sweep");
    check_keys(s, "/sweep", {"count", "seed"});
    if (s.contains("count")) cfg.sweep_count = as_positive(s["count"], "/sweep/count");
    if (s.contains("seed")) cfg.sweep_seed = as_uint(s["seed"], "/sweep/seed");
  }
  if (root.contains("output")) {
    const json& o = require_object(root["output"], "/output");
    check_keys(o, "/output", {"path", "format"});
    if (o.contains("path")) cfg.output_path = as_string(o["path"], "/output/path");
    if (o.contains("format")) cfg.format = parse_format(as_string(o["format"], "/output/format"));
  }
  if (root.contains("threads")) cfg.threads = static_cast<std::size_t>(as_uint(root["threads"], "/threads"));

  cross_check(root, cfg);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", fmt::format("cannot open config file '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace wavepart
