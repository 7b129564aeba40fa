#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wavepart/errors.hpp"
#include "wavepart/info.hpp"
#include "wavepart/types.hpp"

namespace wavepart {

/// Configuration problem. field() is a JSON pointer ("/group/n"); line() and
/// column() are set for syntax errors only (1-based, 0 when unknown).
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message, std::size_t line = 0, std::size_t column = 0);

  const std::string& field() const noexcept { return field_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string field_;
  std::size_t line_;
  std::size_t column_;
};

struct CyclicGroupSpec {
  std::size_t n = 1;
};
struct DihedralGroupSpec {
  std::size_t n = 3;
};
struct CayleyGroupSpec {
  std::vector<std::vector<std::int64_t>> table;
};
using GroupSpec = std::variant<CyclicGroupSpec, DihedralGroupSpec, CayleyGroupSpec>;

struct RegularRepSpec {};
struct MatrixRepSpec {
  std::vector<Matrix> matrices;
};
using RepSpec = std::variant<RegularRepSpec, MatrixRepSpec>;

struct ExplicitStateSpec {
  Matrix matrix;
};
/// Ginibre-induced random state; rank defaults to the full dimension.
struct RandomStateSpec {
  std::optional<std::size_t> rank;
  std::optional<std::uint64_t> seed;
};
/// "ground" (|0><0|), "maximally_mixed" (I/D) or "plus" (uniform superposition).
struct FixtureStateSpec {
  std::string name;
};
using StateSpec = std::variant<ExplicitStateSpec, RandomStateSpec, FixtureStateSpec>;

struct WeylEncoderSpec {};
struct TrivialEncoderSpec {};
struct MatrixEncoderSpec {
  std::vector<Matrix> matrices;
};
using EncoderSpec = std::variant<WeylEncoderSpec, TrivialEncoderSpec, MatrixEncoderSpec>;

enum class ReportFormat { kJson, kCsv };

ReportFormat parse_format(std::string_view name);

struct ExperimentConfig {
  GroupSpec group = CyclicGroupSpec{};
  RepSpec rep = RegularRepSpec{};
  std::optional<StateSpec> state;
  EncoderSpec wave_encoder = WeylEncoderSpec{};
  OptimizerBudget budget;
  std::uint64_t optimizer_seed = 0;
  std::optional<std::size_t> sweep_count;
  std::optional<std::uint64_t> sweep_seed;
  std::optional<std::string> output_path;
  ReportFormat format = ReportFormat::kJson;
  /// Sweep worker threads; 0 picks the hardware concurrency.
  std::size_t threads = 0;

  /// Hilbert-space dimension implied by the group and representation.
  std::size_t dim() const;
  std::size_t group_order() const;
};

/// Parses and cross-checks a configuration document. Dimensions of the
/// representation, state and encoder must agree. Throws ConfigError.
ExperimentConfig parse_config(std::string_view text);

ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace wavepart
