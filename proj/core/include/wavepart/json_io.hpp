#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wavepart/errors.hpp"
#include "wavepart/group.hpp"
#include "wavepart/info.hpp"
#include "wavepart/measures.hpp"
#include "wavepart/types.hpp"

namespace wavepart {

/// Row-major array of rows, each entry a [re, im] pair.
nlohmann::json matrix_to_json(const Matrix& m);

/// Inverse of matrix_to_json. Throws FormatError naming the offending
/// "/row/col" suffix on malformed input.
Matrix matrix_from_json(const nlohmann::json& j);

/// Malformed structured input. path() is a JSON pointer relative to the
/// value being decoded.
class FormatError : public Error {
 public:
  FormatError(std::string path, const std::string& message) : Error(message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Lower-case hex SHA-256 of the row-major (re, im) doubles of m, prefixed
/// with its dimensions.
std::string matrix_digest(const Matrix& m);
std::string rep_digest(const UnitaryRep& rep);

void to_json(nlohmann::json& j, const MeasureReport& r);
void to_json(nlohmann::json& j, const InfoSandwich& s);

}  // namespace wavepart
