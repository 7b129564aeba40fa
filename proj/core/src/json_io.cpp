#include "wavepart/json_io.hpp"

#include <array>
#include <cstdint>
#include <memory>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "wavepart/errors.hpp"

namespace wavepart {

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("", "matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw FormatError("/0", "matrix row must be a non-empty array");
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw FormatError(fmt::format("/{}", r), fmt::format("row {} must be an array of {} entries", r, cols));
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = row[c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw FormatError(fmt::format("/{}/{}", r, c), "complex entry must be a [re, im] pair of numbers");
      m(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

namespace {

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1)
      throw NumericError("failed to initialise SHA-256");
  }

  template <typename T>
  void update(const T& value) {
    EVP_DigestUpdate(ctx_.get(), &value, sizeof(T));
  }

  void update(const Matrix& m) {
    update(static_cast<std::uint64_t>(m.rows()));
    update(static_cast<std::uint64_t>(m.cols()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        update(m(r, c).real());
        update(m(r, c).imag());
      }
  }

  std::string hex() {
    std::array<unsigned char, EVP_MAX_MD_SIZE> out{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx_.get(), out.data(), &len);
    std::string s;
    s.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) s += fmt::format("{:02x}", out[i]);
    return s;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

}  // namespace

std::string matrix_digest(const Matrix& m) {
  Sha256 h;
  h.update(m);
  return h.hex();
}

std::string rep_digest(const UnitaryRep& rep) {
  Sha256 h;
  h.update(static_cast<std::uint64_t>(rep.order()));
  for (std::size_t a = 0; a < rep.order(); ++a)
    for (std::size_t b = 0; b < rep.order(); ++b) h.update(static_cast<std::uint64_t>(rep.group().multiply(a, b)));
  for (const Matrix& t : rep.matrices()) h.update(t);
  return h.hex();
}

void to_json(nlohmann::json& j, const MeasureReport& r) {
  j = nlohmann::json{{"dim", r.dim},
                     {"group_order", r.group_order},
                     {"entropy_rho", r.entropy_rho},
                     {"entropy_twirl", r.entropy_twirl},
                     {"asymmetry", r.asymmetry},
                     {"symmetry", r.symmetry},
                     {"capacity", r.capacity},
                     {"identity_residual", r.identity_residual},
                     {"identity_holds", r.identity_holds},
                     {"inequality_holds", r.inequality_holds}};
}

void to_json(nlohmann::json& j, const InfoSandwich& s) {
  nlohmann::json povm = nlohmann::json::array();
  for (const Matrix& e : s.best_povm.elements()) povm.push_back(matrix_to_json(e));
  nlohmann::json trace = nlohmann::json::array();
  for (const TracePoint& p : s.trace) trace.push_back({p.iteration, p.value});
  j = nlohmann::json{{"lower", s.lower},           {"upper", s.upper}, {"gap", s.gap()},
                     {"best_source", s.best_source}, {"best_povm", std::move(povm)}, {"trace", std::move(trace)}};
}

}  // namespace wavepart
