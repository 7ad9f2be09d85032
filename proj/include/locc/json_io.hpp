#pragma once
// JSON encoding of library values and the deterministic run-report format
// used by the CLI: complex numbers as [re, im], matrices as row-major nested
// arrays, floats rounded to 15 significant digits, keys sorted.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "locc/discrimination.hpp"
#include "locc/indistinguishability.hpp"

namespace locc {

using Json = nlohmann::json;

double round_sig(double v, int digits = 15);

Json json_real(double v);
Json json_complex(Complex c);
Json json_matrix(const Matrix& m);
Json json_ket(const Vector& v);
Json json_label(PauliLabel label);
Json json_labels(const std::vector<PauliLabel>& labels);
Json json_transform(TransformId t);
Json json_protocol(const DiscriminationProtocol& protocol);
Json json_protocol_report(const ProtocolReport& report);
Json json_outcome_support(const OutcomeDistribution& dist, double eps);
Json json_certificate(const Certificate& certificate);
Json json_theorem_summary(const TheoremSummary& summary);

// Inverse of json_matrix. Throws std::invalid_argument on malformed input.
Matrix matrix_from_json(const Json& j);

struct RunReport {
  std::string command;
  Json parameters = Json::object();
  Json result = Json::object();
  double tolerance = 0.0;
  std::optional<std::uint64_t> seed;
  double elapsed_ms = 0.0;  // diagnostics only; never serialized
};

// Canonical serialization: sorted keys, stable float formatting. elapsed_ms
// is excluded so identical inputs give byte-identical output.
std::string serialize_report(const RunReport& report, bool pretty);

}  // namespace locc
