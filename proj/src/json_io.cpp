#include "locc/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace locc {

double round_sig(double v, int digits) {
  if (v == 0.0 || !std::isfinite(v)) return v;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

Json json_real(double v) { return round_sig(v); }

Json json_complex(Complex c) {
  return Json::array({json_real(c.real()), json_real(c.imag())});
}

Json json_matrix(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(json_complex(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_ket(const Vector& v) {
  Json amps = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) amps.push_back(json_complex(v(i)));
  return amps;
}

Json json_label(PauliLabel label) { return Json::array({label.m, label.n}); }

Json json_labels(const std::vector<PauliLabel>& labels) {
  Json out = Json::array();
  for (PauliLabel l : labels) out.push_back(json_label(l));
  return out;
}

Json json_transform(TransformId t) {
  if (t.is_identity()) return Json{{"kind", "identity"}};
  return Json{{"kind", "h_alpha"}, {"alpha", t.alpha()}};
}

Json json_protocol(const DiscriminationProtocol& protocol) {
  Json decision = Json::array();
  for (const auto& [power, index] : protocol.decision) {
    decision.push_back(Json::array({power, index}));
  }
  return Json{{"transform", json_transform(protocol.transform)},
              {"alice_unitary", json_matrix(protocol.alice_unitary)},
              {"bob_unitary", json_matrix(protocol.bob_unitary)},
              {"labels", json_labels(protocol.labels)},
              {"transformed_labels", json_labels(protocol.transformed_labels)},
              {"decision", std::move(decision)}};
}

Json json_outcome_support(const OutcomeDistribution& dist, double eps) {
  Json support = Json::array();
  for (int a = 0; a < dist.d; ++a)
    for (int b = 0; b < dist.d; ++b) {
      const double p = dist.probabilities(a, b);
      if (p > eps) {
        support.push_back(Json{{"outcome", Json::array({a, b})},
                               {"probability", json_real(p)}});
      }
    }
  return support;
}

Json json_protocol_report(const ProtocolReport& report) {
  Json states = Json::array();
  for (const StateReport& s : report.states) {
    states.push_back(Json{{"label", json_label(s.label)},
                          {"x_power", s.x_power},
                          {"support_size", s.support_size},
                          {"correct_probability", json_real(s.correct_probability)},
                          {"ok", s.ok}});
  }
  return Json{{"ok", report.ok}, {"states", std::move(states)}};
}

Json json_certificate(const Certificate& certificate) {
  Json sigma = Json::array();
  for (double s : certificate.singular_values) sigma.push_back(json_real(s));
  Json out{{"verdict", verdict_name(certificate.verdict)},
           {"rank", certificate.rank},
           {"singular_values", std::move(sigma)}};
  if (certificate.verdict == Verdict::CertifiedLoccIndistinguishable) {
    out["symmetry_residual"] = json_real(certificate.symmetry_residual);
    out["ppt_min_eigenvalue"] = json_real(certificate.ppt_min_eig);
  }
  if (!certificate.reason.empty()) out["reason"] = certificate.reason;
  return out;
}

Json json_theorem_summary(const TheoremSummary& summary) {
  Json witnesses = Json::array();
  for (const auto& w : summary.failure_witnesses) witnesses.push_back(json_labels(w));
  Json out{{"d", summary.d},
           {"l", summary.l},
           {"guaranteed", summary.guaranteed},
           {"mode", summary.sampled ? "sampled" : "exhaustive"},
           {"subsets_tried", summary.subsets_tried},
           {"successes", summary.successes},
           {"failures", summary.failures},
           {"failure_witnesses", std::move(witnesses)}};
  if (summary.seed) out["seed"] = *summary.seed;
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("matrix_from_json: expected a nonempty array of rows");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j.at(0).is_array() ? j.at(0).size() : 0;
  if (cols == 0) throw std::invalid_argument("matrix_from_json: empty row");
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j.at(r);
    if (!row.is_array() || row.size() != cols) {
      throw std::invalid_argument("matrix_from_json: ragged rows");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& entry = row.at(c);
      if (!entry.is_array() || entry.size() != 2 || !entry.at(0).is_number() ||
          !entry.at(1).is_number()) {
        throw std::invalid_argument("matrix_from_json: entries must be [re, im]");
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

std::string serialize_report(const RunReport& report, bool pretty) {
  Json j{{"command", report.command},
         {"parameters", report.parameters},
         {"result", report.result},
         {"tolerance", json_real(report.tolerance)}};
  if (report.seed) j["seed"] = *report.seed;
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace locc
