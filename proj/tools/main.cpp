// locc: construct, simulate and certify LOCC discrimination protocols for
// Pauli orbits of maximally entangled states. JSON on stdout, diagnostics on
// stderr. Exit codes: 0 ok, 2 usage/input error, 3 no protocol found,
// 4 inconclusive certificate.

#include <cctype>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "locc/json_io.hpp"

namespace {

using namespace locc;

constexpr std::uint64_t kExhaustiveCap = 10'000'000;
constexpr int kIdentitiesMaxD = 7;  // the symmetry check builds d^4 x d^4 matrices

struct CommonOpts {
  double tol = 1e-9;
  bool pretty = false;
};

void add_common(CLI::App* sub, CommonOpts& opts) {
  sub->add_option("--tol", opts.tol, "Comparison tolerance")->capture_default_str();
  sub->add_flag("--pretty", opts.pretty, "Indented JSON output");
  bool compact = false;
  sub->add_flag("--json", compact, "Compact JSON output (default)");
}

int emit(RunReport& report, const std::chrono::steady_clock::time_point& start,
         const CommonOpts& opts, int exit_code) {
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();
  std::cout << serialize_report(report, opts.pretty) << "\n";
  std::cerr << "# " << report.command << " elapsed_ms=" << report.elapsed_ms << "\n";
  return exit_code;
}

long long parse_integer(const std::string& token) {
  std::size_t pos = 0;
  const long long value = std::stoll(token, &pos);
  while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) {
    ++pos;
  }
  if (pos != token.size()) {
    throw std::invalid_argument("trailing characters in integer '" + token + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, sep)) parts.push_back(part);
  return parts;
}

std::vector<PauliLabel> parse_labels(const PrimeDimension& dim, const std::string& text) {
  std::vector<PauliLabel> labels;
  for (const std::string& token : split(text, ';')) {
    const std::vector<std::string> pair = split(token, ',');
    if (pair.size() != 2) {
      throw std::invalid_argument("label '" + token + "' is not of the form m,n");
    }
    labels.push_back(make_label(dim, parse_integer(pair[0]), parse_integer(pair[1])));
  }
  if (labels.empty()) throw std::invalid_argument("no labels given");
  return labels;
}

// Seed specs: phi-plus | pure:c0,c1,... | werner:p | file:PATH
struct SeedSpec {
  Matrix density;
  BipartiteShape shape;
};

SeedSpec parse_seed(const PrimeDimension& dim, const std::string& spec) {
  const int d = dim.d();
  if (spec == "phi-plus") {
    return {projector(phi_plus(dim).amplitudes), {d, d}};
  }
  if (spec.rfind("pure:", 0) == 0) {
    const std::vector<std::string> parts = split(spec.substr(5), ',');
    if (static_cast<int>(parts.size()) != d) {
      throw std::invalid_argument("pure seed needs exactly d coefficients");
    }
    Vector ket = Vector::Zero(static_cast<Eigen::Index>(d) * d);
    for (int j = 0; j < d; ++j) {
      ket(static_cast<Eigen::Index>(j) * d + j) = std::stod(parts[j]);
    }
    const double norm = ket.norm();
    if (norm < 1e-12) throw std::invalid_argument("pure seed is the zero vector");
    ket /= norm;
    return {projector(ket), {d, d}};
  }
  if (spec.rfind("werner:", 0) == 0) {
    if (d != 2) throw std::invalid_argument("werner seeds are defined for d = 2");
    return {werner_state(std::stod(spec.substr(7))), {2, 2}};
  }
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open seed file '" + path + "'");
    const Json j = Json::parse(in);
    if (!j.contains("dA") || !j.contains("dB") || !j.contains("matrix")) {
      throw std::invalid_argument("seed file needs dA, dB and matrix fields");
    }
    const BipartiteShape shape{j.at("dA").get<int>(), j.at("dB").get<int>()};
    if (shape.dA != d) {
      throw std::invalid_argument("seed file dA does not match --d");
    }
    const Matrix density = matrix_from_json(j.at("matrix"));
    if (density.rows() != shape.total() || !is_density(density)) {
      throw std::invalid_argument("seed file does not hold a valid density matrix");
    }
    return {density, shape};
  }
  throw std::invalid_argument("unknown seed spec '" + spec + "'");
}

int cmd_paulis(int d, const std::string& labels_text, const CommonOpts& opts) {
  const auto start = std::chrono::steady_clock::now();
  const PrimeDimension dim(d);

  std::vector<PauliLabel> labels;
  if (labels_text.empty()) {
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) labels.push_back({m, n});
  } else {
    labels = parse_labels(dim, labels_text);
  }

  Json operators = Json::array();
  for (const PauliLabel& label : labels) {
    operators.push_back(Json{{"label", json_label(label)},
                             {"matrix", json_matrix(build_pauli(dim, label))}});
  }

  RunReport report;
  report.command = "paulis";
  report.parameters = Json{{"d", d}};
  if (!labels_text.empty()) report.parameters["labels"] = labels_text;
  report.result = Json{{"omega", json_complex(dim.omega())},
                       {"operators", std::move(operators)}};
  report.tolerance = opts.tol;
  return emit(report, start, opts, 0);
}

int cmd_distinguish(int d, const std::string& labels_text, const CommonOpts& opts) {
  const auto start = std::chrono::steady_clock::now();
  const PrimeDimension dim(d);
  const LabelSet set(dim, parse_labels(dim, labels_text));

  RunReport report;
  report.command = "distinguish";
  report.parameters =
      Json{{"d", d}, {"labels", json_labels(set.labels())}, {"tol", json_real(opts.tol)}};
  report.tolerance = opts.tol;

  const auto protocol = search_protocol(set);
  if (!protocol) {
    report.result = Json{{"found", false}, {"verdict", "no-protocol-in-family"}};
    return emit(report, start, opts, 3);
  }

  const ProtocolReport verification = verify_protocol(set, *protocol, opts.tol);
  Json supports = Json::array();
  for (const PauliLabel& label : set.labels()) {
    supports.push_back(
        Json{{"label", json_label(label)},
             {"support",
              json_outcome_support(simulate_protocol(*protocol, label), opts.tol)}});
  }
  report.result = Json{{"found", true},
                       {"verdict", verdict_name(Verdict::DistinguishableWithProtocol)},
                       {"protocol", json_protocol(*protocol)},
                       {"verification", json_protocol_report(verification)},
                       {"supports", std::move(supports)}};
  return emit(report, start, opts, verification.ok ? 0 : 1);
}

int cmd_certify(int d, const std::string& seed_spec, const CommonOpts& opts) {
  const auto start = std::chrono::steady_clock::now();
  const PrimeDimension dim(d);
  const SeedSpec seed = parse_seed(dim, seed_spec);
  const OrbitEnsemble orbit = full_orbit(dim, seed.shape, seed.density);
  const Certificate certificate = certify(orbit);

  RunReport report;
  report.command = "certify";
  report.parameters = Json{{"d", d},
                           {"seed", seed_spec},
                           {"shape", Json{{"dA", seed.shape.dA}, {"dB", seed.shape.dB}}},
                           {"tol", json_real(opts.tol)}};
  report.result = json_certificate(certificate);
  report.tolerance = opts.tol;
  const bool certified =
      certificate.verdict == Verdict::CertifiedLoccIndistinguishable;
  return emit(report, start, opts, certified ? 0 : 4);
}

int cmd_verify_identities(const PrimeDimension& dim, RunReport& report,
                          const std::chrono::steady_clock::time_point& start,
                          const CommonOpts& opts) {
  const int d = dim.d();
  if (d > kIdentitiesMaxD) {
    throw std::invalid_argument(
        "identities verification builds d^4-dimensional matrices; use d <= " +
        std::to_string(kIdentitiesMaxD));
  }

  Json conjugation = Json::array();
  double conjugation_max = 0.0;
  const int alpha_count = d == 2 ? 1 : d;
  for (int alpha = 0; alpha < alpha_count; ++alpha) {
    const ConjugationReport r = verify_conjugation(dim, alpha, opts.tol);
    conjugation_max = std::max(conjugation_max, r.max_residual);
    conjugation.push_back(
        Json{{"alpha", alpha}, {"max_residual", json_real(r.max_residual)}});
  }
  const double swap_residual = schmidt_swap_check(dim);
  const double symmetry_residual = verify_symmetry_identity(dim);
  const bool ok = conjugation_max <= opts.tol && swap_residual <= opts.tol &&
                  symmetry_residual <= opts.tol;

  report.result = Json{{"which", "identities"},
                       {"conjugation", std::move(conjugation)},
                       {"conjugation_max_residual", json_real(conjugation_max)},
                       {"schmidt_swap_residual", json_real(swap_residual)},
                       {"symmetry_residual", json_real(symmetry_residual)},
                       {"ok", ok}};
  return emit(report, start, opts, ok ? 0 : 1);
}

int cmd_verify(int d, const std::string& which, int l, const std::string& mode,
               std::uint64_t count, std::uint64_t seed, const CommonOpts& opts) {
  const auto start = std::chrono::steady_clock::now();
  const PrimeDimension dim(d);

  RunReport report;
  report.command = "verify";
  report.parameters = Json{{"d", d}, {"which", which}, {"tol", json_real(opts.tol)}};
  report.tolerance = opts.tol;

  if (which == "identities") {
    return cmd_verify_identities(dim, report, start, opts);
  }
  if (which != "theorem") {
    throw std::invalid_argument("--which must be identities or theorem");
  }

  report.parameters["l"] = l;
  report.parameters["mode"] = mode;
  SweepMode sweep;
  if (mode == "exhaustive") {
    if (subset_count(dim, l, kExhaustiveCap) > kExhaustiveCap) {
      throw std::invalid_argument(
          "exhaustive enumeration exceeds the cap of 10^7 subsets; use --mode sampled");
    }
    sweep = ExhaustiveMode{};
  } else if (mode == "sampled") {
    report.parameters["count"] = count;
    report.parameters["seed"] = seed;
    report.seed = seed;
    sweep = SampledMode{count, seed};
  } else {
    throw std::invalid_argument("--mode must be exhaustive or sampled");
  }

  const TheoremSummary summary = verify_theorem(dim, l, sweep);
  const bool ok = !summary.guaranteed || summary.failures == 0;
  report.result = json_theorem_summary(summary);
  report.result["ok"] = ok;
  return emit(report, start, opts, ok ? 0 : 1);
}

struct ExampleRow {
  std::string name;
  std::string detail;
  bool pass = false;
};

ExampleRow run_distinguish_example(const std::string& name, int d,
                                   const std::vector<PauliLabel>& labels,
                                   const std::optional<int>& expected_alpha) {
  const PrimeDimension dim(d);
  const LabelSet set(dim, labels);
  const auto protocol = search_protocol(set);
  if (!protocol) return {name, "no protocol in family", false};

  const std::string transform =
      protocol->transform.is_identity()
          ? "identity"
          : "H_" + std::to_string(protocol->transform.alpha());
  const bool verified = verify_protocol(set, *protocol).ok;
  const bool alpha_ok = !expected_alpha ||
                        (!protocol->transform.is_identity() &&
                         protocol->transform.alpha() == *expected_alpha);
  return {name, transform + (verified ? "; verified" : "; verification FAILED"),
          verified && alpha_ok};
}

int cmd_examples(const CommonOpts& opts) {
  const auto start = std::chrono::steady_clock::now();
  const PrimeDimension two(2);
  std::vector<ExampleRow> rows;

  rows.push_back(
      run_distinguish_example("d=3 {Z, Z^2, X}", 3, {{0, 1}, {0, 2}, {1, 0}}, 0));
  rows.push_back(
      run_distinguish_example("d=3 {X, Z, XZ}", 3, {{1, 0}, {0, 1}, {1, 1}}, 2));
  rows.push_back(
      run_distinguish_example("two Bell states", 2, {{0, 0}, {1, 0}}, std::nullopt));

  {  // three Bell states: no protocol, and certification refuses partial orbits
    const bool no_protocol =
        !find_transform(two, {{0, 0}, {0, 1}, {1, 0}}).has_value();
    bool refused = false;
    try {
      certify(partial_orbit(two, {2, 2}, projector(phi_plus(two).amplitudes),
                            {{0, 0}, {0, 1}, {1, 0}}));
    } catch (const std::invalid_argument&) {
      refused = true;
    }
    rows.push_back({"three Bell states",
                    "no protocol; certificate refused (partial orbit)",
                    no_protocol && refused});
  }

  {  // four Bell states: no protocol and a certified full orbit
    const bool no_protocol =
        !find_transform(two, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}).has_value();
    const Certificate c =
        certify(full_orbit(two, {2, 2}, projector(phi_plus(two).amplitudes)));
    const bool certified = c.verdict == Verdict::CertifiedLoccIndistinguishable;
    rows.push_back({"four Bell states", "no protocol; certified indistinguishable",
                    no_protocol && certified});
  }

  {  // pure seed 0.6|00> + 0.8|11>
    Vector ket = Vector::Zero(4);
    ket(0) = 0.6;
    ket(3) = 0.8;
    const Certificate c = certify(full_orbit(two, {2, 2}, projector(ket)));
    rows.push_back({"pure seed 0.6|00>+0.8|11>", verdict_name(c.verdict),
                    c.verdict == Verdict::CertifiedLoccIndistinguishable});
  }

  {  // the 2x4 orthogonal ensemble
    const Certificate c = certify(example2_ensemble());
    rows.push_back({"2x4 orthogonal ensemble", verdict_name(c.verdict),
                    c.verdict == Verdict::CertifiedLoccIndistinguishable});
  }

  for (double p : {0.25, 0.4, 0.7, 1.0}) {
    const Certificate c = certify(full_orbit(two, {2, 2}, werner_state(p)));
    const bool expect_inconclusive = p == 0.25;
    const bool pass = expect_inconclusive
                          ? c.verdict == Verdict::Inconclusive
                          : c.verdict == Verdict::CertifiedLoccIndistinguishable;
    std::string detail = verdict_name(c.verdict);
    if (c.verdict == Verdict::Inconclusive) {
      detail += " (rank " + std::to_string(c.rank) + ")";
    }
    std::ostringstream name;
    name << "Werner p=" << p;
    rows.push_back({name.str(), detail, pass});
  }

  bool all_pass = true;
  Json json_rows = Json::array();
  for (const ExampleRow& row : rows) {
    all_pass = all_pass && row.pass;
    json_rows.push_back(
        Json{{"name", row.name}, {"detail", row.detail}, {"pass", row.pass}});
    std::cerr << (row.pass ? "[pass] " : "[FAIL] ") << row.name << ": " << row.detail
              << "\n";
  }

  RunReport report;
  report.command = "examples";
  report.result = Json{{"rows", std::move(json_rows)}, {"all_pass", all_pass}};
  report.tolerance = opts.tol;
  return emit(report, start, opts, all_pass ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LOCC discrimination of Pauli orbits of maximally entangled states"};
  app.require_subcommand(1);

  CommonOpts opts;
  int d = 0;
  std::string labels_text;
  std::string seed_spec;
  std::string which;
  int l = 2;
  std::string mode = "exhaustive";
  std::uint64_t count = 100000;
  std::uint64_t sweep_seed = 0;

  CLI::App* paulis = app.add_subcommand("paulis", "Print generalized Pauli matrices");
  paulis->add_option("--d", d, "Prime local dimension")->required();
  paulis->add_option("--labels", labels_text, "Labels m,n;m,n;... (default: all)");
  add_common(paulis, opts);

  CLI::App* distinguish =
      app.add_subcommand("distinguish", "Search and verify a discrimination protocol");
  distinguish->add_option("--d", d, "Prime local dimension")->required();
  distinguish->add_option("--labels", labels_text, "Labels m,n;m,n;...")->required();
  add_common(distinguish, opts);

  CLI::App* certify_cmd =
      app.add_subcommand("certify", "Certify LOCC indistinguishability of a full orbit");
  certify_cmd->add_option("--d", d, "Prime local dimension")->required();
  certify_cmd
      ->add_option("--seed", seed_spec,
                   "Seed: phi-plus | pure:c0,c1,... | werner:p | file:PATH")
      ->required();
  add_common(certify_cmd, opts);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Verification sweeps");
  verify_cmd->add_option("--d", d, "Prime local dimension")->required();
  verify_cmd->add_option("--which", which, "identities | theorem")->required();
  verify_cmd->add_option("--l", l, "Subset size for the theorem sweep");
  verify_cmd->add_option("--mode", mode, "exhaustive | sampled")->capture_default_str();
  verify_cmd->add_option("--count", count, "Sampled subset count")->capture_default_str();
  verify_cmd->add_option("--seed", sweep_seed, "Sampling seed")->capture_default_str();
  add_common(verify_cmd, opts);

  CLI::App* examples = app.add_subcommand("examples", "Reproduce the named scenarios");
  add_common(examples, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(paulis)) return cmd_paulis(d, labels_text, opts);
    if (app.got_subcommand(distinguish)) return cmd_distinguish(d, labels_text, opts);
    if (app.got_subcommand(certify_cmd)) return cmd_certify(d, seed_spec, opts);
    if (app.got_subcommand(verify_cmd)) {
      return cmd_verify(d, which, l, mode, count, sweep_seed, opts);
    }
    if (app.got_subcommand(examples)) return cmd_examples(opts);
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
