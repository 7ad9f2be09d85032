// Acceptance suite: end-to-end checks of the operator algebra, the transform
// family, the theorem sweeps, the channel identities and the CLI contract.
// Prints one pass/fail line per criterion; exits nonzero if any fail.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locc/discrimination.hpp"
#include "locc/indistinguishability.hpp"
#include "locc/json_io.hpp"

using namespace locc;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int g_failures = 0;

void criterion(int number, const std::string& name,
               const std::function<Outcome()>& body,
               std::optional<double> budget_ms = std::nullopt) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome{false, ""};
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  if (budget_ms && ms > *budget_ms) {
    outcome.pass = false;
    outcome.detail += " [over time budget: " + std::to_string(ms) + " ms > " +
                      std::to_string(*budget_ms) + " ms]";
  }
  std::printf("[%s] criterion %d: %s (%.0f ms)%s%s\n",
              outcome.pass ? "PASS" : "FAIL", number, name.c_str(), ms,
              outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
  std::fflush(stdout);
  if (!outcome.pass) ++g_failures;
}

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(LOCC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Matrix pure_seed(double a, double b) {
  Vector ket = Vector::Zero(4);
  ket(0) = a;
  ket(3) = b;
  return projector(ket);
}

Matrix example2_seed() {
  Vector ket = Vector::Zero(8);
  ket(0) = ket(1) = ket(6) = ket(7) = 0.5;
  return projector(ket);
}

Outcome check_operator_algebra() {
  for (int d : {2, 3, 5, 7, 11, 13}) {
    const PrimeDimension dim(d);
    std::vector<Matrix> ops;
    ops.reserve(static_cast<std::size_t>(d) * d);
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) ops.push_back(build_pauli(dim, {m, n}));

    const int count = d * d;
    for (int a = 0; a < count; ++a) {
      if (!is_unitary(ops[a], 1e-10)) {
        return {false, "non-unitary Pauli at d=" + std::to_string(d)};
      }
      for (int b = 0; b < count; ++b) {
        const Complex hs = ops[a].conjugate().cwiseProduct(ops[b]).sum();
        const Complex expected_hs = a == b ? Complex(d) : Complex(0);
        if (std::abs(hs - expected_hs) > 1e-10) {
          return {false, "Hilbert-Schmidt orthogonality fails at d=" + std::to_string(d)};
        }
        const Complex phi =
            commutation_phase(dim, {a / d, a % d}, {b / d, b % d});
        const double gap =
            (ops[a] * ops[b] - phi * (ops[b] * ops[a])).cwiseAbs().maxCoeff();
        if (gap > 1e-10) {
          return {false, "commutation law fails at d=" + std::to_string(d)};
        }
      }
    }
  }
  return {true, "d in {2,3,5,7,11,13}: unitary, orthogonal, omega^{nk-ml} law"};
}

std::string scientific(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

Outcome check_halpha_fidelity() {
  double worst = 0.0;
  for (int d : {3, 5, 7, 11, 13}) {
    const PrimeDimension dim(d);
    for (int alpha = 0; alpha < d; ++alpha) {
      const HAlphaTransform h = build_h_alpha(dim, alpha);
      if (!is_unitary(h.matrix, 1e-10)) {
        return {false, "H_alpha not unitary at d=" + std::to_string(d)};
      }
      const ConjugationReport report = verify_conjugation(dim, alpha, 1e-9);
      worst = std::max(worst, report.max_residual);
      if (report.max_residual > 1e-9) {
        return {false, "conjugation residual " + scientific(report.max_residual)};
      }
    }
  }

  // d = 3: unnormalized entries against the hand-transcribed matrices.
  const PrimeDimension three(3);
  const Complex w = three.omega();
  const Complex w2 = three.omega_pow(2);
  const Complex one(1.0);
  const std::array<std::array<Complex, 9>, 3> expected{{
      {one, one, one, one, w2, w, one, w, w2},
      {one, one, w, one, w2, w2, one, w, one},
      {one, one, w2, one, w2, one, one, w, w},
  }};
  for (int alpha = 0; alpha < 3; ++alpha) {
    const Matrix h = build_h_alpha(three, alpha).matrix * std::sqrt(3.0);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        if (std::abs(h(j, k) - expected[alpha][3 * j + k]) > 1e-12) {
          return {false, "d=3 H_" + std::to_string(alpha) + " entry (" +
                             std::to_string(j) + "," + std::to_string(k) +
                             ") mismatch"};
        }
      }
  }
  return {true, "max conjugation residual " + scientific(worst)};
}

Outcome check_theorem_sweep() {
  const std::vector<std::pair<int, int>> exhaustive{
      {2, 2}, {3, 2}, {3, 3}, {5, 2}, {5, 3}, {7, 2}, {7, 3}, {7, 4}};
  std::uint64_t total = 0;
  for (const auto& [d, l] : exhaustive) {
    const TheoremSummary summary = verify_theorem(PrimeDimension(d), l, ExhaustiveMode{});
    total += summary.subsets_tried;
    if (!summary.guaranteed || summary.failures != 0) {
      return {false, "failures at (d,l)=(" + std::to_string(d) + "," +
                         std::to_string(l) + ")"};
    }
    if (d == 7 && l == 4 && summary.subsets_tried != 211876) {
      return {false, "expected 211876 subsets at (7,4), got " +
                         std::to_string(summary.subsets_tried)};
    }
  }
  for (int d : {11, 13}) {
    const TheoremSummary summary =
        verify_theorem(PrimeDimension(d), 5, SampledMode{100000, 20240817});
    total += summary.subsets_tried;
    if (!summary.guaranteed || summary.failures != 0) {
      return {false, "sampled failures at d=" + std::to_string(d)};
    }
  }
  return {true, std::to_string(total) + " subsets, zero failures"};
}

Outcome check_worked_examples() {
  const PrimeDimension three(3);

  const LabelSet first(three, {{0, 1}, {0, 2}, {1, 0}});
  const auto p1 = search_protocol(first);
  if (!p1 || p1->transform.is_identity() || p1->transform.alpha() != 0) {
    return {false, "{Z,Z^2,X} did not select H_0"};
  }
  const std::vector<int> powers{p1->transformed_labels[0].m,
                                p1->transformed_labels[1].m,
                                p1->transformed_labels[2].m};
  if (powers != std::vector<int>{1, 2, 0}) {
    return {false, "{Z,Z^2,X} transformed powers are not {1,2,0}"};
  }

  const std::vector<PauliLabel> second{{1, 0}, {0, 1}, {1, 1}};
  if (transform_distinguishes(three, second, TransformId::identity()) ||
      transform_distinguishes(three, second, TransformId::h_alpha(0)) ||
      transform_distinguishes(three, second, TransformId::h_alpha(1))) {
    return {false, "{X,Z,XZ} unexpectedly separable before H_2"};
  }
  const LabelSet second_set(three, second);
  const auto p2 = search_protocol(second_set);
  if (!p2 || p2->transform.is_identity() || p2->transform.alpha() != 2) {
    return {false, "{X,Z,XZ} did not select H_2"};
  }

  auto deterministic = [](const LabelSet& set, const DiscriminationProtocol& protocol) {
    const ProtocolReport report = verify_protocol(set, protocol, 1e-10);
    if (!report.ok) return false;
    for (const StateReport& s : report.states) {
      if (std::abs(s.correct_probability - 1.0) > 1e-10) return false;
    }
    return true;
  };
  if (!deterministic(first, *p1) || !deterministic(second_set, *p2)) {
    return {false, "simulation is not deterministic with probability 1"};
  }
  return {true, "H_0 and H_2 selections with deterministic simulation"};
}

Outcome check_bell_ladder() {
  const PrimeDimension two(2);

  const LabelSet pair(two, {{0, 0}, {1, 0}});
  const auto protocol = search_protocol(pair);
  if (!protocol || !verify_protocol(pair, *protocol).ok) {
    return {false, "two Bell states not verified"};
  }

  const LabelSet all_four(two, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  if (search_protocol(all_four)) {
    return {false, "four Bell states unexpectedly got a protocol"};
  }
  const Matrix bell = projector(phi_plus(two).amplitudes);
  const Certificate c = certify(full_orbit(two, {2, 2}, bell));
  if (c.verdict != Verdict::CertifiedLoccIndistinguishable) {
    return {false, "four Bell states not certified"};
  }

  bool refused = false;
  try {
    certify(partial_orbit(two, {2, 2}, bell, {{0, 0}, {0, 1}, {1, 0}}));
  } catch (const std::invalid_argument&) {
    refused = true;
  }
  if (!refused) return {false, "three Bell states were not refused"};
  return {true, "protocol for 2, certificate for 4, refusal for 3"};
}

std::vector<std::pair<std::string, OrbitEnsemble>> evidence_orbits() {
  const PrimeDimension two(2);
  std::vector<std::pair<std::string, OrbitEnsemble>> orbits;
  orbits.emplace_back("phi-plus",
                      full_orbit(two, {2, 2}, projector(phi_plus(two).amplitudes)));
  orbits.emplace_back("werner 0.7", full_orbit(two, {2, 2}, werner_state(0.7)));
  orbits.emplace_back("pure 0.6,0.8", full_orbit(two, {2, 2}, pure_seed(0.6, 0.8)));
  orbits.emplace_back("2x4", full_orbit(two, {2, 4}, example2_seed()));
  return orbits;
}

Outcome check_channel_identities() {
  for (int d : {2, 3}) {
    const double residual = verify_symmetry_identity(PrimeDimension(d));
    if (residual > 1e-10) {
      return {false, "symmetry residual " + std::to_string(residual) +
                         " at d=" + std::to_string(d)};
    }
  }
  if (verify_symmetry_identity(PrimeDimension(5)) > 1e-9) {
    return {false, "symmetry residual over 1e-9 at d=5"};
  }
  for (int d : {2, 3, 5}) {
    if (schmidt_swap_check(PrimeDimension(d)) > 1e-10) {
      return {false, "schmidt swap residual over 1e-10 at d=" + std::to_string(d)};
    }
  }
  for (const auto& [name, orbit] : evidence_orbits()) {
    const DetectorResult detector = detector_state(orbit, 1e-10);
    if (detector.consistency_residual > 1e-10) {
      return {false, "detector paths disagree for seed " + name};
    }
  }
  return {true, "symmetry, swap and dual-path residuals within bounds"};
}

Outcome check_ppt_evidence() {
  for (const auto& [name, orbit] : evidence_orbits()) {
    const double min_eig = ppt_min_eigenvalue(detector_state(orbit).state);
    if (min_eig < -1e-10) {
      return {false, "detector for seed " + name + " is NPT: " +
                         std::to_string(min_eig)};
    }
  }
  // negative control: the maximally entangled state itself
  const Matrix bell = projector(phi_plus(PrimeDimension(2)).amplitudes);
  const Matrix pt = partial_transpose(bell, {2, 2});
  Eigen::SelfAdjointEigenSolver<Matrix> solver((pt + pt.adjoint()) / 2.0);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (std::abs(min_eig + 0.5) > 1e-10) {
    return {false, "Bell partial transpose min eigenvalue is " +
                       std::to_string(min_eig) + ", expected -0.5"};
  }
  return {true, "all detector states PPT; Bell control at -1/2"};
}

Outcome check_certificates() {
  const PrimeDimension two(2);
  const std::vector<std::pair<std::string, Matrix>> certified_seeds{
      {"phi-plus", projector(phi_plus(two).amplitudes)},
      {"pure 0.6,0.8", pure_seed(0.6, 0.8)},
      {"werner 0.4", werner_state(0.4)},
      {"werner 0.7", werner_state(0.7)},
      {"werner 1.0", werner_state(1.0)},
  };
  for (const auto& [name, seed] : certified_seeds) {
    const Certificate c = certify(full_orbit(two, {2, 2}, seed));
    if (c.verdict != Verdict::CertifiedLoccIndistinguishable) {
      return {false, name + " not certified"};
    }
  }
  const Certificate c24 = certify(example2_ensemble());
  if (c24.verdict != Verdict::CertifiedLoccIndistinguishable) {
    return {false, "2x4 ensemble not certified"};
  }

  const Certificate degenerate = certify(full_orbit(two, {2, 2}, werner_state(0.25)));
  if (degenerate.verdict != Verdict::Inconclusive || degenerate.rank != 1) {
    return {false, "werner 0.25 should be inconclusive with rank 1"};
  }

  // the four 2x4 kets are pairwise orthogonal
  Vector seed_ket = Vector::Zero(8);
  seed_ket(0) = seed_ket(1) = seed_ket(6) = seed_ket(7) = 0.5;
  std::vector<Vector> kets;
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n) {
      kets.push_back(tensor(build_pauli(two, {m, n}), Matrix::Identity(4, 4)) *
                     seed_ket);
    }
  for (std::size_t i = 0; i < kets.size(); ++i)
    for (std::size_t j = i + 1; j < kets.size(); ++j) {
      if (std::abs(kets[i].dot(kets[j])) > 1e-12) {
        return {false, "2x4 kets are not orthogonal"};
      }
    }
  return {true, "verdicts and rank-1 degeneracy as required"};
}

Outcome check_cli_determinism() {
  const std::vector<std::pair<std::string, int>> commands{
      {"distinguish --d 3 --labels '0,1;0,2;1,0'", 0},
      {"distinguish --d 2 --labels '0,0;0,1;1,0;1,1'", 3},
      {"certify --d 2 --seed werner:0.25", 4},
      {"verify --d 3 --which identities", 0},
      {"verify --d 13 --which theorem --l 5 --mode sampled --count 1000 --seed 42", 0},
      {"examples", 0},
  };
  for (const auto& [args, expected_code] : commands) {
    const CliResult first = run_cli(args);
    const CliResult second = run_cli(args);
    if (first.exit_code != expected_code) {
      return {false, "'" + args + "' exited " + std::to_string(first.exit_code) +
                         ", expected " + std::to_string(expected_code)};
    }
    if (first.out.empty() || first.out != second.out ||
        first.exit_code != second.exit_code) {
      return {false, "'" + args + "' is not byte-identical across runs"};
    }
  }
  return {true, std::to_string(commands.size()) + " commands byte-identical"};
}

}  // namespace

int main() {
  criterion(1, "operator algebra", check_operator_algebra, 5000.0);
  criterion(2, "H_alpha fidelity", check_halpha_fidelity, 10000.0);
  criterion(3, "theorem sweep", check_theorem_sweep, 60000.0);
  criterion(4, "worked examples", check_worked_examples);
  criterion(5, "Bell-state ladder", check_bell_ladder);
  criterion(6, "channel identities", check_channel_identities);
  criterion(7, "PPT evidence", check_ppt_evidence);
  criterion(8, "certificates", check_certificates);
  criterion(9, "CLI determinism", check_cli_determinism);

  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
