#include "locc/indistinguishability.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace locc {

namespace {

std::vector<PauliLabel> all_labels(const PrimeDimension& dim) {
  std::vector<PauliLabel> labels;
  labels.reserve(static_cast<std::size_t>(dim.d()) * dim.d());
  for (int m = 0; m < dim.d(); ++m)
    for (int n = 0; n < dim.d(); ++n) labels.push_back({m, n});
  return labels;
}

OrbitEnsemble build_orbit(const PrimeDimension& dim, const BipartiteShape& shape,
                          const Matrix& seed, std::vector<PauliLabel> labels) {
  if (shape.dA != dim.d()) {
    throw std::invalid_argument("orbit: shape.dA must equal the prime dimension");
  }
  if (seed.rows() != shape.total() || seed.cols() != shape.total()) {
    throw std::invalid_argument("orbit: seed shape mismatch");
  }
  if (!is_density(seed, 1e-8)) {
    throw std::invalid_argument("orbit: seed is not a density matrix");
  }
  OrbitEnsemble ensemble{dim, shape, seed, std::move(labels), {}};
  const Matrix eye_b = Matrix::Identity(shape.dB, shape.dB);
  ensemble.members.reserve(ensemble.labels.size());
  for (const PauliLabel& label : ensemble.labels) {
    const Matrix k = tensor(build_pauli(dim, label), eye_b);
    ensemble.members.push_back(k * seed * k.adjoint());
  }
  return ensemble;
}

}  // namespace

OrbitEnsemble full_orbit(const PrimeDimension& dim, const BipartiteShape& shape,
                         const Matrix& seed) {
  return build_orbit(dim, shape, seed, all_labels(dim));
}

OrbitEnsemble partial_orbit(const PrimeDimension& dim, const BipartiteShape& shape,
                            const Matrix& seed, const std::vector<PauliLabel>& labels) {
  return build_orbit(dim, shape, seed, labels);
}

bool is_full_orbit(const OrbitEnsemble& ensemble) {
  const std::size_t expected =
      static_cast<std::size_t>(ensemble.dim.d()) * ensemble.dim.d();
  if (ensemble.labels.size() != expected) return false;
  std::vector<PauliLabel> sorted = ensemble.labels;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Matrix apply_channel(const PrimeDimension& dim, const Matrix& rho_ac) {
  const int d = dim.d();
  const int total = d * d;
  if (rho_ac.rows() != total || rho_ac.cols() != total) {
    throw std::invalid_argument("apply_channel: input must live on d (x) d");
  }
  Matrix out = Matrix::Zero(total, total);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      const Matrix k = tensor(build_pauli(dim, {m, n}),
                              build_pauli(dim, make_label(dim, m, -n)));
      out += k * rho_ac * k.adjoint();
    }
  return out / static_cast<double>(total);
}

FourPartyState channel_on_four_party(const PrimeDimension& dim,
                                     const FourPartyState& input) {
  const int d = dim.d();
  if (input.dims[0] != d || input.dims[2] != d) {
    throw std::invalid_argument("channel_on_four_party: A and C must have dimension d");
  }
  const std::vector<int> dims_abcd(input.dims.begin(), input.dims.end());
  if (input.rho.rows() != input.total() || input.rho.cols() != input.total()) {
    throw std::invalid_argument("channel_on_four_party: matrix size mismatch");
  }

  // Regroup to (A,C),(B,D), act, and swap back.
  const Matrix rho_acbd = permute_subsystems(input.rho, dims_abcd, {0, 2, 1, 3});
  const std::vector<int> dims_acbd{d, d, input.dims[1], input.dims[3]};
  const Matrix eye_bd =
      Matrix::Identity(input.dims[1] * input.dims[3], input.dims[1] * input.dims[3]);

  Matrix out = Matrix::Zero(rho_acbd.rows(), rho_acbd.cols());
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      const Matrix k = tensor(tensor(build_pauli(dim, {m, n}),
                                     build_pauli(dim, make_label(dim, m, -n))),
                              eye_bd);
      out += k * rho_acbd * k.adjoint();
    }
  out /= static_cast<double>(d) * d;

  return {input.dims, permute_subsystems(out, dims_acbd, {0, 2, 1, 3})};
}

double verify_symmetry_identity(const PrimeDimension& dim) {
  const int d = dim.d();
  const Eigen::Index total = static_cast<Eigen::Index>(d) * d * d * d;

  // Both sides of the identity share the same mixture of projector pairs;
  // they differ only in which factors each pair is attached to. Read the sum
  // once as the AB:CD pairing and once as the AC:BD pairing reordered into
  // the common A,B,C,D layout.
  Matrix paired = Matrix::Zero(total, total);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      const Matrix first = projector(phi_mn(dim, {m, n}).amplitudes);
      const Matrix second = projector(phi_mn(dim, make_label(dim, m, -n)).amplitudes);
      paired += tensor(first, second);
    }
  paired /= static_cast<double>(d) * d;

  const Matrix ac_bd_reordered =
      permute_subsystems(paired, {d, d, d, d}, {0, 2, 1, 3});  // A,C,B,D -> A,B,C,D
  return (paired - ac_bd_reordered).cwiseAbs().maxCoeff();
}

DetectorResult detector_state(const OrbitEnsemble& ensemble, double tol) {
  if (!is_full_orbit(ensemble)) {
    throw std::invalid_argument("detector_state: full orbit required");
  }
  const PrimeDimension& dim = ensemble.dim;
  const int d = dim.d();
  const int dp = ensemble.shape.dB;
  const std::array<int, 4> dims{d, dp, d, d};
  const Eigen::Index total = static_cast<Eigen::Index>(d) * dp * d * d;

  Matrix mixture = Matrix::Zero(total, total);
  for (std::size_t i = 0; i < ensemble.labels.size(); ++i) {
    const PauliLabel label = ensemble.labels[i];
    const Matrix det =
        projector(phi_mn(dim, make_label(dim, label.m, -label.n)).amplitudes);
    mixture += tensor(ensemble.members[i], det);
  }
  mixture /= static_cast<double>(d) * d;

  const FourPartyState input{
      dims, tensor(ensemble.seed, projector(phi_plus(dim).amplitudes))};
  const FourPartyState via_channel = channel_on_four_party(dim, input);

  const double residual = (mixture - via_channel.rho).cwiseAbs().maxCoeff();
  if (residual > tol) {
    throw std::runtime_error(
        "detector_state: mixture and channel constructions disagree (residual " +
        std::to_string(residual) + ")");
  }
  return {{dims, std::move(mixture)}, residual};
}

double ppt_min_eigenvalue(const FourPartyState& state) {
  const std::vector<int> dims(state.dims.begin(), state.dims.end());
  const Matrix acbd = permute_subsystems(state.rho, dims, {0, 2, 1, 3});
  const BipartiteShape cut{state.dims[0] * state.dims[2],
                           state.dims[1] * state.dims[3]};
  const Matrix pt = partial_transpose(acbd, cut);
  Eigen::SelfAdjointEigenSolver<Matrix> solver((pt + pt.adjoint()) / 2.0);
  return solver.eigenvalues().minCoeff();
}

IndependenceReport linear_independence(const OrbitEnsemble& ensemble,
                                       double tol_ratio) {
  const Eigen::Index n = ensemble.seed.rows();
  const Eigen::Index rows = static_cast<Eigen::Index>(ensemble.members.size());
  Matrix stacked(rows, n * n);
  for (Eigen::Index i = 0; i < rows; ++i) {
    stacked.row(i) = ensemble.members[i].reshaped().transpose();
  }
  Eigen::BDCSVD<Matrix> svd(stacked);
  const Eigen::VectorXd sigma = svd.singularValues();

  IndependenceReport report;
  report.singular_values.assign(sigma.data(), sigma.data() + sigma.size());
  const double cutoff = sigma.size() > 0 ? tol_ratio * sigma(0) : 0.0;
  for (double s : report.singular_values) {
    if (s > cutoff && s > 0.0) ++report.rank;
  }
  return report;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::DistinguishableWithProtocol:
      return "distinguishable-with-protocol";
    case Verdict::CertifiedLoccIndistinguishable:
      return "certified-locc-indistinguishable";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

Certificate certify(const OrbitEnsemble& ensemble) {
  if (!is_full_orbit(ensemble)) {
    throw std::invalid_argument("certify: ensemble is not a full d^2-member orbit");
  }
  const int d = ensemble.dim.d();
  const IndependenceReport independence = linear_independence(ensemble);

  Certificate certificate;
  certificate.rank = independence.rank;
  certificate.singular_values = independence.singular_values;
  if (independence.rank < d * d) {
    certificate.verdict = Verdict::Inconclusive;
    certificate.reason = "linearly dependent (rank " +
                         std::to_string(independence.rank) + " < " +
                         std::to_string(d * d) + "): theorem hypothesis unmet";
    return certificate;
  }

  certificate.verdict = Verdict::CertifiedLoccIndistinguishable;
  certificate.symmetry_residual = verify_symmetry_identity(ensemble.dim);
  certificate.ppt_min_eig = ppt_min_eigenvalue(detector_state(ensemble).state);
  return certificate;
}

OrbitEnsemble example2_ensemble() {
  const PrimeDimension two(2);
  Vector seed = Vector::Zero(8);
  seed(0) = 0.5;  // |00>
  seed(1) = 0.5;  // |01>
  seed(6) = 0.5;  // |12>
  seed(7) = 0.5;  // |13>
  return full_orbit(two, {2, 4}, projector(seed));
}

}  // namespace locc
