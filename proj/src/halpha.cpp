#include "locc/halpha.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace locc {

int TransformId::alpha() const {
  if (is_identity()) throw std::logic_error("TransformId: identity has no alpha");
  return alpha_;
}

HAlphaTransform build_h_alpha(const PrimeDimension& dim, int alpha) {
  const int d = dim.d();
  if (alpha < 0 || alpha >= d) {
    throw std::invalid_argument("build_h_alpha: alpha out of range");
  }
  if (d == 2 && alpha != 0) {
    // For d = 2, s_0 = s_1 = 1 makes H_1 = -H_0 and the label map breaks;
    // the family degenerates to the single Hadamard.
    throw std::invalid_argument("build_h_alpha: d = 2 admits only alpha = 0");
  }

  std::vector<int> s(d, 0);
  for (int k = 0; k < d; ++k) {
    long long sum = 0;
    for (int t = k; t < d; ++t) sum += t;
    s[k] = mod_d(sum, d);
  }

  Matrix h(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      h(j, k) = norm * dim.omega_pow(-(static_cast<long long>(j) * k) -
                                     static_cast<long long>(alpha) * s[k]);
    }
  return {dim, alpha, std::move(s), std::move(h)};
}

PauliLabel label_action(const PrimeDimension& dim, int alpha, PauliLabel label) {
  const int d = dim.d();
  if (alpha < 0 || alpha >= d || (d == 2 && alpha != 0)) {
    throw std::invalid_argument("label_action: alpha outside the valid family");
  }
  return {mod_d(static_cast<long long>(alpha) * label.m + label.n, d),
          mod_d(-static_cast<long long>(label.m), d)};
}

PauliLabel identity_action(PauliLabel label) { return label; }

std::vector<TransformId> transform_family(const PrimeDimension& dim) {
  std::vector<TransformId> family{TransformId::identity()};
  const int count = dim.d() == 2 ? 1 : dim.d();
  for (int alpha = 0; alpha < count; ++alpha) {
    family.push_back(TransformId::h_alpha(alpha));
  }
  return family;
}

PauliLabel apply_transform(const PrimeDimension& dim, TransformId t, PauliLabel label) {
  return t.is_identity() ? identity_action(label)
                         : label_action(dim, t.alpha(), label);
}

Matrix transform_unitary(const PrimeDimension& dim, TransformId t) {
  if (t.is_identity()) return Matrix::Identity(dim.d(), dim.d());
  return build_h_alpha(dim, t.alpha()).matrix;
}

ConjugationReport verify_conjugation(const PrimeDimension& dim, int alpha,
                                     double tol) {
  const int d = dim.d();
  const HAlphaTransform h = build_h_alpha(dim, alpha);

  ConjugationReport report{alpha, std::vector<Complex>(static_cast<std::size_t>(d) * d),
                           0.0};
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      const Matrix conjugated =
          h.matrix * build_pauli(dim, {m, n}) * h.matrix.adjoint();
      const Matrix target = build_pauli(dim, label_action(dim, alpha, {m, n}));
      const auto phase = equal_up_to_phase(conjugated, target, tol);
      if (!phase || std::abs(std::abs(*phase) - 1.0) > tol) {
        throw std::runtime_error("verify_conjugation: label (" + std::to_string(m) +
                                 "," + std::to_string(n) +
                                 ") does not match the label map for alpha = " +
                                 std::to_string(alpha));
      }
      const double residual = (conjugated - *phase * target).cwiseAbs().maxCoeff();
      report.max_residual = std::max(report.max_residual, residual);
      report.phases[static_cast<std::size_t>(m) * d + n] = *phase;
    }
  return report;
}

}  // namespace locc
