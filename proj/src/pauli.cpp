#include "locc/pauli.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace locc {

bool is_prime(int d) {
  if (d < 2) return false;
  for (int q = 2; q * q <= d; ++q) {
    if (d % q == 0) return false;
  }
  return true;
}

PrimeDimension::PrimeDimension(int d) : d_(d) {
  if (!is_prime(d)) {
    throw std::invalid_argument("PrimeDimension: d = " + std::to_string(d) +
                                " is not prime");
  }
}

Complex PrimeDimension::omega_pow(long long e) const {
  const int r = mod_d(e, d_);
  if (r == 0) return {1.0, 0.0};
  if (2 * r == d_) return {-1.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * r / d_);
}

PauliLabel make_label(const PrimeDimension& dim, long long m, long long n) {
  return {mod_d(m, dim.d()), mod_d(n, dim.d())};
}

Matrix build_x(const PrimeDimension& dim) {
  const int d = dim.d();
  Matrix x = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  return x;
}

Matrix build_z(const PrimeDimension& dim) {
  const int d = dim.d();
  Matrix z = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) z(j, j) = dim.omega_pow(j);
  return z;
}

Matrix build_pauli(const PrimeDimension& dim, PauliLabel label) {
  const int d = dim.d();
  Matrix u = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    u((j + label.m) % d, j) = dim.omega_pow(static_cast<long long>(j) * label.n);
  }
  return u;
}

Complex commutation_phase(const PrimeDimension& dim, PauliLabel a, PauliLabel b) {
  return dim.omega_pow(static_cast<long long>(a.n) * b.m -
                       static_cast<long long>(a.m) * b.n);
}

std::optional<Complex> equal_up_to_phase(const Matrix& a, const Matrix& b,
                                         double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("equal_up_to_phase: shape mismatch");
  }
  const double denom = b.squaredNorm();
  if (denom == 0.0) {
    throw std::invalid_argument("equal_up_to_phase: B is zero");
  }
  const Complex phi = (b.adjoint() * a).trace() / denom;
  const double residual = (a - phi * b).cwiseAbs().maxCoeff();
  if (residual > tol) return std::nullopt;
  return phi;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Matrix gram = m.adjoint() * m;
  return (gram - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

bool is_density(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > tol) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> solver((m + m.adjoint()) / 2.0);
  return solver.eigenvalues().minCoeff() >= -tol;
}

}  // namespace locc
