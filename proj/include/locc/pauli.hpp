#pragma once
// Generalized Pauli (shift/clock) operators X^m Z^n over a prime-dimensional
// Hilbert space, with exact modular label arithmetic.

#include <complex>
#include <optional>

#include <Eigen/Dense>

namespace locc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-10;

// v reduced into [0, d).
inline int mod_d(long long v, int d) {
  long long r = v % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

bool is_prime(int d);

// Local dimension d, verified prime at construction, together with the
// primitive root of unity omega = exp(2*pi*i/d).
class PrimeDimension {
 public:
  explicit PrimeDimension(int d);

  int d() const { return d_; }
  Complex omega() const { return omega_pow(1); }
  // omega^e; the exponent is reduced mod d before any trigonometry.
  Complex omega_pow(long long e) const;

 private:
  int d_;
};

// Label (m, n) of the operator X^m Z^n; residues mod d.
struct PauliLabel {
  int m = 0;
  int n = 0;
  friend auto operator<=>(const PauliLabel&, const PauliLabel&) = default;
};

// Reduce arbitrary integers into a valid label.
PauliLabel make_label(const PrimeDimension& dim, long long m, long long n);

// X |j> = |j+1 mod d>
Matrix build_x(const PrimeDimension& dim);
// Z |j> = omega^j |j>
Matrix build_z(const PrimeDimension& dim);
// U_{m,n} = X^m Z^n, i.e. U |j> = omega^{j n} |j+m>
Matrix build_pauli(const PrimeDimension& dim, PauliLabel label);

// The phase phi = omega^{n k - m l} with U_{m,n} U_{k,l} = phi U_{k,l} U_{m,n}.
Complex commutation_phase(const PrimeDimension& dim, PauliLabel a, PauliLabel b);

// If A == phi * B entrywise within tol, returns phi = tr(B^dag A)/tr(B^dag B);
// absent when A is not a scalar multiple of B. B must be nonzero.
std::optional<Complex> equal_up_to_phase(const Matrix& a, const Matrix& b,
                                         double tol = kDefaultTol);

bool is_unitary(const Matrix& m, double tol = kDefaultTol);
// Hermitian, unit trace, and eigenvalues >= -tol.
bool is_density(const Matrix& m, double tol = kDefaultTol);

}  // namespace locc
