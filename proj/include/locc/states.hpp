#pragma once
// Bipartite and four-party state constructions: the maximally entangled
// basis, Werner states, tensor products, partial trace/transpose and
// subsystem reordering.

#include <array>
#include <vector>

#include "locc/pauli.hpp"

namespace locc {

struct BipartiteShape {
  int dA = 1;
  int dB = 1;
  int total() const { return dA * dB; }
  friend bool operator==(const BipartiteShape&, const BipartiteShape&) = default;
};

// Pure state on dA (x) dB with index convention |a>|b> -> a*dB + b.
// Single systems use dB = 1.
struct Ket {
  BipartiteShape shape;
  Vector amplitudes;
};

// Density matrix on the ordered tensor product A (x) B (x) C (x) D.
struct FourPartyState {
  std::array<int, 4> dims;
  Matrix rho;
  int total() const { return dims[0] * dims[1] * dims[2] * dims[3]; }
};

// (1/sqrt(d)) sum_j |jj>
Ket phi_plus(const PrimeDimension& dim);
// (U_{m,n} (x) I)|Phi+> = (1/sqrt(d)) sum_j omega^{jn} |j+m>|j>
Ket phi_mn(const PrimeDimension& dim, PauliLabel label);

// (opA (x) opB)|ket>
Ket apply_local(const Ket& ket, const Matrix& op_a, const Matrix& op_b);

// (4p-1)/3 |Phi+><Phi+| + (1-p)/3 I on 2 (x) 2; requires p in [0, 1].
Matrix werner_state(double p);

// Kronecker product in the row-major index convention of Ket. Works for
// matrices and column vectors alike (an n x 1 result assigns to Vector).
template <typename DerivedA, typename DerivedB>
Matrix tensor(const Eigen::MatrixBase<DerivedA>& a_expr,
              const Eigen::MatrixBase<DerivedB>& b_expr) {
  const Matrix a = a_expr;
  const Matrix b = b_expr;
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix projector(const Vector& psi);

// Reorder tensor factors. order[k] names the input factor placed at slot k;
// order must be a permutation of 0..dims.size()-1.
Vector permute_subsystems(const Vector& psi, const std::vector<int>& dims,
                          const std::vector<int>& order);
Matrix permute_subsystems(const Matrix& rho, const std::vector<int>& dims,
                          const std::vector<int>& order);

// Trace out the factors with keep[i] == false.
Matrix partial_trace(const Matrix& rho, const std::vector<int>& dims,
                     const std::vector<bool>& keep);

// Transpose on the second factor of the declared bipartition.
Matrix partial_transpose(const Matrix& rho, const BipartiteShape& shape);

// Max-abs amplitude gap between Phi+^{AB} (x) Phi+^{CD} and the re-paired
// superposition (1/d) sum_{m,n} Phi_{m,n}^{AC} (x) Phi_{m,-n}^{BD}, both
// laid out in A (x) B (x) C (x) D order.
double schmidt_swap_check(const PrimeDimension& dim);

}  // namespace locc
