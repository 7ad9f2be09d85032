#pragma once
// The d-member unitary family H_alpha with entries omega^{-jk} omega^{-alpha s_k}
// and its exact conjugation action on Pauli labels:
//   H_alpha X^m Z^n H_alpha^dag = X^{alpha m + n} Z^{-m}   (up to a phase).

#include <compare>
#include <vector>

#include "locc/pauli.hpp"

namespace locc {

// Either the identity transform or the family member H_alpha.
class TransformId {
 public:
  static TransformId identity() { return TransformId(-1); }
  static TransformId h_alpha(int alpha) { return TransformId(alpha); }

  bool is_identity() const { return alpha_ < 0; }
  int alpha() const;  // only valid for non-identity

  friend auto operator<=>(const TransformId&, const TransformId&) = default;

 private:
  explicit TransformId(int alpha) : alpha_(alpha) {}
  int alpha_;
};

struct HAlphaTransform {
  PrimeDimension dim;
  int alpha;
  std::vector<int> s;  // s_k = k + (k+1) + ... + (d-1), reduced mod d
  Matrix matrix;       // unitary: entries omega^{-jk - alpha s_k} / sqrt(d)
};

// For d = 2 only alpha = 0 (the Hadamard) is a valid family member;
// alpha != 0 is rejected.
HAlphaTransform build_h_alpha(const PrimeDimension& dim, int alpha);

// (m, n) -> (alpha m + n, -m), pure modular arithmetic.
PauliLabel label_action(const PrimeDimension& dim, int alpha, PauliLabel label);
PauliLabel identity_action(PauliLabel label);

// Search order for protocols: {identity, H_0, ..., H_{d-1}} ({identity, H_0}
// for d = 2).
std::vector<TransformId> transform_family(const PrimeDimension& dim);

PauliLabel apply_transform(const PrimeDimension& dim, TransformId t, PauliLabel label);
Matrix transform_unitary(const PrimeDimension& dim, TransformId t);

struct ConjugationReport {
  int alpha;
  std::vector<Complex> phases;  // phases[m*d + n], all unit modulus
  double max_residual;
};

// Conjugates every U_{m,n} by H_alpha and matches it against the label map
// up to an extracted phase. Throws std::runtime_error if any label fails.
ConjugationReport verify_conjugation(const PrimeDimension& dim, int alpha,
                                     double tol = kDefaultTol);

}  // namespace locc
