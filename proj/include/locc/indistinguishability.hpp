#pragma once
// The no-go side: the entanglement-breaking channel on AC built from
// U_{m,n} (x) U_{m,-n} Kraus pairs, detector states paired with maximally
// entangled CD registers, PPT evidence across the AC:BD cut, and
// LOCC-indistinguishability certificates for full Pauli orbits.

#include <string>
#include <vector>

#include "locc/states.hpp"

namespace locc {

// The d^2 states (U_{m,n} (x) I) seed (U_{m,n}^dag (x) I) over a d (x) d'
// seed density matrix. labels[i] names members[i]; a full orbit carries all
// d^2 labels in lexicographic order.
struct OrbitEnsemble {
  PrimeDimension dim;    // A-side prime dimension d
  BipartiteShape shape;  // {d, d'}
  Matrix seed;
  std::vector<PauliLabel> labels;
  std::vector<Matrix> members;
};

OrbitEnsemble full_orbit(const PrimeDimension& dim, const BipartiteShape& shape,
                         const Matrix& seed);
// Restricted member list; used to exercise the full-orbit precondition.
OrbitEnsemble partial_orbit(const PrimeDimension& dim, const BipartiteShape& shape,
                            const Matrix& seed, const std::vector<PauliLabel>& labels);
bool is_full_orbit(const OrbitEnsemble& ensemble);

// (1/d^2) sum_{m,n} (U_{m,n} (x) U_{m,-n}) rho (U_{m,n} (x) U_{m,-n})^dag
// on a d (x) d input; trace preserving.
Matrix apply_channel(const PrimeDimension& dim, const Matrix& rho_ac);

// The channel on the A,C factors of an A (x) B (x) C (x) D state, identity
// on B,D. Requires dims[0] == dims[2] == d.
FourPartyState channel_on_four_party(const PrimeDimension& dim,
                                     const FourPartyState& input);

// Max-abs gap between the AB:CD-paired mixture
//   (1/d^2) sum |Phi_{m,n}^{AB}><..| (x) |Phi_{m,-n}^{CD}><..|
// and the AC:BD-paired mixture of the same form, both in A,B,C,D order.
double verify_symmetry_identity(const PrimeDimension& dim);

struct DetectorResult {
  FourPartyState state;  // dims {d, d', d, d}
  double consistency_residual;
};

// rho = (1/d^2) sum members[m,n] (x) |Phi_{m,-n}^{CD}><Phi_{m,-n}^{CD}|,
// cross-checked against the channel applied to seed (x) Phi+^{CD}. Throws
// std::runtime_error when the two constructions disagree beyond tol.
DetectorResult detector_state(const OrbitEnsemble& ensemble, double tol = kDefaultTol);

// Minimum eigenvalue of the partial transpose across the AC:BD cut.
double ppt_min_eigenvalue(const FourPartyState& state);

struct IndependenceReport {
  int rank = 0;
  std::vector<double> singular_values;  // descending
};

// Stacks the vectorized members and counts singular values above
// tol_ratio * sigma_max.
IndependenceReport linear_independence(const OrbitEnsemble& ensemble,
                                       double tol_ratio = 1e-8);

enum class Verdict {
  DistinguishableWithProtocol,
  CertifiedLoccIndistinguishable,
  Inconclusive,
};

std::string verdict_name(Verdict v);

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  int rank = 0;
  std::vector<double> singular_values;
  double symmetry_residual = 0.0;
  double ppt_min_eig = 0.0;
  std::string reason;  // populated for Inconclusive
};

// Full orbits only (throws std::invalid_argument otherwise). Linear
// independence of the members yields CertifiedLoccIndistinguishable with the
// supporting evidence; a rank-deficient orbit is Inconclusive.
Certificate certify(const OrbitEnsemble& ensemble);

// The 2 (x) 4 seed (|00> + |01> + |12> + |13>)/2 and its four-member qubit
// Pauli orbit of mutually orthogonal states.
OrbitEnsemble example2_ensemble();

}  // namespace locc
