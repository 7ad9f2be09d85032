#pragma once
// Constructive LOCC discrimination of maximally entangled states
// {(U_{m,n} (x) I)|Phi+>}: search the transform family for one that makes all
// X-powers distinct, assemble the measurement protocol, simulate it with
// exact Born-rule arithmetic, and sweep subsets to check the l(l-1)/2 <= d
// guarantee.

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "locc/halpha.hpp"
#include "locc/states.hpp"

namespace locc {

// Nonempty, duplicate-free, at most d^2 labels.
class LabelSet {
 public:
  LabelSet(const PrimeDimension& dim, std::vector<PauliLabel> labels);

  const PrimeDimension& dim() const { return dim_; }
  const std::vector<PauliLabel>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

 private:
  PrimeDimension dim_;
  std::vector<PauliLabel> labels_;
};

// Alice/Bob local unitaries plus the classical decision table mapping the
// measured X-power residue (a - b mod d) to a state index.
struct DiscriminationProtocol {
  PrimeDimension dim;
  TransformId transform;
  Matrix alice_unitary;
  Matrix bob_unitary;  // entrywise conjugate of alice_unitary
  std::vector<PauliLabel> labels;
  std::vector<PauliLabel> transformed_labels;
  std::map<int, int> decision;
};

// Joint computational-basis outcome probabilities; entry (a, b).
struct OutcomeDistribution {
  int d;
  Eigen::MatrixXd probabilities;
};

// Entrywise complex conjugate, i.e. (alice^dag)^T.
Matrix canonical_bob_unitary(const Matrix& alice);

// True when the transformed labels have pairwise distinct X-powers.
bool transform_distinguishes(const PrimeDimension& dim,
                             const std::vector<PauliLabel>& labels, TransformId t);

// First member of the family (identity first) that separates the X-powers.
std::optional<TransformId> find_transform(const PrimeDimension& dim,
                                          const std::vector<PauliLabel>& labels);

std::optional<DiscriminationProtocol> search_protocol(const LabelSet& set);

// Prepares |Phi_prepared>, applies alice (x) bob, returns exact outcome
// probabilities. prepared must belong to the protocol's label set.
OutcomeDistribution simulate_protocol(const DiscriminationProtocol& protocol,
                                      PauliLabel prepared);

struct StateReport {
  PauliLabel label;
  int x_power;  // first component of the transformed label
  int support_size;
  double correct_probability;
  bool ok;
};

struct ProtocolReport {
  bool ok;
  std::vector<StateReport> states;
};

// Simulates every state in the set and checks disjoint supports plus
// deterministic decoding with total probability 1.
ProtocolReport verify_protocol(const LabelSet& set,
                               const DiscriminationProtocol& protocol,
                               double tol = kDefaultTol);

struct ExhaustiveMode {};
struct SampledMode {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};
using SweepMode = std::variant<ExhaustiveMode, SampledMode>;

struct TheoremSummary {
  int d = 0;
  int l = 0;
  bool guaranteed = false;  // l(l-1)/2 <= d
  bool sampled = false;
  std::uint64_t subsets_tried = 0;
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;
  std::optional<std::uint64_t> seed;
  std::vector<std::vector<PauliLabel>> failure_witnesses;  // first few failures
};

// Enumerates (or samples) l-subsets of the d^2 labels and runs the transform
// search on each. 2 <= l <= d^2.
TheoremSummary verify_theorem(const PrimeDimension& dim, int l, const SweepMode& mode);

// C(d^2, l), saturating at cap + 1.
std::uint64_t subset_count(const PrimeDimension& dim, int l, std::uint64_t cap);

}  // namespace locc
