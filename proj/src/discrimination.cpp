#include "locc/discrimination.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace locc {

namespace {

constexpr std::size_t kMaxWitnesses = 16;

// Uniform integer in [0, n) from raw 64-bit draws, bias-free by rejection.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  std::uint64_t r = rng();
  while (r < threshold) r = rng();
  return r % n;
}

PauliLabel label_from_index(int d, int index) { return {index / d, index % d}; }

}  // namespace

LabelSet::LabelSet(const PrimeDimension& dim, std::vector<PauliLabel> labels)
    : dim_(dim), labels_(std::move(labels)) {
  const int d = dim_.d();
  if (labels_.empty()) throw std::invalid_argument("LabelSet: empty");
  if (labels_.size() > static_cast<std::size_t>(d) * d) {
    throw std::invalid_argument("LabelSet: more than d^2 labels");
  }
  for (const PauliLabel& l : labels_) {
    if (l.m < 0 || l.m >= d || l.n < 0 || l.n >= d) {
      throw std::invalid_argument("LabelSet: label out of range");
    }
  }
  std::vector<PauliLabel> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("LabelSet: duplicate label");
  }
}

Matrix canonical_bob_unitary(const Matrix& alice) { return alice.conjugate(); }

bool transform_distinguishes(const PrimeDimension& dim,
                             const std::vector<PauliLabel>& labels, TransformId t) {
  // d <= 61 keeps the X-power occupancy in a single 64-bit mask.
  std::uint64_t seen = 0;
  for (const PauliLabel& label : labels) {
    const int power = apply_transform(dim, t, label).m;
    const std::uint64_t bit = std::uint64_t{1} << power;
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

std::optional<TransformId> find_transform(const PrimeDimension& dim,
                                          const std::vector<PauliLabel>& labels) {
  for (TransformId t : transform_family(dim)) {
    if (transform_distinguishes(dim, labels, t)) return t;
  }
  return std::nullopt;
}

std::optional<DiscriminationProtocol> search_protocol(const LabelSet& set) {
  const PrimeDimension& dim = set.dim();
  const auto t = find_transform(dim, set.labels());
  if (!t) return std::nullopt;

  DiscriminationProtocol protocol{dim,      *t, transform_unitary(dim, *t),
                                  Matrix{}, set.labels(),
                                  {},       {}};
  protocol.bob_unitary = canonical_bob_unitary(protocol.alice_unitary);
  protocol.transformed_labels.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    const PauliLabel mapped = apply_transform(dim, *t, set.labels()[i]);
    protocol.transformed_labels.push_back(mapped);
    protocol.decision[mapped.m] = static_cast<int>(i);
  }
  return protocol;
}

OutcomeDistribution simulate_protocol(const DiscriminationProtocol& protocol,
                                      PauliLabel prepared) {
  const auto it =
      std::find(protocol.labels.begin(), protocol.labels.end(), prepared);
  if (it == protocol.labels.end()) {
    throw std::invalid_argument("simulate_protocol: prepared label not in set");
  }
  const Ket transformed = apply_local(phi_mn(protocol.dim, prepared),
                                      protocol.alice_unitary, protocol.bob_unitary);
  const int d = protocol.dim.d();
  Eigen::MatrixXd probs(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      probs(a, b) = std::norm(transformed.amplitudes(static_cast<Eigen::Index>(a) * d + b));
    }
  return {d, std::move(probs)};
}

ProtocolReport verify_protocol(const LabelSet& set,
                               const DiscriminationProtocol& protocol,
                               double tol) {
  const int d = set.dim().d();
  ProtocolReport report{true, {}};
  for (std::size_t i = 0; i < set.size(); ++i) {
    const PauliLabel label = set.labels()[i];
    const OutcomeDistribution dist = simulate_protocol(protocol, label);
    const int expected_power = protocol.transformed_labels[i].m;

    int support = 0;
    double correct = 0.0;
    double uniform_gap = 0.0;
    double stray = 0.0;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const double p = dist.probabilities(a, b);
        const int power = mod_d(a - b, d);
        const auto decided = protocol.decision.find(power);
        if (decided != protocol.decision.end() &&
            decided->second == static_cast<int>(i)) {
          correct += p;
        }
        if (p <= tol) continue;
        ++support;
        if (power != expected_power) {
          stray += p;
        } else {
          uniform_gap = std::max(uniform_gap, std::abs(p - 1.0 / d));
        }
      }

    const bool ok = stray <= tol && std::abs(correct - 1.0) <= tol &&
                    support == d && uniform_gap <= tol;
    report.states.push_back({label, expected_power, support, correct, ok});
    report.ok = report.ok && ok;
  }
  return report;
}

std::uint64_t subset_count(const PrimeDimension& dim, int l, std::uint64_t cap) {
  const int n = dim.d() * dim.d();
  if (l < 0 || l > n) return 0;
  unsigned __int128 c = 1;
  for (int i = 1; i <= l; ++i) {
    c = c * static_cast<unsigned>(n - l + i) / static_cast<unsigned>(i);
    if (c > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(c);
}

TheoremSummary verify_theorem(const PrimeDimension& dim, int l, const SweepMode& mode) {
  const int d = dim.d();
  const int n = d * d;
  if (l < 2 || l > n) {
    throw std::invalid_argument("verify_theorem: need 2 <= l <= d^2");
  }

  TheoremSummary summary;
  summary.d = d;
  summary.l = l;
  summary.guaranteed = static_cast<long long>(l) * (l - 1) / 2 <= d;

  std::vector<PauliLabel> labels(l);
  auto record = [&](const std::vector<PauliLabel>& subset) {
    ++summary.subsets_tried;
    if (find_transform(dim, subset)) {
      ++summary.successes;
    } else {
      ++summary.failures;
      if (summary.failure_witnesses.size() < kMaxWitnesses) {
        summary.failure_witnesses.push_back(subset);
      }
    }
  };

  if (std::holds_alternative<ExhaustiveMode>(mode)) {
    std::vector<int> idx(l);
    for (int i = 0; i < l; ++i) idx[i] = i;
    while (true) {
      for (int i = 0; i < l; ++i) labels[i] = label_from_index(d, idx[i]);
      record(labels);
      // next combination in lexicographic order
      int i = l - 1;
      while (i >= 0 && idx[i] == n - l + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < l; ++j) idx[j] = idx[j - 1] + 1;
    }
  } else {
    const SampledMode& sampling = std::get<SampledMode>(mode);
    summary.sampled = true;
    summary.seed = sampling.seed;
    std::mt19937_64 rng(sampling.seed);
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (std::uint64_t trial = 0; trial < sampling.count; ++trial) {
      for (int i = 0; i < l; ++i) {
        const int j = i + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n - i)));
        std::swap(pool[i], pool[j]);
      }
      std::vector<int> chosen(pool.begin(), pool.begin() + l);
      std::sort(chosen.begin(), chosen.end());
      for (int i = 0; i < l; ++i) labels[i] = label_from_index(d, chosen[i]);
      record(labels);
    }
  }
  return summary;
}

}  // namespace locc
