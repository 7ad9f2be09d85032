#include "locc/states.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace locc {

namespace {

int dims_product(const std::vector<int>& dims) {
  int total = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("subsystem dimensions must be >= 1");
    total *= d;
  }
  return total;
}

// Flat-index relabeling for a factor permutation: map[i_old] = i_new.
std::vector<int> permutation_index_map(const std::vector<int>& dims,
                                       const std::vector<int>& order) {
  const int k = static_cast<int>(dims.size());
  if (static_cast<int>(order.size()) != k) {
    throw std::invalid_argument("permute_subsystems: order size mismatch");
  }
  std::vector<bool> seen(k, false);
  for (int o : order) {
    if (o < 0 || o >= k || seen[o]) {
      throw std::invalid_argument("permute_subsystems: order is not a permutation");
    }
    seen[o] = true;
  }
  const int total = dims_product(dims);

  // Strides of the output layout, indexed by output slot.
  std::vector<int> new_stride(k, 1);
  for (int slot = k - 2; slot >= 0; --slot) {
    new_stride[slot] = new_stride[slot + 1] * dims[order[slot + 1]];
  }
  // new_stride_of_old[f] = stride of input factor f in the output layout.
  std::vector<int> new_stride_of_old(k, 0);
  for (int slot = 0; slot < k; ++slot) new_stride_of_old[order[slot]] = new_stride[slot];

  std::vector<int> map(total);
  std::vector<int> digits(k, 0);
  for (int i = 0; i < total; ++i) {
    int out = 0;
    for (int f = 0; f < k; ++f) out += digits[f] * new_stride_of_old[f];
    map[i] = out;
    for (int f = k - 1; f >= 0; --f) {  // increment mixed-radix counter
      if (++digits[f] < dims[f]) break;
      digits[f] = 0;
    }
  }
  return map;
}

}  // namespace

Ket phi_plus(const PrimeDimension& dim) {
  const int d = dim.d();
  Vector amp = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  const double c = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) amp(static_cast<Eigen::Index>(j) * d + j) = c;
  return {{d, d}, std::move(amp)};
}

Ket phi_mn(const PrimeDimension& dim, PauliLabel label) {
  const int d = dim.d();
  Vector amp = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  const double c = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    const int row = (j + label.m) % d;
    amp(static_cast<Eigen::Index>(row) * d + j) =
        c * dim.omega_pow(static_cast<long long>(j) * label.n);
  }
  return {{d, d}, std::move(amp)};
}

Ket apply_local(const Ket& ket, const Matrix& op_a, const Matrix& op_b) {
  const int da = ket.shape.dA;
  const int db = ket.shape.dB;
  if (op_a.rows() != da || op_a.cols() != da || op_b.rows() != db ||
      op_b.cols() != db) {
    throw std::invalid_argument("apply_local: operator shape mismatch");
  }
  // (A (x) B)|psi> via the d_A x d_B reshape: Psi' = A Psi B^T.
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      psi(ket.amplitudes.data(), da, db);
  const Matrix out = op_a * psi * op_b.transpose();
  Vector amp(static_cast<Eigen::Index>(da) * db);
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b) amp(static_cast<Eigen::Index>(a) * db + b) = out(a, b);
  return {ket.shape, std::move(amp)};
}

Matrix werner_state(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("werner_state: p must lie in [0, 1]");
  }
  const PrimeDimension two(2);
  const Matrix bell = projector(phi_plus(two).amplitudes);
  return (4.0 * p - 1.0) / 3.0 * bell + (1.0 - p) / 3.0 * Matrix::Identity(4, 4);
}

Matrix projector(const Vector& psi) { return psi * psi.adjoint(); }

Vector permute_subsystems(const Vector& psi, const std::vector<int>& dims,
                          const std::vector<int>& order) {
  const int total = dims_product(dims);
  if (psi.size() != total) {
    throw std::invalid_argument("permute_subsystems: vector size mismatch");
  }
  const std::vector<int> map = permutation_index_map(dims, order);
  Vector out(total);
  for (int i = 0; i < total; ++i) out(map[i]) = psi(i);
  return out;
}

Matrix permute_subsystems(const Matrix& rho, const std::vector<int>& dims,
                          const std::vector<int>& order) {
  const int total = dims_product(dims);
  if (rho.rows() != total || rho.cols() != total) {
    throw std::invalid_argument("permute_subsystems: matrix size mismatch");
  }
  const std::vector<int> map = permutation_index_map(dims, order);
  Matrix out(total, total);
  for (int r = 0; r < total; ++r)
    for (int c = 0; c < total; ++c) out(map[r], map[c]) = rho(r, c);
  return out;
}

Matrix partial_trace(const Matrix& rho, const std::vector<int>& dims,
                     const std::vector<bool>& keep) {
  const int k = static_cast<int>(dims.size());
  if (static_cast<int>(keep.size()) != k) {
    throw std::invalid_argument("partial_trace: keep mask size mismatch");
  }
  const int total = dims_product(dims);
  if (rho.rows() != total || rho.cols() != total) {
    throw std::invalid_argument("partial_trace: matrix size mismatch");
  }

  std::vector<int> stride(k, 1);
  for (int f = k - 2; f >= 0; --f) stride[f] = stride[f + 1] * dims[f + 1];

  // Flat offsets contributed by the kept and traced factors separately.
  auto offsets = [&](bool kept) {
    std::vector<int> offs{0};
    for (int f = 0; f < k; ++f) {
      if (keep[f] != kept) continue;
      std::vector<int> next;
      next.reserve(offs.size() * dims[f]);
      for (int base : offs)
        for (int v = 0; v < dims[f]; ++v) next.push_back(base + v * stride[f]);
      offs = std::move(next);
    }
    return offs;
  };
  const std::vector<int> kept_off = offsets(true);
  const std::vector<int> traced_off = offsets(false);

  const int kd = static_cast<int>(kept_off.size());
  Matrix out = Matrix::Zero(kd, kd);
  for (int r = 0; r < kd; ++r)
    for (int c = 0; c < kd; ++c) {
      Complex sum = 0.0;
      for (int t : traced_off) sum += rho(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = sum;
    }
  return out;
}

Matrix partial_transpose(const Matrix& rho, const BipartiteShape& shape) {
  const int da = shape.dA;
  const int db = shape.dB;
  if (rho.rows() != da * db || rho.cols() != da * db) {
    throw std::invalid_argument("partial_transpose: shape mismatch");
  }
  Matrix out(rho.rows(), rho.cols());
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b)
      for (int a2 = 0; a2 < da; ++a2)
        for (int b2 = 0; b2 < db; ++b2)
          out(a * db + b, a2 * db + b2) = rho(a * db + b2, a2 * db + b);
  return out;
}

double schmidt_swap_check(const PrimeDimension& dim) {
  const int d = dim.d();
  const Vector phi = phi_plus(dim).amplitudes;
  const Vector lhs = tensor(phi, phi);  // A,B,C,D order

  Vector rhs_acbd = Vector::Zero(lhs.size());
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      const Vector ac = phi_mn(dim, {m, n}).amplitudes;
      const Vector bd = phi_mn(dim, make_label(dim, m, -n)).amplitudes;
      rhs_acbd += tensor(ac, bd);
    }
  rhs_acbd /= static_cast<double>(d);

  const Vector rhs =
      permute_subsystems(rhs_acbd, {d, d, d, d}, {0, 2, 1, 3});  // -> A,B,C,D
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace locc
