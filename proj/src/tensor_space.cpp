#include "idcluster/tensor_space.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>

namespace idcluster {

namespace {

Index guard_from_env() {
  if (const char* env = std::getenv(kDimGuardEnvVar)) {
    char* end = nullptr;
    const long long parsed = std::strtoll(env, &end, 10);
    if (end != env && parsed > 0) return static_cast<Index>(parsed);
  }
  return kDefaultDimGuard;
}

std::atomic<Index>& guard_slot() {
  static std::atomic<Index> guard{guard_from_env()};
  return guard;
}

std::string shape_string(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("operator shapes differ: " + shape_string(a) +
                            " vs " + shape_string(b));
  }
}

void require_square(const Matrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch(std::string(what) + " must be square, got " +
                            shape_string(a));
  }
}

}  // namespace

Index dimension_guard() { return guard_slot().load(); }

void set_dimension_guard(Index value) {
  if (value < 1) throw ValidationError("dimension guard must be positive");
  guard_slot().store(value);
}

const char* to_string(Statistics s) {
  return s == Statistics::boson ? "boson" : "fermion";
}

Statistics statistics_from_string(const std::string& s) {
  if (s == "boson") return Statistics::boson;
  if (s == "fermion") return Statistics::fermion;
  throw ValidationError("unknown statistics '" + s +
                        "' (expected \"boson\" or \"fermion\")");
}

SpaceSpec::SpaceSpec(int d_in, int n_in, Statistics statistics_in)
    : d(d_in), N(n_in), statistics(statistics_in) {
  if (d < 1) throw ValidationError("single-particle dimension must be >= 1");
  if (N < 1) throw ValidationError("particle count must be >= 1");
  const Index guard = dimension_guard();
  Index acc = 1;
  for (int n = 0; n < N; ++n) {
    if (acc > guard / d || acc * d > guard) {
      throw DimensionTooLarge("d^N exceeds the dimension guard (" +
                              std::to_string(guard) + ")");
    }
    acc *= d;
  }
  dim_ = acc;
}

Index linear_index(std::span<const int> tuple, const SpaceSpec& spec) {
  if (static_cast<int>(tuple.size()) != spec.N) {
    throw IndexError("tuple has length " + std::to_string(tuple.size()) +
                     ", expected " + std::to_string(spec.N));
  }
  Index idx = 0;
  for (int k : tuple) {
    if (k < 0 || k >= spec.d) {
      throw IndexError("tuple entry " + std::to_string(k) +
                       " outside [0, " + std::to_string(spec.d) + ")");
    }
    idx = idx * spec.d + k;
  }
  return idx;
}

std::vector<int> index_tuple(Index index, const SpaceSpec& spec) {
  if (index < 0 || index >= spec.dim()) {
    throw IndexError("linear index " + std::to_string(index) +
                     " outside [0, " + std::to_string(spec.dim()) + ")");
  }
  std::vector<int> tuple(static_cast<std::size_t>(spec.N));
  for (int n = spec.N - 1; n >= 0; --n) {
    tuple[static_cast<std::size_t>(n)] = static_cast<int>(index % spec.d);
    index /= spec.d;
  }
  return tuple;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const Index guard = dimension_guard();
  if (a.rows() * b.rows() > guard || a.cols() * b.cols() > guard) {
    throw DimensionTooLarge("kron result exceeds the dimension guard (" +
                            std::to_string(guard) + ")");
  }
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix kron_all(std::span<const Matrix> factors) {
  Matrix acc = Matrix::Identity(1, 1);
  for (const Matrix& f : factors) acc = kron(acc, f);
  return acc;
}

double rel_residual(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  return (a - b).norm() / std::max(1.0, a.norm());
}

double commutator_residual(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  require_square(a, "commutator operand");
  return (a * b - b * a).norm() / std::max(1.0, a.norm() * b.norm());
}

MatchResult op_equal(const Matrix& a, const Matrix& b, double tol) {
  const double residual = rel_residual(a, b);
  return {residual <= tol, residual};
}

bool is_hermitian(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return rel_residual(a, a.adjoint()) <= tol;
}

bool is_projector(const Matrix& a, double tol) {
  if (!is_hermitian(a, tol)) return false;
  return rel_residual(a * a, a) <= tol;
}

bool is_unitary(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  const Matrix gram = a.adjoint() * a;
  return (gram - Matrix::Identity(a.rows(), a.cols())).norm() /
             std::max(1.0, gram.norm()) <=
         tol;
}

Matrix exp_i_hermitian(const Matrix& h, double t, double tol) {
  require_square(h, "generator");
  if (!is_hermitian(h, tol)) throw NotHermitian("exp generator not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Eigen::VectorXd& ev = es.eigenvalues();
  Vector phases(ev.size());
  for (Index i = 0; i < ev.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, t * ev(i)));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

SubspaceBasis orthonormal_range(const Matrix& p, double tol) {
  require_square(p, "projector");
  if (!is_projector(p, tol)) {
    throw NotAProjector("orthonormal_range input is not a projector");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(p);
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
  Index rank = 0;
  for (Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > 0.5) ++rank;
  }
  Matrix v(p.rows(), rank);
  // Descending eigenvalue order; phase pinned per column.
  for (Index c = 0; c < rank; ++c) {
    Vector col = es.eigenvectors().col(ev.size() - 1 - c);
    for (Index i = 0; i < col.size(); ++i) {
      const double mag = std::abs(col(i));
      if (mag > 1e-8) {
        col *= std::conj(col(i)) / mag;
        break;
      }
    }
    v.col(c) = col;
  }
  SubspaceBasis basis{std::move(v)};
  const Matrix gram = basis.columns.adjoint() * basis.columns;
  if ((gram - Matrix::Identity(rank, rank)).norm() > tol * std::sqrt(double(std::max<Index>(rank, 1)))) {
    throw NumericalDegradation("range basis lost orthonormality");
  }
  if (rel_residual(basis.projector(), p) > tol) {
    throw NumericalDegradation("range basis does not reproduce the projector");
  }
  return basis;
}

DensityOp::DensityOp(Matrix rho, double tol) : rho_(std::move(rho)) {
  require_square(rho_, "density operator");
  if (!is_hermitian(rho_, tol)) {
    throw ValidationError("density operator is not Hermitian");
  }
  const double trace = rho_.trace().real();
  if (std::abs(rho_.trace().imag()) > tol || std::abs(trace - 1.0) > tol) {
    throw ValidationError("density operator trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es((rho_ + rho_.adjoint()) / 2.0);
  if (es.eigenvalues().minCoeff() < -tol) {
    throw ValidationError("density operator has a negative eigenvalue");
  }
}

}  // namespace idcluster
