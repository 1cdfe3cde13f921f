#pragma once

// Dense complex-matrix substrate: multi-particle index arithmetic, Kronecker
// products, projector range extraction and tolerance-aware comparisons.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "idcluster/errors.hpp"

namespace idcluster {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Relative Frobenius tolerance used everywhere unless overridden.
inline constexpr double kDefaultTol = 1e-9;

/// Default cap on the total Hilbert-space dimension d^N.
inline constexpr Index kDefaultDimGuard = 4096;

/// Environment variable that overrides the dimension guard at startup.
inline constexpr const char* kDimGuardEnvVar = "IDCLUSTER_MAX_DIM";

Index dimension_guard();
void set_dimension_guard(Index value);

enum class Statistics { boson, fermion };

const char* to_string(Statistics s);
Statistics statistics_from_string(const std::string& s);

/// Fixes the arena: N particles, each with a d-dimensional state space.
/// Basis vectors of the d^N-dimensional joint space are indexed by tuples
/// (k_1,...,k_N), k_n in [0,d), with particle 1 the most significant digit.
struct SpaceSpec {
  int d;
  int N;
  Statistics statistics;

  SpaceSpec(int d, int N, Statistics statistics);

  Index dim() const { return dim_; }

 private:
  Index dim_;
};

/// Position of the basis vector labelled by `tuple` in the joint basis.
Index linear_index(std::span<const int> tuple, const SpaceSpec& spec);

/// Inverse of linear_index.
std::vector<int> index_tuple(Index index, const SpaceSpec& spec);

/// Kronecker product with the same significance convention as linear_index:
/// entry ((i,k),(j,l)) of the result is a(i,j)*b(k,l), row index i*rows(b)+k.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_all(std::span<const Matrix> factors);

/// ||a - b||_F / max(1, ||a||_F). Throws DimensionMismatch on shape mismatch.
double rel_residual(const Matrix& a, const Matrix& b);

/// ||a*b - b*a||_F / max(1, ||a||_F * ||b||_F).
double commutator_residual(const Matrix& a, const Matrix& b);

struct MatchResult {
  bool equal;
  double residual;
};

/// Tolerance-aware equality; always reports the relative residual.
MatchResult op_equal(const Matrix& a, const Matrix& b, double tol = kDefaultTol);

bool is_hermitian(const Matrix& a, double tol = kDefaultTol);
bool is_projector(const Matrix& a, double tol = kDefaultTol);
bool is_unitary(const Matrix& a, double tol = kDefaultTol);

/// exp(i * t * h) for Hermitian h, computed by eigendecomposition.
Matrix exp_i_hermitian(const Matrix& h, double t, double tol = kDefaultTol);

/// Isometry whose columns orthonormally span a projector's range.
struct SubspaceBasis {
  Matrix columns;  // dim x rank, columns() adjoint * columns() == identity

  Index dim() const { return columns.rows(); }
  Index rank() const { return columns.cols(); }
  Matrix projector() const { return columns * columns.adjoint(); }
};

/// Orthonormal basis of range(p) for a projector p. Columns are ordered by
/// descending eigenvalue; each column's first component of magnitude above
/// 1e-8 is rotated to the positive real axis, which pins the phase.
SubspaceBasis orthonormal_range(const Matrix& p, double tol = kDefaultTol);

/// Mixed-or-pure state: Hermitian, positive within tolerance, unit trace.
class DensityOp {
 public:
  explicit DensityOp(Matrix rho, double tol = kDefaultTol);

  const Matrix& mat() const { return rho_; }
  Index dim() const { return rho_.rows(); }

 private:
  Matrix rho_;
};

}  // namespace idcluster
