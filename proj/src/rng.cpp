#include "idcluster/rng.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace idcluster {

double Rng::uniform() {
  // 53 random bits, uniform on [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u = 0.0;
  do {
    u = uniform();
  } while (u <= 0.0);
  const double v = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u));
  const double angle = 2.0 * std::numbers::pi * v;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::cnormal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::uint64_t subseed(std::uint64_t seed, std::string_view label) {
  std::string key = std::to_string(seed);
  key.push_back(':');
  key.append(label);
  return fnv1a64(key);
}

Matrix random_hermitian(Rng& rng, Index dim) {
  Matrix g(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) g(i, j) = rng.cnormal();
  }
  return (g + g.adjoint()) / 2.0;
}

Vector random_state_vector(Rng& rng, Index dim) {
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = rng.cnormal();
  const double norm = v.norm();
  if (norm == 0.0) return random_state_vector(rng, dim);
  return v / norm;
}

Matrix random_density(Rng& rng, Index dim, Index rank) {
  if (rank < 1 || rank > dim) throw ValidationError("bad density rank");
  Matrix g(dim, rank);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < rank; ++j) g(i, j) = rng.cnormal();
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

Matrix random_projector(Rng& rng, Index dim, Index rank) {
  if (rank < 0 || rank > dim) throw ValidationError("bad projector rank");
  if (rank == 0) return Matrix::Zero(dim, dim);
  Eigen::SelfAdjointEigenSolver<Matrix> es(random_hermitian(rng, dim));
  const Matrix v = es.eigenvectors().leftCols(rank);
  return v * v.adjoint();
}

}  // namespace idcluster
