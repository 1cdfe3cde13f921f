#pragma once

// Deterministic randomness. Every randomized check derives its own stream
// from (seed, label) so reports are reproducible check by check.

#include <cstdint>
#include <random>
#include <string_view>

#include "idcluster/tensor_space.hpp"

namespace idcluster {

/// mt19937_64 with a platform-independent Box-Muller normal on top.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  double uniform();  // [0, 1)
  double normal();
  Complex cnormal();  // complex standard normal, unit total variance

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t fnv1a64(std::string_view bytes);

/// Per-check subseed: FNV-1a over the decimal seed, ':', and the label.
std::uint64_t subseed(std::uint64_t seed, std::string_view label);

Matrix random_hermitian(Rng& rng, Index dim);
Vector random_state_vector(Rng& rng, Index dim);  // unit norm
Matrix random_density(Rng& rng, Index dim, Index rank);
Matrix random_projector(Rng& rng, Index dim, Index rank);

}  // namespace idcluster
