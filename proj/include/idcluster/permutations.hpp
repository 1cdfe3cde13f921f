#pragma once

// Finite permutation-group combinatorics: S_N enumeration, composition,
// parity, the cluster subgroup and its left-coset representatives.

#include <span>
#include <vector>

#include "idcluster/tensor_space.hpp"

namespace idcluster {

/// Largest N for which S_N enumeration is permitted (N! growth).
inline constexpr int kGroupGuard = 8;

/// A bijection of {1..N}. Stored 0-based: image()[n] is p(n+1)-1; the
/// documented contract is the 1-based map n -> p(n).
class Perm {
 public:
  explicit Perm(std::vector<int> image);

  static Perm identity(int n);
  static Perm transposition(int n, int a, int b);  // 0-based positions

  int size() const { return static_cast<int>(image_.size()); }
  int apply(int n) const { return image_[static_cast<std::size_t>(n)]; }
  const std::vector<int>& image() const { return image_; }

  bool operator==(const Perm& other) const { return image_ == other.image_; }
  bool operator<(const Perm& other) const { return image_ < other.image_; }

 private:
  std::vector<int> image_;
};

Perm compose(const Perm& p, const Perm& q);  // (p∘q)(n) = p(q(n))
Perm inverse(const Perm& p);
int parity(const Perm& p);  // +1 even, -1 odd, via cycle decomposition
int sign_of(const Perm& p, Statistics statistics);

/// All N! permutations in lexicographic order of their image arrays.
std::vector<Perm> enumerate_sn(int n);

/// Ordered cluster sizes with their distinguishing projectors. The particle
/// range of cluster j is [offset_j, offset_j + size_j). Projectors may be
/// omitted for purely combinatorial use; numerical validation happens in
/// validate_clusters.
struct ClusterSpec {
  std::vector<int> sizes;
  std::vector<Matrix> projectors;

  explicit ClusterSpec(std::vector<int> sizes,
                       std::vector<Matrix> projectors = {});

  int cluster_count() const { return static_cast<int>(sizes.size()); }
  int total_particles() const;
  std::vector<int> offsets() const;
  int class_of(int particle) const;  // 0-based particle -> 0-based cluster
};

/// Permutations mapping every particle within its own cluster; order is
/// the product of the cluster factorials.
std::vector<Perm> cluster_subgroup(const ClusterSpec& spec);

/// Lexicographically smallest member of each left coset of the cluster
/// subgroup; the first representative is the identity.
std::vector<Perm> coset_representatives(const ClusterSpec& spec);

bool is_subgroup(std::span<const Perm> perms);

}  // namespace idcluster
