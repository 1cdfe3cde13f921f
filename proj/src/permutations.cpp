#include "idcluster/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace idcluster {

Perm::Perm(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  if (n == 0) throw ValidationError("permutation must move at least one point");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : image_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw ValidationError("permutation image is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return Perm(std::move(image));
}

Perm Perm::transposition(int n, int a, int b) {
  if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
    throw ValidationError("invalid transposition");
  }
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::swap(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]);
  return Perm(std::move(image));
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) {
    throw DimensionMismatch("composing permutations of different degree");
  }
  std::vector<int> image(static_cast<std::size_t>(p.size()));
  for (int n = 0; n < p.size(); ++n) {
    image[static_cast<std::size_t>(n)] = p.apply(q.apply(n));
  }
  return Perm(std::move(image));
}

Perm inverse(const Perm& p) {
  std::vector<int> image(static_cast<std::size_t>(p.size()));
  for (int n = 0; n < p.size(); ++n) {
    image[static_cast<std::size_t>(p.apply(n))] = n;
  }
  return Perm(std::move(image));
}

int parity(const Perm& p) {
  std::vector<bool> visited(static_cast<std::size_t>(p.size()), false);
  int cycles = 0;
  for (int start = 0; start < p.size(); ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    int n = start;
    while (!visited[static_cast<std::size_t>(n)]) {
      visited[static_cast<std::size_t>(n)] = true;
      n = p.apply(n);
    }
  }
  return ((p.size() - cycles) % 2 == 0) ? 1 : -1;
}

int sign_of(const Perm& p, Statistics statistics) {
  return statistics == Statistics::boson ? 1 : parity(p);
}

std::vector<Perm> enumerate_sn(int n) {
  if (n < 1) throw ValidationError("group degree must be >= 1");
  if (n > kGroupGuard) {
    throw GroupTooLarge("S_" + std::to_string(n) + " exceeds the group guard (" +
                        std::to_string(kGroupGuard) + ")");
  }
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::vector<Perm> group;
  do {
    group.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return group;
}

ClusterSpec::ClusterSpec(std::vector<int> sizes_in, std::vector<Matrix> projectors_in)
    : sizes(std::move(sizes_in)), projectors(std::move(projectors_in)) {
  if (sizes.empty()) throw ValidationError("cluster sizes must be nonempty");
  for (int s : sizes) {
    if (s < 1) throw ValidationError("cluster sizes must be positive");
  }
  if (!projectors.empty() && projectors.size() != sizes.size()) {
    throw SizesMismatch("expected one distinguishing projector per cluster");
  }
}

int ClusterSpec::total_particles() const {
  return std::accumulate(sizes.begin(), sizes.end(), 0);
}

std::vector<int> ClusterSpec::offsets() const {
  std::vector<int> out(sizes.size());
  int acc = 0;
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    out[j] = acc;
    acc += sizes[j];
  }
  return out;
}

int ClusterSpec::class_of(int particle) const {
  int acc = 0;
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    acc += sizes[j];
    if (particle < acc) return static_cast<int>(j);
  }
  throw IndexError("particle index " + std::to_string(particle) +
                   " outside [0, " + std::to_string(acc) + ")");
}

std::vector<Perm> cluster_subgroup(const ClusterSpec& spec) {
  const int n = spec.total_particles();
  std::vector<Perm> members;
  for (const Perm& p : enumerate_sn(n)) {
    bool preserves = true;
    for (int i = 0; i < n && preserves; ++i) {
      preserves = spec.class_of(p.apply(i)) == spec.class_of(i);
    }
    if (preserves) members.push_back(p);
  }
  std::int64_t expected = 1;
  for (int s : spec.sizes) {
    for (int k = 2; k <= s; ++k) expected *= k;
  }
  if (static_cast<std::int64_t>(members.size()) != expected) {
    throw ConsistencyError("cluster subgroup order mismatch");
  }
  return members;
}

std::vector<Perm> coset_representatives(const ClusterSpec& spec) {
  const std::vector<Perm> group = enumerate_sn(spec.total_particles());
  const std::vector<Perm> subgroup = cluster_subgroup(spec);
  std::set<std::vector<int>> covered;
  std::vector<Perm> reps;
  for (const Perm& p : group) {
    if (covered.contains(p.image())) continue;
    reps.push_back(p);
    for (const Perm& g : subgroup) {
      covered.insert(compose(p, g).image());
    }
  }
  if (reps.size() * subgroup.size() != group.size() ||
      covered.size() != group.size()) {
    throw ConsistencyError("left cosets do not tile the group");
  }
  return reps;
}

bool is_subgroup(std::span<const Perm> perms) {
  if (perms.empty()) return false;
  std::set<std::vector<int>> members;
  for (const Perm& p : perms) {
    if (p.size() != perms[0].size()) return false;
    members.insert(p.image());
  }
  if (members.size() != perms.size()) return false;
  if (!members.contains(Perm::identity(perms[0].size()).image())) return false;
  for (const Perm& p : perms) {
    if (!members.contains(inverse(p).image())) return false;
    for (const Perm& q : perms) {
      if (!members.contains(compose(p, q).image())) return false;
    }
  }
  return true;
}

}  // namespace idcluster
