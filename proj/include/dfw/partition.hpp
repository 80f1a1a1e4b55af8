#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dfw {

enum class PartitionScheme { UniformRandom, Contiguous, Unbalanced };

struct PartitionSpec {
  PartitionScheme scheme = PartitionScheme::Contiguous;
  std::uint64_t seed = 0;
  double fraction = 0.5;  // Unbalanced: node 0 receives floor(fraction*n) atoms
  bool allow_empty = false;

  /// "contiguous" | "uniform:seed" | "unbalanced:fraction:seed"
  static PartitionSpec parse(const std::string& s);
  std::string to_string() const;
};

/// Assigns atoms 0..n-1 to holders 0..holder_count-1. Each list is sorted;
/// lists are pairwise disjoint and cover [0, n). Throws if holder_count > n
/// and empty holders are not allowed.
std::vector<std::vector<int>> partition_atoms(int n, int holder_count, const PartitionSpec& spec);

}  // namespace dfw
