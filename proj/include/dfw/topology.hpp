#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dfw {

enum class TopologyKind { Star, Tree, Full, General };

/// Connected node/edge graph with the reduce tree and the exact per-real
/// flood costs used by the message ledger:
///   star     depth(origin) + (N-1), i.e. N from a leaf, N-1 from the hub
///   tree     depth(origin) + (N-1)  (up to the root, then one per edge down)
///   full     N-1                    (one direct copy per receiver)
///   general  M                      (fully distributed flood, every edge forwards once)
class Topology {
 public:
  static Topology star(int n);
  static Topology tree(int branching, int n);
  static Topology full(int n);
  /// Erdos-Renyi, resampled until connected; deterministic per seed.
  static Topology general(int n, std::uint64_t seed);
  /// "star:N" | "tree:branching:N" | "general:N:seed" | "full:N"
  static Topology parse(const std::string& spec);

  TopologyKind kind() const { return kind_; }
  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int root() const { return 0; }
  /// Depth on the reduce tree (BFS tree from node 0 for general graphs).
  int depth(int v) const;
  int flood_cost(int origin) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::string& spec_string() const { return spec_; }

 private:
  Topology(TopologyKind kind, int n, std::vector<std::pair<int, int>> edges, std::string spec);
  void compute_depths();

  TopologyKind kind_;
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> depth_;
  std::string spec_;
};

}  // namespace dfw
