#include "dfw/topology.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <stdexcept>

namespace dfw {

Topology::Topology(TopologyKind kind, int n, std::vector<std::pair<int, int>> edges,
                   std::string spec)
    : kind_(kind), n_(n), edges_(std::move(edges)), spec_(std::move(spec)) {
  if (n_ < 1) throw std::invalid_argument("topology: need at least one node");
  compute_depths();
}

void Topology::compute_depths() {
  std::vector<std::vector<int>> adj(n_);
  for (auto [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  depth_.assign(n_, -1);
  depth_[0] = 0;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (depth_[w] < 0) {
        depth_[w] = depth_[v] + 1;
        q.push(w);
      }
    }
  }
  for (int v = 0; v < n_; ++v) {
    if (depth_[v] < 0) throw std::invalid_argument("topology: graph is not connected");
  }
}

int Topology::depth(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("topology: node id out of range");
  return depth_[v];
}

int Topology::flood_cost(int origin) const {
  if (origin < 0 || origin >= n_) throw std::out_of_range("topology: origin out of range");
  switch (kind_) {
    case TopologyKind::Star:
    case TopologyKind::Tree:
      return depth_[origin] + (n_ - 1);
    case TopologyKind::Full:
      return n_ - 1;
    case TopologyKind::General:
      return edge_count();
  }
  return edge_count();
}

Topology Topology::star(int n) {
  if (n < 2) throw std::invalid_argument("star: need at least 2 nodes");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Topology(TopologyKind::Star, n, std::move(edges), "star:" + std::to_string(n));
}

Topology Topology::tree(int branching, int n) {
  if (n < 1) throw std::invalid_argument("tree: need at least 1 node");
  if (branching < 1) throw std::invalid_argument("tree: branching must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / branching, v);
  return Topology(TopologyKind::Tree, n, std::move(edges),
                  "tree:" + std::to_string(branching) + ":" + std::to_string(n));
}

Topology Topology::full(int n) {
  if (n < 1) throw std::invalid_argument("full: need at least 1 node");
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Topology(TopologyKind::Full, n, std::move(edges), "full:" + std::to_string(n));
}

Topology Topology::general(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("general: need at least 1 node");
  std::mt19937_64 rng(seed);
  double p = std::min(1.0, 2.0 * std::log(std::max(n, 2)) / n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (u(rng) < p) edges.emplace_back(a, b);
    // connectivity check via union-find
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (auto [a, b] : edges) parent[find(a)] = find(b);
    bool connected = true;
    for (int v = 1; v < n && connected; ++v) connected = find(v) == find(0);
    if (connected && !edges.empty()) {
      return Topology(TopologyKind::General, n, std::move(edges),
                      "general:" + std::to_string(n) + ":" + std::to_string(seed));
    }
    if (n == 1) return Topology(TopologyKind::General, 1, {}, "general:1:" + std::to_string(seed));
  }
  throw std::runtime_error("general: failed to sample a connected graph");
}

Topology Topology::parse(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t pos = spec.find(':', start);
    if (pos == std::string::npos) {
      parts.push_back(spec.substr(start));
      break;
    }
    parts.push_back(spec.substr(start, pos - start));
    start = pos + 1;
  }
  auto want = [&](std::size_t k) {
    if (parts.size() != k) throw std::invalid_argument("bad topology spec: " + spec);
  };
  try {
    if (parts[0] == "star") {
      want(2);
      return star(std::stoi(parts[1]));
    }
    if (parts[0] == "tree") {
      want(3);
      return tree(std::stoi(parts[1]), std::stoi(parts[2]));
    }
    if (parts[0] == "general") {
      want(3);
      return general(std::stoi(parts[1]), std::stoull(parts[2]));
    }
    if (parts[0] == "full") {
      want(2);
      return full(std::stoi(parts[1]));
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad topology spec: " + spec);
  }
  throw std::invalid_argument("unknown topology kind: " + spec);
}

}  // namespace dfw
