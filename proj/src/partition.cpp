#include "dfw/partition.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace dfw {

PartitionSpec PartitionSpec::parse(const std::string& s) {
  PartitionSpec spec;
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t pos = s.find(':', start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  if (parts[0] == "contiguous" && parts.size() == 1) {
    spec.scheme = PartitionScheme::Contiguous;
    return spec;
  }
  if (parts[0] == "uniform" && parts.size() == 2) {
    spec.scheme = PartitionScheme::UniformRandom;
    spec.seed = std::stoull(parts[1]);
    return spec;
  }
  if (parts[0] == "unbalanced" && parts.size() == 3) {
    spec.scheme = PartitionScheme::Unbalanced;
    spec.fraction = std::stod(parts[1]);
    spec.seed = std::stoull(parts[2]);
    return spec;
  }
  throw std::invalid_argument("bad partition spec: " + s);
}

std::string PartitionSpec::to_string() const {
  switch (scheme) {
    case PartitionScheme::Contiguous:
      return "contiguous";
    case PartitionScheme::UniformRandom:
      return "uniform:" + std::to_string(seed);
    case PartitionScheme::Unbalanced:
      return "unbalanced:" + std::to_string(fraction) + ":" + std::to_string(seed);
  }
  return "?";
}

std::vector<std::vector<int>> partition_atoms(int n, int holder_count, const PartitionSpec& spec) {
  if (n < 1) throw std::invalid_argument("partition: no atoms");
  if (holder_count < 1) throw std::invalid_argument("partition: no holders");
  if (holder_count > n && !spec.allow_empty)
    throw std::invalid_argument("partition: more holders than atoms leaves a node empty");

  std::vector<std::vector<int>> out(holder_count);
  switch (spec.scheme) {
    case PartitionScheme::Contiguous: {
      int base = n / holder_count;
      int extra = n % holder_count;
      int next = 0;
      for (int h = 0; h < holder_count; ++h) {
        int size = base + (h < extra ? 1 : 0);
        for (int k = 0; k < size; ++k) out[h].push_back(next++);
      }
      break;
    }
    case PartitionScheme::UniformRandom: {
      std::mt19937_64 rng(spec.seed);
      std::uniform_int_distribution<int> pick(0, holder_count - 1);
      for (int j = 0; j < n; ++j) out[pick(rng)].push_back(j);
      break;
    }
    case PartitionScheme::Unbalanced: {
      if (spec.fraction < 0.0 || spec.fraction > 1.0)
        throw std::invalid_argument("partition: fraction must be in [0,1]");
      std::mt19937_64 rng(spec.seed);
      std::vector<int> ids(n);
      std::iota(ids.begin(), ids.end(), 0);
      std::shuffle(ids.begin(), ids.end(), rng);
      int heavy = static_cast<int>(spec.fraction * n);  // exact floor
      for (int k = 0; k < heavy; ++k) out[0].push_back(ids[k]);
      if (holder_count == 1) {
        for (int k = heavy; k < n; ++k) out[0].push_back(ids[k]);
      } else {
        std::uniform_int_distribution<int> pick(1, holder_count - 1);
        for (int k = heavy; k < n; ++k) out[pick(rng)].push_back(ids[k]);
      }
      break;
    }
  }
  for (auto& list : out) std::sort(list.begin(), list.end());
  return out;
}

}  // namespace dfw
