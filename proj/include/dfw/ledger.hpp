#pragma once

#include <vector>

namespace dfw {

enum class MsgKind { GradScalar, PartialSum, AtomPayload, IndexScalar, ReduceScalar };

/// Append-only count of real values transmitted, grouped by iteration and
/// message kind. One unit = one real value on one logical channel.
class MessageLedger {
 public:
  struct Entry {
    int iter;
    MsgKind kind;
    long long reals;
  };

  void charge(int iter, MsgKind kind, long long reals);

  long long total() const { return total_; }
  long long total_for_iter(int iter) const;
  long long total_for_kind(MsgKind kind) const;
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
  long long total_ = 0;
};

}  // namespace dfw
