#include "dfw/ledger.hpp"

#include <stdexcept>

namespace dfw {

void MessageLedger::charge(int iter, MsgKind kind, long long reals) {
  if (reals < 0) throw std::invalid_argument("ledger: negative real count");
  if (reals == 0) return;
  entries_.push_back({iter, kind, reals});
  total_ += reals;
}

long long MessageLedger::total_for_iter(int iter) const {
  long long s = 0;
  for (const Entry& e : entries_)
    if (e.iter == iter) s += e.reals;
  return s;
}

long long MessageLedger::total_for_kind(MsgKind kind) const {
  long long s = 0;
  for (const Entry& e : entries_)
    if (e.kind == kind) s += e.reals;
  return s;
}

}  // namespace dfw
