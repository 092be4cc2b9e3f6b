#include "heatinv/commutator.hpp"

namespace heatinv {

namespace {

void weakCompositions(int remaining, int parts, std::vector<int>& prefix, std::vector<CommutatorIndex>& out) {
  if (parts == 1) {
    prefix.push_back(remaining);
    out.push_back({prefix});
    prefix.pop_back();
    return;
  }
  for (int first = 0; first <= remaining; ++first) {
    prefix.push_back(first);
    weakCompositions(remaining - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<CommutatorIndex> filtrationLevel(int m) {
  std::vector<CommutatorIndex> out;
  std::vector<int> prefix;
  for (int r = 1; r <= m; ++r) weakCompositions(m - r, r, prefix, out);
  return out;
}

}  // namespace heatinv
