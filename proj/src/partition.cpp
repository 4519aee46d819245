#include "pathtab/partition.hpp"

#include <algorithm>

#include "pathtab/errors.hpp"

namespace pathtab {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n_ < 0) throw DomainError("set partition: negative ground set");
  for (auto& b : blocks_) {
    if (b.empty()) throw DomainError("set partition: empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
  int count = 0;
  for (const auto& b : blocks_)
    for (std::size_t i = 0; i < b.size(); ++i) {
      int v = b[i];
      if (v < 1 || v > n_) throw DomainError("set partition: element out of range");
      if (i > 0 && b[i] == b[i - 1]) throw DomainError("set partition: repeated element");
      if (seen[v]) throw DomainError("set partition: element in two blocks");
      seen[v] = 1;
      ++count;
    }
  if (count != n_) throw DomainError("set partition: blocks do not cover [n]");
}

bool SetPartition::is_nomincreasing() const {
  int prev = 0;
  for (const auto& b : blocks_)
    for (std::size_t i = 1; i < b.size(); ++i) {
      if (b[i] < prev) return false;
      prev = b[i];
    }
  return true;
}

// Arcs between consecutive elements of each block; a partition crosses or
// nests exactly when this representation does.
static std::vector<std::pair<int, int>> consecutive_arcs(const SetPartition& q) {
  std::vector<std::pair<int, int>> v;
  for (const auto& b : q.blocks())
    for (std::size_t i = 0; i + 1 < b.size(); ++i) v.emplace_back(b[i], b[i + 1]);
  return v;
}

bool SetPartition::is_noncrossing() const {
  auto arcs = consecutive_arcs(*this);
  for (const auto& [a, b] : arcs)
    for (const auto& [c, d] : arcs)
      if (a < c && c < b && b < d) return false;
  return true;
}

bool SetPartition::is_nonnesting() const {
  auto arcs = consecutive_arcs(*this);
  for (const auto& [a, d] : arcs)
    for (const auto& [b, c] : arcs)
      if (a < b && b < c && c < d) return false;
  return true;
}

std::vector<std::pair<int, int>> front_representation(const SetPartition& q) {
  std::vector<std::pair<int, int>> arcs;
  for (const auto& b : q.blocks())
    for (std::size_t i = 1; i < b.size(); ++i) arcs.emplace_back(b.front(), b[i]);
  return arcs;
}

}  // namespace pathtab
