#pragma once

#include <utility>
#include <vector>

namespace pathtab {

// Set partition of [n] kept in standard form: blocks ordered by ascending
// minimum, elements increasing within each block.
class SetPartition {
 public:
  SetPartition() = default;  // partition of the empty set
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  // Non-minimal elements, read block by block in standard form, form an
  // increasing sequence.
  bool is_nomincreasing() const;
  // No a<b<c<d with a,c in one block and b,d in another.
  bool is_noncrossing() const;
  bool is_nonnesting() const;

  bool operator==(const SetPartition&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

// Front representation: each block {a1<...<ak} contributes the arcs
// (a1,a2),(a1,a3),...,(a1,ak).
std::vector<std::pair<int, int>> front_representation(const SetPartition& q);

}  // namespace pathtab
