#pragma once

#include <utility>
#include <vector>

namespace pathtab {

// Graph on [n] with every vertex of degree at most one; arcs (i,j) have
// i < j and are kept sorted by left endpoint.
class PartialMatching {
 public:
  PartialMatching() = default;
  PartialMatching(int n, std::vector<std::pair<int, int>> arcs);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  std::vector<int> singletons() const;
  bool is_perfect() const;

  // Partner of vertex v, or v itself if v is a singleton.
  int partner(int v) const;

  bool operator==(const PartialMatching&) const = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> arcs_;
};

struct MatchingStats {
  int singletons = 0;
  int crossing_number = 0;  // largest k with a k-crossing
  int nesting_number = 0;   // largest k with a k-nesting
  int connected_components = 0;
};

MatchingStats matching_stats(const PartialMatching& m);

// Arcs plus vertices form a connected subset of the plane (two arcs touch
// iff they cross). The n=1 empty matching counts as connected; for n>1
// connectivity forces the matching to be perfect.
bool is_connected_matching(const PartialMatching& m);

// Vertex sets of the plane components, ordered by ascending minimum.
// Singleton vertices are their own components.
std::vector<std::vector<int>> connected_components(const PartialMatching& m);

}  // namespace pathtab
