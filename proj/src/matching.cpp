#include "pathtab/matching.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "pathtab/errors.hpp"

namespace pathtab {

PartialMatching::PartialMatching(int n, std::vector<std::pair<int, int>> arcs)
    : n_(n), arcs_(std::move(arcs)) {
  if (n_ < 0) throw DomainError("matching: negative ground set");
  std::vector<char> deg(static_cast<std::size_t>(n_) + 1, 0);
  for (auto& [i, j] : arcs_) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n_) throw DomainError("matching: vertex out of range");
    if (i == j) throw DomainError("matching: loop arc");
    if (deg[i]++ || deg[j]++) throw DomainError("matching: vertex of degree > 1");
  }
  std::sort(arcs_.begin(), arcs_.end());
}

std::vector<int> PartialMatching::singletons() const {
  std::vector<char> used(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& [i, j] : arcs_) used[i] = used[j] = 1;
  std::vector<int> s;
  for (int v = 1; v <= n_; ++v)
    if (!used[v]) s.push_back(v);
  return s;
}

bool PartialMatching::is_perfect() const {
  return 2 * static_cast<int>(arcs_.size()) == n_;
}

int PartialMatching::partner(int v) const {
  for (const auto& [i, j] : arcs_) {
    if (i == v) return j;
    if (j == v) return i;
  }
  return v;
}

static bool arcs_cross(const std::pair<int, int>& a, const std::pair<int, int>& b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

std::vector<std::vector<int>> connected_components(const PartialMatching& m) {
  const auto& arcs = m.arcs();
  int k = static_cast<int>(arcs.size());
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (arcs_cross(arcs[a], arcs[b])) parent[find(a)] = find(b);

  std::vector<std::vector<int>> comps;
  std::vector<int> comp_of(k, -1);
  for (int a = 0; a < k; ++a) {
    int r = find(a);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[comp_of[r]].push_back(arcs[a].first);
    comps[comp_of[r]].push_back(arcs[a].second);
  }
  for (int v : m.singletons()) comps.push_back({v});
  for (auto& c : comps) std::sort(c.begin(), c.end());
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

bool is_connected_matching(const PartialMatching& m) {
  if (m.n() == 0) return true;
  return connected_components(m).size() == 1;
}

// Largest k with arcs i1<...<ik<j1<...<jk pairwise crossing. Any k-crossing
// straddles the cut between its largest left and smallest right endpoint,
// so it suffices to take, for each cut c, the longest strictly increasing
// subsequence of right endpoints among arcs with left <= c < right.
static int crossing_number(const std::vector<std::pair<int, int>>& arcs, int n) {
  int best = 0;
  for (int c = 1; c < n; ++c) {
    std::vector<int> rights;
    for (const auto& [i, j] : arcs)
      if (i <= c && c < j) rights.push_back(j);
    std::vector<int> tail;  // tail[k] = smallest tail of an increasing run of length k+1
    for (int r : rights) {
      auto it = std::lower_bound(tail.begin(), tail.end(), r);
      if (it == tail.end()) tail.push_back(r);
      else *it = r;
    }
    best = std::max(best, static_cast<int>(tail.size()));
  }
  return best;
}

// Nesting is transitive, so a plain longest-chain DP over containment works.
static int nesting_number(std::vector<std::pair<int, int>> arcs) {
  std::sort(arcs.begin(), arcs.end());
  int k = static_cast<int>(arcs.size());
  std::vector<int> depth(k, 1);
  int best = k > 0 ? 1 : 0;
  for (int b = 0; b < k; ++b)
    for (int a = 0; a < b; ++a)
      if (arcs[a].first < arcs[b].first && arcs[b].second < arcs[a].second)
        depth[b] = std::max(depth[b], depth[a] + 1);
  for (int d : depth) best = std::max(best, d);
  return best;
}

MatchingStats matching_stats(const PartialMatching& m) {
  MatchingStats st;
  st.singletons = static_cast<int>(m.singletons().size());
  st.crossing_number = crossing_number(m.arcs(), m.n());
  st.nesting_number = nesting_number(m.arcs());
  st.connected_components = static_cast<int>(connected_components(m).size());
  return st;
}

}  // namespace pathtab
