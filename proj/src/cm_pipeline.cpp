#include "pathtab/cm_pipeline.hpp"

#include <algorithm>
#include <map>

#include "pathtab/enumerate.hpp"
#include "pathtab/errors.hpp"
#include "pathtab/rsk.hpp"

namespace pathtab {

CmLabeledDyckPath::CmLabeledDyckPath(DyckPath path, std::vector<PartialMatching> labels)
    : path_(std::move(path)), labels_(std::move(labels)) {
  auto ascents = ascents_of(path_.steps());
  if (ascents.size() != labels_.size())
    throw DomainError("cm-labeled path: one label per ascent required");
  for (std::size_t i = 0; i < ascents.size(); ++i) {
    int len = ascents[i].length;
    if (len != 1 && len % 2 != 0)
      throw DomainError("cm-labeled path: odd ascent longer than 1 cannot be labeled");
    if (labels_[i].n() != len)
      throw DomainError("cm-labeled path: label size must equal ascent length");
    if (len > 1 && !labels_[i].is_perfect())
      throw DomainError("cm-labeled path: label must be a perfect matching");
    if (!is_connected_matching(labels_[i]))
      throw DomainError("cm-labeled path: label must be connected");
  }
}

std::vector<PartialMatching> enumerate_connected_matchings(int two_j) {
  if (two_j == 1) return {PartialMatching(1, {})};
  if (two_j < 1 || two_j % 2 != 0)
    throw DomainError("connected matchings exist only on even ground sets (or [1])");
  std::vector<PartialMatching> out;
  for (auto& m : enumerate_perfect_matchings(two_j))
    if (is_connected_matching(m)) out.push_back(std::move(m));
  return out;
}

std::vector<CmLabeledDyckPath> enumerate_cm_labeled(int n) {
  std::vector<CmLabeledDyckPath> out;
  std::map<int, std::vector<PartialMatching>> pool;
  for (const DyckPath& p : enumerate_dyck(n)) {
    auto ascents = ascents_of(p.steps());
    bool labelable = true;
    for (const Ascent& a : ascents)
      if (a.length != 1 && a.length % 2 != 0) { labelable = false; break; }
    if (!labelable) continue;
    for (const Ascent& a : ascents)
      if (!pool.count(a.length))
        pool[a.length] = enumerate_connected_matchings(a.length);

    std::vector<PartialMatching> chosen(ascents.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == ascents.size()) {
        out.emplace_back(p, chosen);
        return;
      }
      for (const auto& label : pool[ascents[i].length]) {
        chosen[i] = label;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
  return out;
}

namespace {

// Per-ascent sorted down-step numbers inherited by the up-steps.
std::vector<std::vector<int>> ascent_slots(const DyckPath& p) {
  const auto& steps = p.steps();
  auto match = match_up_to_down(steps);
  std::vector<int> dnum(steps.size(), 0);
  int next = 1;
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (steps[i] == Step::Down) dnum[i] = next++;
  std::vector<std::vector<int>> slots;
  for (const Ascent& a : ascents_of(steps)) {
    std::vector<int> s;
    for (int i = a.start; i < a.start + a.length; ++i) s.push_back(dnum[match[i]]);
    std::sort(s.begin(), s.end());
    slots.push_back(std::move(s));
  }
  return slots;
}

}  // namespace

PartialMatching cm_to_matching(const CmLabeledDyckPath& c) {
  auto slots = ascent_slots(c.path());
  std::vector<std::pair<int, int>> arcs;
  for (std::size_t i = 0; i < slots.size(); ++i)
    for (const auto& [a, b] : c.labels()[i].arcs())
      arcs.emplace_back(slots[i][a - 1], slots[i][b - 1]);
  return PartialMatching(c.path().semilength(), std::move(arcs));
}

CmLabeledDyckPath matching_to_cm(const PartialMatching& m) {
  if (m.n() == 0) return CmLabeledDyckPath();
  auto comps = connected_components(m);
  std::vector<Step> steps;
  std::vector<PartialMatching> labels;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& comp = comps[i];
    int next_min = (i + 1 < comps.size()) ? comps[i + 1].front() : m.n() + 1;
    steps.insert(steps.end(), comp.size(), Step::Up);
    steps.insert(steps.end(), next_min - comp.front(), Step::Down);

    std::map<int, int> rank;
    for (std::size_t r = 0; r < comp.size(); ++r) rank[comp[r]] = static_cast<int>(r) + 1;
    std::vector<std::pair<int, int>> arcs;
    for (const auto& [a, b] : m.arcs())
      if (rank.count(a) && rank.count(b)) arcs.emplace_back(rank[a], rank[b]);
    labels.emplace_back(static_cast<int>(comp.size()), std::move(arcs));
  }
  return CmLabeledDyckPath(DyckPath(std::move(steps)), std::move(labels));
}

OscillatingTableau matching_to_oscillating(const PartialMatching& m) {
  int n = m.n();
  std::vector<int> left_of(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> right_of(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [i, j] : m.arcs()) {
    right_of[i] = j;  // i is a left endpoint
    left_of[j] = i;   // j is a right endpoint
  }

  std::vector<YoungShape> shapes(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<int>> t;  // T^j, built from j = n downward
  auto shape_of = [](const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return YoungShape(parts);
  };
  shapes[n] = YoungShape();
  for (int j = n; j >= 1; --j) {
    if (left_of[j] != 0) {
      rsk_insert(t, left_of[j]);
    } else if (right_of[j] != 0) {
      // j is always a removable corner entry at this stage
      bool removed = false;
      for (std::size_t r = 0; r < t.size() && !removed; ++r)
        if (!t[r].empty() && t[r].back() == j) {
          if (r + 1 < t.size() && t[r + 1].size() == t[r].size())
            throw DomainError("oscillating: entry to delete is not at a corner");
          t[r].pop_back();
          if (t[r].empty()) t.erase(t.begin() + r);
          removed = true;
        }
      if (!removed) throw DomainError("oscillating: entry to delete not found");
    }
    shapes[j - 1] = shape_of(t);
  }
  return OscillatingTableau(std::move(shapes));
}

PartialMatching oscillating_to_matching(const OscillatingTableau& lambda) {
  const auto& shapes = lambda.shapes();
  int n = lambda.steps();
  std::vector<std::vector<int>> t;
  std::vector<std::pair<int, int>> arcs;
  for (int j = 1; j <= n; ++j) {
    const YoungShape& prev = shapes[j - 1];
    const YoungShape& cur = shapes[j];
    if (prev == cur) continue;
    if (cur.boxes() > prev.boxes()) {
      // add the new box with entry j
      int rows = std::max(prev.rows(), cur.rows());
      for (int r = 0; r < rows; ++r)
        if (cur.row_length(r) == prev.row_length(r) + 1) {
          if (static_cast<int>(t.size()) <= r) t.emplace_back();
          t[r].push_back(j);
          break;
        }
    } else {
      int rows = std::max(prev.rows(), cur.rows());
      for (int r = 0; r < rows; ++r)
        if (cur.row_length(r) == prev.row_length(r) - 1) {
          int i = rsk_reverse_insert(t, r, cur.row_length(r));
          arcs.emplace_back(i, j);
          break;
        }
    }
  }
  return PartialMatching(n, std::move(arcs));
}

PartialMatching transpose_map(const PartialMatching& m) {
  return oscillating_to_matching(matching_to_oscillating(m).transposed());
}

std::vector<int> involution_of(const PartialMatching& m) {
  std::vector<int> pi(m.n());
  for (int v = 1; v <= m.n(); ++v) pi[v - 1] = v;
  for (const auto& [i, j] : m.arcs()) {
    pi[i - 1] = j;
    pi[j - 1] = i;
  }
  return pi;
}

PartialMatching matching_of_involution(const std::vector<int>& pi) {
  int n = static_cast<int>(pi.size());
  std::vector<std::pair<int, int>> arcs;
  for (int v = 1; v <= n; ++v) {
    int w = pi[v - 1];
    if (w < 1 || w > n || pi[w - 1] != v)
      throw DomainError("not an involution");
    if (v < w) arcs.emplace_back(v, w);
  }
  return PartialMatching(n, std::move(arcs));
}

StandardYoungTableau matching_to_syt(const PartialMatching& m) {
  std::vector<std::vector<int>> rows;
  for (int v : involution_of(m)) rsk_insert(rows, v);
  return StandardYoungTableau(std::move(rows));
}

PartialMatching syt_to_matching(const StandardYoungTableau& t) {
  // For involutions the insertion and recording tableaux coincide, so the
  // tableau itself locates the box added at each step.
  auto p = t.rows();
  auto q = t.rows();
  int n = t.n();
  std::vector<int> word(n);
  for (int j = n; j >= 1; --j) {
    int row = -1, col = -1;
    for (std::size_t r = 0; r < q.size(); ++r)
      if (!q[r].empty() && q[r].back() == j) {
        row = static_cast<int>(r);
        col = static_cast<int>(q[r].size()) - 1;
        break;
      }
    if (row < 0) throw DomainError("tableau is not the image of an involution");
    q[row].pop_back();
    if (q[row].empty()) q.erase(q.begin() + row);
    word[j - 1] = rsk_reverse_insert(p, row, col);
  }
  return matching_of_involution(word);
}

StandardYoungTableau cm_pipeline_full(const CmLabeledDyckPath& c) {
  return matching_to_syt(transpose_map(cm_to_matching(c)));
}

CmLabeledDyckPath cm_pipeline_inverse(const StandardYoungTableau& t) {
  return matching_to_cm(transpose_map(syt_to_matching(t)));
}

}  // namespace pathtab
