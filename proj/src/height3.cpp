#include "pathtab/height3.hpp"

#include <algorithm>
#include <set>

#include "pathtab/errors.hpp"
#include "pathtab/partition_maps.hpp"

namespace pathtab {

namespace {

int leftmost_length1(const std::vector<std::vector<int>>& cols) {
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (cols[c].size() == 1) return static_cast<int>(c);
  return -1;
}

int first_length2_right_of(const std::vector<std::vector<int>>& cols, int j) {
  for (std::size_t c = j + 1; c < cols.size(); ++c)
    if (cols[c].size() == 2) return static_cast<int>(c);
  return -1;
}

int rightmost_length3(const std::vector<std::vector<int>>& cols) {
  for (std::size_t c = cols.size(); c-- > 0;)
    if (cols[c].size() == 3) return static_cast<int>(c);
  return -1;
}

// Place z below the leftmost length-2 column that keeps its column strict
// and the third row increasing (no length-3 column may sit to its right).
void slide_third_row_left(std::vector<std::vector<int>>& cols, int z) {
  int r = rightmost_length3(cols);
  if (r >= 0 && cols[r][2] >= z)
    throw DomainError("height3: third-row entries not placed in increasing order");
  for (std::size_t c = r + 1; c < cols.size(); ++c)
    if (cols[c].size() == 2 && cols[c][1] < z) {
      cols[c].push_back(z);
      return;
    }
  throw DomainError("height3: no column accepts the third-row entry");
}

}  // namespace

StandardYoungTableau height3_forward(const DyckPath& p) {
  if (!avoids_uuu(p.steps()))
    throw DomainError("height3: path contains three consecutive up-steps");
  if (p.empty()) return StandardYoungTableau();

  auto cols = phi(p).blocks();  // columns of length 1 or 2
  for (;;) {
    int j = leftmost_length1(cols);
    if (j < 0) break;
    int k = first_length2_right_of(cols, j);
    if (k < 0) break;

    int xk = cols[k][0], yk = cols[k][1];
    int yj1 = (j == 0) ? 0 : cols[j - 1][1];
    int z;
    if (xk > yj1) {
      z = yk;
      cols[j].push_back(xk);  // y_j = x_k
    } else {
      // i = largest index with y_i < x_k (0 when none); indices are over
      // the full columns 1..j-1, which all have a second row.
      int i = -1;
      for (int c = 0; c < j; ++c)
        if (cols[c][1] < xk) i = c;
      z = cols[i + 1][1];
      cols[i + 1][1] = xk;
      cols[j].push_back(yk);  // y_j = y_k
    }
    cols.erase(cols.begin() + k);
    slide_third_row_left(cols, z);
  }
  return tableau_from_columns(cols);
}

namespace {

// Move third-row entries as far right as column strictness allows,
// rightmost entry first.
void slide_third_row_right(std::vector<std::vector<int>>& cols) {
  for (std::size_t c = cols.size(); c-- > 0;) {
    if (cols[c].size() != 3) continue;
    std::size_t target = c;
    for (std::size_t d = c + 1; d < cols.size(); ++d) {
      if (cols[d].size() != 2) break;  // another z or a short column blocks
      if (cols[d][1] < cols[c][2]) target = d;
      else break;
    }
    if (target != c) {
      cols[target].push_back(cols[c][2]);
      cols[c].pop_back();
    }
  }
}

}  // namespace

DyckPath height3_inverse(const StandardYoungTableau& t) {
  if (t.height() > 3)
    throw DomainError("height3 inverse: tableau has more than three rows");
  if (t.n() == 0) return DyckPath();

  auto cols = t.columns();
  slide_third_row_right(cols);
  for (;;) {
    int j = rightmost_length3(cols);
    if (j < 0) break;
    int yj = cols[j][1], zj = cols[j][2];
    int k = -1;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (cols[c][0] < yj) k = static_cast<int>(c);
    // x_j < y_j always, so k >= j.
    int ell = -1;
    for (int c = k; c > j; --c)
      if (cols[c].size() == 2) { ell = c; break; }

    std::vector<int> fresh;
    if (ell < 0) {  // k == j or only length-1 columns in between
      fresh = {yj, zj};
      cols[j].resize(1);
    } else {
      fresh = {yj, cols[ell][1]};
      cols[ell].resize(1);
      cols[j] = {cols[j][0], zj};
    }
    cols.insert(cols.begin() + k + 1, std::move(fresh));
  }

  int n = t.n();
  return phi_inverse(SetPartition(n, cols));
}

bool is_d3cat(const DyckPath& p) {
  if (p.empty()) return true;
  if (p.semilength() % 3 != 0) return false;
  int n = p.semilength() / 3;
  const auto& steps = p.steps();
  if (!avoids_uuu(steps)) return false;

  auto ascents = ascents_of(steps);
  // prefix condition, ascents counted as they complete
  int ones = 0, twos = 0;
  for (const Ascent& a : ascents) {
    if (a.length == 1) ++ones;
    else ++twos;
    if (twos > ones) return false;
  }
  if (ones != n) return false;
  // must end with U^2 D^l, l >= 2
  const Ascent& last = ascents.back();
  if (last.length != 2) return false;
  return static_cast<int>(steps.size()) - (last.start + last.length) >= 2;
}

StandardYoungTableau two_row_forward(const DyckPath& p) {
  if (p.empty()) throw DomainError("two-row: path must be nonempty");
  const auto& steps = p.steps();
  std::vector<int> row1, row2;
  int label = 1;
  int h = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::Up) {
      ++h;
      if (i > 0) row1.push_back(label++);
    } else {
      --h;
      if (h > 0) row2.push_back(label++);
    }
  }
  std::vector<std::vector<int>> rows;
  rows.push_back(std::move(row1));
  if (!row2.empty()) rows.push_back(std::move(row2));
  if (rows[0].empty()) rows.clear();  // semilength 1 gives the empty tableau
  return StandardYoungTableau(std::move(rows));
}

DyckPath two_row_inverse(const StandardYoungTableau& t) {
  if (t.height() > 2)
    throw DomainError("two-row inverse: tableau has more than two rows");
  int n = (t.height() >= 1) ? static_cast<int>(t.rows()[0].size()) : 0;
  int d = n - ((t.height() == 2) ? static_cast<int>(t.rows()[1].size()) : 0);

  // Step word of the labeled steps.
  std::set<int> top;
  if (t.height() >= 1) top.insert(t.rows()[0].begin(), t.rows()[0].end());
  int total = 2 * n - d;
  std::vector<Step> word;
  word.reserve(total);
  for (int v = 1; v <= total; ++v)
    word.push_back(top.count(v) ? Step::Up : Step::Down);

  // Cut into the d+1 excursion interiors: reading right to left from
  // height 1, a new excursion starts wherever the backward height hits 0.
  std::vector<int> cuts;  // indices where a return precedes word[i]
  int h = 1;
  for (int i = total; i-- > 0;) {
    h += (word[i] == Step::Up) ? -1 : 1;
    if (h == 0) {
      cuts.push_back(i);
      h = 1;
    }
  }
  if (static_cast<int>(cuts.size()) != d)
    throw DomainError("two-row inverse: labels do not cut into d+1 excursions");
  std::reverse(cuts.begin(), cuts.end());

  std::vector<Step> steps;
  steps.push_back(Step::Up);  // the unlabeled first up-step
  std::size_t next_cut = 0;
  for (int i = 0; i < total; ++i) {
    if (next_cut < cuts.size() && cuts[next_cut] == i) {
      steps.push_back(Step::Down);
      ++next_cut;
    }
    steps.push_back(word[i]);
  }
  steps.push_back(Step::Down);  // final return
  return DyckPath(std::move(steps));
}

MarkedDyckPath::MarkedDyckPath(DyckPath path, std::vector<int> marks, MarkMode mode)
    : path_(std::move(path)), marks_(std::move(marks)), mode_(mode) {
  std::sort(marks_.begin(), marks_.end());
  const auto& s = path_.steps();
  int prev = -1;
  for (int m : marks_) {
    if (m == prev) throw DomainError("marked path: duplicate mark");
    prev = m;
    bool ok = m >= 1 && m < static_cast<int>(s.size());
    if (ok) {
      if (mode_ == MarkMode::Peaks)
        ok = s[m - 1] == Step::Up && s[m] == Step::Down;
      else
        ok = s[m - 1] == Step::Down && s[m] == Step::Up;
    }
    if (!ok)
      throw DomainError(mode_ == MarkMode::Peaks ? "marked path: mark not at a peak"
                                                 : "marked path: mark not at a valley");
  }
}

RowWeakTableau::RowWeakTableau(std::vector<int> row1, std::vector<int> row2, MarkMode mode)
    : row1_(std::move(row1)), row2_(std::move(row2)), mode_(mode) {
  if (row1_.size() != row2_.size())
    throw DomainError("row-weak tableau: rows must have equal length");
  auto check_row = [](const std::vector<int>& r) {
    for (std::size_t i = 1; i < r.size(); ++i)
      if (r[i] <= r[i - 1]) throw DomainError("row-weak tableau: row not strictly increasing");
  };
  check_row(row1_);
  check_row(row2_);
  for (std::size_t i = 0; i < row1_.size(); ++i) {
    if (mode_ == MarkMode::Peaks ? (row2_[i] < row1_[i]) : (row2_[i] <= row1_[i]))
      throw DomainError("row-weak tableau: column monotonicity violated");
  }
  // Label set must be exactly {1..2n-k}, doubles shared across rows.
  std::set<int> values(row1_.begin(), row1_.end());
  values.insert(row2_.begin(), row2_.end());
  int expect = 1;
  for (int v : values)
    if (v != expect++) throw DomainError("row-weak tableau: labels must be 1..2n-k");
}

RowWeakTableau schroder_forward(const MarkedDyckPath& p) {
  const auto& s = p.path().steps();
  std::set<int> marked(p.marks().begin(), p.marks().end());
  std::vector<int> row1, row2;
  int counter = 1;
  std::size_t i = 0;
  while (i < s.size()) {
    if (i + 1 < s.size() && marked.count(static_cast<int>(i) + 1)) {
      row1.push_back(counter);
      row2.push_back(counter);
      ++counter;
      i += 2;
    } else if (s[i] == Step::Up) {
      row1.push_back(counter++);
      ++i;
    } else {
      row2.push_back(counter++);
      ++i;
    }
  }
  return RowWeakTableau(std::move(row1), std::move(row2), p.mode());
}

MarkedDyckPath schroder_inverse(const RowWeakTableau& t) {
  std::set<int> in1(t.row1().begin(), t.row1().end());
  std::set<int> in2(t.row2().begin(), t.row2().end());
  int maxv = t.n() == 0 ? 0 : std::max(t.row1().back(), t.row2().back());
  std::vector<Step> steps;
  std::vector<int> marks;
  for (int v = 1; v <= maxv; ++v) {
    bool a = in1.count(v), b = in2.count(v);
    if (a && b) {
      if (t.mode() == MarkMode::Peaks) {
        steps.push_back(Step::Up);
        steps.push_back(Step::Down);
      } else {
        steps.push_back(Step::Down);
        steps.push_back(Step::Up);
      }
      marks.push_back(static_cast<int>(steps.size()) - 1);
    } else if (a) {
      steps.push_back(Step::Up);
    } else {
      steps.push_back(Step::Down);
    }
  }
  return MarkedDyckPath(DyckPath(std::move(steps)), std::move(marks), t.mode());
}

}  // namespace pathtab
