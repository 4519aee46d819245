#pragma once

#include <vector>

#include "pathtab/steps.hpp"
#include "pathtab/tableau.hpp"

namespace pathtab {

// UUU-avoiding Dyck paths of semilength n <-> SYT with n boxes and at most
// three rows. Sends paths with s singleton ascents to tableaux with s odd
// columns.
StandardYoungTableau height3_forward(const DyckPath& p);
DyckPath height3_inverse(const StandardYoungTableau& t);

// Membership in the class matched with SYT of shape (n,n,n): semilength 3n,
// no UUU, exactly n singletons, ends U^2 D^l with l >= 2, and every prefix
// has at least as many completed 1-ascents as 2-ascents.
bool is_d3cat(const DyckPath& p);

// Dyck paths of semilength n+1 with exactly d+1 returns <-> SYT of shape
// (n, n-d). Steps are numbered left to right skipping the first up-step
// and every down-step that returns to the axis.
StandardYoungTableau two_row_forward(const DyckPath& p);
DyckPath two_row_inverse(const StandardYoungTableau& t);

enum class MarkMode { Peaks, Valleys };

// Dyck path with k marked peaks (or valleys). Marks are stored as the index
// of the apex step: the D of a marked UD, the U of a marked DU.
class MarkedDyckPath {
 public:
  MarkedDyckPath() = default;
  MarkedDyckPath(DyckPath path, std::vector<int> marks, MarkMode mode);

  const DyckPath& path() const { return path_; }
  const std::vector<int>& marks() const { return marks_; }
  MarkMode mode() const { return mode_; }

  bool operator==(const MarkedDyckPath&) const = default;

 private:
  DyckPath path_;
  std::vector<int> marks_;
  MarkMode mode_ = MarkMode::Peaks;
};

// Two rows of length n over the label set {1..2n-k}: rows strictly
// increasing, columns weakly (peaks) or strictly (valleys) increasing,
// with exactly the k marked labels present in both rows.
class RowWeakTableau {
 public:
  RowWeakTableau() = default;
  RowWeakTableau(std::vector<int> row1, std::vector<int> row2, MarkMode mode);

  const std::vector<int>& row1() const { return row1_; }
  const std::vector<int>& row2() const { return row2_; }
  MarkMode mode() const { return mode_; }
  int n() const { return static_cast<int>(row1_.size()); }

  bool operator==(const RowWeakTableau&) const = default;

 private:
  std::vector<int> row1_, row2_;
  MarkMode mode_ = MarkMode::Peaks;
};

RowWeakTableau schroder_forward(const MarkedDyckPath& p);
MarkedDyckPath schroder_inverse(const RowWeakTableau& t);

}  // namespace pathtab
