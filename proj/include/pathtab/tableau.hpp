#pragma once

#include <vector>

#include "pathtab/bigint.hpp"

namespace pathtab {

// Weakly decreasing sequence of positive parts; may be empty.
class YoungShape {
 public:
  YoungShape() = default;
  explicit YoungShape(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int boxes() const;
  bool empty() const { return parts_.empty(); }

  YoungShape transposed() const;
  // Number of boxes in row r (0-based), 0 if the row does not exist.
  int row_length(int r) const;

  bool operator==(const YoungShape&) const = default;

 private:
  std::vector<int> parts_;
};

// Rows strictly increase left to right, columns top to bottom; entries are
// exactly 1..n.
class StandardYoungTableau {
 public:
  StandardYoungTableau() = default;
  explicit StandardYoungTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int n() const;
  int height() const { return static_cast<int>(rows_.size()); }
  YoungShape shape() const;
  std::vector<std::vector<int>> columns() const;
  int odd_columns() const;  // number of columns of odd length

  bool operator==(const StandardYoungTableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

StandardYoungTableau tableau_from_columns(
    const std::vector<std::vector<int>>& columns);

// Column array encoding a partition of [n]: columns strictly increase top
// to bottom and the column tops strictly increase left to right.
class ModifiedTableau {
 public:
  ModifiedTableau() = default;
  explicit ModifiedTableau(std::vector<std::vector<int>> columns);

  const std::vector<std::vector<int>>& columns() const { return columns_; }
  int n() const;

  bool operator==(const ModifiedTableau&) const = default;

 private:
  std::vector<std::vector<int>> columns_;
};

// Sequence of shapes, empty at both ends, adjacent shapes equal or
// differing by exactly one box.
class OscillatingTableau {
 public:
  OscillatingTableau() = default;
  explicit OscillatingTableau(std::vector<YoungShape> shapes);

  const std::vector<YoungShape>& shapes() const { return shapes_; }
  // Number of steps (length of the underlying matching's ground set).
  int steps() const { return static_cast<int>(shapes_.size()) - 1; }

  OscillatingTableau transposed() const;

  bool operator==(const OscillatingTableau&) const = default;

 private:
  std::vector<YoungShape> shapes_;
};

// Number of standard Young tableaux of the shape, by the hook-length
// product formula.
BigInt hook_length_count(const YoungShape& shape);

}  // namespace pathtab
