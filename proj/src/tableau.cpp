#include "pathtab/tableau.hpp"

#include <algorithm>
#include <numeric>

#include "pathtab/errors.hpp"

namespace pathtab {

YoungShape::YoungShape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("shape: nonpositive part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("shape: parts not weakly decreasing");
  }
}

int YoungShape::boxes() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int YoungShape::row_length(int r) const {
  return (r >= 0 && r < rows()) ? parts_[r] : 0;
}

YoungShape YoungShape::transposed() const {
  std::vector<int> t;
  if (!parts_.empty()) {
    t.assign(parts_[0], 0);
    for (int p : parts_)
      for (int c = 0; c < p; ++c) ++t[c];
  }
  return YoungShape(std::move(t));
}

StandardYoungTableau::StandardYoungTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  int total = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw DomainError("tableau: empty row");
    if (r > 0 && row.size() > rows_[r - 1].size())
      throw DomainError("tableau: row lengths not weakly decreasing");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0 && row[c] <= row[c - 1])
        throw DomainError("tableau: row not strictly increasing");
      if (r > 0 && row[c] <= rows_[r - 1][c])
        throw DomainError("tableau: column not strictly increasing");
    }
    total += static_cast<int>(row.size());
  }
  std::vector<char> seen(static_cast<std::size_t>(total) + 1, 0);
  for (const auto& row : rows_)
    for (int v : row) {
      if (v < 1 || v > total) throw DomainError("tableau: entry out of range");
      if (seen[v]++) throw DomainError("tableau: repeated entry");
    }
}

int StandardYoungTableau::n() const {
  int total = 0;
  for (const auto& row : rows_) total += static_cast<int>(row.size());
  return total;
}

YoungShape StandardYoungTableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return YoungShape(std::move(parts));
}

std::vector<std::vector<int>> StandardYoungTableau::columns() const {
  std::vector<std::vector<int>> cols;
  if (rows_.empty()) return cols;
  cols.resize(rows_[0].size());
  for (const auto& row : rows_)
    for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
  return cols;
}

int StandardYoungTableau::odd_columns() const {
  int odd = 0;
  for (const auto& col : columns())
    if (col.size() % 2 == 1) ++odd;
  return odd;
}

StandardYoungTableau tableau_from_columns(
    const std::vector<std::vector<int>>& columns) {
  std::vector<std::vector<int>> rows;
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < columns[c].size(); ++r) {
      if (rows.size() <= r) rows.emplace_back();
      if (rows[r].size() != c)
        throw DomainError("tableau: columns do not form a left-justified shape");
      rows[r].push_back(columns[c][r]);
    }
  return StandardYoungTableau(std::move(rows));
}

ModifiedTableau::ModifiedTableau(std::vector<std::vector<int>> columns)
    : columns_(std::move(columns)) {
  int total = 0;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    const auto& col = columns_[c];
    if (col.empty()) throw DomainError("modified tableau: empty column");
    if (c > 0 && col.front() <= columns_[c - 1].front())
      throw DomainError("modified tableau: tops not increasing");
    for (std::size_t r = 1; r < col.size(); ++r)
      if (col[r] <= col[r - 1])
        throw DomainError("modified tableau: column not increasing");
    total += static_cast<int>(col.size());
  }
  std::vector<char> seen(static_cast<std::size_t>(total) + 1, 0);
  for (const auto& col : columns_)
    for (int v : col) {
      if (v < 1 || v > total)
        throw DomainError("modified tableau: entries do not cover [n]");
      if (seen[v]++) throw DomainError("modified tableau: repeated entry");
    }
}

int ModifiedTableau::n() const {
  int total = 0;
  for (const auto& col : columns_) total += static_cast<int>(col.size());
  return total;
}

// |a| - |b| when a covers b, -1 otherwise (set difference as box count).
static bool differs_by_one_box(const YoungShape& big, const YoungShape& small) {
  if (big.boxes() != small.boxes() + 1) return false;
  int mismatches = 0;
  int rows = std::max(big.rows(), small.rows());
  for (int r = 0; r < rows; ++r) {
    int d = big.row_length(r) - small.row_length(r);
    if (d < 0 || d > 1) return false;
    mismatches += d;
  }
  return mismatches == 1;
}

OscillatingTableau::OscillatingTableau(std::vector<YoungShape> shapes)
    : shapes_(std::move(shapes)) {
  if (shapes_.empty())
    throw DomainError("oscillating tableau: needs at least the empty shape");
  if (!shapes_.front().empty() || !shapes_.back().empty())
    throw DomainError("oscillating tableau: must start and end empty");
  for (std::size_t i = 1; i < shapes_.size(); ++i) {
    const auto& a = shapes_[i - 1];
    const auto& b = shapes_[i];
    if (a == b || differs_by_one_box(a, b) || differs_by_one_box(b, a)) continue;
    throw DomainError("oscillating tableau: shapes not adjacent");
  }
}

OscillatingTableau OscillatingTableau::transposed() const {
  std::vector<YoungShape> t;
  t.reserve(shapes_.size());
  for (const auto& s : shapes_) t.push_back(s.transposed());
  return OscillatingTableau(std::move(t));
}

BigInt hook_length_count(const YoungShape& shape) {
  if (shape.empty()) return 1;
  YoungShape t = shape.transposed();
  BigInt hooks = 1;
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = 0; c < shape.parts()[r]; ++c)
      hooks *= (shape.parts()[r] - c) + (t.parts()[c] - r) - 1;
  BigInt q, rem;
  boost::multiprecision::divide_qr(factorial(shape.boxes()), hooks, q, rem);
  if (rem != 0) throw DomainError("hook length product must divide n!");
  return q;
}

}  // namespace pathtab
