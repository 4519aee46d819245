#include "pathtab/rsk.hpp"

#include <algorithm>

#include "pathtab/errors.hpp"

namespace pathtab {

std::pair<int, int> rsk_insert(std::vector<std::vector<int>>& rows, int value) {
  int r = 0;
  for (;; ++r) {
    if (r == static_cast<int>(rows.size())) rows.emplace_back();
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), value);
    if (it == row.end()) {
      row.push_back(value);
      return {r, static_cast<int>(row.size()) - 1};
    }
    std::swap(*it, value);
  }
}

int rsk_reverse_insert(std::vector<std::vector<int>>& rows, int row, int col) {
  if (row < 0 || row >= static_cast<int>(rows.size()) ||
      col != static_cast<int>(rows[row].size()) - 1 ||
      (row + 1 < static_cast<int>(rows.size()) &&
       rows[row + 1].size() > static_cast<std::size_t>(col)))
    throw DomainError("reverse insertion must start at a corner box");
  int value = rows[row].back();
  rows[row].pop_back();
  if (rows[row].empty()) rows.erase(rows.begin() + row);
  for (int r = row - 1; r >= 0; --r) {
    auto& above = rows[r];
    // rightmost entry strictly smaller than the travelling value
    auto it = std::lower_bound(above.begin(), above.end(), value);
    std::swap(*(it - 1), value);
  }
  return value;
}

}  // namespace pathtab
