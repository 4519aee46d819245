#pragma once

#include <utility>
#include <vector>

namespace pathtab {

// Schensted row insertion: bump the leftmost entry strictly greater than
// the incoming value. Returns the (row, column) of the box that was added.
std::pair<int, int> rsk_insert(std::vector<std::vector<int>>& rows, int value);

// Exact inverse of rsk_insert starting from the corner box (row, col):
// removes it and returns the value that exits row 1.
int rsk_reverse_insert(std::vector<std::vector<int>>& rows, int row, int col);

}  // namespace pathtab
