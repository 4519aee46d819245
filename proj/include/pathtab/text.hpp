#pragma once

#include <string>
#include <string_view>

#include "pathtab/matching.hpp"
#include "pathtab/partition.hpp"
#include "pathtab/steps.hpp"
#include "pathtab/tableau.hpp"

namespace pathtab {

// Canonical one-line text forms. format(parse(t)) is the canonical form
// of t for every grammar below.
//
//   Dyck/Motzkin     word over U, D, F; empty line = empty path
//   SetPartition     blocks joined by '|'; digits concatenated when every
//                    element is < 10, comma-separated otherwise
//   PartialMatching  "(1 6)(2 7)(8)"; singletons as one-element groups
//   SYT              rows joined by '/', entries comma-separated
//   YoungShape       comma-separated parts

std::string format(const DyckPath& p);
std::string format(const MotzkinPath& p);
std::string format(const SetPartition& q);
std::string format(const PartialMatching& m);
std::string format(const StandardYoungTableau& t);
std::string format(const YoungShape& s);

DyckPath parse_dyck(std::string_view text);
MotzkinPath parse_motzkin(std::string_view text);
SetPartition parse_set_partition(std::string_view text);
PartialMatching parse_matching(std::string_view text);
StandardYoungTableau parse_syt(std::string_view text);
YoungShape parse_shape(std::string_view text);

}  // namespace pathtab
