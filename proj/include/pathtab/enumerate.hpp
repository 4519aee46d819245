#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pathtab/matching.hpp"
#include "pathtab/partition.hpp"
#include "pathtab/steps.hpp"
#include "pathtab/tableau.hpp"

namespace pathtab {

// Exhaustive generators. Each returns every object of the class exactly
// once in a deterministic order; enumerate_texts() below re-sorts into the
// canonical order (lexicographic on the canonical text encoding).

std::vector<DyckPath> enumerate_dyck(int n);
std::vector<MotzkinPath> enumerate_motzkin(int n);
std::vector<SetPartition> enumerate_set_partitions(int n);
std::vector<PartialMatching> enumerate_partial_matchings(int n);
std::vector<PartialMatching> enumerate_perfect_matchings(int n);
std::vector<YoungShape> enumerate_shapes(int n);
std::vector<StandardYoungTableau> enumerate_syt(const YoungShape& shape);
std::vector<StandardYoungTableau> enumerate_syt_with_boxes(int n);

// Object classes and filters exposed by the CLI. `shape` is consulted only
// for class "syt-of-shape". Unknown class/filter tags are usage errors
// (std::invalid_argument); everything else reports via DomainError.
std::vector<std::string> enumerate_texts(const std::string& object_class,
                                         int n, const std::string& filter,
                                         const std::string& shape = "");

}  // namespace pathtab
