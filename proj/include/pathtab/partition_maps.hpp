#pragma once

#include <utility>
#include <vector>

#include "pathtab/partition.hpp"
#include "pathtab/steps.hpp"
#include "pathtab/tableau.hpp"

namespace pathtab {

// The map phi: number the down-steps 1..n left to right, give each peak's
// up-step its paired down-step's number, then label the remaining up-steps
// greedily (smallest unused) top to bottom per ascent, ascents left to
// right. Blocks are the per-ascent label sets; the image is exactly the
// nomincreasing partitions.
SetPartition phi(const DyckPath& p);

// Reverse of phi: U^{#B1} D^{b2-b1} ... U^{#Bl} D^{n+1-bl} over the block
// minima b1 < ... < bl. Requires a nomincreasing partition.
DyckPath phi_inverse(const SetPartition& q);

enum class FillDirection { LeftToRight, RightToLeft };

// Fix the block skeleton from the ascents (a k-ascent followed by the m-th
// down-step yields a k-block with minimum m), then place the remaining
// elements greedily in the given direction. LeftToRight reproduces phi;
// RightToLeft lands on noncrossing partitions.
SetPartition fill_partition(const DyckPath& p, FillDirection dir);

// Modified-tableau view of a nomincreasing partition: columns = blocks.
ModifiedTableau modified_tableau_of(const SetPartition& q);

// Dyck paths with k peaks and k returns <-> SYT of hook shape (k, 1^(n-k)).
StandardYoungTableau hook_bijection(const DyckPath& p);
DyckPath hook_bijection_inverse(const StandardYoungTableau& t);

// Dyck paths with k peaks and no singleton ascents <-> SYT of flag shape
// (k, k, 1^(n-2k)).
StandardYoungTableau flag_bijection(const DyckPath& p);
DyckPath flag_bijection_inverse(const StandardYoungTableau& t);

// Paths of semilength 2n built from blocks D and U^(2j)D^j, with k peaks,
// <-> SYT of shape (k, k, 1^(n-k)). Forward rewrites each U^(2j)D^j block
// to U^(j+1)D and applies the flag bijection.
StandardYoungTableau d11_bijection(const DyckPath& p);
DyckPath d11_bijection_inverse(const StandardYoungTableau& t);

// Block lengths (j values; 0 for a bare D) of the unique factorization of
// p into D and U^(2j)D^j strings; DomainError if none exists.
std::vector<int> d11_factorize(const DyckPath& p);

}  // namespace pathtab
