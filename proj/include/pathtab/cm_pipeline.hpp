#pragma once

#include <vector>

#include "pathtab/matching.hpp"
#include "pathtab/steps.hpp"
#include "pathtab/tableau.hpp"

namespace pathtab {

// Dyck path whose every ascent carries a connected matching of its length:
// ascents have length 1 (trivial label on [1]) or even length 2j with a
// connected perfect matching on [2j].
class CmLabeledDyckPath {
 public:
  CmLabeledDyckPath() = default;
  CmLabeledDyckPath(DyckPath path, std::vector<PartialMatching> labels);

  const DyckPath& path() const { return path_; }
  const std::vector<PartialMatching>& labels() const { return labels_; }

  bool operator==(const CmLabeledDyckPath&) const = default;

 private:
  DyckPath path_;
  std::vector<PartialMatching> labels_;
};

// All connected perfect matchings on [two_j]; two_j = 1 yields the single
// empty matching on one vertex.
std::vector<PartialMatching> enumerate_connected_matchings(int two_j);

// All cm-labeled Dyck paths of semilength n.
std::vector<CmLabeledDyckPath> enumerate_cm_labeled(int n);

// Number the down-steps 1..n, move each number left onto its paired
// up-step, and apply each ascent's connected matching to the ascent's
// numbers (vertex i binds the i-th smallest).
PartialMatching cm_to_matching(const CmLabeledDyckPath& c);

// Inverse: plane components of the matching, ordered by minima, become the
// ascents; each component relabeled by rank is the ascent's label.
CmLabeledDyckPath matching_to_cm(const PartialMatching& m);

// Right-to-left RSK scan: insert i at a right endpoint, delete j at a left
// endpoint, copy at singletons; the recorded shapes form a weakly
// oscillating tableau with empty ends.
OscillatingTableau matching_to_oscillating(const PartialMatching& m);
PartialMatching oscillating_to_matching(const OscillatingTableau& lambda);

// M -> Lambda -> Lambda^t -> M^. An involution on partial matchings that
// preserves singletons and swaps crossing and nesting numbers.
PartialMatching transpose_map(const PartialMatching& m);

// Arcs as transpositions give an involution; one-line notation.
std::vector<int> involution_of(const PartialMatching& m);
PartialMatching matching_of_involution(const std::vector<int>& pi);

// RSK insertion tableau of the involution read as a word.
StandardYoungTableau matching_to_syt(const PartialMatching& m);
PartialMatching syt_to_matching(const StandardYoungTableau& t);

// The full chain: cm-labeled path -> matching -> transpose -> involution
// -> RSK insertion tableau. Bijective onto all SYT with n boxes; path
// singletons map to odd columns, k-noncrossing labels to height <= 2k-1.
StandardYoungTableau cm_pipeline_full(const CmLabeledDyckPath& c);
CmLabeledDyckPath cm_pipeline_inverse(const StandardYoungTableau& t);

}  // namespace pathtab
