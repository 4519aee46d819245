#pragma once

#include <string>
#include <vector>

#include "pathtab/bigint.hpp"
#include "pathtab/steps.hpp"
#include "pathtab/tableau.hpp"

namespace pathtab {

// Balanced prefix-dominant word over d letters: every letter occurs n
// times and every prefix u has #(u,a_1) >= #(u,a_2) >= ... >= #(u,a_d).
class RectWord {
 public:
  RectWord() = default;
  RectWord(int d, std::vector<int> letters);  // letters are 0-based indices

  int d() const { return d_; }
  int n() const { return d_ == 0 ? 0 : static_cast<int>(letters_.size()) / d_; }
  const std::vector<int>& letters() const { return letters_; }

  bool operator==(const RectWord&) const = default;

 private:
  int d_ = 0;
  std::vector<int> letters_;
};

std::string format(const RectWord& w);
RectWord parse_rect_word(int d, std::string_view text);

// No nonempty proper contiguous factor is itself balanced prefix-dominant.
bool is_primitive(const RectWord& w);

std::vector<RectWord> enumerate_words(int d, int n, bool primitive_only);

// Letter i of the word names the row of entry i; requires a d x n
// rectangular tableau.
RectWord syt_to_word(const StandardYoungTableau& t);
StandardYoungTableau word_to_syt(const RectWord& w);

// Dyck path of semilength d*n built from blocks D and U^(d*j)D, with each
// d*j-ascent labeled by a primitive word of size j.
class LabeledRectDyck {
 public:
  LabeledRectDyck() = default;
  LabeledRectDyck(int d, DyckPath path, std::vector<RectWord> labels);

  int d() const { return d_; }
  const DyckPath& path() const { return path_; }
  const std::vector<RectWord>& labels() const { return labels_; }

  bool operator==(const LabeledRectDyck&) const = default;

 private:
  int d_ = 0;
  DyckPath path_;
  std::vector<RectWord> labels_;
};

// Factor extraction: repeatedly remove the balanced factor with maximal
// starting position (shortest such factor there, which is primitive) until
// the remainder is primitive; recorded prefix lengths become the descents.
LabeledRectDyck word_to_labeled_dyck(const RectWord& w);
RectWord labeled_dyck_to_word(const LabeledRectDyck& ld);

BigInt d_catalan(int d, int n);        // |W_d(n)|
BigInt d_prime_catalan(int d, int n);  // |W~_d(n)|

}  // namespace pathtab
