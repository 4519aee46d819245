#include "pathtab/rect_words.hpp"

#include <algorithm>

#include "pathtab/errors.hpp"

namespace pathtab {

RectWord::RectWord(int d, std::vector<int> letters)
    : d_(d), letters_(std::move(letters)) {
  if (d_ < 2) throw DomainError("rect word: alphabet size must be at least 2");
  if (letters_.size() % d_ != 0)
    throw DomainError("rect word: length must be a multiple of d");
  std::vector<int> count(d_, 0);
  for (int ch : letters_) {
    if (ch < 0 || ch >= d_) throw DomainError("rect word: letter out of range");
    ++count[ch];
    for (int i = 1; i < d_; ++i)
      if (count[i] > count[i - 1])
        throw DomainError("rect word: prefix dominance violated");
  }
  for (int i = 1; i < d_; ++i)
    if (count[i] != count[0]) throw DomainError("rect word: unbalanced letters");
}

std::string format(const RectWord& w) {
  std::string s;
  if (w.d() <= 26) {
    for (int ch : w.letters()) s.push_back(static_cast<char>('a' + ch));
  } else {
    for (std::size_t i = 0; i < w.letters().size(); ++i) {
      if (i > 0) s.push_back(' ');
      s += "a" + std::to_string(w.letters()[i] + 1);
    }
  }
  return s;
}

RectWord parse_rect_word(int d, std::string_view text) {
  std::vector<int> letters;
  if (d <= 26) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c < 'a' || c >= 'a' + d) throw ParseError("letter outside alphabet", i);
      letters.push_back(c - 'a');
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      if (text[i] == ' ') { ++i; continue; }
      if (text[i] != 'a') throw ParseError("expected letter token", i);
      ++i;
      int v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9')
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > d) throw ParseError("letter index out of range", i);
      letters.push_back(v - 1);
    }
  }
  return RectWord(d, std::move(letters));
}

namespace {

// Is letters[from, from+len) balanced and prefix-dominant?
bool is_balanced_factor(const std::vector<int>& letters, int d, int from, int len) {
  std::vector<int> count(d, 0);
  for (int i = from; i < from + len; ++i) {
    int ch = letters[i];
    ++count[ch];
    if (ch > 0 && count[ch] > count[ch - 1]) return false;
  }
  for (int i = 1; i < d; ++i)
    if (count[i] != count[0]) return false;
  return true;
}

}  // namespace

bool is_primitive(const RectWord& w) {
  // A proper factor has length at most total - d (lengths are multiples
  // of d), so the whole word never counts as its own factor.
  int total = static_cast<int>(w.letters().size());
  for (int from = 0; from < total; ++from)
    for (int len = w.d(); len <= total - w.d() && from + len <= total; len += w.d())
      if (is_balanced_factor(w.letters(), w.d(), from, len)) return false;
  return true;
}

std::vector<RectWord> enumerate_words(int d, int n, bool primitive_only) {
  if (d < 2 || n < 0) throw DomainError("enumerate words: need d >= 2, n >= 0");
  std::vector<RectWord> out;
  std::vector<int> letters;
  std::vector<int> count(d, 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(letters.size()) == d * n) {
      RectWord w(d, letters);
      if (!primitive_only || is_primitive(w)) out.push_back(std::move(w));
      return;
    }
    for (int ch = 0; ch < d; ++ch) {
      if (count[ch] == n) continue;
      if (ch > 0 && count[ch] + 1 > count[ch - 1]) continue;
      ++count[ch];
      letters.push_back(ch);
      self(self);
      letters.pop_back();
      --count[ch];
    }
  };
  rec(rec);
  return out;
}

RectWord syt_to_word(const StandardYoungTableau& t) {
  const auto shape = t.shape();
  if (shape.rows() < 2)
    throw DomainError("word encoding needs a rectangular shape with d >= 2 rows");
  for (int r = 1; r < shape.rows(); ++r)
    if (shape.parts()[r] != shape.parts()[0])
      throw DomainError("word encoding needs a rectangular shape");
  int n = t.n();
  std::vector<int> letters(n);
  for (int r = 0; r < shape.rows(); ++r)
    for (int v : t.rows()[r]) letters[v - 1] = r;
  return RectWord(shape.rows(), std::move(letters));
}

StandardYoungTableau word_to_syt(const RectWord& w) {
  std::vector<std::vector<int>> rows(w.d());
  for (std::size_t i = 0; i < w.letters().size(); ++i)
    rows[w.letters()[i]].push_back(static_cast<int>(i) + 1);
  return StandardYoungTableau(std::move(rows));
}

LabeledRectDyck::LabeledRectDyck(int d, DyckPath path, std::vector<RectWord> labels)
    : d_(d), path_(std::move(path)), labels_(std::move(labels)) {
  if (d_ < 2) throw DomainError("labeled path: alphabet size must be at least 2");
  auto ascents = ascents_of(path_.steps());
  if (ascents.size() != labels_.size())
    throw DomainError("labeled path: one label per ascent required");
  for (std::size_t i = 0; i < ascents.size(); ++i) {
    if (ascents[i].length % d_ != 0)
      throw DomainError("labeled path: ascent length must be a multiple of d");
    if (labels_[i].d() != d_ || labels_[i].n() * d_ != ascents[i].length)
      throw DomainError("labeled path: label size must match the ascent");
    if (!is_primitive(labels_[i]))
      throw DomainError("labeled path: labels must be primitive words");
  }
}

LabeledRectDyck word_to_labeled_dyck(const RectWord& w) {
  int d = w.d();
  std::vector<int> cur = w.letters();
  std::vector<int> prefix_lengths;   // l_1 > l_2 > ... in extraction order
  std::vector<RectWord> extracted;   // factors in extraction order

  for (;;) {
    // factor with maximal starting position, shortest at that position;
    // a non-primitive word always has one starting at position >= 1
    int found_from = -1, found_len = 0;
    int total = static_cast<int>(cur.size());
    for (int from = total - d; from >= 1 && found_from < 0; --from)
      for (int len = d; from + len <= total; len += d)
        if (is_balanced_factor(cur, d, from, len)) {
          found_from = from;
          found_len = len;
          break;
        }
    if (found_from < 0) break;
    extracted.emplace_back(d, std::vector<int>(cur.begin() + found_from,
                                               cur.begin() + found_from + found_len));
    if (!prefix_lengths.empty() && found_from >= prefix_lengths.back())
      throw DomainError("extraction positions must strictly decrease");
    prefix_lengths.push_back(found_from);
    cur.erase(cur.begin() + found_from, cur.begin() + found_from + found_len);
  }

  int dn = static_cast<int>(w.letters().size());
  std::vector<Step> steps;
  std::vector<RectWord> labels;
  steps.insert(steps.end(), cur.size(), Step::Up);
  labels.emplace_back(d, std::move(cur));
  // Ascents carry the primitives in extraction-reversed order; descent
  // lengths are consecutive differences of the recorded prefix lengths.
  int m = static_cast<int>(extracted.size());
  for (int i = m - 1; i >= 0; --i) {
    int prev = (i + 1 < m) ? prefix_lengths[i + 1] : 0;
    steps.insert(steps.end(), prefix_lengths[i] - prev, Step::Down);
    steps.insert(steps.end(), extracted[i].letters().size(), Step::Up);
    labels.push_back(extracted[i]);
  }
  steps.insert(steps.end(), dn - (m > 0 ? prefix_lengths[0] : 0), Step::Down);
  return LabeledRectDyck(d, DyckPath(std::move(steps)), std::move(labels));
}

RectWord labeled_dyck_to_word(const LabeledRectDyck& ld) {
  const auto& steps = ld.path().steps();
  auto ascents = ascents_of(steps);
  if (ascents.empty()) throw DomainError("labeled path: empty path has no word");

  // descent length after each ascent
  std::vector<int> descents;
  for (std::size_t i = 0; i < ascents.size(); ++i) {
    int from = ascents[i].start + ascents[i].length;
    int to = (i + 1 < ascents.size()) ? ascents[i + 1].start
                                      : static_cast<int>(steps.size());
    descents.push_back(to - from);
  }

  std::vector<int> word = ld.labels()[0].letters();
  int insert_at = descents[0];
  for (std::size_t i = 1; i < ascents.size(); ++i) {
    const auto& letters = ld.labels()[i].letters();
    if (insert_at > static_cast<int>(word.size()))
      throw DomainError("labeled path: prefix position exceeds the word");
    word.insert(word.begin() + insert_at, letters.begin(), letters.end());
    if (i < descents.size() - 0 && i < ascents.size() - 1)
      insert_at += static_cast<int>(letters.size()) + descents[i];
  }
  return RectWord(ld.d(), std::move(word));
}

BigInt d_catalan(int d, int n) {
  if (d < 2 || n < 0) throw DomainError("d-Catalan: need d >= 2, n >= 0");
  if (n == 0) return 1;
  return hook_length_count(YoungShape(std::vector<int>(d, n)));
}

BigInt d_prime_catalan(int d, int n) {
  if (d < 2 || n < 0) throw DomainError("prime d-Catalan: need d >= 2, n >= 0");
  if (n == 0) return 1;
  return static_cast<int>(enumerate_words(d, n, true).size());
}

}  // namespace pathtab
