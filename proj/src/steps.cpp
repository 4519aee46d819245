#include "pathtab/steps.hpp"

#include "pathtab/errors.hpp"

namespace pathtab {

char step_char(Step s) {
  switch (s) {
    case Step::Up: return 'U';
    case Step::Down: return 'D';
    case Step::Flat: return 'F';
  }
  return '?';
}

std::vector<int> heights(const std::vector<Step>& steps) {
  std::vector<int> h;
  h.reserve(steps.size());
  int cur = 0;
  for (Step s : steps) {
    if (s == Step::Up) ++cur;
    else if (s == Step::Down) --cur;
    h.push_back(cur);
  }
  return h;
}

std::vector<Ascent> ascents_of(const std::vector<Step>& steps) {
  std::vector<Ascent> runs;
  int i = 0, len = static_cast<int>(steps.size());
  while (i < len) {
    if (steps[i] == Step::Up) {
      int j = i;
      while (j < len && steps[j] == Step::Up) ++j;
      runs.push_back({i, j - i});
      i = j;
    } else {
      ++i;
    }
  }
  return runs;
}

static void check_balanced_nonnegative(const std::vector<Step>& steps,
                                       bool allow_flat, const char* what) {
  int h = 0;
  for (Step s : steps) {
    if (s == Step::Flat) {
      if (!allow_flat) throw DomainError(std::string(what) + ": flat step not allowed");
      continue;
    }
    h += (s == Step::Up) ? 1 : -1;
    if (h < 0) throw DomainError(std::string(what) + ": prefix drops below the axis");
  }
  if (h != 0) throw DomainError(std::string(what) + ": unbalanced up/down steps");
}

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  check_balanced_nonnegative(steps_, false, "Dyck path");
}

MotzkinPath::MotzkinPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  check_balanced_nonnegative(steps_, true, "Motzkin path");
}

bool avoids_uuu(const std::vector<Step>& steps) {
  for (const Ascent& a : ascents_of(steps))
    if (a.length >= 3) return false;
  return true;
}

int count_singletons(const std::vector<Step>& steps) {
  int s = 0;
  for (const Ascent& a : ascents_of(steps))
    if (a.length == 1) ++s;
  return s;
}

DyckStats dyck_stats(const DyckPath& p) {
  DyckStats st;
  const auto& steps = p.steps();
  st.semilength = p.semilength();
  int h = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    h += (steps[i] == Step::Up) ? 1 : -1;
    if (steps[i] == Step::Down && h == 0) ++st.returns;
    if (i + 1 < steps.size()) {
      if (steps[i] == Step::Up && steps[i + 1] == Step::Down) ++st.peaks;
      if (steps[i] == Step::Down && steps[i + 1] == Step::Up) ++st.valleys;
    }
  }
  for (const Ascent& a : ascents_of(steps)) {
    st.ascent_lengths.push_back(a.length);
    if (a.length == 1) ++st.singletons;
    if (a.length >= 3) st.avoids_uuu = false;
  }
  return st;
}

std::vector<int> peak_positions(const DyckPath& p) {
  std::vector<int> pos;
  const auto& s = p.steps();
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == Step::Up && s[i + 1] == Step::Down)
      pos.push_back(static_cast<int>(i) + 1);
  return pos;
}

std::vector<int> valley_positions(const DyckPath& p) {
  std::vector<int> pos;
  const auto& s = p.steps();
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == Step::Down && s[i + 1] == Step::Up)
      pos.push_back(static_cast<int>(i) + 1);
  return pos;
}

std::vector<int> match_up_to_down(const std::vector<Step>& steps) {
  std::vector<int> match(steps.size(), -1);
  std::vector<int> stack;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::Up) {
      stack.push_back(static_cast<int>(i));
    } else if (steps[i] == Step::Down) {
      if (stack.empty()) throw DomainError("unmatched down-step");
      match[stack.back()] = static_cast<int>(i);
      match[i] = stack.back();
      stack.pop_back();
    }
  }
  if (!stack.empty()) throw DomainError("unmatched up-step");
  return match;
}

}  // namespace pathtab
