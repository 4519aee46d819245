#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pathtab {

enum class Step : std::uint8_t { Up, Down, Flat };

char step_char(Step s);

// Height after each step, starting from 0.
std::vector<int> heights(const std::vector<Step>& steps);

struct Ascent {
  int start;   // index of the first up-step of the run
  int length;  // number of consecutive up-steps
};

// Maximal runs of consecutive up-steps, left to right.
std::vector<Ascent> ascents_of(const std::vector<Step>& steps);

// Lattice path with steps U=(1,1), D=(1,-1), balanced and prefix-nonnegative.
class DyckPath {
 public:
  DyckPath() = default;  // the empty path
  explicit DyckPath(std::vector<Step> steps);

  int semilength() const { return static_cast<int>(steps_.size()) / 2; }
  int size() const { return static_cast<int>(steps_.size()); }
  bool empty() const { return steps_.empty(); }
  const std::vector<Step>& steps() const { return steps_; }

  bool operator==(const DyckPath&) const = default;

 private:
  std::vector<Step> steps_;
};

// As DyckPath with flat steps F=(1,0) allowed; length counted in steps.
class MotzkinPath {
 public:
  MotzkinPath() = default;
  explicit MotzkinPath(std::vector<Step> steps);

  int length() const { return static_cast<int>(steps_.size()); }
  bool empty() const { return steps_.empty(); }
  const std::vector<Step>& steps() const { return steps_; }

  bool operator==(const MotzkinPath&) const = default;

 private:
  std::vector<Step> steps_;
};

struct DyckStats {
  int semilength = 0;
  int peaks = 0;       // occurrences of UD
  int valleys = 0;     // occurrences of DU
  int returns = 0;     // down-steps ending at height 0
  int singletons = 0;  // maximal ascents of length 1
  std::vector<int> ascent_lengths;
  bool avoids_uuu = true;  // no three consecutive up-steps
};

DyckStats dyck_stats(const DyckPath& p);

bool avoids_uuu(const std::vector<Step>& steps);
int count_singletons(const std::vector<Step>& steps);

// Positions i such that (i, i+1) is a UD (peak) / DU (valley) occurrence;
// returned values are the indices of the second step (the apex step).
std::vector<int> peak_positions(const DyckPath& p);
std::vector<int> valley_positions(const DyckPath& p);

// For each up-step index, the index of its matching down-step (the first
// later down-step at the same level), and the inverse map.
std::vector<int> match_up_to_down(const std::vector<Step>& steps);

}  // namespace pathtab
