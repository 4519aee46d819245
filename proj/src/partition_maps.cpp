#include "pathtab/partition_maps.hpp"

#include <algorithm>
#include <set>

#include "pathtab/errors.hpp"

namespace pathtab {

namespace {

// Down-step numbers 1..n by position, -1 elsewhere.
std::vector<int> down_numbers(const std::vector<Step>& steps) {
  std::vector<int> num(steps.size(), -1);
  int next = 1;
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (steps[i] == Step::Down) num[i] = next++;
  return num;
}

// Minimum of each ascent's block: the number of the first down-step after
// the ascent.
std::vector<int> ascent_minima(const std::vector<Step>& steps,
                               const std::vector<Ascent>& ascents) {
  std::vector<int> downs_before(steps.size() + 1, 0);
  for (std::size_t i = 0; i < steps.size(); ++i)
    downs_before[i + 1] = downs_before[i] + (steps[i] == Step::Down ? 1 : 0);
  std::vector<int> minima;
  minima.reserve(ascents.size());
  for (const Ascent& a : ascents)
    minima.push_back(downs_before[a.start + a.length] + 1);
  return minima;
}

}  // namespace

SetPartition phi(const DyckPath& p) {
  const auto& steps = p.steps();
  int n = p.semilength();
  if (n == 0) return SetPartition();

  auto dnum = down_numbers(steps);
  std::vector<int> label(steps.size(), 0);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  // Peak up-steps take their paired down-step's number; the pair is always
  // the immediately following step.
  for (std::size_t i = 0; i + 1 < steps.size(); ++i)
    if (steps[i] == Step::Up && steps[i + 1] == Step::Down) {
      label[i] = dnum[i + 1];
      used[label[i]] = 1;
    }
  int next = 1;
  auto take_smallest_unused = [&] {
    while (used[next]) ++next;
    used[next] = 1;
    return next;
  };
  std::vector<std::vector<int>> blocks;
  for (const Ascent& a : ascents_of(steps)) {
    std::vector<int> block;
    for (int i = a.start + a.length - 1; i >= a.start; --i) {
      if (label[i] == 0) label[i] = take_smallest_unused();
      block.push_back(label[i]);
    }
    blocks.push_back(std::move(block));
  }
  return SetPartition(n, std::move(blocks));
}

DyckPath phi_inverse(const SetPartition& q) {
  if (!q.is_nomincreasing())
    throw DomainError("phi inverse: partition is not nomincreasing");
  if (q.n() == 0) return DyckPath();
  std::vector<Step> steps;
  const auto& blocks = q.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    int next_min = (i + 1 < blocks.size()) ? blocks[i + 1].front() : q.n() + 1;
    steps.insert(steps.end(), blocks[i].size(), Step::Up);
    steps.insert(steps.end(), next_min - blocks[i].front(), Step::Down);
  }
  return DyckPath(std::move(steps));
}

SetPartition fill_partition(const DyckPath& p, FillDirection dir) {
  int n = p.semilength();
  if (n == 0) return SetPartition();
  const auto& steps = p.steps();
  auto ascents = ascents_of(steps);
  auto minima = ascent_minima(steps, ascents);

  std::set<int> remaining;
  for (int v = 1; v <= n; ++v) remaining.insert(v);
  for (int m : minima) remaining.erase(m);

  std::vector<std::vector<int>> blocks(ascents.size());
  auto fill_block = [&](std::size_t i) {
    blocks[i].push_back(minima[i]);
    for (int need = ascents[i].length - 1; need > 0; --need) {
      auto it = remaining.upper_bound(minima[i]);
      if (it == remaining.end())
        throw DomainError("fill: no element above the block minimum left");
      blocks[i].push_back(*it);
      remaining.erase(it);
    }
  };
  if (dir == FillDirection::LeftToRight) {
    for (std::size_t i = 0; i < ascents.size(); ++i) fill_block(i);
  } else {
    for (std::size_t i = ascents.size(); i-- > 0;) fill_block(i);
  }
  return SetPartition(n, std::move(blocks));
}

ModifiedTableau modified_tableau_of(const SetPartition& q) {
  return ModifiedTableau(q.blocks());
}

StandardYoungTableau hook_bijection(const DyckPath& p) {
  DyckStats st = dyck_stats(p);
  if (p.empty() || st.peaks != st.returns)
    throw DomainError("hook bijection: path must have as many peaks as returns");
  auto cols = phi(p).blocks();
  // Push every box below row 1 into column 1.
  std::vector<int> rest;
  for (auto& col : cols) {
    rest.insert(rest.end(), col.begin() + 1, col.end());
    col.resize(1);
  }
  std::sort(rest.begin(), rest.end());
  cols[0].insert(cols[0].end(), rest.begin(), rest.end());
  return tableau_from_columns(cols);
}

DyckPath hook_bijection_inverse(const StandardYoungTableau& t) {
  const auto shape = t.shape();
  if (shape.rows() > 1)
    for (int r = 1; r < shape.rows(); ++r)
      if (shape.parts()[r] != 1) throw DomainError("hook inverse: not a hook shape");
  if (t.n() == 0) throw DomainError("hook inverse: empty tableau");
  // Column i of the modified tableau holds the consecutive run starting at
  // the i-th first-row entry.
  const auto& top = t.rows()[0];
  int n = t.n();
  std::vector<std::vector<int>> blocks;
  for (std::size_t i = 0; i < top.size(); ++i) {
    int hi = (i + 1 < top.size()) ? top[i + 1] : n + 1;
    std::vector<int> block;
    for (int v = top[i]; v < hi; ++v) block.push_back(v);
    blocks.push_back(std::move(block));
  }
  return phi_inverse(SetPartition(n, std::move(blocks)));
}

StandardYoungTableau flag_bijection(const DyckPath& p) {
  DyckStats st = dyck_stats(p);
  if (p.empty() || st.singletons > 0)
    throw DomainError("flag bijection: path must be nonempty with no singleton ascents");
  auto cols = phi(p).blocks();
  // Push every box below row 2 into column 1.
  std::vector<int> rest;
  for (auto& col : cols) {
    rest.insert(rest.end(), col.begin() + 2, col.end());
    col.resize(2);
  }
  std::sort(rest.begin(), rest.end());
  cols[0].insert(cols[0].end(), rest.begin(), rest.end());
  return tableau_from_columns(cols);
}

DyckPath flag_bijection_inverse(const StandardYoungTableau& t) {
  const auto shape = t.shape();
  if (shape.rows() < 2 || shape.parts()[0] != shape.parts()[1])
    throw DomainError("flag inverse: not a flag shape");
  for (int r = 2; r < shape.rows(); ++r)
    if (shape.parts()[r] != 1) throw DomainError("flag inverse: not a flag shape");

  int n = t.n();
  int k = shape.parts()[0];
  const auto& row2 = t.rows()[1];
  std::vector<std::vector<int>> cols(k);
  for (int i = 0; i < k; ++i) cols[i] = {t.rows()[0][i], row2[i]};
  // Each sub-row-2 entry j moves to the unique column i with b_i < j < b_(i+1).
  for (int r = 2; r < shape.rows(); ++r) {
    int j = t.rows()[r][0];
    int i = k - 1;
    while (i > 0 && row2[i] > j) --i;
    int next = (i + 1 < k) ? row2[i + 1] : n + 1;
    if (!(row2[i] < j && j < next))
      throw DomainError("flag inverse: entry fits no column window");
    cols[i].push_back(j);
  }
  for (auto& c : cols) std::sort(c.begin(), c.end());
  return phi_inverse(SetPartition(n, std::move(cols)));
}

std::vector<int> d11_factorize(const DyckPath& p) {
  const auto& steps = p.steps();
  std::vector<int> blocks;
  std::size_t i = 0;
  while (i < steps.size()) {
    if (steps[i] == Step::Down) {
      blocks.push_back(0);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < steps.size() && steps[j] == Step::Up) ++j;
    std::size_t len = j - i;
    if (len % 2 != 0)
      throw DomainError("not a D_n(1,1) path: odd ascent");
    std::size_t half = len / 2;
    for (std::size_t d = 0; d < half; ++d)
      if (j + d >= steps.size() || steps[j + d] != Step::Down)
        throw DomainError("not a D_n(1,1) path: ascent of length 2j lacks j following down-steps");
    blocks.push_back(static_cast<int>(half));
    i = j + half;
  }
  return blocks;
}

StandardYoungTableau d11_bijection(const DyckPath& p) {
  if (p.semilength() % 2 != 0)
    throw DomainError("not a D_n(1,1) path: odd semilength");
  std::vector<Step> rewritten;
  for (int j : d11_factorize(p)) {
    if (j == 0) {
      rewritten.push_back(Step::Down);
    } else {
      rewritten.insert(rewritten.end(), j + 1, Step::Up);
      rewritten.push_back(Step::Down);
    }
  }
  return flag_bijection(DyckPath(std::move(rewritten)));
}

DyckPath d11_bijection_inverse(const StandardYoungTableau& t) {
  DyckPath q = flag_bijection_inverse(t);
  const auto& steps = q.steps();
  std::vector<Step> out;
  std::size_t i = 0;
  while (i < steps.size()) {
    if (steps[i] == Step::Down) {
      out.push_back(Step::Down);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < steps.size() && steps[j] == Step::Up) ++j;
    int asc = static_cast<int>(j - i) - 1;  // U^(j+1)D came from U^(2j)D^j
    out.insert(out.end(), 2 * asc, Step::Up);
    out.insert(out.end(), asc, Step::Down);
    i = j + 1;  // consume the single down-step after the ascent
  }
  return DyckPath(std::move(out));
}

}  // namespace pathtab
