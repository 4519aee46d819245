#include "pathtab/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "pathtab/errors.hpp"
#include "pathtab/height3.hpp"
#include "pathtab/text.hpp"

namespace pathtab {

namespace {

void gen_paths(std::vector<Step>& cur, int ups_left, int downs_left, bool flats,
               int flats_left, std::vector<std::vector<Step>>& out) {
  if (ups_left == 0 && downs_left == 0 && flats_left == 0) {
    out.push_back(cur);
    return;
  }
  // D < F < U keeps the generation in canonical (lexicographic) order.
  if (downs_left > ups_left) {  // current height = downs_left - ups_left > 0
    cur.push_back(Step::Down);
    gen_paths(cur, ups_left, downs_left - 1, flats, flats_left, out);
    cur.pop_back();
  }
  if (flats && flats_left > 0) {
    cur.push_back(Step::Flat);
    gen_paths(cur, ups_left, downs_left, flats, flats_left - 1, out);
    cur.pop_back();
  }
  if (ups_left > 0) {
    cur.push_back(Step::Up);
    gen_paths(cur, ups_left - 1, downs_left, flats, flats_left, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DyckPath> enumerate_dyck(int n) {
  if (n < 0) throw DomainError("enumerate: negative size");
  std::vector<std::vector<Step>> words;
  std::vector<Step> cur;
  gen_paths(cur, n, n, false, 0, words);
  std::vector<DyckPath> out;
  out.reserve(words.size());
  for (auto& w : words) out.emplace_back(std::move(w));
  return out;
}

std::vector<MotzkinPath> enumerate_motzkin(int n) {
  if (n < 0) throw DomainError("enumerate: negative size");
  std::vector<MotzkinPath> out;
  for (int flats = n % 2; flats <= n; flats += 2) {
    std::vector<std::vector<Step>> words;
    std::vector<Step> cur;
    int m = (n - flats) / 2;
    gen_paths(cur, m, m, true, flats, words);
    for (auto& w : words) out.emplace_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), [](const MotzkinPath& a, const MotzkinPath& b) {
    return format(a) < format(b);
  });
  return out;
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
  if (n < 0) throw DomainError("enumerate: negative size");
  std::vector<SetPartition> out;
  std::vector<std::vector<int>> blocks;
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      out.emplace_back(n, blocks);
      return;
    }
    for (auto& b : blocks) {
      b.push_back(v);
      self(self, v + 1);
      b.pop_back();
    }
    blocks.push_back({v});
    self(self, v + 1);
    blocks.pop_back();
  };
  rec(rec, 1);
  return out;
}

namespace {

void gen_matchings(int n, int v, std::vector<char>& used,
                   std::vector<std::pair<int, int>>& arcs, bool perfect,
                   std::vector<PartialMatching>& out) {
  while (v <= n && used[v]) ++v;
  if (v > n) {
    out.emplace_back(n, arcs);
    return;
  }
  used[v] = 1;
  if (!perfect) gen_matchings(n, v + 1, used, arcs, perfect, out);
  for (int w = v + 1; w <= n; ++w) {
    if (used[w]) continue;
    used[w] = 1;
    arcs.emplace_back(v, w);
    gen_matchings(n, v + 1, used, arcs, perfect, out);
    arcs.pop_back();
    used[w] = 0;
  }
  used[v] = 0;
}

}  // namespace

std::vector<PartialMatching> enumerate_partial_matchings(int n) {
  if (n < 0) throw DomainError("enumerate: negative size");
  std::vector<PartialMatching> out;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::pair<int, int>> arcs;
  gen_matchings(n, 1, used, arcs, false, out);
  return out;
}

std::vector<PartialMatching> enumerate_perfect_matchings(int n) {
  if (n < 0) throw DomainError("enumerate: negative size");
  if (n % 2 != 0) return {};
  std::vector<PartialMatching> out;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::pair<int, int>> arcs;
  gen_matchings(n, 1, used, arcs, true, out);
  return out;
}

std::vector<YoungShape> enumerate_shapes(int n) {
  if (n < 0) throw DomainError("enumerate: negative size");
  std::vector<YoungShape> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    if (left == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      parts.push_back(p);
      self(self, left - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<StandardYoungTableau> enumerate_syt(const YoungShape& shape) {
  std::vector<StandardYoungTableau> out;
  int n = shape.boxes();
  std::vector<std::vector<int>> rows(shape.rows());
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      out.emplace_back(rows);
      return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
      std::size_t filled = rows[r].size();
      if (static_cast<int>(filled) >= shape.parts()[r]) continue;
      if (r > 0 && rows[r - 1].size() <= filled) continue;
      rows[r].push_back(v);
      self(self, v + 1);
      rows[r].pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<StandardYoungTableau> enumerate_syt_with_boxes(int n) {
  std::vector<StandardYoungTableau> out;
  for (const auto& shape : enumerate_shapes(n)) {
    auto part = enumerate_syt(shape);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

template <typename T, typename Pred>
std::vector<std::string> filtered_texts(const std::vector<T>& objects, Pred keep) {
  std::vector<std::string> texts;
  for (const auto& obj : objects)
    if (keep(obj)) texts.push_back(format(obj));
  std::sort(texts.begin(), texts.end());
  return texts;
}

[[noreturn]] void unknown_filter(const std::string& filter) {
  throw std::invalid_argument("unknown filter tag: " + filter);
}

}  // namespace

std::vector<std::string> enumerate_texts(const std::string& object_class, int n,
                                         const std::string& filter,
                                         const std::string& shape) {
  if (object_class == "dyck") {
    auto all = enumerate_dyck(n);
    if (filter.empty()) return filtered_texts(all, [](const auto&) { return true; });
    if (filter == "avoids-UUU")
      return filtered_texts(all, [](const DyckPath& p) { return avoids_uuu(p.steps()); });
    if (filter == "no-singletons")
      return filtered_texts(all, [](const DyckPath& p) { return count_singletons(p.steps()) == 0; });
    if (filter == "d3cat")
      return filtered_texts(all, [](const DyckPath& p) { return is_d3cat(p); });
    unknown_filter(filter);
  }
  if (object_class == "motzkin") {
    if (!filter.empty()) unknown_filter(filter);
    return filtered_texts(enumerate_motzkin(n), [](const auto&) { return true; });
  }
  if (object_class == "set-partition") {
    auto all = enumerate_set_partitions(n);
    if (filter.empty()) return filtered_texts(all, [](const auto&) { return true; });
    if (filter == "nomincreasing")
      return filtered_texts(all, [](const SetPartition& q) { return q.is_nomincreasing(); });
    if (filter == "noncrossing")
      return filtered_texts(all, [](const SetPartition& q) { return q.is_noncrossing(); });
    if (filter == "nonnesting")
      return filtered_texts(all, [](const SetPartition& q) { return q.is_nonnesting(); });
    unknown_filter(filter);
  }
  if (object_class == "partial-matching") {
    auto all = enumerate_partial_matchings(n);
    if (filter.empty()) return filtered_texts(all, [](const auto&) { return true; });
    if (filter == "perfect")
      return filtered_texts(all, [](const PartialMatching& m) { return m.is_perfect(); });
    if (filter == "connected")
      return filtered_texts(all, [](const PartialMatching& m) { return is_connected_matching(m); });
    unknown_filter(filter);
  }
  if (object_class == "syt-of-shape") {
    if (!filter.empty()) unknown_filter(filter);
    return filtered_texts(enumerate_syt(parse_shape(shape)), [](const auto&) { return true; });
  }
  if (object_class == "syt-with-n-boxes") {
    if (!filter.empty()) unknown_filter(filter);
    return filtered_texts(enumerate_syt_with_boxes(n), [](const auto&) { return true; });
  }
  throw std::invalid_argument("unknown object class: " + object_class);
}

}  // namespace pathtab
