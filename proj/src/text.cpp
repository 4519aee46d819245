#include "pathtab/text.hpp"

#include <algorithm>
#include <cctype>

#include "pathtab/errors.hpp"

namespace pathtab {

namespace {

std::vector<Step> parse_steps(std::string_view text, bool allow_flat) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': steps.push_back(Step::Up); break;
      case 'D': steps.push_back(Step::Down); break;
      case 'F':
        if (!allow_flat) throw ParseError("flat step in Dyck word", i);
        steps.push_back(Step::Flat);
        break;
      default: throw ParseError("expected step character U, D or F", i);
    }
  }
  return steps;
}

int parse_int(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw ParseError("expected a number", pos);
  long v = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    v = v * 10 + (text[pos] - '0');
    if (v > 1000000) throw ParseError("number out of range", pos);
    ++pos;
  }
  return static_cast<int>(v);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

std::string format(const DyckPath& p) {
  std::string s;
  s.reserve(p.steps().size());
  for (Step st : p.steps()) s.push_back(step_char(st));
  return s;
}

std::string format(const MotzkinPath& p) {
  std::string s;
  s.reserve(p.steps().size());
  for (Step st : p.steps()) s.push_back(step_char(st));
  return s;
}

DyckPath parse_dyck(std::string_view text) {
  return DyckPath(parse_steps(text, false));
}

MotzkinPath parse_motzkin(std::string_view text) {
  return MotzkinPath(parse_steps(text, true));
}

std::string format(const SetPartition& q) {
  bool compact = q.n() < 10;
  std::string s;
  for (std::size_t b = 0; b < q.blocks().size(); ++b) {
    if (b > 0) s.push_back('|');
    for (std::size_t i = 0; i < q.blocks()[b].size(); ++i) {
      if (i > 0 && !compact) s.push_back(',');
      s += std::to_string(q.blocks()[b][i]);
    }
  }
  return s;
}

SetPartition parse_set_partition(std::string_view text) {
  if (text.empty()) return SetPartition();
  auto block_texts = split(text, '|');

  auto build = [&](bool digit_split) {
    std::vector<std::vector<int>> blocks;
    int maxv = 0;
    std::size_t offset = 0;
    for (auto bt : block_texts) {
      std::vector<int> block;
      if (digit_split && bt.find(',') == std::string_view::npos) {
        for (std::size_t i = 0; i < bt.size(); ++i) {
          if (!std::isdigit(static_cast<unsigned char>(bt[i])))
            throw ParseError("expected a digit", offset + i);
          if (bt[i] == '0') throw ParseError("element 0 not allowed", offset + i);
          block.push_back(bt[i] - '0');
        }
        if (block.empty()) throw ParseError("empty block", offset);
      } else {
        for (auto et : split(bt, ',')) {
          std::size_t p = 0;
          block.push_back(parse_int(et, p));
          if (p != et.size()) throw ParseError("trailing characters in element", offset + p);
        }
      }
      for (int v : block) maxv = std::max(maxv, v);
      blocks.push_back(std::move(block));
      offset += bt.size() + 1;
    }
    return SetPartition(maxv, std::move(blocks));
  };

  // Comma-less blocks are single elements first; if the result does not
  // cover [max], fall back to reading them as strings of digits.
  try {
    return build(false);
  } catch (const DomainError&) {
    return build(true);
  }
}

std::string format(const PartialMatching& m) {
  std::string s;
  std::vector<char> singleton(static_cast<std::size_t>(m.n()) + 1, 1);
  for (const auto& [i, j] : m.arcs()) singleton[i] = singleton[j] = 0;
  // groups ordered by smallest member
  for (int v = 1; v <= m.n(); ++v) {
    if (singleton[v]) {
      s += "(" + std::to_string(v) + ")";
    } else if (m.partner(v) > v) {
      s += "(" + std::to_string(v) + " " + std::to_string(m.partner(v)) + ")";
    }
  }
  return s;
}

PartialMatching parse_matching(std::string_view text) {
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> mentioned;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    int a = parse_int(text, pos);
    mentioned.push_back(a);
    if (pos < text.size() && text[pos] == ' ') {
      ++pos;
      int b = parse_int(text, pos);
      mentioned.push_back(b);
      arcs.emplace_back(a, b);
    }
    if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
    ++pos;
  }
  int n = 0;
  for (int v : mentioned) n = std::max(n, v);
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : mentioned) {
    if (seen[v]) throw ParseError("vertex mentioned twice", 0);
    seen[v] = 1;
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) throw ParseError("vertex missing from matching", 0);
  return PartialMatching(n, std::move(arcs));
}

std::string format(const StandardYoungTableau& t) {
  std::string s;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r > 0) s.push_back('/');
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      if (c > 0) s.push_back(',');
      s += std::to_string(t.rows()[r][c]);
    }
  }
  return s;
}

StandardYoungTableau parse_syt(std::string_view text) {
  if (text.empty()) return StandardYoungTableau();
  std::vector<std::vector<int>> rows;
  std::size_t offset = 0;
  for (auto rt : split(text, '/')) {
    std::vector<int> row;
    for (auto et : split(rt, ',')) {
      std::size_t p = 0;
      row.push_back(parse_int(et, p));
      if (p != et.size()) throw ParseError("trailing characters in entry", offset + p);
    }
    rows.push_back(std::move(row));
    offset += rt.size() + 1;
  }
  return StandardYoungTableau(std::move(rows));
}

std::string format(const YoungShape& s) {
  std::string out;
  for (std::size_t i = 0; i < s.parts().size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(s.parts()[i]);
  }
  return out;
}

YoungShape parse_shape(std::string_view text) {
  if (text.empty()) return YoungShape();
  std::vector<int> parts;
  for (auto pt : split(text, ',')) {
    std::size_t p = 0;
    parts.push_back(parse_int(pt, p));
    if (p != pt.size()) throw ParseError("trailing characters in part", p);
  }
  return YoungShape(std::move(parts));
}

}  // namespace pathtab
