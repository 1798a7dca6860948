#include "rankforge/ranking.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rankforge {

Ranking Ranking::from_counts(std::span<const Int, kNumClasses> counts) {
  std::array<unsigned, kNumClasses> idx{};
  for (unsigned i = 0; i < kNumClasses; ++i) idx[i] = i;
  // Descending by count; canonical declaration order inside exact ties.
  std::sort(idx.begin(), idx.end(), [&](unsigned a, unsigned b) {
    const int c = cmp(counts[a], counts[b]);
    if (c != 0) return c > 0;
    return a < b;
  });

  Ranking rk;
  unsigned lvl = 0;
  std::vector<HandClass> group;
  auto flush_group = [&] {
    if (group.size() >= 2) rk.ties.push_back(group);
    group.clear();
  };
  for (unsigned pos = 0; pos < kNumClasses; ++pos) {
    const unsigned ci = idx[pos];
    if (pos > 0) {
      if (counts[ci] != counts[idx[pos - 1]]) {
        ++lvl;
        flush_group();
      }
    }
    rk.order[pos] = static_cast<HandClass>(ci);
    rk.level[ci] = static_cast<uint8_t>(lvl);
    group.push_back(static_cast<HandClass>(ci));
  }
  flush_group();
  return rk;
}

Ranking Ranking::from_groups(const std::vector<std::vector<HandClass>>& groups) {
  Ranking rk;
  std::array<bool, kNumClasses> seen{};
  unsigned pos = 0, lvl = 0;
  for (const auto& g : groups) {
    if (g.empty()) throw std::invalid_argument("ranking: empty tie group");
    std::vector<HandClass> sorted = g;
    std::sort(sorted.begin(), sorted.end(),
              [](HandClass a, HandClass b) { return class_index(a) < class_index(b); });
    for (HandClass c : sorted) {
      if (seen[class_index(c)]) throw std::invalid_argument("ranking: duplicate class");
      seen[class_index(c)] = true;
      if (pos >= kNumClasses) throw std::invalid_argument("ranking: too many classes");
      rk.order[pos++] = c;
      rk.level[class_index(c)] = static_cast<uint8_t>(lvl);
    }
    if (sorted.size() >= 2) rk.ties.push_back(sorted);
    ++lvl;
  }
  if (pos != kNumClasses) throw std::invalid_argument("ranking: must cover all nine classes");
  return rk;
}

bool Ranking::same_order_excluding(const Ranking& o, HandClass skip) const {
  for (unsigned a = 0; a < kNumClasses; ++a) {
    if (a == class_index(skip)) continue;
    for (unsigned b = a + 1; b < kNumClasses; ++b) {
      if (b == class_index(skip)) continue;
      const int mine = (level[a] > level[b]) - (level[a] < level[b]);
      const int theirs = (o.level[a] > o.level[b]) - (o.level[a] < o.level[b]);
      if (mine != theirs) return false;
    }
  }
  return true;
}

HandClass Ranking::best(ClassSet profile, bool* tied) const {
  if (profile.empty()) throw std::invalid_argument("best: empty profile");
  int top_level = -1;
  for (unsigned i = 0; i < kNumClasses; ++i) {
    if (profile.contains(static_cast<HandClass>(i))) top_level = std::max(top_level, int(level[i]));
  }
  unsigned at_top = 0;
  int best_idx = -1;
  for (unsigned i = 0; i < kNumClasses; ++i) {
    if (profile.contains(static_cast<HandClass>(i)) && int(level[i]) == top_level) {
      ++at_top;
      best_idx = static_cast<int>(i);  // latest canonical class wins a tie
    }
  }
  if (tied) *tied = at_top >= 2;
  return static_cast<HandClass>(best_idx);
}

std::string Ranking::serialize() const {
  std::string out;
  for (unsigned pos = 0; pos < kNumClasses;) {
    unsigned end = pos + 1;
    while (end < kNumClasses &&
           level[class_index(order[end])] == level[class_index(order[pos])]) {
      ++end;
    }
    for (unsigned i = pos; i < end; ++i) {
      if (i > pos) out += "=";
      out += class_name(order[i]);
    }
    out += "\n";
    pos = end;
  }
  return out;
}

Ranking Ranking::parse(const std::string& text) {
  std::vector<std::vector<HandClass>> groups;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    // strip whitespace and skip blanks/comments
    std::string s;
    for (char ch : line) {
      if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty() || s[0] == '#') continue;
    std::vector<HandClass> group;
    size_t start = 0;
    while (start <= s.size()) {
      const size_t eq = s.find('=', start);
      const std::string tok = s.substr(start, eq == std::string::npos ? eq : eq - start);
      auto cls = class_from_name(tok);
      if (!cls) throw std::invalid_argument("ranking: unknown class '" + tok + "'");
      group.push_back(*cls);
      if (eq == std::string::npos) break;
      start = eq + 1;
    }
    groups.push_back(std::move(group));
  }
  return from_groups(groups);
}

}  // namespace rankforge
