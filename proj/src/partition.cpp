#include "jordantype/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "jordantype/error.hpp"

namespace jt {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_brackets(std::string_view s, char open, char close) {
  s = strip(s);
  if (!s.empty() && s.front() == open) {
    if (s.back() != close) throw Error(ErrorCode::InvalidArgs, "unbalanced brackets");
    s = strip(s.substr(1, s.size() - 2));
  }
  return s;
}

int parse_int(std::string_view s) {
  s = strip(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorCode::InvalidArgs, "expected an integer, got \"" + std::string(s) + "\"");
  return v;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  if (strip(s).empty()) return out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::vector<long> prefix_sums(const Partition& p, int len) {
  std::vector<long> s(len + 1, 0);
  for (int i = 0; i < len; ++i) s[i + 1] = s[i] + (i < p.size() ? p[i] : 0);
  return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error(ErrorCode::InvalidArgs, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorCode::InvalidArgs, "partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  for (auto item : split_commas(strip_brackets(text, '(', ')'))) {
    auto caret = item.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_int(item));
    } else {
      int value = parse_int(item.substr(0, caret));
      int count = parse_int(item.substr(caret + 1));
      if (count < 0) throw Error(ErrorCode::InvalidArgs, "negative repetition count");
      parts.insert(parts.end(), count, value);
    }
  }
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str(bool compress) const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (compress && j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
    if (compress && j - i > 1) {
      out += '^' + std::to_string(j - i);
      i = j;
    } else {
      ++i;
    }
  }
  return out + ")";
}

std::string hilbert_str(const HilbertFunction& h) {
  std::string out = "(";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(h[i]);
  }
  return out + ")";
}

HilbertFunction parse_hilbert(std::string_view text) {
  HilbertFunction h;
  for (auto item : split_commas(strip_brackets(text, '(', ')'))) {
    int v = parse_int(item);
    if (v < 0) throw Error(ErrorCode::InvalidArgs, "Hilbert function values must be nonnegative");
    h.push_back(v);
  }
  return h;
}

HilbertFunction trim_hilbert(HilbertFunction h) {
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

const char* dominance_name(Dominance d) {
  switch (d) {
    case Dominance::Less: return "Less";
    case Dominance::Equal: return "Equal";
    case Dominance::Greater: return "Greater";
    case Dominance::Incomparable: return "Incomparable";
  }
  return "?";
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> out(p[0], 0);
  for (int part : p.parts())
    for (int c = 0; c < part; ++c) ++out[c];
  return Partition(std::move(out));
}

Dominance dominance_cmp(const Partition& p, const Partition& q) {
  if (p.weight() != q.weight())
    throw Error(ErrorCode::WeightMismatch, "dominance comparison of " + p.str() + " and " +
                                               q.str() + " with different weights");
  int len = std::max(p.size(), q.size());
  auto sp = prefix_sums(p, len);
  auto sq = prefix_sums(q, len);
  bool less = false, greater = false;
  for (int i = 1; i <= len; ++i) {
    if (sp[i] < sq[i]) less = true;
    if (sp[i] > sq[i]) greater = true;
  }
  if (less && greater) return Dominance::Incomparable;
  if (less) return Dominance::Less;
  if (greater) return Dominance::Greater;
  return Dominance::Equal;
}

bool dominated_by(const Partition& p, const Partition& q) {
  auto c = dominance_cmp(p, q);
  return c == Dominance::Less || c == Dominance::Equal;
}

Partition p_of_h(const HilbertFunction& h) { return conjugate(Partition::from_unsorted(h)); }

JordanDegreeType degree_type_of_h(const HilbertFunction& h) {
  // Row r of the bar graph occupies the degrees i with h_i >= r.
  std::vector<DegreeString> out;
  int top = h.empty() ? 0 : *std::max_element(h.begin(), h.end());
  for (int r = 1; r <= top; ++r) {
    int i = 0, n = static_cast<int>(h.size());
    while (i < n) {
      if (h[i] < r) {
        ++i;
        continue;
      }
      int start = i;
      while (i < n && h[i] >= r) ++i;
      out.push_back({i - start, start});
    }
  }
  return JordanDegreeType(std::move(out));
}

Partition sf_p_of_h(const HilbertFunction& h) { return degree_type_of_h(h).partition(); }

JordanDegreeType::JordanDegreeType(std::vector<DegreeString> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_)
    if (e.length <= 0 || e.degree < 0)
      throw Error(ErrorCode::InvalidArgs, "degree-type entries need positive length and degree >= 0");
  std::sort(entries_.begin(), entries_.end(), [](const DegreeString& a, const DegreeString& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.length > b.length;
  });
}

Partition JordanDegreeType::partition() const {
  std::vector<int> parts;
  for (const auto& e : entries_) parts.push_back(e.length);
  return Partition::from_unsorted(std::move(parts));
}

int JordanDegreeType::weight() const {
  int w = 0;
  for (const auto& e : entries_) w += e.length;
  return w;
}

std::string JordanDegreeType::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries_[i].length) + '_' + std::to_string(entries_[i].degree);
  }
  return out + ")";
}

JordanDegreeType JordanDegreeType::parse(std::string_view text) {
  std::vector<DegreeString> entries;
  for (auto item : split_commas(strip_brackets(text, '(', ')'))) {
    auto us = item.find('_');
    if (us == std::string_view::npos)
      throw Error(ErrorCode::InvalidArgs, "degree-type entries are written length_degree");
    entries.push_back({parse_int(item.substr(0, us)), parse_int(item.substr(us + 1))});
  }
  return JordanDegreeType(std::move(entries));
}

Partition almost_rectangular(int n, int k) {
  if (k <= 0 || n <= 0 || k > n)
    throw Error(ErrorCode::InvalidArgs, "almost_rectangular needs 1 <= k <= n");
  int q = n / k, r = n % k;
  std::vector<int> parts(r, q + 1);
  parts.insert(parts.end(), k - r, q);
  return Partition(std::move(parts));
}

bool is_almost_rectangular(const Partition& p) {
  return p.empty() || p[0] - p[p.size() - 1] <= 1;
}

Partition power_partition(const Partition& p, int k) {
  if (k <= 0) throw Error(ErrorCode::InvalidArgs, "power_partition needs k >= 1");
  std::vector<int> parts;
  for (int part : p.parts()) {
    auto piece = almost_rectangular(part, std::min(k, part));
    parts.insert(parts.end(), piece.parts().begin(), piece.parts().end());
  }
  return Partition::from_unsorted(std::move(parts));
}

bool is_stable(const Partition& p) {
  for (int i = 0; i + 1 < p.size(); ++i)
    if (p[i] - p[i + 1] < 2) return false;
  return true;
}

int ar_cover_number(const Partition& p) {
  if (p.empty()) throw Error(ErrorCode::EmptyPartition, "ar_cover_number of the empty partition");
  int groups = 1;
  int group_max = p[0];
  for (int part : p.parts()) {
    if (group_max - part >= 2) {
      ++groups;
      group_max = part;
    }
  }
  return groups;
}

Partition dominance_sum(const Partition& p, const Partition& q) {
  std::vector<int> parts(std::max(p.size(), q.size()), 0);
  for (int i = 0; i < p.size(); ++i) parts[i] += p[i];
  for (int i = 0; i < q.size(); ++i) parts[i] += q[i];
  return Partition(std::move(parts));
}

namespace {

using State = std::vector<DegreeString>;

State canonical(State s) {
  return JordanDegreeType(std::move(s)).entries();
}

// All states reachable by one merge.
std::vector<State> successors(const State& s) {
  std::vector<State> out;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (a == b || s[b].degree != s[a].degree + s[a].length) continue;
      State next;
      for (std::size_t c = 0; c < s.size(); ++c)
        if (c != a && c != b) next.push_back(s[c]);
      next.push_back({s[a].length + s[b].length, s[a].degree});
      out.push_back(canonical(std::move(next)));
    }
  }
  return out;
}

// Ties among maximal outcomes: prefer the lexicographically largest
// partition, then the lexicographically smallest entry list.
bool better(const State& a, const State& b) {
  auto pa = JordanDegreeType(a).partition();
  auto pb = JordanDegreeType(b).partition();
  auto c = dominance_cmp(pa, pb);
  if (c == Dominance::Greater) return true;
  if (c == Dominance::Less) return false;
  if (pa != pb) return pa > pb;
  return a < b;
}

}  // namespace

CollapseResult collapse_closure(const JordanDegreeType& d) {
  State start = d.entries();
  if (static_cast<int>(start.size()) <= kCollapseExhaustiveLimit) {
    std::set<State> seen{start};
    std::vector<State> stack{start};
    std::vector<State> terminal;
    while (!stack.empty()) {
      State s = std::move(stack.back());
      stack.pop_back();
      auto next = successors(s);
      if (next.empty()) terminal.push_back(s);
      for (auto& n : next)
        if (seen.insert(n).second) stack.push_back(std::move(n));
    }
    // Keep terminal states not strictly dominated by another one.
    std::vector<State> maximal;
    for (const auto& s : terminal) {
      auto ps = JordanDegreeType(s).partition();
      bool dominated = false;
      for (const auto& t : terminal)
        if (dominance_cmp(ps, JordanDegreeType(t).partition()) == Dominance::Less) dominated = true;
      if (!dominated) maximal.push_back(s);
    }
    State best = maximal.front();
    for (const auto& s : maximal)
      if (better(s, best)) best = s;
    return {JordanDegreeType(best), CollapseStrategy::Exhaustive};
  }

  State s = start;
  for (;;) {
    int best_a = -1, best_b = -1;
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (a == b || s[b].degree != s[a].degree + s[a].length) continue;
        if (best_a < 0) {
          best_a = static_cast<int>(a);
          best_b = static_cast<int>(b);
          continue;
        }
        int len = s[a].length + s[b].length;
        int best_len = s[best_a].length + s[best_b].length;
        if (len > best_len || (len == best_len && s[a].degree < s[best_a].degree)) {
          best_a = static_cast<int>(a);
          best_b = static_cast<int>(b);
        }
      }
    }
    if (best_a < 0) break;
    State next;
    for (std::size_t c = 0; c < s.size(); ++c)
      if (static_cast<int>(c) != best_a && static_cast<int>(c) != best_b) next.push_back(s[c]);
    next.push_back({s[best_a].length + s[best_b].length, s[best_a].degree});
    s = canonical(std::move(next));
  }
  return {JordanDegreeType(s), CollapseStrategy::Greedy};
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace jt
