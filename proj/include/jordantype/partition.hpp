#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "jordantype/error.hpp"

namespace jt {

class Partition {
 public:
  Partition() = default;
  // Parts must be positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  // Sorts decreasingly and drops zeros.
  static Partition from_unsorted(std::vector<int> parts);
  // "(5,3^5,2)", "5,3,3" or "()".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[i]; }
  int weight() const;

  // `compress` writes repeated parts as 3^5.
  std::string str(bool compress = false) const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

using HilbertFunction = std::vector<int>;

std::string hilbert_str(const HilbertFunction& h);
HilbertFunction parse_hilbert(std::string_view text);
HilbertFunction trim_hilbert(HilbertFunction h);

enum class Dominance { Less, Equal, Greater, Incomparable };
const char* dominance_name(Dominance d);

Partition conjugate(const Partition& p);
Dominance dominance_cmp(const Partition& p, const Partition& q);
// p <= q in dominance.
bool dominated_by(const Partition& p, const Partition& q);

Partition p_of_h(const HilbertFunction& h);
Partition sf_p_of_h(const HilbertFunction& h);

struct DegreeString {
  int length;
  int degree;
  auto operator<=>(const DegreeString&) const = default;
};

class JordanDegreeType {
 public:
  JordanDegreeType() = default;
  explicit JordanDegreeType(std::vector<DegreeString> entries);

  // Sorted by degree, then by decreasing length.
  const std::vector<DegreeString>& entries() const { return entries_; }
  Partition partition() const;
  int weight() const;
  std::string str() const;
  static JordanDegreeType parse(std::string_view text);
  bool operator==(const JordanDegreeType&) const = default;

 private:
  std::vector<DegreeString> entries_;
};

JordanDegreeType degree_type_of_h(const HilbertFunction& h);

Partition almost_rectangular(int n, int k);
bool is_almost_rectangular(const Partition& p);
Partition power_partition(const Partition& p, int k);
bool is_stable(const Partition& p);
int ar_cover_number(const Partition& p);
Partition dominance_sum(const Partition& p, const Partition& q);

enum class CollapseStrategy { Exhaustive, Greedy };

struct CollapseResult {
  JordanDegreeType closure;
  CollapseStrategy strategy;
};

// Exhaustive search up to this many entries, greedy beyond.
inline constexpr int kCollapseExhaustiveLimit = 12;

CollapseResult collapse_closure(const JordanDegreeType& d);

// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

}  // namespace jt
