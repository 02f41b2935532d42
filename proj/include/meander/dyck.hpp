#pragma once

// Dyck tuples over {1,*}, the map from pair-partitions to Dyck tuples under a
// side pattern, and the choice-tuple parametrization of its fibres.
//
// Positions in a Dyck tuple are heights: height h carries the h-th operator
// of a product, and lies on side chi(h) of the rectangle. A pair-partition pi
// of labels is moved to heights by s_chi; each pair {k < h} of s_chi·pi gets
// eps(k) = one, eps(h) = star.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "meander/partitions.hpp"

namespace meander {

enum class Mark : std::uint8_t { one, star };

bool is_dyck(std::span<const Mark> symbols);

class DyckTuple {
 public:
  /// Throws DomainError unless `symbols` has the Dyck property.
  static DyckTuple from_marks(std::vector<Mark> symbols);
  /// Parses "11*1**": '1' is one, '*' is star.
  static DyckTuple parse(std::string_view text);

  int size() const { return static_cast<int>(symbols_.size()); }
  int n() const { return size() / 2; }
  Mark operator[](int h) const { return symbols_[h - 1]; }  // 1-indexed
  const std::vector<Mark>& marks() const { return symbols_; }
  std::string to_string() const;

  bool operator==(const DyckTuple&) const = default;

 private:
  explicit DyckTuple(std::vector<Mark> symbols) : symbols_(std::move(symbols)) {}
  std::vector<Mark> symbols_;
};

std::vector<Mark> parse_marks(std::string_view text);
std::string marks_to_string(std::span<const Mark> marks);

struct SidePattern {
  std::vector<Side> sides;

  static SidePattern alternating(int n);  // (l, r, l, r, ...)
  static SidePattern all_left(int n);
  /// Parses "lrrl..." (case-insensitive).
  static SidePattern parse(std::string_view text);
  int size() const { return static_cast<int>(sides.size()); }
  Side operator()(int h) const { return sides[h - 1]; }
  std::string to_string() const;
  Permutation labels_to_heights() const { return side_pattern_permutation(sides); }
};

/// Choice parameters gamma_h (1-indexed by height) attached to a Dyck tuple.
class ChoiceTuple {
 public:
  /// Throws RangeError if gamma_h != 1 at a one or outside [1, Choice(h)] at a star.
  static ChoiceTuple make(DyckTuple eps, std::vector<int> gammas);

  const DyckTuple& eps() const { return eps_; }
  const std::vector<int>& gammas() const { return gammas_; }
  int gamma(int h) const { return gammas_[h - 1]; }

  bool operator==(const ChoiceTuple&) const = default;

 private:
  ChoiceTuple(DyckTuple eps, std::vector<int> gammas) : eps_(std::move(eps)), gammas_(std::move(gammas)) {}
  DyckTuple eps_;
  std::vector<int> gammas_;
};

void for_each_dyck(int two_n, const std::function<void(const DyckTuple&)>& visit,
                   int cap = kDefaultEnumerationCap);
std::vector<DyckTuple> enumerate_dyck(int two_n, int cap = kDefaultEnumerationCap);

std::vector<int> to_lattice_path(const DyckTuple& eps);

/// #ones - #stars strictly before h. Throws DomainError unless eps(h) is a star.
int choice_number(const DyckTuple& eps, int h);
/// Product of the choice numbers over all stars.
long long preimage_size(const DyckTuple& eps);

DyckTuple phi(const PairPartition& pi, const SidePattern& chi);

/// Order in which still-unpaired one-heights are offered to the star at
/// height h: along the star's own side towards the top (nearest first), then
/// across the top and down the opposite side.
std::vector<int> candidate_order(std::span<const int> available, int star_height, const SidePattern& chi);

PairPartition choices_to_partition(const ChoiceTuple& ct, const SidePattern& chi);
ChoiceTuple partition_to_choices(const PairPartition& pi, const SidePattern& chi);

void for_each_choice_tuple(const DyckTuple& eps, const std::function<void(const ChoiceTuple&)>& visit);
void for_each_preimage(const DyckTuple& eps, const SidePattern& chi,
                       const std::function<void(const PairPartition&)>& visit,
                       int cap = kDefaultEnumerationCap);
std::vector<PairPartition> enumerate_preimage(const DyckTuple& eps, const SidePattern& chi,
                                              int cap = kDefaultEnumerationCap);

int crossings_from_choices(const ChoiceTuple& ct);

/// {s_n · pi : pi non-crossing}, in the order of enumerate_noncrossing.
std::vector<PairPartition> bnc2_alt(int two_n, int cap = kDefaultEnumerationCap);

}  // namespace meander
