#pragma once

// Pair-partitions and set partitions of {1..m}. All ground sets are 1-indexed
// at the API boundary; every constructor canonicalizes so equality is
// structural.

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

namespace meander {

/// Default enumeration cap on the ground-set size 2n.
inline constexpr int kDefaultEnumerationCap = 16;

enum class Side : std::uint8_t { left, right };

/// A bijection of {1..m}, stored as its image table.
class Permutation {
 public:
  static Permutation identity(int m);
  /// images[k-1] is the image of k. Throws DomainError if not a bijection.
  static Permutation from_images(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k - 1]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  Permutation compose(const Permutation& inner) const;  // (*this)∘inner

  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

/// A perfect matching of {1..2n}: pairs (a,b) with a<b, sorted by opener.
class PairPartition {
 public:
  using Pair = std::pair<int, int>;

  /// Validates and canonicalizes. Throws DomainError on a non-matching.
  static PairPartition from_pairs(std::vector<Pair> pairs);
  /// Builds from a partner table: partner[k-1] is the element paired with k.
  static PairPartition from_partners(std::span<const int> partner);

  int n() const { return static_cast<int>(pairs_.size()); }
  int ground_size() const { return 2 * n(); }
  const std::vector<Pair>& pairs() const { return pairs_; }
  /// Partner of k, 1-indexed.
  int partner(int k) const;
  std::vector<int> partners() const;

  bool operator==(const PairPartition&) const = default;
  auto operator<=>(const PairPartition&) const = default;

 private:
  explicit PairPartition(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {}
  std::vector<Pair> pairs_;
};

/// A partition of {1..m}; blocks sorted internally and by minimum.
class SetPartition {
 public:
  static SetPartition from_blocks(int m, std::vector<std::vector<int>> blocks);
  static SetPartition from_pair_partition(const PairPartition& pi);
  /// labels[k-1] is an arbitrary block label of k; equal labels share a block.
  static SetPartition from_labels(std::span<const int> labels);

  int ground_size() const { return m_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  /// 0-based index of the block containing k.
  std::vector<int> block_index() const;
  /// Reverse-refinement order: every block of `coarser` is a union of blocks of *this.
  bool refines(const SetPartition& coarser) const;

  bool operator==(const SetPartition&) const = default;

 private:
  SetPartition(int m, std::vector<std::vector<int>> blocks) : m_(m), blocks_(std::move(blocks)) {}
  int m_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// A map I: {1..length} -> {1..d}.
struct IndexTuple {
  int d = 1;
  std::vector<int> values;

  /// Throws RangeError if some value is outside [1, d].
  static IndexTuple make(int d, std::vector<int> values);
  int length() const { return static_cast<int>(values.size()); }
  int operator()(int k) const { return values[k - 1]; }
};

using PairPartitionVisitor = std::function<void(const PairPartition&)>;

/// Visits every pair-partition of {1..2n} once, pairing the smallest unpaired
/// element with each larger unpaired element in increasing order.
void for_each_pair_partition(int n, const PairPartitionVisitor& visit,
                             int cap = kDefaultEnumerationCap);
/// Same order, restricted to partitions whose pair containing 1 is {1, first_partner}.
void for_each_pair_partition_with_first(int n, int first_partner, const PairPartitionVisitor& visit,
                                        int cap = kDefaultEnumerationCap);

std::vector<PairPartition> enumerate_pair_partitions(int n, int cap = kDefaultEnumerationCap);
std::vector<PairPartition> enumerate_noncrossing(int n, int cap = kDefaultEnumerationCap);

int crossings(const PairPartition& pi);

SetPartition join(const SetPartition& p, const SetPartition& q);
int block_count(const SetPartition& p);
/// |p ∨ q| for two pair-partitions without materializing the join.
int join_block_count(const PairPartition& p, const PairPartition& q);

PairPartition rainbow(int two_n);
PairPartition interval_pairs(int two_n);

/// s_n: k -> 2k-1 for k <= n, k -> 2(2n-k+1) for k > n.
Permutation labels_to_heights(int n);
/// s_chi: the first p labels go to the left positions in increasing order,
/// the remaining labels go to the right positions in decreasing order.
Permutation side_pattern_permutation(std::span<const Side> chi);

PairPartition act(const Permutation& s, const PairPartition& pi);
SetPartition act(const Permutation& s, const SetPartition& p);

SetPartition kernel(const IndexTuple& index);

long long double_factorial_odd(int n);  // (2n-1)!!
long long catalan(int n);

void to_json(nlohmann::json& j, const PairPartition& pi);
PairPartition pair_partition_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const SetPartition& p);

}  // namespace meander
