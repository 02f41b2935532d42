#include "meander/partitions.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "meander/errors.hpp"
#include "meander/union_find.hpp"

namespace meander {

namespace {

void check_cap(int two_n, int cap) {
  if (two_n > cap) {
    throw SizeLimitError("ground set of size " + std::to_string(two_n) +
                         " exceeds enumeration cap " + std::to_string(cap));
  }
}

void check_even(int two_n) {
  if (two_n < 2 || two_n % 2 != 0) {
    throw ParityError("expected an even ground-set size >= 2, got " + std::to_string(two_n));
  }
}

// Recursive matcher over a partner table (1-indexed, 0 = unpaired).
class MatchingWalker {
 public:
  MatchingWalker(int n, const PairPartitionVisitor& visit)
      : two_n_(2 * n), partner_(2 * n + 1, 0), visit_(visit) {}

  void run_from(int first_partner) {
    partner_[1] = first_partner;
    partner_[first_partner] = 1;
    recurse(2);
    partner_[1] = partner_[first_partner] = 0;
  }

 private:
  void recurse(int from) {
    int a = from;
    while (a <= two_n_ && partner_[a] != 0) ++a;
    if (a > two_n_) {
      emit();
      return;
    }
    for (int b = a + 1; b <= two_n_; ++b) {
      if (partner_[b] != 0) continue;
      partner_[a] = b;
      partner_[b] = a;
      recurse(a + 1);
      partner_[a] = partner_[b] = 0;
    }
  }

  void emit() {
    visit_(PairPartition::from_partners(std::span<const int>(partner_).subspan(1)));
  }

  int two_n_;
  std::vector<int> partner_;
  const PairPartitionVisitor& visit_;
};

}  // namespace

// ---------------------------------------------------------------- Permutation

Permutation Permutation::identity(int m) {
  std::vector<int> images(m);
  for (int k = 0; k < m; ++k) images[k] = k + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int m = static_cast<int>(images.size());
  std::vector<bool> seen(m + 1, false);
  for (int v : images) {
    if (v < 1 || v > m || seen[v]) throw DomainError("images do not form a bijection");
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int k = 1; k <= size(); ++k) inv[(*this)(k) - 1] = k;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (inner.size() != size()) throw DimensionError("composing permutations of different sizes");
  std::vector<int> out(images_.size());
  for (int k = 1; k <= size(); ++k) out[k - 1] = (*this)(inner(k));
  return Permutation(std::move(out));
}

// -------------------------------------------------------------- PairPartition

PairPartition PairPartition::from_pairs(std::vector<Pair> pairs) {
  const int two_n = 2 * static_cast<int>(pairs.size());
  if (two_n == 0) throw DomainError("pair-partition must have at least one pair");
  std::vector<bool> seen(two_n + 1, false);
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > two_n || a == b || seen[a] || seen[b]) {
      throw DomainError("pairs do not form a perfect matching of {1.." + std::to_string(two_n) + "}");
    }
    seen[a] = seen[b] = true;
  }
  std::sort(pairs.begin(), pairs.end());
  return PairPartition(std::move(pairs));
}

PairPartition PairPartition::from_partners(std::span<const int> partner) {
  const int two_n = static_cast<int>(partner.size());
  if (two_n == 0 || two_n % 2 != 0) throw DomainError("partner table must have even positive size");
  std::vector<Pair> pairs;
  pairs.reserve(two_n / 2);
  for (int k = 1; k <= two_n; ++k) {
    const int p = partner[k - 1];
    if (p < 1 || p > two_n || p == k || partner[p - 1] != k) {
      throw DomainError("partner table is not a fixed-point-free involution");
    }
    if (k < p) pairs.emplace_back(k, p);
  }
  return PairPartition(std::move(pairs));
}

int PairPartition::partner(int k) const {
  for (const auto& [a, b] : pairs_) {
    if (a == k) return b;
    if (b == k) return a;
  }
  throw RangeError("element " + std::to_string(k) + " outside ground set");
}

std::vector<int> PairPartition::partners() const {
  std::vector<int> out(ground_size());
  for (const auto& [a, b] : pairs_) {
    out[a - 1] = b;
    out[b - 1] = a;
  }
  return out;
}

// --------------------------------------------------------------- SetPartition

SetPartition SetPartition::from_blocks(int m, std::vector<std::vector<int>> blocks) {
  std::vector<bool> seen(m + 1, false);
  int covered = 0;
  for (auto& block : blocks) {
    if (block.empty()) throw DomainError("empty block");
    std::sort(block.begin(), block.end());
    for (int v : block) {
      if (v < 1 || v > m || seen[v]) throw DomainError("blocks are not a partition of {1.." + std::to_string(m) + "}");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != m) throw DomainError("blocks do not cover {1.." + std::to_string(m) + "}");
  std::sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return SetPartition(m, std::move(blocks));
}

SetPartition SetPartition::from_pair_partition(const PairPartition& pi) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(pi.n());
  for (const auto& [a, b] : pi.pairs()) blocks.push_back({a, b});
  return SetPartition(pi.ground_size(), std::move(blocks));
}

SetPartition SetPartition::from_labels(std::span<const int> labels) {
  const int m = static_cast<int>(labels.size());
  std::map<int, int> slot;
  std::vector<std::vector<int>> blocks;
  for (int k = 1; k <= m; ++k) {
    auto [it, inserted] = slot.try_emplace(labels[k - 1], static_cast<int>(blocks.size()));
    if (inserted) blocks.emplace_back();
    blocks[it->second].push_back(k);
  }
  // Blocks are created in order of first appearance, which is order of minimum.
  return SetPartition(m, std::move(blocks));
}

std::vector<int> SetPartition::block_index() const {
  std::vector<int> idx(m_);
  for (int b = 0; b < block_count(); ++b) {
    for (int v : blocks_[b]) idx[v - 1] = b;
  }
  return idx;
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (coarser.m_ != m_) throw DimensionError("comparing partitions of different ground sets");
  const auto outer = coarser.block_index();
  for (const auto& block : blocks_) {
    for (int v : block) {
      if (outer[v - 1] != outer[block.front() - 1]) return false;
    }
  }
  return true;
}

IndexTuple IndexTuple::make(int d, std::vector<int> values) {
  if (d < 1) throw RangeError("alphabet size must be positive");
  for (int v : values) {
    if (v < 1 || v > d) throw RangeError("index value " + std::to_string(v) + " outside [1, " + std::to_string(d) + "]");
  }
  return IndexTuple{d, std::move(values)};
}

// ---------------------------------------------------------------- enumeration

void for_each_pair_partition(int n, const PairPartitionVisitor& visit, int cap) {
  if (n < 1) throw DomainError("n must be positive");
  check_cap(2 * n, cap);
  MatchingWalker walker(n, visit);
  for (int b = 2; b <= 2 * n; ++b) walker.run_from(b);
}

void for_each_pair_partition_with_first(int n, int first_partner, const PairPartitionVisitor& visit, int cap) {
  if (n < 1) throw DomainError("n must be positive");
  check_cap(2 * n, cap);
  if (first_partner < 2 || first_partner > 2 * n) throw RangeError("first partner outside {2..2n}");
  MatchingWalker walker(n, visit);
  walker.run_from(first_partner);
}

std::vector<PairPartition> enumerate_pair_partitions(int n, int cap) {
  std::vector<PairPartition> out;
  for_each_pair_partition(n, [&](const PairPartition& pi) { out.push_back(pi); }, cap);
  return out;
}

std::vector<PairPartition> enumerate_noncrossing(int n, int cap) {
  std::vector<PairPartition> out;
  for_each_pair_partition(
      n,
      [&](const PairPartition& pi) {
        if (crossings(pi) == 0) out.push_back(pi);
      },
      cap);
  return out;
}

// ------------------------------------------------------------------ structure

int crossings(const PairPartition& pi) {
  const auto& pairs = pi.pairs();
  int count = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, c] = pairs[i];
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      // Openers are sorted, so pairs[j].first > a.
      const auto [b, e] = pairs[j];
      if (b < c && c < e) ++count;
    }
  }
  return count;
}

SetPartition join(const SetPartition& p, const SetPartition& q) {
  if (p.ground_size() != q.ground_size()) throw DimensionError("join of partitions on different ground sets");
  const int m = p.ground_size();
  DisjointSets sets(m);
  for (const auto* part : {&p, &q}) {
    for (const auto& block : part->blocks()) {
      for (std::size_t i = 1; i < block.size(); ++i) sets.unite(block[0] - 1, block[i] - 1);
    }
  }
  std::vector<int> labels(m);
  for (int k = 0; k < m; ++k) labels[k] = sets.find(k);
  return SetPartition::from_labels(labels);
}

int block_count(const SetPartition& p) { return p.block_count(); }

int join_block_count(const PairPartition& p, const PairPartition& q) {
  if (p.n() != q.n()) throw DimensionError("join of pair-partitions on different ground sets");
  DisjointSets sets(p.ground_size());
  for (const auto& [a, b] : p.pairs()) sets.unite(a - 1, b - 1);
  for (const auto& [a, b] : q.pairs()) sets.unite(a - 1, b - 1);
  return sets.components();
}

PairPartition rainbow(int two_n) {
  check_even(two_n);
  std::vector<PairPartition::Pair> pairs;
  for (int k = 1; k <= two_n / 2; ++k) pairs.emplace_back(k, two_n + 1 - k);
  return PairPartition::from_pairs(std::move(pairs));
}

PairPartition interval_pairs(int two_n) {
  check_even(two_n);
  std::vector<PairPartition::Pair> pairs;
  for (int k = 1; k < two_n; k += 2) pairs.emplace_back(k, k + 1);
  return PairPartition::from_pairs(std::move(pairs));
}

Permutation labels_to_heights(int n) {
  if (n < 1) throw DomainError("n must be positive");
  std::vector<int> images(2 * n);
  for (int k = 1; k <= 2 * n; ++k) images[k - 1] = k <= n ? 2 * k - 1 : 2 * (2 * n - k + 1);
  return Permutation::from_images(std::move(images));
}

Permutation side_pattern_permutation(std::span<const Side> chi) {
  if (chi.empty() || chi.size() % 2 != 0) throw ParityError("side pattern must have even positive length");
  std::vector<int> images;
  images.reserve(chi.size());
  for (std::size_t h = 0; h < chi.size(); ++h) {
    if (chi[h] == Side::left) images.push_back(static_cast<int>(h) + 1);
  }
  for (std::size_t h = chi.size(); h-- > 0;) {
    if (chi[h] == Side::right) images.push_back(static_cast<int>(h) + 1);
  }
  return Permutation::from_images(std::move(images));
}

PairPartition act(const Permutation& s, const PairPartition& pi) {
  if (s.size() != pi.ground_size()) throw DimensionError("permutation and partition sizes differ");
  std::vector<PairPartition::Pair> pairs;
  pairs.reserve(pi.n());
  for (const auto& [a, b] : pi.pairs()) pairs.emplace_back(s(a), s(b));
  return PairPartition::from_pairs(std::move(pairs));
}

SetPartition act(const Permutation& s, const SetPartition& p) {
  if (s.size() != p.ground_size()) throw DimensionError("permutation and partition sizes differ");
  std::vector<std::vector<int>> blocks;
  blocks.reserve(p.block_count());
  for (const auto& block : p.blocks()) {
    auto& image = blocks.emplace_back();
    for (int v : block) image.push_back(s(v));
  }
  return SetPartition::from_blocks(p.ground_size(), std::move(blocks));
}

SetPartition kernel(const IndexTuple& index) { return SetPartition::from_labels(index.values); }

long long double_factorial_odd(int n) {
  long long out = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) out *= k;
  return out;
}

long long catalan(int n) {
  long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

// ----------------------------------------------------------------------- JSON

void to_json(nlohmann::json& j, const PairPartition& pi) {
  j = nlohmann::json::array();
  for (const auto& [a, b] : pi.pairs()) j.push_back({a, b});
}

PairPartition pair_partition_from_json(const nlohmann::json& j) {
  std::vector<PairPartition::Pair> pairs;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2) throw DomainError("pair-partition JSON must be an array of 2-element arrays");
    pairs.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return PairPartition::from_pairs(std::move(pairs));
}

void to_json(nlohmann::json& j, const SetPartition& p) { j = p.blocks(); }

}  // namespace meander
