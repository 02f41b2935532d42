#pragma once

// Two-sided q-Wick formula: vacuum expectations of products of left/right
// creation and annihilation operators, computed once by applying the
// operators and once as a sum over pair-partitions weighted by q^cr.
// Also the combinatorial sides of the moment formulas for T and the
// height-compatibility counting behind them.

#include <cstdint>
#include <random>
#include <vector>

#include "meander/dyck.hpp"
#include "meander/fock.hpp"
#include "meander/partitions.hpp"
#include "meander/qpoly.hpp"

namespace meander {

/// M = S_{chi(2n)}^{eps(2n)}(u_2n) ... S_{chi(1)}^{eps(1)}(u_1); u_1 acts first.
template <class Field>
struct WickProduct {
  SidePattern chi;
  std::vector<Mark> eps;
  std::vector<CoordVector<Field>> vectors;

  int size() const { return static_cast<int>(eps.size()); }
  int d() const { return vectors.empty() ? 1 : static_cast<int>(vectors.front().size()); }
};

template <class Field>
void check_wick_product(const WickProduct<Field>& wp) {
  if (wp.chi.size() != wp.size() || static_cast<int>(wp.vectors.size()) != wp.size()) {
    throw DimensionError("side pattern, marks and vectors must have the same length");
  }
  for (const auto& v : wp.vectors) {
    if (static_cast<int>(v.size()) != wp.d()) throw DimensionError("vectors of different dimension");
  }
}

template <class Field>
typename Field::Scalar wick_scalar_combinatorial(const Field& field, const WickProduct<Field>& wp) {
  check_wick_product(wp);
  using Scalar = typename Field::Scalar;
  if (wp.size() == 0) return field.one();
  if (!is_dyck(wp.eps)) return Scalar{};
  const DyckTuple eps = DyckTuple::from_marks(wp.eps);
  const Permutation s = wp.chi.labels_to_heights();
  Scalar total{};
  for_each_preimage(eps, wp.chi, [&](const PairPartition& pi) {
    auto coeff = typename Field::Coord(1);
    const PairPartition heights = act(s, pi);
    for (const auto& [k, h] : heights.pairs()) coeff *= coord_inner<Field>(wp.vectors[k - 1], wp.vectors[h - 1]);
    total += Field::scale(field.q_power(crossings(pi)), coeff);
  });
  return total;
}

template <class Field>
std::vector<OpSymbol<Field>> wick_operator_sequence(const WickProduct<Field>& wp) {
  check_wick_product(wp);
  std::vector<OpSymbol<Field>> ops;
  ops.reserve(wp.size());
  for (int h = wp.size(); h >= 1; --h) {
    ops.push_back({wp.chi(h), wp.eps[h - 1] == Mark::one ? Flavor::create : Flavor::annihilate, wp.vectors[h - 1]});
  }
  return ops;
}

template <class Field>
typename Field::Scalar wick_scalar_operator(const Field& field, const WickProduct<Field>& wp) {
  const auto ops = wick_operator_sequence(wp);
  FockSpace<Field> space(wp.d(), std::max(wp.size() / 2 + wp.size() % 2, 1), field);
  return space.vacuum_expectation(ops);
}

/// True iff I is constant on every pair of s_chi · pi.
bool height_compatible(const IndexTuple& index, const PairPartition& pi, const SidePattern& chi);

/// Sum of q^cr(pi) over pi in the alternating fibre of eps that are
/// height-compatible with I.
QPoly corollary_412_sum(const IndexTuple& index, const DyckTuple& eps);
/// The same quantity as a vacuum expectation of the operator monomial with
/// basis vectors e_{I(h)}.
QPoly corollary_412_operator(const IndexTuple& index, const DyckTuple& eps);

/// sum over pi of d^{|pi v rho|} q^{cr(pi)}.
QPoly theorem_1_4_rhs(int d, int n, int cap = kDefaultEnumerationCap);

/// d^{|pi v rho|}.
BigInt lemma_415_count(const PairPartition& pi, int d);
/// Counts I with I(2k-1) = I(2k) for all k that are height-compatible with pi
/// (alternating sides), by running through all d^{2n} tuples.
long long lemma_415_brute_force(const PairPartition& pi, int d, long long limit = 1'000'000);

/// sum over bi-non-crossing pi of d^{|pi v {{1,2},...,{2n-1,2n}}|}.
BigInt q0_bnc_moment(int d, int n, int cap = kDefaultEnumerationCap);

// ------------------------------------------------------------- random data

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  double uniform_real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  /// p / r with r in {1, 2, 3} and |p / r| <= 3.
  Rational small_rational();
  std::vector<Rational> rational_vector(int d);
  std::vector<std::complex<double>> complex_vector(int d);
  SidePattern side_pattern(int two_n);
  DyckTuple dyck(int two_n);
  ChoiceTuple choice_tuple(const DyckTuple& eps);
  std::vector<Mark> marks(int length);

 private:
  std::mt19937_64 engine_;
};

}  // namespace meander
