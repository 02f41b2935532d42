#include "meander/qwick.hpp"

#include "meander/errors.hpp"

namespace meander {

bool height_compatible(const IndexTuple& index, const PairPartition& pi, const SidePattern& chi) {
  if (index.length() != pi.ground_size() || chi.size() != pi.ground_size()) {
    throw DimensionError("index tuple, partition and side pattern must have the same length");
  }
  const PairPartition heights = act(chi.labels_to_heights(), pi);
  for (const auto& [a, b] : heights.pairs()) {
    if (index(a) != index(b)) return false;
  }
  return true;
}

QPoly corollary_412_sum(const IndexTuple& index, const DyckTuple& eps) {
  if (index.length() != eps.size()) throw DimensionError("index tuple and Dyck tuple differ in length");
  const SidePattern chi = SidePattern::alternating(eps.n());
  QPoly total;
  for_each_preimage(eps, chi, [&](const PairPartition& pi) {
    if (height_compatible(index, pi, chi)) total += QPoly::monomial(crossings(pi));
  });
  return total;
}

QPoly corollary_412_operator(const IndexTuple& index, const DyckTuple& eps) {
  if (index.length() != eps.size()) throw DimensionError("index tuple and Dyck tuple differ in length");
  WickProduct<ExactField> wp;
  wp.chi = SidePattern::alternating(eps.n());
  wp.eps = eps.marks();
  for (int h = 1; h <= index.length(); ++h) wp.vectors.push_back(basis_vector<ExactField>(index.d, index(h)));
  return wick_scalar_operator(ExactField{}, wp);
}

QPoly theorem_1_4_rhs(int d, int n, int cap) {
  if (d < 1 || n < 1) throw DomainError("d and n must be positive");
  const PairPartition rho = rainbow(2 * n);
  // counts[blocks][crossings]
  std::vector<std::vector<long long>> counts(n + 1, std::vector<long long>(n * n + 1, 0));
  for_each_pair_partition(
      n, [&](const PairPartition& pi) { ++counts[join_block_count(pi, rho)][crossings(pi)]; }, cap);
  std::vector<Rational> coeffs(n * n + 1);
  for (int k = 1; k <= n; ++k) {
    BigInt dk;
    mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
    for (int l = 0; l <= n * n; ++l) {
      if (counts[k][l] != 0) coeffs[l] += Rational(dk * BigInt(std::to_string(counts[k][l])));
    }
  }
  return QPoly(std::move(coeffs));
}

BigInt lemma_415_count(const PairPartition& pi, int d) {
  if (d < 1) throw DomainError("d must be positive");
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), d, join_block_count(pi, rainbow(pi.ground_size())));
  return out;
}

long long lemma_415_brute_force(const PairPartition& pi, int d, long long limit) {
  const int m = pi.ground_size();
  long long total = 1;
  for (int i = 0; i < m; ++i) {
    total *= d;
    if (total > limit) throw SizeLimitError("d^{2n} exceeds brute-force limit " + std::to_string(limit));
  }
  const SidePattern chi = SidePattern::alternating(pi.n());
  const auto height_pairs = act(chi.labels_to_heights(), pi).pairs();
  std::vector<int> values(m, 1);
  long long count = 0;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < m; ++i, c /= d) values[i] = static_cast<int>(c % d) + 1;
    bool ok = true;
    for (int k = 0; k < m && ok; k += 2) ok = values[k] == values[k + 1];
    for (const auto& [a, b] : height_pairs) {
      if (!ok) break;
      ok = values[a - 1] == values[b - 1];
    }
    if (ok) ++count;
  }
  return count;
}

BigInt q0_bnc_moment(int d, int n, int cap) {
  if (d < 1 || n < 1) throw DomainError("d and n must be positive");
  const PairPartition intervals = interval_pairs(2 * n);
  BigInt total = 0;
  for (const auto& pi : bnc2_alt(2 * n, cap)) {
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), d, join_block_count(pi, intervals));
    total += term;
  }
  return total;
}

Rational RandomSource::small_rational() {
  const int r = uniform(1, 3);
  Rational out(uniform(-3 * r, 3 * r), r);
  out.canonicalize();
  return out;
}

std::vector<Rational> RandomSource::rational_vector(int d) {
  std::vector<Rational> v(d);
  for (auto& x : v) x = small_rational();
  return v;
}

std::vector<std::complex<double>> RandomSource::complex_vector(int d) {
  std::vector<std::complex<double>> v(d);
  for (auto& x : v) x = {uniform_real(-1.0, 1.0), uniform_real(-1.0, 1.0)};
  return v;
}

SidePattern RandomSource::side_pattern(int two_n) {
  SidePattern chi;
  for (int i = 0; i < two_n; ++i) chi.sides.push_back(uniform(0, 1) == 0 ? Side::left : Side::right);
  return chi;
}

DyckTuple RandomSource::dyck(int two_n) {
  if (two_n <= 0 || two_n % 2 != 0) throw ParityError("Dyck tuples need a positive even length");
  // Uniform over Dyck words by rejection on balanced words.
  while (true) {
    std::vector<Mark> w(two_n, Mark::star);
    for (int placed = 0; placed < two_n / 2;) {
      const int pos = uniform(0, two_n - 1);
      if (w[pos] == Mark::star) {
        w[pos] = Mark::one;
        ++placed;
      }
    }
    if (is_dyck(w)) return DyckTuple::from_marks(std::move(w));
  }
}

ChoiceTuple RandomSource::choice_tuple(const DyckTuple& eps) {
  std::vector<int> gammas(eps.size(), 1);
  for (int h = 1; h <= eps.size(); ++h) {
    if (eps[h] == Mark::star) gammas[h - 1] = uniform(1, choice_number(eps, h));
  }
  return ChoiceTuple::make(eps, std::move(gammas));
}

std::vector<Mark> RandomSource::marks(int length) {
  std::vector<Mark> out(length);
  for (auto& m : out) m = uniform(0, 1) == 0 ? Mark::one : Mark::star;
  return out;
}

}  // namespace meander
