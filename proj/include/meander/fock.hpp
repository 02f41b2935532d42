#pragma once

// Truncated q-deformed Fock space over C^d.
//
// Vectors are sparse maps from words over {1..d} (tensors of standard basis
// vectors; the empty word is the vacuum) to scalars. Operators act directly on
// these maps and are never materialized as matrices.
//
// Two scalar fields are provided:
//   ExactField   - scalars are polynomials in a formal q with rational
//                  coefficients, coordinates are rationals;
//   NumericField - scalars and coordinates are complex doubles at a fixed
//                  real q in (-1, 1).
// Inner products are linear in the first argument.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "meander/dyck.hpp"
#include "meander/errors.hpp"
#include "meander/partitions.hpp"
#include "meander/qpoly.hpp"

namespace meander {

// ----------------------------------------------------------------- scalar fields

struct ExactField {
  using Scalar = QPoly;
  using Coord = Rational;

  Scalar one() const { return QPoly(1); }
  Scalar q_power(int k) const { return QPoly::monomial(k); }
  Scalar times_q_power(const Scalar& s, int k) const { return s.shifted(k); }
  static Scalar lift(const Coord& c) { return QPoly(c); }
  static Scalar scale(const Scalar& s, const Coord& c) { return s * c; }
  static Coord conj(const Coord& c) { return c; }
  // q is real and coefficients are rational.
  static Scalar conj_scalar(const Scalar& s) { return s; }
  static bool is_zero(const Scalar& s) { return s.is_zero(); }
  static bool is_zero_coord(const Coord& c) { return c == 0; }
};

struct NumericField {
  using Scalar = std::complex<double>;
  using Coord = std::complex<double>;

  double q = 0.0;

  Scalar one() const { return 1.0; }
  Scalar q_power(int k) const { return std::pow(q, k); }
  Scalar times_q_power(const Scalar& s, int k) const { return k == 0 ? s : s * std::pow(q, k); }
  static Scalar lift(const Coord& c) { return c; }
  static Scalar scale(const Scalar& s, const Coord& c) { return s * c; }
  static Coord conj(const Coord& c) { return std::conj(c); }
  static Scalar conj_scalar(const Scalar& s) { return std::conj(s); }
  static bool is_zero(const Scalar& s) { return s == 0.0; }
  static bool is_zero_coord(const Coord& c) { return c == 0.0; }
};

NumericField numeric_field(double q);

// ------------------------------------------------------------------------ words

/// A word over {1..15} of length <= 16, packed four bits per letter with the
/// leftmost tensor factor in the lowest nibble.
class Word {
 public:
  static constexpr int kMaxLength = 16;
  static constexpr int kMaxLetter = 15;

  Word() = default;
  static Word from_letters(std::span<const int> letters);

  int length() const { return length_; }
  bool empty() const { return length_ == 0; }
  /// Letter at 0-based position `pos` counted from the left.
  int letter(int pos) const { return static_cast<int>((packed_ >> (4 * pos)) & 0xF); }
  std::vector<int> letters() const;

  Word prepend(int letter) const;
  Word append(int letter) const;
  Word erase(int pos) const;
  Word concat(const Word& right) const;

  /// Letters joined by '.', e.g. "1.2.1"; the vacuum is "".
  std::string to_string() const;
  static Word parse(const std::string& text);

  std::uint64_t packed() const { return packed_; }
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word& o) const {
    if (length_ != o.length_) return length_ <=> o.length_;
    return letters() <=> o.letters();
  }

 private:
  Word(std::uint64_t packed, std::uint8_t length) : packed_(packed), length_(length) {}
  std::uint64_t packed_ = 0;
  std::uint8_t length_ = 0;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t x = w.packed() * 0x9E3779B97F4A7C15ULL + w.length();
    x ^= x >> 31;
    return static_cast<std::size_t>(x * 0xBF58476D1CE4E5B9ULL);
  }
};

/// All words over {1..d} of exactly the given length, lexicographic.
std::vector<Word> words_of_length(int d, int length);

// ------------------------------------------------------------------ vectors

template <class Field>
using CoordVector = std::vector<typename Field::Coord>;

template <class Field>
CoordVector<Field> basis_vector(int d, int i) {
  CoordVector<Field> v(d, typename Field::Coord(0));
  v[i - 1] = typename Field::Coord(1);
  return v;
}

/// <v, w> = sum_i v_i conj(w_i).
template <class Field>
typename Field::Coord coord_inner(const CoordVector<Field>& v, const CoordVector<Field>& w) {
  if (v.size() != w.size()) throw DimensionError("coordinate vectors of different dimension");
  typename Field::Coord acc(0);
  for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * Field::conj(w[i]);
  return acc;
}

template <class Field>
class FockVector {
 public:
  using Scalar = typename Field::Scalar;
  using Map = std::unordered_map<Word, Scalar, WordHash>;

  FockVector(int d, int max_len) : d_(d), max_len_(max_len) {
    if (d < 1 || d > Word::kMaxLetter) throw RangeError("alphabet size must lie in [1, 15]");
    if (max_len < 0 || max_len > Word::kMaxLength) throw RangeError("truncation level must lie in [0, 16]");
  }

  int d() const { return d_; }
  int max_len() const { return max_len_; }
  const Map& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }

  Scalar coefficient(const Word& w) const {
    auto it = support_.find(w);
    return it == support_.end() ? Scalar{} : it->second;
  }
  Scalar vacuum_coefficient() const { return coefficient(Word{}); }

  void add(const Word& w, const Scalar& c) {
    if (Field::is_zero(c)) return;
    check_word(w);
    auto [it, inserted] = support_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (Field::is_zero(it->second)) support_.erase(it);
    }
  }

  FockVector& operator+=(const FockVector& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.support_) add(w, c);
    return *this;
  }
  FockVector& operator-=(const FockVector& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.support_) add(w, Scalar{} - c);
    return *this;
  }
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }

  FockVector scaled(const Scalar& s) const {
    FockVector out(d_, max_len_);
    for (const auto& [w, c] : support_) out.add(w, c * s);
    return out;
  }

  /// Drops every word longer than `length`.
  void truncate_to(int length) {
    std::erase_if(support_, [&](const auto& kv) { return kv.first.length() > length; });
  }

  int max_word_length() const {
    int m = -1;
    for (const auto& [w, c] : support_) m = std::max(m, w.length());
    return m;
  }

  /// Support sorted by (length, letters), for deterministic output.
  std::vector<std::pair<Word, Scalar>> sorted_terms() const {
    std::vector<std::pair<Word, Scalar>> out(support_.begin(), support_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  bool operator==(const FockVector& o) const { return d_ == o.d_ && support_ == o.support_; }

 private:
  void check_word(const Word& w) const {
    if (w.length() > max_len_) {
      throw TruncationOverflow("word of length " + std::to_string(w.length()) + " exceeds truncation level " +
                               std::to_string(max_len_));
    }
  }
  void check_compatible(const FockVector& o) const {
    if (o.d_ != d_) throw DimensionError("Fock vectors over different alphabets");
  }

  int d_;
  int max_len_;
  Map support_;
};

enum class Flavor : std::uint8_t { create, annihilate };

template <class Field>
struct OpSymbol {
  Side side = Side::left;
  Flavor flavor = Flavor::create;
  CoordVector<Field> vector;
};

// ------------------------------------------------------------------ the space

template <class Field>
class FockSpace {
 public:
  using Scalar = typename Field::Scalar;
  using Coord = typename Field::Coord;
  using Vector = FockVector<Field>;
  using Coords = CoordVector<Field>;
  using Op = OpSymbol<Field>;

  FockSpace(int d, int max_len, Field field = {}) : d_(d), max_len_(max_len), field_(field) {}

  int d() const { return d_; }
  int max_len() const { return max_len_; }
  const Field& field() const { return field_; }

  Vector zero() const { return Vector(d_, max_len_); }
  Vector vacuum() const { return basis(Word{}); }
  Vector basis(const Word& w) const {
    Vector v = zero();
    v.add(w, field_.one());
    return v;
  }

  // Left creation prepends, right creation appends.
  Vector create(Side side, const Coords& v, const Vector& x) const {
    check_dim(v);
    check_vector(x);
    Vector out = zero();
    for (const auto& [w, c] : x.support()) {
      for (int i = 1; i <= d_; ++i) {
        const Coord& vi = v[i - 1];
        if (Field::is_zero_coord(vi)) continue;
        out.add(side == Side::left ? w.prepend(i) : w.append(i), Field::scale(c, vi));
      }
    }
    return out;
  }

  // Sum over k of q^{k-1} <v_k, v> with v_k the k-th factor from the side.
  Vector annihilate(Side side, const Coords& v, const Vector& x) const {
    check_dim(v);
    check_vector(x);
    Vector out = zero();
    for (const auto& [w, c] : x.support()) {
      for (int k = 1; k <= w.length(); ++k) annihilate_at(side, k, v, w, c, out);
    }
    return out;
  }

  Vector apply(const Op& op, const Vector& x) const {
    return op.flavor == Flavor::create ? create(op.side, op.vector, x) : annihilate(op.side, op.vector, x);
  }

  /// One term of an annihilation (flavor star, k >= 1) or a creation
  /// (flavor one, k = 1). Left side gives the A_k pieces, right side the B_k.
  Vector apply_piece(Side side, Mark flavor, int k, const Coords& v, const Vector& x) const {
    if (flavor == Mark::one) {
      if (k != 1) throw DomainError("creation pieces only exist for k = 1");
      return create(side, v, x);
    }
    if (k < 1) throw DomainError("annihilation piece index must be positive");
    check_dim(v);
    check_vector(x);
    Vector out = zero();
    for (const auto& [w, c] : x.support()) {
      if (w.length() >= k) annihilate_at(side, k, v, w, c, out);
    }
    return out;
  }

  /// Multiplies each length-n word by q^n.
  Vector apply_q_scaling(const Vector& x) const {
    check_vector(x);
    Vector out = zero();
    for (const auto& [w, c] : x.support()) out.add(w, field_.times_q_power(c, w.length()));
    return out;
  }

  /// <a_1...a_n, b_1...b_n>_q = sum over tau in S_n of prod <e_{a_i}, e_{b_tau(i)}> q^{inv(tau)}.
  Scalar word_inner_product(const Word& a, const Word& b) const {
    if (a.length() != b.length()) return Scalar{};
    const int n = a.length();
    std::vector<int> tau(n);
    for (int i = 0; i < n; ++i) tau[i] = i;
    Scalar acc{};
    do {
      bool match = true;
      for (int i = 0; i < n && match; ++i) match = a.letter(i) == b.letter(tau[i]);
      if (!match) continue;
      int inversions = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) inversions += tau[i] > tau[j] ? 1 : 0;
      }
      acc += field_.q_power(inversions);
    } while (std::next_permutation(tau.begin(), tau.end()));
    return acc;
  }

  Scalar inner_product(const Vector& x, const Vector& y) const {
    if (x.d() != y.d()) throw DimensionError("Fock vectors over different alphabets");
    Scalar acc{};
    for (const auto& [wx, cx] : x.support()) {
      for (const auto& [wy, cy] : y.support()) {
        if (wx.length() != wy.length()) continue;
        const Scalar g = word_inner_product(wx, wy);
        if (Field::is_zero(g)) continue;
        acc += cx * Field::conj_scalar(cy) * g;
      }
    }
    return acc;
  }

  /// [L(v)+L*(v), R(w)+R*(w)] x - (<w,v> - <v,w>) Q x.
  Vector commutator_defect(const Coords& v, const Coords& w, const Vector& x) const {
    auto a = [&](const Vector& y) { return create(Side::left, v, y) + annihilate(Side::left, v, y); };
    auto b = [&](const Vector& y) { return create(Side::right, w, y) + annihilate(Side::right, w, y); };
    Vector out = a(b(x)) - b(a(x));
    const Coord factor = coord_inner<Field>(w, v) - coord_inner<Field>(v, w);
    out -= apply_q_scaling(x).scaled(Field::lift(factor));
    return out;
  }

  /// phi_vac(ops[0] ops[1] ... ops[m-1]): applies the last symbol first and
  /// reads off the vacuum coefficient. Words that cannot return to the vacuum
  /// within the remaining factors are discarded, so the largest word ever
  /// held has length <= m/2.
  Scalar vacuum_expectation(std::span<const Op> ops) const {
    if (static_cast<int>(ops.size()) > 2 * max_len_) {
      throw SizeLimitError("operator sequence of length " + std::to_string(ops.size()) +
                           " exceeds twice the truncation level " + std::to_string(max_len_));
    }
    Vector x = vacuum();
    int remaining = static_cast<int>(ops.size());
    for (auto it = ops.rbegin(); it != ops.rend(); ++it, --remaining) {
      x.truncate_to(it->flavor == Flavor::create ? remaining - 2 : remaining);
      x = apply(*it, x);
    }
    return x.vacuum_coefficient();
  }

  // Fast paths for standard basis vectors e_i.
  Vector create_basis(Side side, int i, const Vector& x) const {
    Vector out = zero();
    for (const auto& [w, c] : x.support()) out.add(side == Side::left ? w.prepend(i) : w.append(i), c);
    return out;
  }

  Vector annihilate_basis(Side side, int i, const Vector& x) const {
    Vector out = zero();
    for (const auto& [w, c] : x.support()) {
      const int n = w.length();
      for (int k = 1; k <= n; ++k) {
        const int pos = side == Side::left ? k - 1 : n - k;
        if (w.letter(pos) == i) out.add(w.erase(pos), field_.times_q_power(c, k - 1));
      }
    }
    return out;
  }

  /// (L_i + L_i*) x or (R_i + R_i*) x.
  Vector field_operator(Side side, int i, const Vector& x) const {
    Vector out = create_basis(side, i, x);
    out += annihilate_basis(side, i, x);
    return out;
  }

 private:
  void annihilate_at(Side side, int k, const Coords& v, const Word& w, const Scalar& c, Vector& out) const {
    const int n = w.length();
    const int pos = side == Side::left ? k - 1 : n - k;
    const Coord weight = Field::conj(v[w.letter(pos) - 1]);  // <e_letter, v>
    if (Field::is_zero_coord(weight)) return;
    out.add(w.erase(pos), field_.times_q_power(Field::scale(c, weight), k - 1));
  }

  void check_dim(const Coords& v) const {
    if (static_cast<int>(v.size()) != d_) throw DimensionError("coordinate vector has wrong dimension");
  }
  void check_vector(const Vector& x) const {
    if (x.d() != d_) throw DimensionError("Fock vector over a different alphabet");
  }

  int d_;
  int max_len_;
  Field field_;
};

// ---------------------------------------------------------------- moments

struct MomentOptions {
  /// Truncation level; 0 selects the exact level 2n.
  int max_len = 0;
  /// Discard words that cannot return to the vacuum in the remaining factors.
  bool prune = true;
  /// Largest n accepted.
  int cap = 7;
};

/// phi_vac(T^n) with T = sum_i (L_i + L_i*)(R_i + R_i*).
template <class Field>
typename Field::Scalar moment_T(const Field& field, int d, int n, const MomentOptions& options = {}) {
  if (n < 0) throw DomainError("moment order must be non-negative");
  if (n > options.cap) throw SizeLimitError("moment order " + std::to_string(n) + " exceeds cap " + std::to_string(options.cap));
  // With pruning no word longer than n + 1 is ever formed.
  const int max_len = options.max_len == 0 ? std::min(2 * n, Word::kMaxLength) : options.max_len;
  if (max_len < (options.prune ? n + 1 : 2 * n) && n > 0) {
    throw SizeLimitError("truncation level " + std::to_string(max_len) + " too small for order " + std::to_string(n));
  }
  FockSpace<Field> space(d, std::max(max_len, 1), field);
  auto x = space.vacuum();
  for (int step = 0; step < n; ++step) {
    const int after = 2 * (n - step - 1);  // elementary factors left after this T
    auto next = space.zero();
    for (int i = 1; i <= d; ++i) {
      auto y = space.field_operator(Side::right, i, x);
      if (options.prune) y.truncate_to(after + 1);
      next += space.field_operator(Side::left, i, y);
    }
    if (options.prune) next.truncate_to(after);
    x = std::move(next);
  }
  return x.vacuum_coefficient();
}

/// Vacuum moment of A_{I(2n)} ... A_{I(1)} with A_i = L_i + L_i*, computed by
/// operator application and, independently, as sum over pi <= Ker(I) of q^cr(pi).
template <class Field>
struct GaussianMoment {
  typename Field::Scalar value;
  typename Field::Scalar combinatorial;
  bool verified = false;
};

template <class Field>
typename Field::Scalar gaussian_moment_operator(const Field& field, const IndexTuple& index) {
  const int m = index.length();
  if (m % 2 != 0) return typename Field::Scalar{};
  FockSpace<Field> space(index.d, m / 2 + 1, field);
  auto x = space.vacuum();
  for (int k = 1; k <= m; ++k) {
    x = space.field_operator(Side::left, index(k), x);
    x.truncate_to(m - k);
  }
  return x.vacuum_coefficient();
}

template <class Field>
typename Field::Scalar gaussian_moment_combinatorial(const Field& field, const IndexTuple& index) {
  const int m = index.length();
  typename Field::Scalar acc{};
  if (m == 0) return field.one();
  if (m % 2 != 0) return acc;
  for_each_pair_partition(m / 2, [&](const PairPartition& pi) {
    for (const auto& [a, b] : pi.pairs()) {
      if (index(a) != index(b)) return;
    }
    acc += field.q_power(crossings(pi));
  });
  return acc;
}

template <class Field>
GaussianMoment<Field> gaussian_joint_moment(const Field& field, const IndexTuple& index) {
  GaussianMoment<Field> out;
  out.value = gaussian_moment_operator(field, index);
  out.combinatorial = gaussian_moment_combinatorial(field, index);
  out.verified = out.value == out.combinatorial;
  return out;
}

/// (phi_vac ⊗ phi_vac)(X^n) = sum over I of length 2n of phi_vac(A_I)^2.
/// The I-sum walks a prefix tree so shared prefixes are applied once.
template <class Field>
typename Field::Scalar moment_X(const Field& field, int d, int n, int cap = 4) {
  if (n < 0) throw DomainError("moment order must be non-negative");
  if (n > cap) throw SizeLimitError("moment order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  if (n == 0) return field.one();
  const int m = 2 * n;
  FockSpace<Field> space(d, n + 1, field);
  typename Field::Scalar total{};
  std::function<void(const FockVector<Field>&, int)> walk = [&](const FockVector<Field>& x, int depth) {
    if (x.is_zero()) return;
    if (depth == m) {
      const auto v = x.vacuum_coefficient();
      total += v * v;
      return;
    }
    for (int i = 1; i <= d; ++i) {
      auto y = space.field_operator(Side::left, i, x);
      y.truncate_to(m - depth - 1);
      walk(y, depth + 1);
    }
  };
  walk(space.vacuum(), 0);
  return total;
}

/// Direct route: iterate Y = sum_i A_i ⊗ A_i on vac ⊗ vac over pairs of words.
template <class Field>
typename Field::Scalar moment_X_tensor(const Field& field, int d, int n, int cap = 3) {
  if (n > cap) throw SizeLimitError("tensor route limited to n <= " + std::to_string(cap));
  using Scalar = typename Field::Scalar;
  struct PairHash {
    std::size_t operator()(const std::pair<Word, Word>& p) const noexcept {
      return WordHash{}(p.first) * 31 + WordHash{}(p.second);
    }
  };
  using Map = std::unordered_map<std::pair<Word, Word>, Scalar, PairHash>;
  const int m = 2 * n;
  FockSpace<Field> space(d, n + 1, field);
  Map state;
  state[{Word{}, Word{}}] = field.one();
  for (int step = 0; step < m; ++step) {
    const int keep = m - step - 1;
    Map next;
    for (const auto& [words, c] : state) {
      for (int i = 1; i <= d; ++i) {
        auto left = space.field_operator(Side::left, i, space.basis(words.first));
        auto right = space.field_operator(Side::left, i, space.basis(words.second));
        for (const auto& [wl, cl] : left.support()) {
          if (wl.length() > keep) continue;
          for (const auto& [wr, cr] : right.support()) {
            if (wr.length() > keep) continue;
            auto& slot = next[{wl, wr}];
            slot += c * cl * cr;
          }
        }
      }
    }
    std::erase_if(next, [](const auto& kv) { return Field::is_zero(kv.second); });
    state = std::move(next);
  }
  auto it = state.find({Word{}, Word{}});
  return it == state.end() ? Scalar{} : it->second;
}

// ----------------------------------------------------------- convenience

QPoly moment_T_exact(int d, int n, const MomentOptions& options = {});
double moment_T_numeric(int d, int n, double q, const MomentOptions& options = {});
QPoly moment_X_exact(int d, int n, int cap = 4);
double moment_X_numeric(int d, int n, double q, int cap = 4);

nlohmann::json fock_vector_to_json(const FockVector<ExactField>& x);

}  // namespace meander
