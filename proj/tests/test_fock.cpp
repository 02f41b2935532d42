#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "meander/errors.hpp"
#include "meander/fock.hpp"
#include "meander/qwick.hpp"

using namespace meander;

namespace {

using Exact = FockSpace<ExactField>;
using Vec = FockVector<ExactField>;

Word w(std::initializer_list<int> letters) { return Word::from_letters(std::vector<int>(letters)); }

QPoly q(int k) { return QPoly::monomial(k); }

// <a, b>_q by peeling the first letter of a against every matching letter of b.
QPoly inner_oracle(std::vector<int> a, std::vector<int> b) {
  if (a.size() != b.size()) return {};
  if (a.empty()) return QPoly(1);
  QPoly acc;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k] != a[0]) continue;
    std::vector<int> rest_a(a.begin() + 1, a.end());
    std::vector<int> rest_b = b;
    rest_b.erase(rest_b.begin() + static_cast<long>(k));
    acc += q(static_cast<int>(k)) * inner_oracle(rest_a, rest_b);
  }
  return acc;
}

Vec random_vector(RandomSource& rng, int d, int max_len, int top_len) {
  Vec x(d, max_len);
  const int terms = rng.uniform(1, 4);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> letters(rng.uniform(0, top_len));
    for (int& l : letters) l = rng.uniform(1, d);
    x.add(Word::from_letters(letters), QPoly(rng.small_rational()));
  }
  return x;
}

}  // namespace

TEST(Words, PackingAndEdits) {
  Word a = w({1, 2, 3});
  EXPECT_EQ(a.to_string(), "1.2.3");
  EXPECT_EQ(a.prepend(4).to_string(), "4.1.2.3");
  EXPECT_EQ(a.append(4).to_string(), "1.2.3.4");
  EXPECT_EQ(a.erase(0).to_string(), "2.3");
  EXPECT_EQ(a.erase(1).to_string(), "1.3");
  EXPECT_EQ(a.erase(2).to_string(), "1.2");
  EXPECT_EQ(Word::parse("3.1"), w({3, 1}));
  std::vector<int> sixteen(16, 7);
  Word full = Word::from_letters(sixteen);
  EXPECT_EQ(full.erase(15).length(), 15);
  EXPECT_EQ(full.erase(0).letter(14), 7);
  EXPECT_THROW(full.append(1), TruncationOverflow);
  EXPECT_EQ(words_of_length(3, 4).size(), 81u);
}

TEST(InnerProduct, Examples) {
  Exact space(2, 4);
  EXPECT_EQ(space.inner_product(space.vacuum(), space.vacuum()), QPoly(1));
  EXPECT_EQ(space.inner_product(space.basis(w({1, 1})), space.basis(w({1, 1}))), QPoly(std::vector<Rational>{1, 1}));
  EXPECT_EQ(space.inner_product(space.basis(w({1, 2})), space.basis(w({2, 1}))), q(1));
  EXPECT_TRUE(space.inner_product(space.basis(w({1})), space.basis(w({1, 1}))).is_zero());
}

TEST(InnerProduct, MatchesRecursiveOracle) {
  for (int len = 0; len <= 4; ++len) {
    const auto words = words_of_length(2, len);
    Exact space(2, 4);
    for (const auto& a : words) {
      for (const auto& b : words) EXPECT_EQ(space.word_inner_product(a, b), inner_oracle(a.letters(), b.letters()));
    }
  }
}

TEST(Apply, Examples) {
  Exact space(2, 4);
  const auto e1 = basis_vector<ExactField>(2, 1);
  EXPECT_EQ(space.create(Side::left, e1, space.vacuum()), space.basis(w({1})));
  auto y = space.annihilate(Side::left, e1, space.basis(w({1, 2, 1})));
  Vec expected = space.basis(w({2, 1}));
  expected.add(w({1, 2}), q(2));
  EXPECT_EQ(y, expected);
  EXPECT_TRUE(space.annihilate(Side::right, e1, space.vacuum()).is_zero());
  // Right annihilation counts from the right.
  auto r = space.annihilate(Side::right, e1, space.basis(w({1, 2, 1})));
  Vec expected_r = space.basis(w({1, 2}));
  expected_r.add(w({2, 1}), q(2));
  EXPECT_EQ(r, expected_r);
}

TEST(Apply, OverflowIsAnError) {
  Exact space(2, 2);
  const auto e1 = basis_vector<ExactField>(2, 1);
  EXPECT_THROW(space.create(Side::left, e1, space.basis(w({1, 2}))), TruncationOverflow);
}

TEST(Pieces, ExampleAndDecomposition) {
  // u_3 (x) u_1 (x) u_2 with u_3 = e1, u_1 = e2, u_2 = e3; u_4 = 2 e1.
  Exact space(3, 4);
  CoordVector<ExactField> u4{2, 0, 0};
  auto y = space.apply_piece(Side::right, Mark::star, 3, u4, space.basis(w({1, 2, 3})));
  Vec expected(3, 4);
  expected.add(w({2, 3}), q(2) * Rational(2));
  EXPECT_EQ(y, expected);
  EXPECT_TRUE(space.apply_piece(Side::left, Mark::star, 2, basis_vector<ExactField>(3, 1), space.basis(w({1}))).is_zero());
  EXPECT_THROW(space.apply_piece(Side::left, Mark::one, 2, u4, space.vacuum()), DomainError);

  RandomSource rng(17);
  for (int i = 0; i < 50; ++i) {
    auto v = rng.rational_vector(3);
    auto x = random_vector(rng, 3, 4, 3);
    EXPECT_EQ(space.apply_piece(Side::left, Mark::one, 1, v, x), space.create(Side::left, v, x));
    EXPECT_EQ(space.apply_piece(Side::right, Mark::one, 1, v, x), space.create(Side::right, v, x));
  }
  Exact small(2, 5);
  for (int len = 1; len <= 5; ++len) {
    for (const auto& word : words_of_length(2, len)) {
      auto v = rng.rational_vector(2);
      for (Side side : {Side::left, Side::right}) {
        Vec sum = small.zero();
        for (int k = 1; k <= len; ++k) sum += small.apply_piece(side, Mark::star, k, v, small.basis(word));
        EXPECT_EQ(sum, small.annihilate(side, v, small.basis(word)));
      }
    }
  }
}

TEST(QScaling, MultipliesByLength) {
  Exact space(2, 4);
  EXPECT_EQ(space.apply_q_scaling(space.vacuum()), space.vacuum());
  Vec x = space.basis(w({1, 2}));
  EXPECT_EQ(space.apply_q_scaling(x), x.scaled(q(2)));
  Vec y = x + space.basis(w({2}));
  EXPECT_EQ(space.apply_q_scaling(y), space.apply_q_scaling(x) + space.apply_q_scaling(space.basis(w({2}))));
}

TEST(Adjointness, CreationAndAnnihilation) {
  RandomSource rng(23);
  Exact space(2, 5);
  for (int i = 0; i < 60; ++i) {
    auto v = rng.rational_vector(2);
    auto x = random_vector(rng, 2, 5, 3);
    auto y = random_vector(rng, 2, 5, 4);
    for (Side side : {Side::left, Side::right}) {
      EXPECT_EQ(space.inner_product(space.create(side, v, x), y), space.inner_product(x, space.annihilate(side, v, y)));
    }
  }
}

TEST(GramMatrix, PositiveDefinite) {
  for (int d = 1; d <= 3; ++d) {
    for (int len = 1; len <= 4; ++len) {
      const auto words = words_of_length(d, len);
      Exact space(d, len);
      for (double qv : {-0.5, 0.0, 0.5}) {
        Eigen::MatrixXd g(words.size(), words.size());
        for (std::size_t i = 0; i < words.size(); ++i) {
          for (std::size_t j = 0; j < words.size(); ++j) g(i, j) = space.word_inner_product(words[i], words[j]).eval(qv);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g, Eigen::EigenvaluesOnly);
        EXPECT_GT(solver.eigenvalues().minCoeff(), 0.0) << d << " " << len << " " << qv;
      }
    }
  }
}

TEST(QZeroIdentity, FieldOperatorFactorizes) {
  // At q = 0: (L_i + L_i*) x = L_i* (I + sum_j L_j^2) x.
  for (int d = 1; d <= 3; ++d) {
    FockSpace<NumericField> space(d, 6, numeric_field(0.0));
    for (int len = 0; len <= 4; ++len) {
      for (const auto& word : words_of_length(d, len)) {
        const auto x = space.basis(word);
        for (int i = 1; i <= d; ++i) {
          auto inner = x;
          for (int j = 1; j <= d; ++j) inner += space.create_basis(Side::left, j, space.create_basis(Side::left, j, x));
          EXPECT_EQ(space.field_operator(Side::left, i, x), space.annihilate_basis(Side::left, i, inner));
        }
      }
    }
  }
}

TEST(VacuumExpectation, Examples) {
  Exact space(1, 2);
  const auto e1 = basis_vector<ExactField>(1, 1);
  using Op = OpSymbol<ExactField>;
  EXPECT_EQ(space.vacuum_expectation(std::vector<Op>{}), QPoly(1));
  EXPECT_TRUE(space.vacuum_expectation(std::vector<Op>{{Side::left, Flavor::create, e1}}).is_zero());
  std::vector<Op> ll{{Side::left, Flavor::annihilate, e1}, {Side::left, Flavor::create, e1}};
  EXPECT_EQ(space.vacuum_expectation(ll), QPoly(1));
  std::vector<Op> rl{{Side::right, Flavor::annihilate, e1}, {Side::left, Flavor::create, e1}};
  EXPECT_EQ(space.vacuum_expectation(rl), QPoly(1));
  std::vector<Op> too_long(5, Op{Side::left, Flavor::create, e1});
  EXPECT_THROW(space.vacuum_expectation(too_long), SizeLimitError);
}

TEST(MomentT, SmallValues) {
  for (int d = 1; d <= 4; ++d) EXPECT_EQ(moment_T_exact(d, 1), QPoly(d));
  EXPECT_EQ(moment_T_exact(2, 2), QPoly(std::vector<Rational>{6, 2}));
  EXPECT_EQ(moment_T_exact(1, 2), QPoly(std::vector<Rational>{2, 1}));
  EXPECT_EQ(moment_T_exact(3, 0), QPoly(1));
  EXPECT_THROW(moment_T_exact(2, 8), SizeLimitError);
  EXPECT_NEAR(moment_T_numeric(2, 2, 0.25), 6.5, 1e-12);
}

TEST(MomentT, TruncationLevelDoesNotMatter) {
  for (int d = 1; d <= 2; ++d) {
    for (int n = 1; n <= 4; ++n) {
      MomentOptions exact_level;
      exact_level.prune = false;
      exact_level.max_len = 2 * n;
      MomentOptions higher = exact_level;
      higher.max_len = 2 * n + 2;
      const QPoly a = moment_T_exact(d, n, exact_level);
      EXPECT_EQ(a, moment_T_exact(d, n, higher));
      EXPECT_EQ(a, moment_T_exact(d, n));
    }
  }
}

TEST(GaussianMoment, Examples) {
  const ExactField f;
  EXPECT_EQ(gaussian_joint_moment(f, IndexTuple::make(1, {1, 1})).value, QPoly(1));
  auto alt = gaussian_joint_moment(f, IndexTuple::make(2, {1, 2, 1, 2}));
  EXPECT_EQ(alt.value, q(1));
  EXPECT_TRUE(alt.verified);
  auto four = gaussian_joint_moment(f, IndexTuple::make(1, {1, 1, 1, 1}));
  EXPECT_EQ(four.value, QPoly(std::vector<Rational>{2, 1}));
  EXPECT_TRUE(four.verified);
  EXPECT_TRUE(gaussian_joint_moment(f, IndexTuple::make(2, {1, 2, 1})).value.is_zero());
  for (int m = 2; m <= 6; m += 2) {
    std::vector<int> values(m, 1);
    while (true) {
      auto g = gaussian_joint_moment(f, IndexTuple::make(2, values));
      EXPECT_TRUE(g.verified);
      int pos = m - 1;
      while (pos >= 0 && values[pos] == 2) values[pos--] = 1;
      if (pos < 0) break;
      ++values[pos];
    }
  }
}

TEST(MomentX, SmallValues) {
  EXPECT_EQ(moment_X_exact(1, 1), QPoly(1));
  EXPECT_EQ(moment_X_exact(2, 2), QPoly(std::vector<Rational>{12, 8, 4}));
  EXPECT_EQ(moment_X_exact(1, 2), QPoly(std::vector<Rational>{4, 4, 1}));
  const ExactField f;
  EXPECT_EQ(moment_X_tensor(f, 2, 2), moment_X_exact(2, 2));
  EXPECT_EQ(moment_X_tensor(f, 1, 3), moment_X_exact(1, 3));
  EXPECT_THROW(moment_X_exact(2, 5), SizeLimitError);
}

TEST(Commutator, ExactAndNumeric) {
  Exact space(2, 6);
  const auto e1 = basis_vector<ExactField>(2, 1);
  EXPECT_TRUE(space.commutator_defect(e1, e1, space.basis(w({2}))).is_zero());
  RandomSource rng(29);
  for (int i = 0; i < 40; ++i) {
    auto x = random_vector(rng, 2, 6, 4);
    EXPECT_TRUE(space.commutator_defect(rng.rational_vector(2), rng.rational_vector(2), x).is_zero());
  }
  FockSpace<NumericField> num(3, 6, numeric_field(0.37));
  for (int i = 0; i < 40; ++i) {
    FockVector<NumericField> x(3, 6);
    for (int len = 0; len <= 4; ++len) {
      std::vector<int> letters(len);
      for (int& l : letters) l = rng.uniform(1, 3);
      x.add(Word::from_letters(letters), {rng.uniform_real(-1, 1), rng.uniform_real(-1, 1)});
    }
    auto defect = num.commutator_defect(rng.complex_vector(3), rng.complex_vector(3), x);
    for (const auto& [word, c] : defect.support()) EXPECT_LE(std::abs(c), 1e-12);
  }
}

TEST(Serialization, FockVectorDump) {
  Exact space(2, 3);
  Vec x = space.basis(w({1, 2}));
  x.add(Word{}, QPoly(std::vector<Rational>{1, 2}));
  EXPECT_EQ(fock_vector_to_json(x).dump(), R"({"":{"coeffs":["1","2"]},"1.2":{"coeffs":["1"]}})");
}
