#include <gtest/gtest.h>

#include "meander/errors.hpp"
#include "meander/partitions.hpp"
#include "meander/polynomials.hpp"

using namespace meander;

namespace {

BivarPoly make(std::initializer_list<std::tuple<int, int, long>> terms) {
  BivarPoly p;
  for (auto [k, l, c] : terms) p.add_term(k, l, BigInt(c));
  return p;
}

// Q~_n by brute force directly from the definition, no shared helpers.
BivarPoly semi_oracle(int n) {
  BivarPoly p;
  const auto rho = rainbow(2 * n);
  for (const auto& pi : enumerate_pair_partitions(n)) p.add_term(join_block_count(pi, rho), crossings(pi), 1);
  return p;
}

}  // namespace

TEST(BivarPoly, Evaluation) {
  auto p = make({{1, 0, 1}, {2, 0, 1}});
  EXPECT_EQ(p.eval(2, 0), 6);
  EXPECT_EQ(BivarPoly{}.eval(3, 5), 0);
  auto q2 = make({{1, 0, 1}, {1, 1, 1}, {2, 0, 1}});
  EXPECT_EQ(q2.eval(2, Rational(1, 2)), 7);
  EXPECT_EQ(q2.eval_t(2).to_string(), "6+2q");
}

TEST(BivarPoly, NoZeroTerms) {
  BivarPoly p;
  p.add_term(1, 1, 3);
  p.add_term(1, 1, -3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_THROW(p.add_term(-1, 0, 1), DomainError);
}

TEST(SemiMeander, SmallValues) {
  EXPECT_EQ(semi_meander_poly(1), make({{1, 0, 1}}));
  EXPECT_EQ(semi_meander_poly(2), make({{1, 0, 1}, {1, 1, 1}, {2, 0, 1}}));
  EXPECT_EQ(semi_meander_poly(2).to_pretty(), "t(1+u) + t^2");
  // Q_3(t) = 2t + 2t^2 + t^3
  EXPECT_EQ(semi_meander_poly(3).u_zero_slice(), (std::vector<BigInt>{0, 2, 2, 1}));
  EXPECT_EQ(semi_meander_poly_noncrossing(3), (std::vector<BigInt>{0, 2, 2, 1}));
}

TEST(SemiMeander, Invariants) {
  for (int n = 1; n <= 6; ++n) {
    auto p = semi_meander_poly(n);
    if (n <= 5) EXPECT_EQ(p.coefficient_sum(), BigInt(std::to_string(double_factorial_odd(n))));
    EXPECT_EQ(p.t_degree(), n);
    EXPECT_LE(p.u_degree(), (n * n - n) / 2);
    EXPECT_EQ(p.u_zero_slice(), semi_meander_poly_noncrossing(n));
    if (n <= 5) EXPECT_EQ(p, semi_oracle(n));
    // Connected count from an independent filter over non-crossing pi.
    long connected = 0;
    for (const auto& pi : enumerate_noncrossing(n)) connected += join_block_count(pi, rainbow(2 * n)) == 1;
    EXPECT_GT(connected, 0);
    EXPECT_EQ(p.coefficient(1, 0), BigInt(connected));
  }
}

TEST(SemiMeander, ThreadsDoNotChangeTheResult) {
  EXPECT_EQ(semi_meander_poly(6, 16, 4), semi_meander_poly(6, 16, 1));
  EXPECT_EQ(meander_poly(4, 5, 3), meander_poly(4, 5, 1));
}

TEST(SemiMeander, Caps) {
  EXPECT_THROW(semi_meander_poly(0), DomainError);
  EXPECT_THROW(semi_meander_poly(9), SizeLimitError);
  EXPECT_THROW(meander_poly(6), SizeLimitError);
}

TEST(Meander, SmallValues) {
  EXPECT_EQ(meander_poly(1), make({{1, 0, 1}}));
  auto p2 = meander_poly(2);
  EXPECT_EQ(p2, make({{1, 0, 2}, {1, 1, 4}, {2, 0, 2}, {2, 2, 1}}));
  EXPECT_EQ(p2.to_pretty(), "t(2+4u) + t^2(2+u^2)");
  EXPECT_EQ(p2.u_zero_slice(), (std::vector<BigInt>{0, 2, 2}));
}

TEST(Meander, CoefficientSums) {
  for (int n = 1; n <= 4; ++n) {
    const BigInt f(std::to_string(double_factorial_odd(n)));
    EXPECT_EQ(meander_poly(n).coefficient_sum(), f * f);
  }
}

TEST(CoefficientTable, Sums) {
  auto t = coefficient_table(semi_meander_poly(2));
  EXPECT_EQ(t.cells[1][0], 1);
  EXPECT_EQ(t.cells[1][1], 1);
  EXPECT_EQ(t.cells[2][0], 1);
  EXPECT_EQ(t.cells[2][1], 0);
  EXPECT_EQ(t.total, 3);
  EXPECT_EQ(t.row_sums[1], 2);
  EXPECT_EQ(t.column_sums[0], 2);
  EXPECT_EQ(coefficient_table(meander_poly(2)).total, 9);
  EXPECT_EQ(to_csv(t), "t,u,c\n1,0,1\n1,1,1\n2,0,1\n");
}

TEST(Serialization, JsonDocument) {
  auto doc = poly_document(semi_meander_poly(2), 2, "semi");
  EXPECT_EQ(doc["terms"].dump(), R"([{"c":"1","t":1,"u":0},{"c":"1","t":1,"u":1},{"c":"1","t":2,"u":0}])");
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_EQ(bivar_poly_from_json(doc), semi_meander_poly(2));
}
