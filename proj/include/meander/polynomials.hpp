#pragma once

// Bivariate polynomials in (t, u) with big-integer coefficients, and the
// enumeration that builds the self-intersecting semi-meander and meander
// polynomials: t counts closed curves (blocks of a join), u counts crossings.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "meander/partitions.hpp"
#include "meander/qpoly.hpp"

namespace meander {

/// Default cap on n for the double enumeration behind meander_poly.
inline constexpr int kDefaultMeanderCap = 5;

class BivarPoly {
 public:
  using Exponents = std::pair<int, int>;  // (t-degree, u-degree)

  void add_term(int t_degree, int u_degree, const BigInt& c);
  BigInt coefficient(int t_degree, int u_degree) const;
  /// Ascending (k, l) lexicographic order.
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int t_degree() const;
  int u_degree() const;
  BigInt coefficient_sum() const;

  BivarPoly& operator+=(const BivarPoly& o);
  bool operator==(const BivarPoly&) const = default;

  Rational eval(const Rational& t, const Rational& u) const;
  /// Substitutes t and keeps u as the formal variable of the result.
  QPoly eval_t(const Rational& t) const;
  /// The u = 0 slice as a polynomial in t (coefficients indexed by t-degree).
  std::vector<BigInt> u_zero_slice() const;

  /// "t(1+u) + t^2"
  std::string to_pretty() const;

 private:
  std::map<Exponents, BigInt> terms_;
};

BivarPoly semi_meander_poly(int n, int cap = kDefaultEnumerationCap, int jobs = 1);
BivarPoly meander_poly(int n, int cap = kDefaultMeanderCap, int jobs = 1);
/// Q_n(t) built from non-crossing pair-partitions only (coefficients by t-degree).
std::vector<BigInt> semi_meander_poly_noncrossing(int n, int cap = kDefaultEnumerationCap);

struct CoefficientTable {
  int max_t = 0;
  int max_u = 0;
  std::vector<std::vector<BigInt>> cells;  // cells[k][l]
  std::vector<BigInt> row_sums;            // over l, per t-degree k
  std::vector<BigInt> column_sums;         // over k, per u-degree l
  BigInt total;
};

CoefficientTable coefficient_table(const BivarPoly& p);

/// {"n":..,"kind":..,"terms":[{"t":k,"u":l,"c":"..."}]}
nlohmann::json poly_document(const BivarPoly& p, int n, const std::string& kind);
BivarPoly bivar_poly_from_json(const nlohmann::json& j);
/// Header "t,u,c" then one row per non-zero term.
std::string to_csv(const CoefficientTable& table);

}  // namespace meander
