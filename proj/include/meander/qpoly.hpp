#pragma once

// Exact scalars: polynomials in the formal deformation parameter q with
// rational coefficients. This is the exact mode of every Fock-space
// computation.

#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace meander {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p", "p/r" or "-p/r" into a canonical rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

class QPoly {
 public:
  QPoly() = default;
  QPoly(long c) : QPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  QPoly(const Rational& c);              // NOLINT(google-explicit-constructor)
  /// coeffs[k] is the coefficient of q^k.
  explicit QPoly(std::vector<Rational> coeffs);

  static QPoly monomial(int power, const Rational& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Rational& c);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
  QPoly operator-() const;
  /// Multiplies by q^k.
  QPoly shifted(int k) const;

  bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

  Rational eval(const Rational& q) const;
  double eval(double q) const;

  /// "6+2q-q^2"; "0" for zero.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// {"coeffs": ["c0","c1",...]} with decimal-string rationals.
void to_json(nlohmann::json& j, const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

}  // namespace meander
