#pragma once

// Moment sequences of T and X and the probability measures they determine:
// Hankel positivity, three-term recurrence coefficients, Gauss quadrature,
// and the norm facts for T at q = 0.

#include <string>
#include <vector>

#include <json.hpp>

#include "meander/qpoly.hpp"

namespace meander {

struct MomentSequence {
  std::vector<double> moments;  // m_0 = 1, m_1, ..., m_N
  std::string provenance;

  /// Throws DomainError unless m_0 = 1.
  static MomentSequence make(std::vector<double> moments, std::string provenance);
  int order() const { return static_cast<int>(moments.size()) - 1; }
};

/// m_0..m_N of T_{d;q} in the vacuum state, numerically at q.
MomentSequence moments_T(int d, double q, int order);
/// m_0..m_N of X_{d;q} in the product vacuum state, numerically at q.
MomentSequence moments_X(int d, double q, int order);

/// The sequences analysed by default: T for d <= 3 and X for d <= 2 at
/// q in {-1/2, 0, 1/2}, of orders 10 and 6.
struct SequenceSpec {
  char op = 'T';
  int d = 1;
  double q = 0.0;
  int order = 10;
};
std::vector<SequenceSpec> shipped_sequences();
MomentSequence build_sequence(const SequenceSpec& spec);

struct HankelVerdict {
  bool psd = false;
  double min_eigenvalue = 0.0;
  double trace = 0.0;
  int size = 0;
};

/// H[i][j] = m_{i+j}, 0 <= i, j < size; PSD when min eigenvalue >= -tol * trace.
HankelVerdict hankel_psd_check(const MomentSequence& ms, int size, double tol = 1e-8);

struct JacobiCoefficients {
  std::vector<double> alpha;  // alpha_0, alpha_1, ...
  std::vector<double> beta;   // beta_0 = m_0, beta_1, ...
  /// Depth k at which sigma_{k,k} vanished (finitely many atoms), or -1.
  int breakdown = -1;
  /// sigma_{k,k} came out negative: the sequence is not a moment sequence.
  bool indefinite = false;

  int depth() const { return static_cast<int>(alpha.size()); }
};

/// Chebyshev algorithm on the raw moments.
JacobiCoefficients jacobi_from_moments(const MomentSequence& ms, double tol = 1e-10);

struct ExactJacobi {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
  int breakdown = -1;
  bool indefinite = false;
};

/// Same recursion in exact rational arithmetic.
ExactJacobi jacobi_from_moments_exact(const std::vector<Rational>& moments);

struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
  int reproduced_moments = 0;  // 2k
};

/// k-point Gauss rule from the k x k Jacobi matrix.
Quadrature quadrature_from_jacobi(const JacobiCoefficients& jc, int k);
double quadrature_moment(const Quadrature& rule, int n);
/// max over n < 2k of |sum w x^n - m_n| / max(1, |m_n|).
double quadrature_reproduction_error(const Quadrature& rule, const MomentSequence& ms);

struct NormBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Bounds on ||T_d|| at q = 0 from sqrt(d + d^2), the computed even moments
/// up to order n_max, and the upper bound 4d.
NormBounds norm_bounds_T(int d, int n_max);
NormBounds norm_bounds_T(int d, const MomentSequence& ms);

/// <T xi, xi>_q with xi = e_1 (x) e_2 - e_2 (x) e_1.
double negativity_witness(int d, double q);
QPoly negativity_witness_exact(int d);
/// <T xi, xi>_q for xi = sum of coefficient * word, words given as letter lists.
QPoly t_quadratic_form_exact(int d, const std::vector<std::pair<std::vector<int>, Rational>>& xi);

/// Pipeline moments -> recurrence -> quadrature, as a JSON document.
nlohmann::json spectrum_document(const SequenceSpec& spec, int k_nodes);

}  // namespace meander
