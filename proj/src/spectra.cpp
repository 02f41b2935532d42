#include "meander/spectra.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "meander/errors.hpp"
#include "meander/fock.hpp"

namespace meander {

MomentSequence MomentSequence::make(std::vector<double> moments, std::string provenance) {
  if (moments.empty() || std::abs(moments[0] - 1.0) > 1e-12) throw DomainError("moment sequence must start with m_0 = 1");
  return {std::move(moments), std::move(provenance)};
}

namespace {

std::string q_label(double q) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", q);
  return buf;
}

}  // namespace

MomentSequence moments_T(int d, double q, int order) {
  std::vector<double> m(order + 1);
  MomentOptions options;
  options.cap = std::max(order, options.cap);
  for (int n = 0; n <= order; ++n) m[n] = moment_T_numeric(d, n, q, options);
  return MomentSequence::make(std::move(m), "T d=" + std::to_string(d) + " q=" + q_label(q));
}

MomentSequence moments_X(int d, double q, int order) {
  std::vector<double> m(order + 1);
  for (int n = 0; n <= order; ++n) m[n] = moment_X_numeric(d, n, q, std::max(order, 4));
  return MomentSequence::make(std::move(m), "X d=" + std::to_string(d) + " q=" + q_label(q));
}

std::vector<SequenceSpec> shipped_sequences() {
  std::vector<SequenceSpec> out;
  for (double q : {-0.5, 0.0, 0.5}) {
    for (int d = 1; d <= 3; ++d) out.push_back({'T', d, q, 10});
    for (int d = 1; d <= 2; ++d) out.push_back({'X', d, q, 6});
  }
  return out;
}

MomentSequence build_sequence(const SequenceSpec& spec) {
  if (spec.op == 'T') return moments_T(spec.d, spec.q, spec.order);
  if (spec.op == 'X') return moments_X(spec.d, spec.q, spec.order);
  throw DomainError(std::string("unknown operator '") + spec.op + "'");
}

HankelVerdict hankel_psd_check(const MomentSequence& ms, int size, double tol) {
  if (size < 1) throw DomainError("Hankel size must be positive");
  if (2 * size - 2 > ms.order()) {
    throw RangeError("Hankel matrix of size " + std::to_string(size) + " needs moments up to m_" +
                     std::to_string(2 * size - 2));
  }
  Eigen::MatrixXd h(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) h(i, j) = ms.moments[i + j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
  HankelVerdict v;
  v.size = size;
  v.trace = h.trace();
  v.min_eigenvalue = solver.eigenvalues().minCoeff();
  v.psd = v.min_eigenvalue >= -tol * std::abs(v.trace);
  return v;
}

namespace {

// Chebyshev's algorithm. sigma_{k,l} = integral of pi_k x^l; the scalar type
// is double or Rational. `vanishes(s, scale)` decides breakdown.
template <class T, class Vanishes>
void chebyshev(const std::vector<T>& mu, std::vector<T>& alpha, std::vector<T>& beta, int& breakdown,
               bool& indefinite, Vanishes vanishes) {
  const int count = static_cast<int>(mu.size());
  const int depth = count / 2;  // alpha_k needs mu up to 2k+1
  alpha.clear();
  beta.clear();
  breakdown = -1;
  indefinite = false;
  if (count < 2) {
    if (count == 1) beta.push_back(mu[0]);
    return;
  }
  std::vector<T> prev2(count, T(0));
  std::vector<T> prev(mu);
  alpha.push_back(mu[1] / mu[0]);
  beta.push_back(mu[0]);
  for (int k = 1; k < depth + (count % 2); ++k) {
    std::vector<T> cur(count, T(0));
    for (int l = k; l < count - k; ++l) {
      cur[l] = prev[l + 1] - alpha[k - 1] * prev[l] - beta[k - 1] * prev2[l];
    }
    if (vanishes(cur[k], mu[2 * k])) {
      breakdown = k;
      return;
    }
    if (cur[k] < T(0)) {
      indefinite = true;
      breakdown = k;
      return;
    }
    beta.push_back(cur[k] / prev[k - 1]);
    if (k + 1 >= count - k) break;  // sigma_{k,k+1} not available
    alpha.push_back(cur[k + 1] / cur[k] - prev[k] / prev[k - 1]);
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
}

}  // namespace

JacobiCoefficients jacobi_from_moments(const MomentSequence& ms, double tol) {
  JacobiCoefficients jc;
  chebyshev<double>(ms.moments, jc.alpha, jc.beta, jc.breakdown, jc.indefinite,
                    [tol](double s, double scale) { return std::abs(s) <= tol * std::max(1.0, std::abs(scale)); });
  return jc;
}

ExactJacobi jacobi_from_moments_exact(const std::vector<Rational>& moments) {
  ExactJacobi jc;
  chebyshev<Rational>(moments, jc.alpha, jc.beta, jc.breakdown, jc.indefinite,
                      [](const Rational& s, const Rational&) { return s == 0; });
  return jc;
}

Quadrature quadrature_from_jacobi(const JacobiCoefficients& jc, int k) {
  if (k < 1) throw DomainError("quadrature needs at least one node");
  if (k > jc.depth() || k > static_cast<int>(jc.beta.size())) {
    throw RangeError("quadrature with " + std::to_string(k) + " nodes exceeds recurrence depth " +
                     std::to_string(std::min<int>(jc.depth(), jc.beta.size())));
  }
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i) j(i, i) = jc.alpha[i];
  for (int i = 1; i < k; ++i) j(i, i - 1) = j(i - 1, i) = std::sqrt(jc.beta[i]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(j);
  Quadrature rule;
  rule.reproduced_moments = 2 * k;
  for (int i = 0; i < k; ++i) {
    rule.nodes.push_back(solver.eigenvalues()(i));
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights.push_back(jc.beta[0] * v0 * v0);
  }
  return rule;
}

double quadrature_moment(const Quadrature& rule, int n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * std::pow(rule.nodes[i], n);
  return acc;
}

double quadrature_reproduction_error(const Quadrature& rule, const MomentSequence& ms) {
  double worst = 0.0;
  const int upto = std::min(rule.reproduced_moments, ms.order() + 1);
  for (int n = 0; n < upto; ++n) {
    const double m = ms.moments[n];
    worst = std::max(worst, std::abs(quadrature_moment(rule, n) - m) / std::max(1.0, std::abs(m)));
  }
  return worst;
}

NormBounds norm_bounds_T(int d, const MomentSequence& ms) {
  NormBounds b;
  b.lower = std::sqrt(static_cast<double>(d + d * d));
  for (int n = 2; n <= ms.order(); n += 2) b.lower = std::max(b.lower, std::pow(ms.moments[n], 1.0 / n));
  b.upper = 4.0 * d;
  return b;
}

NormBounds norm_bounds_T(int d, int n_max) {
  if (d < 1) throw DomainError("d must be positive");
  return norm_bounds_T(d, moments_T(d, 0.0, std::max(n_max, 0)));
}

namespace {

template <class Field>
typename Field::Scalar t_quadratic_form(const Field& field, int d, const FockVector<Field>& xi) {
  FockSpace<Field> space(d, xi.max_len(), field);
  auto t_xi = space.zero();
  for (int i = 1; i <= d; ++i) t_xi += space.field_operator(Side::left, i, space.field_operator(Side::right, i, xi));
  return space.inner_product(t_xi, xi);
}

template <class Field>
FockVector<Field> antisymmetric_pair(const Field& field, int d, int max_len) {
  FockVector<Field> xi(d, max_len);
  const std::vector<int> a{1, 2};
  const std::vector<int> b{2, 1};
  xi.add(Word::from_letters(a), field.one());
  xi.add(Word::from_letters(b), typename Field::Scalar{} - field.one());
  return xi;
}

}  // namespace

double negativity_witness(int d, double q) {
  if (d < 2) throw DomainError("the witness needs d >= 2");
  const NumericField field = numeric_field(q);
  return t_quadratic_form(field, d, antisymmetric_pair(field, d, 4)).real();
}

QPoly negativity_witness_exact(int d) {
  if (d < 2) throw DomainError("the witness needs d >= 2");
  return t_quadratic_form(ExactField{}, d, antisymmetric_pair(ExactField{}, d, 4));
}

QPoly t_quadratic_form_exact(int d, const std::vector<std::pair<std::vector<int>, Rational>>& xi) {
  int longest = 0;
  for (const auto& [letters, c] : xi) longest = std::max<int>(longest, letters.size());
  FockVector<ExactField> v(d, longest + 2);
  for (const auto& [letters, c] : xi) {
    for (int letter : letters) {
      if (letter < 1 || letter > d) throw RangeError("letter outside {1..d}");
    }
    v.add(Word::from_letters(letters), QPoly(c));
  }
  return t_quadratic_form(ExactField{}, d, v);
}

nlohmann::json spectrum_document(const SequenceSpec& spec, int k_nodes) {
  const MomentSequence ms = build_sequence(spec);
  const int hankel_size = ms.order() / 2 + 1;
  const HankelVerdict hv = hankel_psd_check(ms, hankel_size);
  const JacobiCoefficients jc = jacobi_from_moments(ms);
  const int available = std::min<int>(jc.depth(), jc.beta.size());
  const int k = std::min(k_nodes, available);

  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["operator"] = std::string(1, spec.op);
  doc["d"] = spec.d;
  doc["q"] = spec.q;
  doc["moments"] = ms.moments;
  doc["hankel"] = {{"psd", hv.psd}, {"min_eigenvalue", hv.min_eigenvalue}, {"size", hv.size}};
  doc["jacobi"] = {{"alpha", jc.alpha}, {"beta", jc.beta}, {"breakdown", jc.breakdown}, {"indefinite", jc.indefinite}};
  doc["requested_nodes"] = k_nodes;
  if (k >= 1) {
    const Quadrature rule = quadrature_from_jacobi(jc, k);
    doc["nodes"] = rule.nodes;
    doc["weights"] = rule.weights;
    doc["reproduced_moments"] = rule.reproduced_moments;
    doc["max_relative_error"] = quadrature_reproduction_error(rule, ms);
    if (spec.op == 'T') {
      const double bound = 4.0 * spec.d;
      const bool inside = std::all_of(rule.nodes.begin(), rule.nodes.end(),
                                      [&](double x) { return std::abs(x) <= bound + 1e-9; });
      // Only at q = 0 is the bound a theorem; elsewhere it is reported.
      doc["node_bound"] = {{"bound", bound}, {"within", inside}, {"asserted", spec.q == 0.0}};
    }
  } else {
    doc["nodes"] = nlohmann::json::array();
    doc["weights"] = nlohmann::json::array();
    doc["reproduced_moments"] = 0;
  }
  return doc;
}

}  // namespace meander
