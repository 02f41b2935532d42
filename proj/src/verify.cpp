#include "meander/verify.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "meander/dyck.hpp"
#include "meander/errors.hpp"
#include "meander/fock.hpp"
#include "meander/partitions.hpp"
#include "meander/polynomials.hpp"
#include "meander/qwick.hpp"

namespace meander {

nlohmann::json VerifyReport::to_json() const {
  return {{"schema_version", 1},
          {"suite", suite},
          {"instances", instances},
          {"failures", failures},
          {"seed", seed},
          {"passed", passed()}};
}

namespace {

VerifyReport start(const std::string& suite, const VerifyParams& params) {
  VerifyReport r;
  r.suite = suite;
  r.seed = params.seed;
  return r;
}

void require_positive(const VerifyParams& params) {
  if (params.n < 1) throw DomainError("n must be positive");
  if (params.d < 1) throw DomainError("d must be positive");
}

std::string index_string(const IndexTuple& index) {
  std::string s;
  for (int v : index.values) s += std::to_string(v);
  return s;
}

// Calls visit on every tuple in {1..d}^length.
void for_each_index(int d, int length, const std::function<void(const IndexTuple&)>& visit) {
  IndexTuple index{d, std::vector<int>(length, 1)};
  while (true) {
    visit(index);
    int pos = length - 1;
    while (pos >= 0 && index.values[pos] == d) index.values[pos--] = 1;
    if (pos < 0) return;
    ++index.values[pos];
  }
}

}  // namespace

VerifyReport verify_wick(const VerifyParams& params) {
  require_positive(params);
  VerifyReport report = start("wick", params);
  RandomSource rng(params.seed);
  const ExactField field;
  auto check = [&](const std::vector<Mark>& eps, const SidePattern& chi) {
    WickProduct<ExactField> wp;
    wp.chi = chi;
    wp.eps = eps;
    for (std::size_t h = 0; h < eps.size(); ++h) wp.vectors.push_back(rng.rational_vector(params.d));
    const QPoly op = wick_scalar_operator(field, wp);
    const QPoly comb = wick_scalar_combinatorial(field, wp);
    ++report.instances;
    const bool dyck = is_dyck(eps);
    if (op != comb || (!dyck && !op.is_zero())) {
      report.failures.push_back({{"eps", marks_to_string(eps)},
                                 {"chi", chi.to_string()},
                                 {"operator", op.to_string()},
                                 {"combinatorial", comb.to_string()}});
    }
  };
  const int exhaustive = std::min(params.n, 3);
  for (int k = 1; k <= exhaustive; ++k) {
    for (const auto& eps : enumerate_dyck(2 * k)) {
      check(eps.marks(), SidePattern::alternating(k));
      for (int rep = 0; rep < 5; ++rep) check(eps.marks(), rng.side_pattern(2 * k));
    }
    // Every non-Dyck word must give zero.
    for (unsigned code = 0; code < (1u << (2 * k)); ++code) {
      std::vector<Mark> eps(2 * k);
      for (int h = 0; h < 2 * k; ++h) eps[h] = (code >> h) & 1u ? Mark::star : Mark::one;
      if (!is_dyck(eps)) check(eps, rng.side_pattern(2 * k));
    }
  }
  if (params.n > exhaustive) {
    for (int i = 0; i < params.instances; ++i) check(rng.dyck(2 * params.n).marks(), rng.side_pattern(2 * params.n));
  }
  return report;
}

VerifyReport verify_theorem14(const VerifyParams& params) {
  require_positive(params);
  VerifyReport report = start("theorem14", params);
  for (int k = 1; k <= params.n; ++k) {
    const QPoly op = moment_T_exact(params.d, k);
    const QPoly rhs = theorem_1_4_rhs(params.d, k);
    const QPoly poly = semi_meander_poly(k).eval_t(params.d);
    ++report.instances;
    if (op != rhs || op != poly) {
      report.failures.push_back({{"d", params.d},
                                 {"n", k},
                                 {"operator", op.to_string()},
                                 {"partition_sum", rhs.to_string()},
                                 {"polynomial", poly.to_string()}});
    }
  }
  return report;
}

VerifyReport verify_prop18(const VerifyParams& params) {
  require_positive(params);
  VerifyReport report = start("prop18", params);
  const ExactField field;
  for (int k = 1; k <= params.n; ++k) {
    const QPoly op = moment_X_exact(params.d, k, std::max(params.n, 4));
    const QPoly poly = meander_poly(k).eval_t(params.d);
    ++report.instances;
    nlohmann::json entry = {{"d", params.d}, {"n", k}, {"operator", op.to_string()}, {"polynomial", poly.to_string()}};
    bool ok = op == poly;
    if (k <= 2) {
      const QPoly tensor = moment_X_tensor(field, params.d, k);
      entry["tensor"] = tensor.to_string();
      ok = ok && tensor == poly;
    }
    if (!ok) report.failures.push_back(entry);
  }
  return report;
}

VerifyReport verify_prop310(const VerifyParams& params) {
  require_positive(params);
  VerifyReport report = start("prop310", params);
  RandomSource rng(params.seed);
  const int exhaustive = std::min(params.n, 5);
  for (int k = 1; k <= exhaustive; ++k) {
    const SidePattern chi = SidePattern::alternating(k);
    for_each_pair_partition(k, [&](const PairPartition& pi) {
      const ChoiceTuple ct = partition_to_choices(pi, chi);
      ++report.instances;
      if (crossings_from_choices(ct) != crossings(pi) || choices_to_partition(ct, chi) != pi ||
          phi(pi, chi) != ct.eps()) {
        report.failures.push_back({{"pi", pi}, {"chi", chi.to_string()}});
      }
    });
  }
  for (int i = 0; i < params.instances; ++i) {
    const DyckTuple eps = rng.dyck(2 * params.n);
    const ChoiceTuple ct = rng.choice_tuple(eps);
    const SidePattern chi = rng.side_pattern(2 * params.n);
    const PairPartition pi = choices_to_partition(ct, chi);
    ++report.instances;
    if (crossings(pi) != crossings_from_choices(ct) || phi(pi, chi) != eps) {
      report.failures.push_back({{"eps", eps.to_string()}, {"gammas", ct.gammas()}, {"chi", chi.to_string()}});
    }
  }
  return report;
}

VerifyReport verify_lemma415(const VerifyParams& params) {
  require_positive(params);
  VerifyReport report = start("lemma415", params);
  for (int k = 1; k <= params.n; ++k) {
    for_each_pair_partition(k, [&](const PairPartition& pi) {
      const BigInt formula = lemma_415_count(pi, params.d);
      const long long brute = lemma_415_brute_force(pi, params.d);
      ++report.instances;
      if (formula != BigInt(std::to_string(brute))) {
        report.failures.push_back({{"pi", pi}, {"formula", formula.get_str()}, {"brute_force", brute}});
      }
    });
  }
  return report;
}

VerifyReport verify_cor412(const VerifyParams& params) {
  require_positive(params);
  VerifyReport report = start("cor412", params);
  for (int k = 1; k <= params.n; ++k) {
    for (const auto& eps : enumerate_dyck(2 * k)) {
      for_each_index(params.d, 2 * k, [&](const IndexTuple& index) {
        const QPoly comb = corollary_412_sum(index, eps);
        const QPoly op = corollary_412_operator(index, eps);
        ++report.instances;
        if (comb != op) {
          report.failures.push_back({{"eps", eps.to_string()},
                                     {"I", index_string(index)},
                                     {"operator", op.to_string()},
                                     {"combinatorial", comb.to_string()}});
        }
      });
    }
  }
  return report;
}

VerifyReport verify_commutator(const VerifyParams& params) {
  require_positive(params);
  VerifyReport report = start("commutator", params);
  RandomSource rng(params.seed);
  const int length = params.n;
  const int d = params.d;

  // Exact: every basis word up to the given length, against basis and random rational pairs.
  {
    FockSpace<ExactField> space(d, length + 2);
    std::vector<std::pair<CoordVector<ExactField>, CoordVector<ExactField>>> pairs;
    for (int i = 1; i <= d; ++i) {
      for (int j = 1; j <= d; ++j) pairs.emplace_back(basis_vector<ExactField>(d, i), basis_vector<ExactField>(d, j));
    }
    for (int r = 0; r < 3; ++r) pairs.emplace_back(rng.rational_vector(d), rng.rational_vector(d));
    for (int len = 0; len <= length; ++len) {
      for (const Word& w : words_of_length(d, len)) {
        for (const auto& [v, u] : pairs) {
          const auto defect = space.commutator_defect(v, u, space.basis(w));
          ++report.instances;
          if (!defect.is_zero()) report.failures.push_back({{"mode", "exact"}, {"word", w.to_string()}});
        }
      }
    }
  }

  // Numeric: complex vectors on random combinations of words.
  {
    FockSpace<NumericField> space(d, length + 2, numeric_field(rng.uniform_real(-0.9, 0.9)));
    for (int i = 0; i < params.instances; ++i) {
      auto x = space.zero();
      const int terms = rng.uniform(1, 3);
      for (int t = 0; t < terms; ++t) {
        std::vector<int> letters(rng.uniform(0, length));
        for (int& l : letters) l = rng.uniform(1, d);
        x.add(Word::from_letters(letters), {rng.uniform_real(-1, 1), rng.uniform_real(-1, 1)});
      }
      const auto defect = space.commutator_defect(rng.complex_vector(d), rng.complex_vector(d), x);
      double worst = 0.0;
      for (const auto& [w, c] : defect.support()) worst = std::max(worst, std::abs(c));
      ++report.instances;
      if (worst > 1e-12) report.failures.push_back({{"mode", "numeric"}, {"instance", i}, {"max_abs", worst}});
    }
  }
  return report;
}

VerifyReport verify_q0bnc(const VerifyParams& params) {
  require_positive(params);
  VerifyReport report = start("q0bnc", params);
  for (int k = 1; k <= params.n; ++k) {
    const Rational op = moment_T_exact(params.d, k).eval(Rational(0));
    BigInt qn = 0;
    BigInt power = 1;
    for (const auto& c : semi_meander_poly_noncrossing(k)) {
      qn += c * power;
      power *= params.d;
    }
    const BigInt bnc = q0_bnc_moment(params.d, k);
    ++report.instances;
    if (op != Rational(qn) || bnc != qn) {
      report.failures.push_back({{"d", params.d},
                                 {"n", k},
                                 {"operator", to_string(op)},
                                 {"semi_meander", qn.get_str()},
                                 {"bnc", bnc.get_str()}});
    }
  }
  return report;
}

std::vector<std::string> suite_names() {
  return {"wick", "theorem14", "prop18", "prop310", "lemma415", "cor412", "commutator", "q0bnc"};
}

VerifyReport run_suite(const std::string& name, const VerifyParams& params) {
  static const std::map<std::string, VerifyReport (*)(const VerifyParams&)> suites = {
      {"wick", verify_wick},         {"theorem14", verify_theorem14}, {"prop18", verify_prop18},
      {"prop310", verify_prop310},   {"lemma415", verify_lemma415},   {"cor412", verify_cor412},
      {"commutator", verify_commutator}, {"q0bnc", verify_q0bnc}};
  auto it = suites.find(name);
  if (it == suites.end()) throw DomainError("unknown suite '" + name + "'");
  return it->second(params);
}

}  // namespace meander
