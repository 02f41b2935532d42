// meander: command-line front end.
//
//   meander poly --kind semi --n 4 --format pretty
//   meander moments --op T --d 2 --n 5 [--q 1/2 | --q 0.3]
//   meander verify --suite theorem14 --d 2 --n 4
//   meander spectrum --d 2 --q 0.5 --n 10 --k 4
//   meander enumerate --kind noncrossing --n 3
//
// Exit codes: 0 success, 1 verification failure, 2 usage or size-limit error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "meander/dyck.hpp"
#include "meander/errors.hpp"
#include "meander/fock.hpp"
#include "meander/partitions.hpp"
#include "meander/polynomials.hpp"
#include "meander/spectra.hpp"
#include "meander/verify.hpp"

using nlohmann::json;
using namespace meander;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  int n = 0;
  int d = 1;
  std::string q;
  std::string format = "json";
  int jobs = 1;
  int cap = 0;  // 0: default or MEANDER_CAP
};

// Explicit --cap wins, then MEANDER_CAP, then the built-in default.
int resolve_cap(int flag, int fallback) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("MEANDER_CAP"); env != nullptr && *env != '\0') {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("MEANDER_CAP must be a positive integer, got '") + env + "'");
  }
  return fallback;
}

bool explicit_cap(int flag) {
  const char* env = std::getenv("MEANDER_CAP");
  return flag > 0 || (env != nullptr && *env != '\0');
}

void emit(const json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << '\n';
  } else {
    throw UsageError("format '" + format + "' is not available for this command");
  }
}

void add_common(CLI::App* sub, Common& c, bool with_q, bool n_required = true) {
  auto* n = sub->add_option("--n", c.n, "Order / half-size");
  if (n_required) n->required();
  sub->add_option("--d", c.d, "Alphabet size");
  if (with_q) sub->add_option("--q", c.q, "q as p/r (exact) or decimal (numeric); formal if absent");
  sub->add_option("--format", c.format, "json | csv | pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--cap", c.cap, "Size cap (overrides MEANDER_CAP)")->check(CLI::PositiveNumber);
}

// ---------------------------------------------------------------- poly

int cmd_poly(const Common& c, const std::string& kind) {
  if (c.n < 1) throw UsageError("--n must be at least 1");
  BivarPoly p;
  if (kind == "semi") {
    p = semi_meander_poly(c.n, resolve_cap(c.cap, kDefaultEnumerationCap), c.jobs);
  } else {
    const int cap = explicit_cap(c.cap) ? resolve_cap(c.cap, 0) / 2 : kDefaultMeanderCap;
    p = meander_poly(c.n, cap, c.jobs);
  }
  if (c.format == "json") {
    std::cout << poly_document(p, c.n, kind).dump(2) << '\n';
  } else if (c.format == "csv") {
    std::cout << to_csv(coefficient_table(p));
  } else {
    std::cout << (kind == "semi" ? "Q~_" : "P~_") << c.n << "(t,u) = " << p.to_pretty() << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------- moments

enum class QMode { formal, exact, numeric };

QMode classify_q(const std::string& q) {
  if (q.empty()) return QMode::formal;
  if (q.find_first_of(".eE") != std::string::npos) return QMode::numeric;
  return QMode::exact;
}

std::string format_double(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

int cmd_moments(const Common& c, const std::string& op) {
  if (c.n < 0) throw UsageError("--n must be non-negative");
  if (c.d < 1) throw UsageError("--d must be at least 1");
  const QMode mode = classify_q(c.q);
  const int cap = resolve_cap(c.cap, op == "T" ? 7 : (c.d <= 2 ? 4 : 3));
  if (c.n > cap) throw SizeLimitError("n = " + std::to_string(c.n) + " exceeds moment cap " + std::to_string(cap));
  MomentOptions options;
  options.cap = cap;

  json rows = json::array();
  std::vector<std::string> shown;
  double numeric_q = 0.0;
  Rational exact_q;
  if (mode == QMode::numeric) {
    try {
      numeric_q = std::stod(c.q);
    } catch (const std::exception&) {
      throw UsageError("malformed q '" + c.q + "'");
    }
    numeric_field(numeric_q);  // validates the range
  } else if (mode == QMode::exact) {
    exact_q = parse_rational(c.q);
    if (exact_q <= -1 || exact_q >= 1) throw DomainError("q must lie in (-1, 1)");
  }
  for (int k = 0; k <= c.n; ++k) {
    json row = {{"n", k}};
    if (mode == QMode::numeric) {
      const double v = op == "T" ? moment_T_numeric(c.d, k, numeric_q, options) : moment_X_numeric(c.d, k, numeric_q, cap);
      row["value"] = v;
      shown.push_back(format_double(v));
    } else {
      const QPoly p = op == "T" ? moment_T_exact(c.d, k, options) : moment_X_exact(c.d, k, cap);
      if (mode == QMode::formal) {
        row["value"] = p.to_string();
        row["coeffs"] = json(p)["coeffs"];
        shown.push_back(p.to_string());
      } else {
        const Rational v = p.eval(exact_q);
        row["value"] = to_string(v);
        shown.push_back(to_string(v));
      }
    }
    rows.push_back(row);
  }

  if (c.format == "json") {
    json doc = {{"schema_version", 1},
                {"operator", op},
                {"d", c.d},
                {"mode", mode == QMode::formal ? "formal" : mode == QMode::exact ? "exact" : "numeric"},
                {"moments", rows}};
    if (mode != QMode::formal) doc["q"] = c.q;
    std::cout << doc.dump(2) << '\n';
  } else if (c.format == "csv") {
    std::cout << "n,moment\n";
    for (std::size_t k = 0; k < shown.size(); ++k) std::cout << k << ',' << shown[k] << '\n';
  } else {
    for (std::size_t k = 0; k < shown.size(); ++k) std::cout << "m_" << k << " = " << shown[k] << '\n';
  }
  return kExitOk;
}

// -------------------------------------------------------------- verify

int cmd_verify(const Common& c, const std::string& suite, std::uint64_t seed, int instances) {
  VerifyParams params;
  params.n = c.n;
  params.d = c.d;
  params.seed = seed;
  params.instances = instances;
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
  const VerifyReport report = run_suite(suite, params);
  emit(report.to_json(), c.format);
  return report.passed() ? kExitOk : kExitFailed;
}

// ------------------------------------------------------------ spectrum

int cmd_spectrum(const Common& c, const std::string& op, int k) {
  SequenceSpec spec;
  spec.op = op == "X" ? 'X' : 'T';
  spec.d = c.d;
  spec.order = c.n;
  if (c.n < 2) throw UsageError("--n (number of moments) must be at least 2");
  if (k < 1) throw UsageError("--k must be at least 1");
  if (!c.q.empty()) {
    try {
      spec.q = classify_q(c.q) == QMode::exact ? parse_rational(c.q).get_d() : std::stod(c.q);
    } catch (const std::invalid_argument&) {
      throw UsageError("malformed q '" + c.q + "'");
    }
  }
  numeric_field(spec.q);
  const int cap = resolve_cap(c.cap, spec.op == 'T' ? 12 : 6);
  if (c.n > cap) throw SizeLimitError("n = " + std::to_string(c.n) + " exceeds spectrum cap " + std::to_string(cap));
  emit(spectrum_document(spec, k), c.format);
  return kExitOk;
}

// ----------------------------------------------------------- enumerate

int cmd_enumerate(const Common& c, const std::string& kind, const std::string& eps_text, const std::string& chi_text) {
  if (c.n < 1) throw UsageError("--n must be at least 1");
  const int cap = resolve_cap(c.cap, kDefaultEnumerationCap);
  json items = json::array();
  if (kind == "pairs") {
    for_each_pair_partition(c.n, [&](const PairPartition& pi) { items.push_back(pi); }, cap);
  } else if (kind == "noncrossing") {
    for (const auto& pi : enumerate_noncrossing(c.n, cap)) items.push_back(pi);
  } else if (kind == "bnc") {
    for (const auto& pi : bnc2_alt(2 * c.n, cap)) items.push_back(pi);
  } else if (kind == "dyck") {
    for (const auto& eps : enumerate_dyck(2 * c.n, cap)) items.push_back(eps.to_string());
  } else {
    if (eps_text.empty()) throw UsageError("--eps is required for kind preimage");
    const DyckTuple eps = DyckTuple::parse(eps_text);
    if (eps.n() != c.n) throw UsageError("--eps length must be 2n");
    const SidePattern chi = chi_text.empty() ? SidePattern::alternating(c.n) : SidePattern::parse(chi_text);
    if (chi.size() != eps.size()) throw UsageError("--chi length must be 2n");
    for_each_choice_tuple(eps, [&](const ChoiceTuple& ct) {
      items.push_back({{"gammas", ct.gammas()},
                       {"pi", choices_to_partition(ct, chi)},
                       {"crossings", crossings_from_choices(ct)}});
    });
  }
  if (c.format != "json") throw UsageError("enumerate only supports --format json");
  std::cout << json{{"schema_version", 1}, {"kind", kind}, {"n", c.n}, {"count", items.size()}, {"items", items}}.dump(2)
            << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Meander and semi-meander polynomials, q-Fock moments and their measures"};
  app.require_subcommand(1);

  Common poly_c, mom_c, ver_c, spec_c, enum_c;
  ver_c.d = 2;
  std::string poly_kind = "semi";
  auto* poly = app.add_subcommand("poly", "Self-intersecting (semi-)meander polynomial");
  add_common(poly, poly_c, false);
  poly->add_option("--kind", poly_kind, "semi | meander")->check(CLI::IsMember({"semi", "meander"}));

  std::string mom_op = "T";
  auto* moments = app.add_subcommand("moments", "Vacuum moments of T or X");
  add_common(moments, mom_c, true);
  moments->add_option("--op", mom_op, "T | X")->check(CLI::IsMember({"T", "X"}));

  std::string suite;
  std::uint64_t seed = 1;
  int instances = 200;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_common(verify, ver_c, false);
  verify->add_option("--suite", suite, "Suite name")->required();
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--instances", instances, "Randomized instances")->check(CLI::NonNegativeNumber);

  std::string spec_op = "T";
  int k_nodes = 4;
  auto* spectrum = app.add_subcommand("spectrum", "Moments, recurrence and Gauss quadrature");
  spec_c.n = 10;
  add_common(spectrum, spec_c, true, false);
  spectrum->add_option("--k", k_nodes, "Quadrature nodes");
  spectrum->add_option("--op", spec_op, "T | X")->check(CLI::IsMember({"T", "X"}));

  std::string enum_kind = "pairs", eps_text, chi_text;
  auto* enumerate = app.add_subcommand("enumerate", "List pair-partitions, Dyck tuples or fibres");
  add_common(enumerate, enum_c, false);
  enumerate->add_option("--kind", enum_kind, "pairs | noncrossing | bnc | dyck | preimage")
      ->check(CLI::IsMember({"pairs", "noncrossing", "bnc", "dyck", "preimage"}));
  enumerate->add_option("--eps", eps_text, "Dyck tuple such as 11*1**");
  enumerate->add_option("--chi", chi_text, "Side pattern such as lrlr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*poly) return cmd_poly(poly_c, poly_kind);
    if (*moments) return cmd_moments(mom_c, mom_op);
    if (*verify) return cmd_verify(ver_c, suite, seed, instances);
    if (*spectrum) return cmd_spectrum(spec_c, spec_op, k_nodes);
    if (*enumerate) return cmd_enumerate(enum_c, enum_kind, eps_text, chi_text);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {  // size limits, domain, range, parity
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {  // truncation overflow
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
