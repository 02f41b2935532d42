#include "meander/polynomials.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "meander/errors.hpp"
#include "meander/partitions.hpp"

namespace meander {

void BivarPoly::add_term(int t_degree, int u_degree, const BigInt& c) {
  if (t_degree < 0 || u_degree < 0) throw DomainError("negative degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({t_degree, u_degree}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt BivarPoly::coefficient(int t_degree, int u_degree) const {
  auto it = terms_.find({t_degree, u_degree});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int BivarPoly::t_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e.first);
  return deg;
}

int BivarPoly::u_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e.second);
  return deg;
}

BigInt BivarPoly::coefficient_sum() const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

Rational BivarPoly::eval(const Rational& t, const Rational& u) const {
  return eval_t(t).eval(u);
}

QPoly BivarPoly::eval_t(const Rational& t) const {
  QPoly out;
  for (const auto& [e, c] : terms_) {
    Rational coeff = Rational(c);
    for (int k = 0; k < e.first; ++k) coeff *= t;
    out += QPoly::monomial(e.second, coeff);
  }
  return out;
}

std::vector<BigInt> BivarPoly::u_zero_slice() const {
  std::vector<BigInt> out(std::max(t_degree() + 1, 0));
  for (const auto& [e, c] : terms_) {
    if (e.second == 0) out[e.first] += c;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string BivarPoly::to_pretty() const {
  if (is_zero()) return "0";
  // Group by t-degree: t^k (sum_l c u^l).
  std::map<int, std::vector<std::pair<int, BigInt>>> by_t;
  for (const auto& [e, c] : terms_) by_t[e.first].emplace_back(e.second, c);
  auto u_term = [](int l, const BigInt& c, bool first) {
    std::string s;
    const BigInt mag = abs(c);
    if (!first) s += c < 0 ? "+-" : "+";
    else if (c < 0) s += "-";
    if (l == 0 || mag != 1) s += mag.get_str();
    if (l >= 1) s += "u";
    if (l > 1) s += "^" + std::to_string(l);
    return s;
  };
  std::string out;
  for (const auto& [k, row] : by_t) {
    if (!out.empty()) out += " + ";
    std::string inner;
    for (std::size_t i = 0; i < row.size(); ++i) inner += u_term(row[i].first, row[i].second, i == 0);
    std::string tpart = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (row.size() == 1 && row[0].first == 0 && row[0].second == 1 && k > 0) {
      out += tpart;
    } else if (tpart.empty()) {
      out += row.size() == 1 ? inner : "(" + inner + ")";
    } else if (row.size() == 1 && row[0].first == 0) {
      out += inner + tpart;
    } else {
      out += tpart + "(" + inner + ")";
    }
  }
  return out;
}

namespace {

// Dense (curves, crossings) counter, flushed into a BivarPoly at the end.
struct CountGrid {
  explicit CountGrid(int n) : n(n), counts((n + 1) * (n * n + 1), 0) {}
  void add(int curves, int cr) { ++counts[curves * (n * n + 1) + cr]; }
  void flush(BivarPoly& out) const {
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; l <= n * n; ++l) {
        const auto c = counts[k * (n * n + 1) + l];
        if (c != 0) out.add_term(k, l, BigInt(std::to_string(c)));
      }
    }
  }
  int n;
  std::vector<unsigned long long> counts;
};

// Streams P_2(2n) split across workers by the partner of 1; each worker owns a
// grid and the grids are merged in worker order.
template <class Tally>
BivarPoly tally_over_first_pair(int n, int jobs, int cap, Tally tally) {
  const int branches = 2 * n - 1;
  jobs = std::clamp(jobs, 1, branches);
  std::vector<CountGrid> grids(jobs, CountGrid(n));
  auto work = [&](int worker) {
    for (int b = 2 + worker; b <= 2 * n; b += jobs) {
      for_each_pair_partition_with_first(
          n, b, [&](const PairPartition& pi) { tally(pi, grids[worker]); }, cap);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  BivarPoly out;
  for (const auto& g : grids) g.flush(out);
  return out;
}

}  // namespace

BivarPoly semi_meander_poly(int n, int cap, int jobs) {
  if (n < 1) throw DomainError("n must be positive");
  if (2 * n > cap) throw SizeLimitError("2n = " + std::to_string(2 * n) + " exceeds enumeration cap " + std::to_string(cap));
  const PairPartition rho = rainbow(2 * n);
  return tally_over_first_pair(n, jobs, cap, [&](const PairPartition& pi, CountGrid& grid) {
    grid.add(join_block_count(pi, rho), crossings(pi));
  });
}

BivarPoly meander_poly(int n, int cap, int jobs) {
  if (n < 1) throw DomainError("n must be positive");
  if (n > cap) throw SizeLimitError("n = " + std::to_string(n) + " exceeds meander cap " + std::to_string(cap));
  const auto all = enumerate_pair_partitions(n);
  std::vector<int> cr(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) cr[i] = crossings(all[i]);
  return tally_over_first_pair(n, jobs, kDefaultEnumerationCap, [&](const PairPartition& pi, CountGrid& grid) {
    const int cr_pi = crossings(pi);
    for (std::size_t j = 0; j < all.size(); ++j) grid.add(join_block_count(pi, all[j]), cr_pi + cr[j]);
  });
}

std::vector<BigInt> semi_meander_poly_noncrossing(int n, int cap) {
  const PairPartition rho = rainbow(2 * n);
  std::vector<BigInt> out(n + 1);
  for (const auto& pi : enumerate_noncrossing(n, cap)) out[join_block_count(pi, rho)] += 1;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

CoefficientTable coefficient_table(const BivarPoly& p) {
  CoefficientTable table;
  table.max_t = std::max(p.t_degree(), 0);
  table.max_u = std::max(p.u_degree(), 0);
  table.cells.assign(table.max_t + 1, std::vector<BigInt>(table.max_u + 1, 0));
  table.row_sums.assign(table.max_t + 1, 0);
  table.column_sums.assign(table.max_u + 1, 0);
  table.total = 0;
  for (const auto& [e, c] : p.terms()) {
    table.cells[e.first][e.second] = c;
    table.row_sums[e.first] += c;
    table.column_sums[e.second] += c;
    table.total += c;
  }
  return table;
}

nlohmann::json poly_document(const BivarPoly& p, int n, const std::string& kind) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"t", e.first}, {"u", e.second}, {"c", c.get_str()}});
  return {{"schema_version", 1}, {"n", n}, {"kind", kind}, {"terms", terms}};
}

BivarPoly bivar_poly_from_json(const nlohmann::json& j) {
  BivarPoly p;
  for (const auto& term : j.at("terms")) {
    p.add_term(term.at("t").get<int>(), term.at("u").get<int>(), BigInt(term.at("c").get<std::string>()));
  }
  return p;
}

std::string to_csv(const CoefficientTable& table) {
  std::ostringstream out;
  out << "t,u,c\n";
  for (int k = 0; k <= table.max_t; ++k) {
    for (int l = 0; l <= table.max_u; ++l) {
      if (table.cells[k][l] != 0) out << k << ',' << l << ',' << table.cells[k][l].get_str() << '\n';
    }
  }
  return out.str();
}

}  // namespace meander
