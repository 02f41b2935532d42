#include "meander/dyck.hpp"

#include <algorithm>
#include <cctype>

#include "meander/errors.hpp"

namespace meander {

bool is_dyck(std::span<const Mark> symbols) {
  int height = 0;
  for (Mark m : symbols) {
    height += m == Mark::one ? 1 : -1;
    if (height < 0) return false;
  }
  return height == 0 && !symbols.empty();
}

std::vector<Mark> parse_marks(std::string_view text) {
  std::vector<Mark> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '1') {
      out.push_back(Mark::one);
    } else if (c == '*') {
      out.push_back(Mark::star);
    } else {
      throw DomainError(std::string("unexpected symbol '") + c + "' in {1,*} word");
    }
  }
  return out;
}

std::string marks_to_string(std::span<const Mark> marks) {
  std::string out;
  out.reserve(marks.size());
  for (Mark m : marks) out.push_back(m == Mark::one ? '1' : '*');
  return out;
}

DyckTuple DyckTuple::from_marks(std::vector<Mark> symbols) {
  if (!is_dyck(symbols)) throw DomainError("word " + marks_to_string(symbols) + " is not a Dyck tuple");
  return DyckTuple(std::move(symbols));
}

DyckTuple DyckTuple::parse(std::string_view text) { return from_marks(parse_marks(text)); }

std::string DyckTuple::to_string() const { return marks_to_string(symbols_); }

SidePattern SidePattern::alternating(int n) {
  SidePattern chi;
  for (int k = 0; k < n; ++k) {
    chi.sides.push_back(Side::left);
    chi.sides.push_back(Side::right);
  }
  return chi;
}

SidePattern SidePattern::all_left(int n) { return SidePattern{std::vector<Side>(2 * n, Side::left)}; }

SidePattern SidePattern::parse(std::string_view text) {
  SidePattern chi;
  for (char c : text) {
    switch (std::tolower(static_cast<unsigned char>(c))) {
      case 'l': chi.sides.push_back(Side::left); break;
      case 'r': chi.sides.push_back(Side::right); break;
      default: throw DomainError(std::string("unexpected side '") + c + "'");
    }
  }
  if (chi.sides.empty() || chi.sides.size() % 2 != 0) throw ParityError("side pattern must have even positive length");
  return chi;
}

std::string SidePattern::to_string() const {
  std::string out;
  for (Side s : sides) out.push_back(s == Side::left ? 'l' : 'r');
  return out;
}

ChoiceTuple ChoiceTuple::make(DyckTuple eps, std::vector<int> gammas) {
  if (static_cast<int>(gammas.size()) != eps.size()) throw DimensionError("choice tuple length differs from Dyck tuple");
  for (int h = 1; h <= eps.size(); ++h) {
    const int g = gammas[h - 1];
    if (eps[h] == Mark::one) {
      if (g != 1) throw RangeError("gamma at a one-position must be 1 (height " + std::to_string(h) + ")");
    } else if (g < 1 || g > choice_number(eps, h)) {
      throw RangeError("gamma " + std::to_string(g) + " at height " + std::to_string(h) + " outside [1, " +
                       std::to_string(choice_number(eps, h)) + "]");
    }
  }
  return ChoiceTuple(std::move(eps), std::move(gammas));
}

void for_each_dyck(int two_n, const std::function<void(const DyckTuple&)>& visit, int cap) {
  if (two_n < 2 || two_n % 2 != 0) throw ParityError("Dyck tuples need even positive length");
  if (two_n > cap) throw SizeLimitError("length " + std::to_string(two_n) + " exceeds enumeration cap " + std::to_string(cap));
  std::vector<Mark> word(two_n);
  const int n = two_n / 2;
  std::function<void(int, int, int)> rec = [&](int pos, int ones, int stars) {
    if (pos == two_n) {
      visit(DyckTuple::from_marks(word));
      return;
    }
    if (ones < n) {
      word[pos] = Mark::one;
      rec(pos + 1, ones + 1, stars);
    }
    if (stars < ones) {
      word[pos] = Mark::star;
      rec(pos + 1, ones, stars + 1);
    }
  };
  rec(0, 0, 0);
}

std::vector<DyckTuple> enumerate_dyck(int two_n, int cap) {
  std::vector<DyckTuple> out;
  for_each_dyck(two_n, [&](const DyckTuple& eps) { out.push_back(eps); }, cap);
  return out;
}

std::vector<int> to_lattice_path(const DyckTuple& eps) {
  std::vector<int> path;
  path.reserve(eps.size());
  int p = 0;
  for (Mark m : eps.marks()) {
    p += m == Mark::one ? 1 : -1;
    path.push_back(p);
  }
  return path;
}

int choice_number(const DyckTuple& eps, int h) {
  if (h < 1 || h > eps.size() || eps[h] != Mark::star) {
    throw DomainError("choice number requested at height " + std::to_string(h) + ", which is not a star");
  }
  int balance = 0;
  for (int i = 1; i < h; ++i) balance += eps[i] == Mark::one ? 1 : -1;
  return balance;
}

long long preimage_size(const DyckTuple& eps) {
  long long count = 1;
  for (int h = 1; h <= eps.size(); ++h) {
    if (eps[h] == Mark::star) count *= choice_number(eps, h);
  }
  return count;
}

DyckTuple phi(const PairPartition& pi, const SidePattern& chi) {
  if (chi.size() != pi.ground_size()) throw DimensionError("side pattern length differs from ground set");
  const auto heights = act(chi.labels_to_heights(), pi);
  std::vector<Mark> eps(pi.ground_size());
  for (const auto& [lo, hi] : heights.pairs()) {
    eps[lo - 1] = Mark::one;
    eps[hi - 1] = Mark::star;
  }
  return DyckTuple::from_marks(std::move(eps));
}

std::vector<int> candidate_order(std::span<const int> available, int star_height, const SidePattern& chi) {
  const Side own = chi(star_height);
  std::vector<int> same;
  std::vector<int> other;
  for (int k : available) (chi(k) == own ? same : other).push_back(k);
  std::sort(same.begin(), same.end(), std::greater<>());
  std::sort(other.begin(), other.end());
  same.insert(same.end(), other.begin(), other.end());
  return same;
}

namespace {

// Pairs of heights produced by replaying the choices; entry h-1 holds the
// partner height of h.
std::vector<int> replay_choices(const DyckTuple& eps, std::span<const int> gammas, const SidePattern& chi) {
  std::vector<int> partner(eps.size(), 0);
  std::vector<int> available;
  for (int h = 1; h <= eps.size(); ++h) {
    if (eps[h] == Mark::one) {
      available.push_back(h);
      continue;
    }
    const auto order = candidate_order(available, h, chi);
    const int g = gammas[h - 1];
    if (g < 1 || g > static_cast<int>(order.size())) {
      throw RangeError("gamma " + std::to_string(g) + " at height " + std::to_string(h) + " exceeds choice number");
    }
    const int k = order[g - 1];
    partner[h - 1] = k;
    partner[k - 1] = h;
    available.erase(std::find(available.begin(), available.end(), k));
  }
  return partner;
}

}  // namespace

PairPartition choices_to_partition(const ChoiceTuple& ct, const SidePattern& chi) {
  const auto& eps = ct.eps();
  if (chi.size() != eps.size()) throw DimensionError("side pattern length differs from Dyck tuple");
  const auto height_partners = replay_choices(eps, ct.gammas(), chi);
  const auto heights = PairPartition::from_partners(height_partners);
  return act(chi.labels_to_heights().inverse(), heights);
}

ChoiceTuple partition_to_choices(const PairPartition& pi, const SidePattern& chi) {
  const DyckTuple eps = phi(pi, chi);
  const auto heights = act(chi.labels_to_heights(), pi).partners();
  std::vector<int> gammas(eps.size(), 1);
  std::vector<int> available;
  for (int h = 1; h <= eps.size(); ++h) {
    if (eps[h] == Mark::one) {
      available.push_back(h);
      continue;
    }
    const int k = heights[h - 1];
    const auto order = candidate_order(available, h, chi);
    gammas[h - 1] = static_cast<int>(std::find(order.begin(), order.end(), k) - order.begin()) + 1;
    available.erase(std::find(available.begin(), available.end(), k));
  }
  return ChoiceTuple::make(eps, std::move(gammas));
}

void for_each_choice_tuple(const DyckTuple& eps, const std::function<void(const ChoiceTuple&)>& visit) {
  std::vector<int> stars;
  std::vector<int> bounds;
  for (int h = 1; h <= eps.size(); ++h) {
    if (eps[h] == Mark::star) {
      stars.push_back(h);
      bounds.push_back(choice_number(eps, h));
    }
  }
  std::vector<int> gammas(eps.size(), 1);
  // Odometer over the star positions, last star varying fastest.
  while (true) {
    visit(ChoiceTuple::make(eps, gammas));
    int i = static_cast<int>(stars.size()) - 1;
    while (i >= 0 && gammas[stars[i] - 1] == bounds[i]) {
      gammas[stars[i] - 1] = 1;
      --i;
    }
    if (i < 0) break;
    ++gammas[stars[i] - 1];
  }
}

void for_each_preimage(const DyckTuple& eps, const SidePattern& chi,
                       const std::function<void(const PairPartition&)>& visit, int cap) {
  if (eps.size() > cap) throw SizeLimitError("length " + std::to_string(eps.size()) + " exceeds enumeration cap " + std::to_string(cap));
  if (chi.size() != eps.size()) throw DimensionError("side pattern length differs from Dyck tuple");
  for_each_choice_tuple(eps, [&](const ChoiceTuple& ct) { visit(choices_to_partition(ct, chi)); });
}

std::vector<PairPartition> enumerate_preimage(const DyckTuple& eps, const SidePattern& chi, int cap) {
  std::vector<PairPartition> out;
  for_each_preimage(eps, chi, [&](const PairPartition& pi) { out.push_back(pi); }, cap);
  return out;
}

int crossings_from_choices(const ChoiceTuple& ct) {
  int total = 0;
  for (int h = 1; h <= ct.eps().size(); ++h) {
    if (ct.eps()[h] == Mark::star) total += ct.gamma(h) - 1;
  }
  return total;
}

std::vector<PairPartition> bnc2_alt(int two_n, int cap) {
  if (two_n < 2 || two_n % 2 != 0) throw ParityError("expected an even ground-set size >= 2");
  const auto s = labels_to_heights(two_n / 2);
  std::vector<PairPartition> out;
  for (const auto& pi : enumerate_noncrossing(two_n / 2, cap)) out.push_back(act(s, pi));
  return out;
}

}  // namespace meander
