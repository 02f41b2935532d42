#include "meander/qpoly.hpp"

#include <algorithm>

#include "meander/errors.hpp"

namespace meander {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational");
  Rational r;
  if (r.set_str(text, 10) != 0) throw DomainError("malformed rational '" + text + "'");
  if (r.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

QPoly::QPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int power, const Rational& c) {
  if (power < 0) throw DomainError("negative power of q");
  if (c == 0) return {};
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return QPoly(std::move(coeffs));
}

Rational QPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

QPoly QPoly::shifted(int k) const {
  if (k < 0) throw DomainError("negative power of q");
  if (is_zero() || k == 0) return *this;
  QPoly out;
  out.coeffs_.resize(coeffs_.size() + k);
  std::copy(coeffs_.begin(), coeffs_.end(), out.coeffs_.begin() + k);
  return out;
}

Rational QPoly::eval(const Rational& q) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

double QPoly::eval(double q) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + it->get_d();
  return acc;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    std::string mag = meander::to_string(abs(c));
    if (!out.empty()) {
      out += c < 0 ? "-" : "+";
    } else if (c < 0) {
      out += "-";
    }
    if (k == 0) {
      out += mag;
      continue;
    }
    if (abs(c) != 1) out += (c.get_den() != 1 ? "(" + mag + ")" : mag);
    out += "q";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

void to_json(nlohmann::json& j, const QPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  j = nlohmann::json{{"coeffs", coeffs}};
}

QPoly qpoly_from_json(const nlohmann::json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  return QPoly(std::move(coeffs));
}

}  // namespace meander
