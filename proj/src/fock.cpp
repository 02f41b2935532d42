#include "meander/fock.hpp"

#include <sstream>

namespace meander {

NumericField numeric_field(double q) {
  if (!(q > -1.0 && q < 1.0)) throw DomainError("numeric q must lie in (-1, 1)");
  NumericField f;
  f.q = q;
  return f;
}

Word Word::from_letters(std::span<const int> letters) {
  Word w;
  for (int letter : letters) w = w.append(letter);
  return w;
}

std::vector<int> Word::letters() const {
  std::vector<int> out(length_);
  for (int i = 0; i < length_; ++i) out[i] = letter(i);
  return out;
}

Word Word::prepend(int letter) const {
  if (length_ >= kMaxLength) throw TruncationOverflow("word longer than 16 letters");
  if (letter < 1 || letter > kMaxLetter) throw RangeError("letter out of range");
  return Word((packed_ << 4) | static_cast<std::uint64_t>(letter), static_cast<std::uint8_t>(length_ + 1));
}

Word Word::append(int letter) const {
  if (length_ >= kMaxLength) throw TruncationOverflow("word longer than 16 letters");
  if (letter < 1 || letter > kMaxLetter) throw RangeError("letter out of range");
  return Word(packed_ | (static_cast<std::uint64_t>(letter) << (4 * length_)), static_cast<std::uint8_t>(length_ + 1));
}

Word Word::erase(int pos) const {
  if (pos < 0 || pos >= length_) throw RangeError("erase position out of range");
  const std::uint64_t low = pos == 0 ? 0 : packed_ & ((std::uint64_t{1} << (4 * pos)) - 1);
  const std::uint64_t high = pos + 1 >= kMaxLength ? 0 : packed_ >> (4 * (pos + 1));
  return Word(low | (high << (4 * pos)), static_cast<std::uint8_t>(length_ - 1));
}

Word Word::concat(const Word& right) const {
  Word out = *this;
  for (int i = 0; i < right.length(); ++i) out = out.append(right.letter(i));
  return out;
}

std::string Word::to_string() const {
  std::string out;
  for (int i = 0; i < length_; ++i) {
    if (i) out += '.';
    out += std::to_string(letter(i));
  }
  return out;
}

Word Word::parse(const std::string& text) {
  Word w;
  if (text.empty()) return w;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, '.')) {
    try {
      w = w.append(std::stoi(part));
    } catch (const std::invalid_argument&) {
      throw DomainError("malformed word '" + text + "'");
    }
  }
  return w;
}

std::vector<Word> words_of_length(int d, int length) {
  std::vector<Word> out{Word{}};
  for (int step = 0; step < length; ++step) {
    std::vector<Word> next;
    next.reserve(out.size() * d);
    for (const auto& w : out) {
      for (int i = 1; i <= d; ++i) next.push_back(w.append(i));
    }
    out = std::move(next);
  }
  return out;
}

QPoly moment_T_exact(int d, int n, const MomentOptions& options) { return moment_T(ExactField{}, d, n, options); }

double moment_T_numeric(int d, int n, double q, const MomentOptions& options) {
  return moment_T(numeric_field(q), d, n, options).real();
}

QPoly moment_X_exact(int d, int n, int cap) { return moment_X(ExactField{}, d, n, cap); }

double moment_X_numeric(int d, int n, double q, int cap) { return moment_X(numeric_field(q), d, n, cap).real(); }

nlohmann::json fock_vector_to_json(const FockVector<ExactField>& x) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [w, c] : x.sorted_terms()) out[w.to_string()] = c;
  return out;
}

}  // namespace meander
