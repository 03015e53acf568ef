#include "twistspin/fox.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "twistspin/error.hpp"

namespace twistspin {

namespace {

using Coeff = GroupRingElement::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_add_overflow(a, b, &out))
    throw DomainError("group ring coefficient overflow");
  return out;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_mul_overflow(a, b, &out))
    throw DomainError("group ring coefficient overflow");
  return out;
}

// Appends a letter to an already reduced word, cancelling if needed.
void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().generator == l.generator &&
      out.back().sign == -l.sign) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

FreeWord::FreeWord(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) {
    if (l.generator < 1) throw DomainError("generator indices start at 1");
    if (l.sign != 1 && l.sign != -1) throw DomainError("letter sign must be +-1");
    push_reduced(letters_, l);
  }
}

FreeWord FreeWord::generator(int index, int sign) {
  return FreeWord({Letter{index, sign}});
}

int FreeWord::max_generator() const noexcept {
  int out = 0;
  for (const auto& l : letters_) out = std::max(out, l.generator);
  return out;
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(Letter{it->generator, -it->sign});
  return out;
}

FreeWord FreeWord::power(std::int64_t k) const {
  if (k < 0) return inverse().power(-k);
  FreeWord out;
  for (std::int64_t i = 0; i < k; ++i) out = out * *this;
  return out;
}

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
  FreeWord out;
  out.letters_ = u.letters_;
  for (const auto& l : v.letters_) push_reduced(out.letters_, l);
  return out;
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) {
  return u * v * u.inverse() * v.inverse();
}

// ---------------------------------------------------------------------------

GroupRingElement::GroupRingElement(const FreeWord& w, Coeff c) { add(w, c); }

void GroupRingElement::add(const FreeWord& w, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out = *this;
  for (auto& [w, c] : out.terms_) c = checked_mul(c, -1);
  return out;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, checked_mul(c, -1));
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add(wa * wb, checked_mul(ca, cb));
  return out;
}

// Unfolding the product rule over w = l_1 ... l_k gives
//   d_i w = sum_t (l_1 ... l_{t-1}) d_i(l_t),
// with d_i(x_i) = 1 and d_i(x_i^-1) = -x_i^-1.
GroupRingElement fox_derivative(int i, const FreeWord& w) {
  GroupRingElement out;
  std::vector<Letter> prefix;
  prefix.reserve(w.length());
  for (const auto& l : w.letters()) {
    if (l.generator == i) {
      if (l.sign > 0) {
        out.add(FreeWord(prefix), 1);
      } else {
        std::vector<Letter> with_inverse = prefix;
        with_inverse.push_back(l);
        out.add(FreeWord(std::move(with_inverse)), -1);
      }
    }
    prefix.push_back(l);
  }
  return out;
}

GroupRingElement fox_derivative(int i, const GroupRingElement& g) {
  GroupRingElement out;
  for (const auto& [w, c] : g.terms()) {
    for (const auto& [dw, dc] : fox_derivative(i, w).terms())
      out.add(dw, checked_mul(c, dc));
  }
  return out;
}

// ---------------------------------------------------------------------------

AbelianizationWeights::AbelianizationWeights(std::map<int, std::int64_t> weights)
    : weights_(std::move(weights)) {
  for (const auto& [g, w] : weights_)
    if (g < 1) throw DomainError("generator indices start at 1");
}

AbelianizationWeights AbelianizationWeights::uniform(int count, std::int64_t weight) {
  std::map<int, std::int64_t> w;
  for (int i = 1; i <= count; ++i) w[i] = weight;
  return AbelianizationWeights(std::move(w));
}

std::int64_t AbelianizationWeights::weight(int generator) const {
  auto it = weights_.find(generator);
  if (it == weights_.end())
    throw DomainError("missing abelianization weight for generator " +
                      std::to_string(generator));
  return it->second;
}

bool AbelianizationWeights::all_equal_to(std::int64_t w) const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [w](const auto& kv) { return kv.second == w; });
}

std::int64_t AbelianizationWeights::degree(const FreeWord& w) const {
  std::int64_t d = 0;
  for (const auto& l : w.letters()) d += l.sign * weight(l.generator);
  return d;
}

LaurentPolynomial abelianize(const FreeWord& w, const AbelianizationWeights& wts) {
  return LaurentPolynomial::power_of_t(wts.degree(w));
}

LaurentPolynomial abelianize(const GroupRingElement& g,
                             const AbelianizationWeights& wts) {
  LaurentPolynomial out;
  for (const auto& [w, c] : g.terms())
    out += LaurentPolynomial::monomial(c, wts.degree(w));
  return out;
}

LaurentPolynomial abelianized_fox_derivative(int i, const FreeWord& w,
                                             const AbelianizationWeights& wts) {
  LaurentPolynomial out;
  std::int64_t prefix_degree = 0;
  for (const auto& l : w.letters()) {
    const std::int64_t e = wts.weight(l.generator);
    if (l.generator == i) {
      if (l.sign > 0)
        out += LaurentPolynomial::monomial(1, prefix_degree);
      else
        out -= LaurentPolynomial::monomial(1, prefix_degree - e);
    }
    prefix_degree += l.sign * e;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string lower(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

std::string upper(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

bool is_lower_name(const std::string& s) { return lower(s) == s && upper(s) != s; }

}  // namespace

FreeWord parse_word(std::string_view text, const std::vector<std::string>& names) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string token(text.substr(start, pos - start));
    const std::size_t column = start + 1;

    std::int64_t exponent = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      const std::string exp_text = token.substr(caret + 1);
      token.resize(caret);
      try {
        std::size_t used = 0;
        exponent = std::stoll(exp_text, &used);
        if (used != exp_text.size()) throw std::invalid_argument(exp_text);
      } catch (const std::exception&) {
        throw ParseError(1, column + caret + 1, "bad exponent '" + exp_text + "'");
      }
    }
    if (token == "1" && exponent == 1) continue;

    int generator = 0;
    int sign = 1;
    if (names.empty()) {
      if (token.size() >= 2 && (token[0] == 'x' || token[0] == 'X') &&
          std::all_of(token.begin() + 1, token.end(),
                      [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        generator = std::stoi(token.substr(1));
        sign = token[0] == 'X' ? -1 : 1;
      }
    } else {
      for (std::size_t g = 0; g < names.size(); ++g) {
        if (token == names[g]) {
          generator = static_cast<int>(g) + 1;
          break;
        }
        if (is_lower_name(names[g]) && token == upper(names[g])) {
          generator = static_cast<int>(g) + 1;
          sign = -1;
          break;
        }
      }
    }
    if (generator < 1) throw ParseError(1, column, "unknown letter '" + token + "'");
    const int s = exponent < 0 ? -sign : sign;
    for (std::int64_t k = 0; k < (exponent < 0 ? -exponent : exponent); ++k)
      letters.push_back(Letter{generator, s});
  }
  return FreeWord(std::move(letters));
}

std::string format_word(const FreeWord& w, const std::vector<std::string>& names) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    const std::size_t idx = static_cast<std::size_t>(l.generator - 1);
    const std::string name =
        idx < names.size() ? names[idx] : "x" + std::to_string(l.generator);
    if (l.sign > 0)
      os << name;
    else if (is_lower_name(name))
      os << upper(name);
    else
      os << name << "^-1";
  }
  return os.str();
}

}  // namespace twistspin
