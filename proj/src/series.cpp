#include "z2lab/series.hpp"

#include <algorithm>
#include <cctype>

#include "z2lab/error.hpp"

namespace z2lab {

LaurentSeries::LaurentSeries(std::map<int, Rational> terms, int precision) : precision_(precision) {
  for (auto& [e, c] : terms) {
    c.canonicalize();
    if (c == 0) continue;
    if (e >= precision)
      fail(ErrorCode::InsufficientPrecision,
           "term at exponent " + std::to_string(e) + " is not below precision " + std::to_string(precision));
    terms_.emplace(e, std::move(c));
  }
}

LaurentSeries LaurentSeries::monomial(const Rational& c, int exponent, int precision) {
  return LaurentSeries({{exponent, c}}, precision);
}

int LaurentSeries::valuation() const {
  if (terms_.empty()) fail(ErrorCode::ZeroSeries, "valuation of a series with no known nonzero term");
  return terms_.begin()->first;
}

Rational LaurentSeries::coeff(int exponent) const {
  if (exponent >= precision_)
    fail(ErrorCode::InsufficientPrecision,
         "coefficient at t^" + std::to_string(exponent) + " unknown at precision " + std::to_string(precision_));
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<int> LaurentSeries::support() const {
  std::vector<int> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

std::string LaurentSeries::to_string() const {
  std::string out;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  if (!out.empty()) out += " + ";
  out += "O(t^" + std::to_string(precision_) + ")";
  return out;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const int prec = std::min(a.precision_, b.precision_);
  std::map<int, Rational> sum;
  for (const auto& [e, c] : a.terms_)
    if (e < prec) sum[e] += c;
  for (const auto& [e, c] : b.terms_)
    if (e < prec) sum[e] += c;
  return LaurentSeries(std::move(sum), prec);
}

LaurentSeries operator-(const LaurentSeries& a) {
  LaurentSeries out(a.precision_);
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  // A zero series known to O(t^N) behaves like valuation N.
  const int va = a.is_zero() ? a.precision_ : a.valuation();
  const int vb = b.is_zero() ? b.precision_ : b.valuation();
  const int prec = std::min(va + b.precision_, vb + a.precision_);
  std::map<int, Rational> out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      if (ea + eb < prec) out[ea + eb] += ca * cb;
  return LaurentSeries(std::move(out), prec);
}

LaurentSeries invert(const LaurentSeries& a, std::optional<int> target_precision) {
  if (a.is_zero()) fail(ErrorCode::ZeroSeries, "cannot invert a series with no known nonzero term");
  const int v = a.valuation();
  const int available = a.precision() - 2 * v;
  const int target = target_precision.value_or(available);
  if (target > available)
    fail(ErrorCode::InsufficientPrecision, "inverse to O(t^" + std::to_string(target) + ") needs input precision " +
                                               std::to_string(target + 2 * v) + ", have " +
                                               std::to_string(a.precision()));
  // α = t^v (a_0 + a_1 t + ...), β = t^{-v} (b_0 + b_1 t + ...), b_n = -(1/a_0) Σ_{k≥1} a_k b_{n-k}.
  const int count = target + v;
  std::vector<Rational> unit_part(static_cast<std::size_t>(std::max(count, 0)));
  for (int k = 0; k < count; ++k) unit_part[static_cast<std::size_t>(k)] = a.coeff(v + k);
  std::vector<Rational> inv(unit_part.size());
  std::map<int, Rational> terms;
  if (count > 0) {
    const Rational a0_inv = 1 / unit_part[0];
    inv[0] = a0_inv;
    for (int n = 1; n < count; ++n) {
      Rational acc = 0;
      for (int k = 1; k <= n; ++k)
        if (unit_part[static_cast<std::size_t>(k)] != 0)
          acc += unit_part[static_cast<std::size_t>(k)] * inv[static_cast<std::size_t>(n - k)];
      inv[static_cast<std::size_t>(n)] = -acc * a0_inv;
    }
    for (int n = 0; n < count; ++n)
      if (inv[static_cast<std::size_t>(n)] != 0) terms.emplace(n - v, inv[static_cast<std::size_t>(n)]);
  }
  return LaurentSeries(std::move(terms), target);
}

bool member_of(const LaurentSeries& a, const RelativeIdeal& e) {
  for (const auto& [exp, c] : a.terms())
    if (!e.contains(exp)) return false;
  if (a.precision() < e.conductor())
    fail(ErrorCode::InsufficientPrecision, "membership needs precision >= " + std::to_string(e.conductor()) +
                                               ", have " + std::to_string(a.precision()));
  return true;
}

namespace {

class SeriesParser {
 public:
  explicit SeriesParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  std::map<int, Rational> parse() {
    if (s_.empty()) error("empty series literal");
    std::map<int, Rational> terms;
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        error("expected '+' or '-'");
      }
      first = false;
      auto [exp, coeff] = term();
      if (negative) coeff = -coeff;
      terms[exp] += coeff;
    }
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
    return terms;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out += s_[pos_++];
    if (out.empty()) error("expected digits");
    return out;
  }

  int exponent() {
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
    }
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    const int value = std::stoi(digits());
    if (paren) {
      if (peek() != ')') error("expected ')'");
      ++pos_;
    }
    return negative ? -value : value;
  }

  int monomial() {
    if (peek() != 't') error("expected 't'");
    ++pos_;
    if (peek() != '^') return 1;
    ++pos_;
    return exponent();
  }

  std::pair<int, Rational> term() {
    if (peek() == 't') return {monomial(), Rational(1)};
    std::string lit = digits();
    if (peek() == '/') {
      ++pos_;
      lit += "/" + digits();
    }
    Rational c = parse_rational(lit);
    if (peek() == '*') {
      ++pos_;
      return {monomial(), c};
    }
    if (peek() == 't') return {monomial(), c};
    return {0, c};
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::map<int, Rational> parse_series_terms(std::string_view text) { return SeriesParser(text).parse(); }

LaurentSeries parse_series(std::string_view text, int precision) {
  return LaurentSeries(parse_series_terms(text), precision);
}

}  // namespace z2lab
