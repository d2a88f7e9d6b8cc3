#include "polylcm/parse.hpp"

#include <cctype>
#include <sstream>

namespace polylcm {

namespace {

using Coeffs = std::vector<mpz_class>;  // ascending, possibly empty (zero)

void trim_zeros(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim_zeros(out);
  return out;
}

Coeffs negate(Coeffs a) {
  for (auto& c : a) c = -c;
  return a;
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim_zeros(out);
  return out;
}

Coeffs pow(Coeffs base, u64 e) {
  Coeffs out{1};
  while (e) {
    if (e & 1) out = mul(out, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return out;
}

struct Parser {
  const std::string& text;
  size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "syntax error at byte " << pos << ": " << what;
    throw std::invalid_argument(os.str());
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }

  Coeffs parse_expr() {
    skip_ws();
    bool negative = false;
    if (eat('-'))
      negative = true;
    else
      eat('+');
    Coeffs acc = parse_term();
    if (negative) acc = negate(std::move(acc));
    for (;;) {
      if (eat('+'))
        acc = add(acc, parse_term());
      else if (eat('-'))
        acc = add(acc, negate(parse_term()));
      else
        return acc;
    }
  }

  Coeffs parse_term() {
    Coeffs acc = parse_factor();
    while (eat('*')) acc = mul(acc, parse_factor());
    return acc;
  }

  Coeffs parse_factor() {
    Coeffs base = parse_base();
    if (eat('^')) {
      const u64 e = parse_natural();
      return pow(std::move(base), e);
    }
    return base;
  }

  Coeffs parse_base() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      Coeffs inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x' || c == 'X') {
      ++pos;
      return Coeffs{0, 1};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const size_t start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      return Coeffs{mpz_class(text.substr(start, pos - start))};
    }
    fail("expected integer, 'x' or '('");
  }

  u64 parse_natural() {
    skip_ws();
    if (pos >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a natural-number exponent");
    u64 value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<u64>(text[pos] - '0');
      if (value > 1'000'000) fail("exponent too large");
      ++pos;
    }
    return value;
  }
};

std::string normalize_minus(const std::string& text) {
  // accept U+2212 as '-'
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

Polynomial parse_comma_form(const std::string& text) {
  Coeffs coeffs;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i != text.size() && text[i] != ',') continue;
    std::string token = text.substr(start, i - start);
    const size_t first = token.find_first_not_of(" \t");
    const size_t last = token.find_last_not_of(" \t");
    if (first == std::string::npos)
      throw std::invalid_argument("syntax error at byte " +
                                  std::to_string(start) +
                                  ": empty coefficient");
    token = token.substr(first, last - first + 1);
    try {
      coeffs.emplace_back(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("syntax error at byte " +
                                  std::to_string(start) +
                                  ": not an integer coefficient: '" + token +
                                  "'");
    }
    start = i + 1;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial parse_polynomial(const std::string& raw) {
  const std::string text = normalize_minus(raw);
  if (text.find(',') != std::string::npos) return parse_comma_form(text);

  Parser parser(text);
  Coeffs coeffs = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.fail("unexpected trailing input");
  if (coeffs.size() < 2)
    throw std::invalid_argument(
        "parsed polynomial is constant; degree must be >= 1");
  return Polynomial(std::move(coeffs));
}

}  // namespace polylcm
