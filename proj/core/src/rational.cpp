#include <lts/rational.hpp>

#include <cctype>

namespace lts {

Rational rational_from_string(const std::string& text) {
  // Accepted shapes: [+-]digits and [+-]digits/digits (no spaces).
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto bad = [&]() -> Rational {
    throw InvalidInputError("not a rational literal: \"" + text + "\"");
  };
  if (n == 0) return bad();
  if (text[i] == '+' || text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) return bad();
  if (i < n) {
    if (text[i] != '/') return bad();
    ++i;
    std::size_t den_start = i;
    std::size_t den_digits = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++den_digits;
    }
    if (den_digits == 0 || i != n) return bad();
    // All-zero denominator is division by zero.
    bool all_zero = true;
    for (std::size_t d = den_start; d < den_start + den_digits; ++d) {
      if (text[d] != '0') {
        all_zero = false;
        break;
      }
    }
    if (all_zero) {
      throw InvalidInputError("zero denominator in rational literal: \"" +
                              text + "\"");
    }
  }
  Rational r;
  // The shape is validated, so GMP's parser cannot fail here (it does not
  // accept a leading '+', which is stripped).
  const std::string cleaned = (text[0] == '+') ? text.substr(1) : text;
  if (r.set_str(cleaned, 10) != 0) return bad();
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  s += ")";
  return s;
}

}  // namespace lts
