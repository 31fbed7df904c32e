#include "icl/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace icl {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    mpz_class den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal_string(const Rational& value, int places) {
  mpz_class scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  mpz_class num = abs(value.get_num()) * scale * 2 + value.get_den();
  mpz_class den = value.get_den() * 2;
  mpz_class scaled = num / den;  // floor(|v|*scale + 1/2)
  std::string digits = scaled.get_str();
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, static_cast<std::size_t>(places + 1 - static_cast<int>(digits.size())), '0');
  std::string out = value < 0 && scaled != 0 ? "-" : "";
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) out += "." + digits.substr(digits.size() - static_cast<std::size_t>(places));
  return out;
}

std::string describe(const Rational& value) {
  return to_fraction_string(value) + " (" + to_decimal_string(value) + ")";
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace icl
