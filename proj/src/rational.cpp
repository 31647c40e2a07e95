#include "oprg/rational.hpp"

#include "oprg/errors.hpp"

namespace oprg {

std::string render_rational(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  const std::string den_part =
      slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto check_digits = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t start = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!check_digits(num_part, true) || !check_digits(den_part, false))
    throw ParseError("bad rational: '" + text + "'");
  mpz_class num(num_part), den(den_part);
  if (den == 0) throw ParseError("zero denominator: '" + text + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  return make_rational(num(rng), den(rng));
}

}  // namespace oprg
