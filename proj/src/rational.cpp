#include "occ/rational.hpp"

#include "occ/error.hpp"

namespace occ {

std::string to_string(const Rational &value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string &part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
    throw Error(Errc::parse_error, "malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw Error(Errc::parse_error, "zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

// Polynomial extension top (top-1) ... (top-k+1) / k!.
Rational binomial(const Rational &top, unsigned k) {
  Rational acc = 1;
  for (unsigned i = 0; i < k; ++i) acc *= (top - i);
  return acc / factorial(k);
}

}  // namespace occ
