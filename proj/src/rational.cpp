#include "contractforge/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace contractforge {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_decimal_integer(num)) {
    throw std::invalid_argument("Rational: bad numerator in '" + std::string(text) + "'");
  }
  mpq_class v;
  if (slash == std::string_view::npos) {
    v = mpq_class(mpz_class(std::string(num), 10));
  } else {
    std::string_view den = text.substr(slash + 1);
    if (!is_decimal_integer(den) || den.front() == '-') {
      throw std::invalid_argument("Rational: bad denominator in '" + std::string(text) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
    v = mpq_class(mpz_class(std::string(num), 10), d);
    v.canonicalize();
  }
  return Rational(std::move(v));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace contractforge
