#include "kmatch/exact.hpp"

#include "kmatch/error.hpp"

#include <ostream>

namespace kmatch {

ExactRat::ExactRat(const ExactInt& num, const ExactInt& den) : q_(num, den) {
  if (den == 0)
    throw input_error("ExactRat: zero denominator");
  q_.canonicalize();
}

ExactRat& ExactRat::operator/=(const ExactRat& o) {
  if (o.is_zero())
    throw input_error("ExactRat: division by zero");
  q_ /= o.q_;
  return *this;
}

std::string ExactRat::to_string() const { return q_.get_str(10); }

ExactRat ExactRat::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size())
      throw input_error("malformed rational '" + std::string(text) + "'");
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw input_error("malformed rational '" + std::string(text) + "'");
    return ExactInt(std::string(s[0] == '+' ? s.substr(1) : s), 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return ExactRat(parse_int(text));
  return ExactRat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const ExactRat& r) { return os << r.to_string(); }

ExactInt factorial(unsigned m) {
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), m);
  return r;
}

ExactInt falling_factorial(const ExactInt& s, unsigned k) {
  ExactInt r = 1;
  for (unsigned i = 0; i < k; ++i)
    r *= s - i;
  return r;
}

ExactRat inverse_factorial(long m) {
  if (m < 0)
    return ExactRat(0);
  return ExactRat(ExactInt(1), factorial(static_cast<unsigned>(m)));
}

ExactInt pow(const ExactInt& base, unsigned e) {
  ExactInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

} // namespace kmatch
