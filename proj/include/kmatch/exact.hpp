#ifndef KMATCH_EXACT_HPP
#define KMATCH_EXACT_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kmatch {

using ExactInt = mpz_class;

/// Canonical rational: denominator positive, numerator and denominator coprime.
class ExactRat {
public:
  ExactRat() = default;
  ExactRat(long v) : q_(v) {}
  ExactRat(const ExactInt& v) : q_(v) {}
  ExactRat(const ExactInt& num, const ExactInt& den);

  ExactInt num() const { return q_.get_num(); }
  ExactInt den() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return sgn(q_) == 0; }

  /// "num/den", or "num" when the value is integral.
  std::string to_string() const;
  /// Inverse of to_string; throws input_error on malformed text or zero denominator.
  static ExactRat parse(std::string_view text);

  ExactRat& operator+=(const ExactRat& o) { q_ += o.q_; return *this; }
  ExactRat& operator-=(const ExactRat& o) { q_ -= o.q_; return *this; }
  ExactRat& operator*=(const ExactRat& o) { q_ *= o.q_; return *this; }
  ExactRat& operator/=(const ExactRat& o);

  friend ExactRat operator+(ExactRat a, const ExactRat& b) { return a += b; }
  friend ExactRat operator-(ExactRat a, const ExactRat& b) { return a -= b; }
  friend ExactRat operator*(ExactRat a, const ExactRat& b) { return a *= b; }
  friend ExactRat operator/(ExactRat a, const ExactRat& b) { return a /= b; }
  friend ExactRat operator-(const ExactRat& a) { ExactRat r; r.q_ = -a.q_; return r; }

  friend bool operator==(const ExactRat& a, const ExactRat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const ExactRat& a, const ExactRat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const ExactRat& r);

ExactInt factorial(unsigned m);

/// s (s-1) ... (s-k+1); 1 when k == 0.
ExactInt falling_factorial(const ExactInt& s, unsigned k);

/// 1 / m! extended to negative m by the reciprocal-gamma convention (value 0).
ExactRat inverse_factorial(long m);

ExactInt pow(const ExactInt& base, unsigned e);

} // namespace kmatch

#endif // KMATCH_EXACT_HPP
