#include "doctest.h"

#include "kmatch/error.hpp"
#include "kmatch/exact.hpp"
#include "support/fit.hpp"

using namespace kmatch;

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  // 20! by iterated multiplication in unsigned 64-bit.
  unsigned long long acc = 1;
  for (unsigned i = 2; i <= 20; ++i)
    acc *= i;
  CHECK(acc == 2432902008176640000ULL);
  CHECK(factorial(20) == ExactInt("2432902008176640000"));
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(3, 2) == 6);
  CHECK(falling_factorial(2, 3) == 0);
  CHECK(falling_factorial(5, 0) == 1);
  CHECK(falling_factorial(-2, 2) == 6);
  for (unsigned m = 0; m <= 12; ++m)
    CHECK(factorial(m) == falling_factorial(ExactInt(m), m));
}

TEST_CASE("rational canonical form") {
  ExactRat r(ExactInt(6), ExactInt(4));
  CHECK(r.num() == 3);
  CHECK(r.den() == 2);
  CHECK_FALSE(r.is_integer());
  ExactRat neg(ExactInt(3), ExactInt(-6));
  CHECK(neg.num() == -1);
  CHECK(neg.den() == 2);
  CHECK(ExactRat(ExactInt(8), ExactInt(4)).is_integer());
  CHECK_THROWS_AS(ExactRat(ExactInt(1), ExactInt(0)), input_error);
  CHECK_THROWS_AS(ExactRat(1) / ExactRat(0), input_error);
}

TEST_CASE("rational serialization") {
  CHECK(ExactRat(ExactInt(-3), ExactInt(9)).to_string() == "-1/3");
  CHECK(ExactRat(7).to_string() == "7");
  CHECK(ExactRat::parse("-10/4") == ExactRat(ExactInt(-5), ExactInt(2)));
  CHECK(ExactRat::parse("42").is_integer());
  CHECK_THROWS_AS(ExactRat::parse("1/0"), input_error);
  CHECK_THROWS_AS(ExactRat::parse("x"), input_error);
  CHECK_THROWS_AS(ExactRat::parse("3/"), input_error);
}

TEST_CASE("rational arithmetic against machine integers") {
  testing::Lcg rng(11);
  for (int t = 0; t < 500; ++t) {
    long a = rng.in_range(-50, 50), b = rng.in_range(1, 50);
    long c = rng.in_range(-50, 50), d = rng.in_range(1, 50);
    ExactRat x{ExactInt(a), ExactInt(b)}, y{ExactInt(c), ExactInt(d)};
    CHECK(x + y == ExactRat(ExactInt(a * d + c * b), ExactInt(b * d)));
    CHECK(x * y == ExactRat(ExactInt(a * c), ExactInt(b * d)));
    CHECK(x - y == ExactRat(ExactInt(a * d - c * b), ExactInt(b * d)));
    if (a != 0) {
      ExactRat inv{ExactInt(b), ExactInt(a)};
      CHECK(x * inv == ExactRat(1));
    }
    CHECK(ExactRat::parse((x + y).to_string()) == x + y);
  }
}

TEST_CASE("inverse factorial vanishes at negative arguments") {
  CHECK(inverse_factorial(-1).is_zero());
  CHECK(inverse_factorial(3) == ExactRat(ExactInt(1), ExactInt(6)));
}
