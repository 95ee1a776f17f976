#include <cstdint>
#include <limits>
#include <random>
#include <sstream>

#include "mvdual/rational.hpp"
#include "support.hpp"

using mvdual::Rational;
using mvdual::test::q;

TEST_CASE("rational normalizes sign and common factors") {
  CHECK(q(2, 4) == q(1, 2));
  CHECK(q(3, -6) == q(-1, 2));
  CHECK(q(-3, -6).numerator() == 1);
  CHECK(q(-3, -6).denominator() == 2);
  CHECK(q(0, 5) == Rational{0});
  CHECK(q(0, 5).denominator() == 1);
  CHECK_THROWS_AS(q(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(q(1, 2) - q(1, 3) == q(1, 6));
  CHECK(q(2, 3) * q(3, 4) == q(1, 2));
  CHECK(q(2, 3) / q(4, 3) == q(1, 2));
  CHECK(-q(1, 2) == q(-1, 2));
  CHECK(q(1, 3) < q(1, 2));
  CHECK(q(1, 2) <= q(2, 4));
  CHECK(q(3, 4) > q(2, 3));
  CHECK(q(1, 2) != q(1, 3));
  CHECK_THROWS_AS(q(1, 2) / Rational{0}, std::domain_error);
}

TEST_CASE("rational comparison with integers") {
  CHECK(q(2, 2) == 1);
  CHECK(1 == q(2, 2));
  CHECK(q(0, 3) == 0);
  CHECK(q(1, 2) != 1);
  CHECK(q(1, 2) < 1);
  CHECK(0 < q(1, 2));
}

TEST_CASE("rational overflow is reported") {
  const Rational big{std::numeric_limits<std::int64_t>::max()};
  CHECK_THROWS_AS(big + Rational{1}, std::overflow_error);
  CHECK_THROWS_AS(big * Rational{2}, std::overflow_error);
  CHECK(big * q(1, 2) + big * q(1, 2) == big);
}

TEST_CASE("rational printing") {
  std::ostringstream os;
  os << q(3, 6) << ' ' << q(4, 2) << ' ' << q(-1, 3);
  CHECK(os.str() == "1/2 2 -1/3");
}

TEST_CASE("rational field laws on random values") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-50, 50), den(1, 50);
  for (int i = 0; i < 500; ++i) {
    const Rational a{num(rng), den(rng)}, b{num(rng), den(rng)}, c{num(rng), den(rng)};
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    if (b != 0) CHECK((a / b) * b == a);
    CHECK(((a < b) + (a == b) + (a > b)) == 1);
  }
}
