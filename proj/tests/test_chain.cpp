#include <random>
#include <vector>

#include "mvdual/chain.hpp"
#include "support.hpp"

using namespace mvdual;
using mvdual::test::q;

namespace {

ChainSize L(std::int64_t n) { return ChainSize::finite(n); }
const ChainSize Linf = ChainSize::infinite();

ChainValue v(std::int64_t p, std::int64_t d, ChainSize c) {
  return make_chain_value(q(p, d), c);
}

std::vector<ChainValue> elements(ChainSize c) {
  std::vector<ChainValue> out;
  for (std::int64_t k = 0; k < c.size(); ++k) out.push_back(v(k, c.size() - 1, c));
  return out;
}

}  // namespace

TEST_CASE("chain sizes") {
  CHECK(L(2).size() == 2);
  CHECK(Linf.is_infinite());
  CHECK(L(3) < L(4));
  CHECK(L(1000) < Linf);
  CHECK_ERROR(ChainSize::finite(1), ErrorKind::invalid_chain_size);
  CHECK_ERROR(ChainSize::finite(0), ErrorKind::invalid_chain_size);
}

TEST_CASE("make_chain_value") {
  CHECK(v(1, 2, L(3)).value() == q(1, 2));
  CHECK_ERROR(v(1, 3, L(3)), ErrorKind::not_in_chain);
  CHECK(v(5, 7, Linf).value() == q(5, 7));
  CHECK(v(2, 4, L(5)).value() == q(1, 2));
  CHECK_ERROR(v(3, 2, Linf), ErrorKind::out_of_range);
  CHECK_ERROR(v(-1, 2, Linf), ErrorKind::out_of_range);
  CHECK(chain_contains(L(7), q(1, 3)));
  CHECK_FALSE(chain_contains(L(7), q(1, 4)));
}

TEST_CASE("mv operations on chains") {
  CHECK(oplus(v(1, 2, L(3)), v(1, 2, L(3))).is_one());
  CHECK(neg(v(1, 4, L(5))).value() == q(3, 4));
  CHECK(odot(v(2, 3, L(4)), v(2, 3, L(4))).value() == q(1, 3));
  CHECK(meet(v(1, 3, L(4)), v(2, 3, L(4))).value() == q(1, 3));
  CHECK(join(v(1, 3, L(4)), v(2, 3, L(4))).value() == q(2, 3));
  CHECK(mv_op(MvOp::neg, v(1, 2, Linf)).value() == q(1, 2));
  CHECK_ERROR(oplus(v(1, 2, L(3)), v(1, 2, L(5))), ErrorKind::chain_mismatch);
  CHECK_THROWS_AS(mv_op(MvOp::oplus, v(1, 2, L(3))), std::invalid_argument);
}

TEST_CASE("nat_mult") {
  CHECK(nat_mult(3, v(1, 3, L(4))).is_one());
  const ChainValue a = v(1, 2, L(3));
  CHECK(nat_mult(1, a) == a);
  CHECK(nat_mult(2, v(1, 5, Linf)).value() == q(2, 5));
  CHECK(nat_mult(1'000'000'000'000, v(1, 1'000'003, Linf)).is_one());
  CHECK(nat_mult(7, chain_zero(Linf)).is_zero());
  CHECK_ERROR(nat_mult(0, a), ErrorKind::out_of_range);
}

TEST_CASE("chain_subset") {
  CHECK(chain_subset(L(3), L(5)));
  CHECK_FALSE(chain_subset(L(3), L(4)));
  CHECK(chain_subset(L(7), Linf));
  CHECK(chain_subset(L(2), L(9)));
  CHECK_FALSE(chain_subset(Linf, L(9)));
  CHECK(chain_subset(Linf, Linf));
}

TEST_CASE("chain_subset agrees with element containment") {
  for (std::int64_t n = 2; n <= 13; ++n) {
    for (std::int64_t m = 2; m <= 13; ++m) {
      bool contained = true;
      for (const ChainValue& a : elements(L(n))) contained = contained && chain_contains(L(m), a.value());
      CHECK(chain_subset(L(n), L(m)) == contained);
    }
  }
}

TEST_CASE("MV axioms hold exhaustively on small chains") {
  for (std::int64_t n = 2; n <= 6; ++n) {
    const auto xs = elements(L(n));
    const ChainValue zero = chain_zero(L(n));
    for (const auto& a : xs) {
      CHECK(neg(neg(a)) == a);
      CHECK(oplus(a, zero) == a);
      CHECK(oplus(a, neg(zero)).is_one());
      for (const auto& b : xs) {
        CHECK(oplus(a, b) == oplus(b, a));
        CHECK(oplus(neg(oplus(neg(a), b)), b) == oplus(neg(oplus(neg(b), a)), a));
        CHECK(odot(a, b) == neg(oplus(neg(a), neg(b))));
        CHECK(meet(a, join(a, b)) == a);
        for (const auto& c : xs) CHECK(oplus(a, oplus(b, c)) == oplus(oplus(a, b), c));
      }
    }
  }
}

TEST_CASE("MV axioms on random L_inf values") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::int64_t> den(1, 40);
  auto draw = [&] {
    const std::int64_t d = den(rng);
    return v(std::uniform_int_distribution<std::int64_t>(0, d)(rng), d, Linf);
  };
  for (int i = 0; i < 300; ++i) {
    const ChainValue a = draw(), b = draw();
    CHECK(oplus(a, b) == oplus(b, a));
    CHECK(oplus(neg(oplus(neg(a), b)), b) == oplus(neg(oplus(neg(b), a)), a));
    CHECK(join(a, b) == oplus(odot(a, neg(b)), b));
  }
}

TEST_CASE("text conversions") {
  CHECK(to_string(q(2, 4)) == "1/2");
  CHECK(to_string(q(0)) == "0");
  CHECK(to_string(q(1)) == "1");
  CHECK(to_string(L(3)) == "L3");
  CHECK(to_string(Linf) == "Linf");
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational("1") == q(1));
  CHECK_ERROR(parse_rational("1/0"), ErrorKind::syntax_error);
  CHECK_ERROR(parse_rational("x"), ErrorKind::syntax_error);
  CHECK_ERROR(parse_rational("1/"), ErrorKind::syntax_error);
  CHECK(parse_chain_size("L5") == L(5));
  CHECK(parse_chain_size("Linf") == Linf);
  CHECK_ERROR(parse_chain_size("L1"), ErrorKind::invalid_chain_size);
  CHECK_ERROR(parse_chain_size("M3"), ErrorKind::syntax_error);
}
