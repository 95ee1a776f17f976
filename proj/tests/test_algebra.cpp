#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "mvdual/algebra.hpp"
#include "support.hpp"

using namespace mvdual;
using mvdual::test::q;

namespace {

ChainSize L(std::int64_t n) { return ChainSize::finite(n); }
const ChainSize Linf = ChainSize::infinite();

ProductAlgebra l2l3() { return make_algebra({{"a", L(2)}, {"b", L(3)}}); }
ProductAlgebra l3l2() { return make_algebra({{"a", L(3)}, {"b", L(2)}}); }

std::int64_t brute_rank(const Element& a) {
  for (std::int64_t n = 1;; ++n) {
    if (nat_mult(n, a) == nat_mult(n + 1, a)) return n;
  }
}

}  // namespace

TEST_CASE("make_algebra") {
  const ProductAlgebra a = l2l3();
  CHECK(a.dimension() == 2);
  CHECK(a.label(1) == "b");
  CHECK(a.chain(1) == L(3));
  CHECK(a.cardinality() == 6u);
  CHECK(a.position_of("b") == 1);
  CHECK_FALSE(a.position("z"));
  CHECK_ERROR(a.position_of("z"), ErrorKind::unknown_label);
  CHECK_ERROR(make_algebra({{"a", ChainSize::finite(1)}}), ErrorKind::invalid_chain_size);
  CHECK_ERROR(make_algebra({{"a", L(2)}, {"a", L(3)}}), ErrorKind::duplicate_label);
  const ProductAlgebra trivial = make_algebra(std::vector<Factor>{});
  CHECK(trivial.empty());
  CHECK(trivial.cardinality() == 1u);
  CHECK(trivial == ProductAlgebra{});
  CHECK(make_algebra({{"a", Linf}}).cardinality() == std::nullopt);
  CHECK(l2l3() == l2l3());
  CHECK_FALSE(l2l3() == l3l2());
}

TEST_CASE("make_element validates coordinates") {
  const ProductAlgebra a = l3l2();
  CHECK(make_element(a, {q(1, 2), q(0)}).at("a").value() == q(1, 2));
  CHECK_ERROR(make_element(a, {q(1, 3), q(0)}), ErrorKind::not_in_chain);
  CHECK_ERROR(make_element(a, {q(1, 2)}), ErrorKind::algebra_mismatch);
  CHECK_ERROR(make_element(a, {q(2), q(0)}), ErrorKind::out_of_range);
  CHECK(zero(a) == make_element(a, {q(0), q(0)}));
  CHECK(unit(a) == make_element(a, {q(1), q(1)}));
}

TEST_CASE("pointwise operations") {
  const ProductAlgebra a = l3l2();
  const Element f = make_element(a, {q(1, 2), q(0)});
  const Element g = make_element(a, {q(1, 2), q(1)});
  CHECK(oplus(f, g) == unit(a));
  CHECK(neg(make_element(a, {q(0), q(1)})) == make_element(a, {q(1), q(0)}));
  CHECK(meet(make_element(a, {q(1, 2), q(1)}), make_element(a, {q(1), q(0)})) ==
        make_element(a, {q(1, 2), q(0)}));
  CHECK(join(f, g) == g);
  CHECK(odot(g, g) == make_element(a, {q(0), q(1)}));
  CHECK(nat_mult(2, f) == make_element(a, {q(1), q(0)}));
  CHECK_ERROR(oplus(f, zero(l2l3())), ErrorKind::algebra_mismatch);
}

TEST_CASE("leq_elem") {
  const ProductAlgebra a = l3l2();
  for (const Element& f : enumerate_elements(a)) CHECK(leq_elem(zero(a), f));
  CHECK(leq_elem(make_element(a, {q(1, 2), q(0)}), make_element(a, {q(1), q(1)})));
  CHECK_FALSE(leq_elem(make_element(a, {q(1), q(0)}), make_element(a, {q(0), q(1)})));
  CHECK_ERROR(leq_elem(zero(a), zero(l2l3())), ErrorKind::algebra_mismatch);
}

TEST_CASE("characteristic and support") {
  const ProductAlgebra a = l2l3();
  const std::vector<std::string> b{"b"};
  CHECK(characteristic(a, b) == make_element(a, {q(0), q(1)}));
  CHECK(characteristic(a, std::vector<std::string>{}) == zero(a));
  CHECK(characteristic(a, std::vector<std::string>{"a", "b"}) == unit(a));
  CHECK_ERROR(characteristic(a, std::vector<std::string>{"z"}), ErrorKind::unknown_label);
  CHECK(support(make_element(a, {q(0), q(1, 2)})) == std::vector<bool>{false, true});
}

TEST_CASE("enumerate_elements") {
  CHECK(enumerate_elements(make_algebra({{"a", L(2)}})).size() == 2);
  const auto all = enumerate_elements(l2l3());
  CHECK(all.size() == 6);
  CHECK(all.front() == zero(l2l3()));
  CHECK(all.back() == unit(l2l3()));
  CHECK(all[1] == make_element(l2l3(), {q(0), q(1, 2)}));
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(element_index(all[i]) == i);
  CHECK(enumerate_elements(ProductAlgebra{}).size() == 1);
  CHECK_ERROR(enumerate_elements(make_algebra({{"a", Linf}})), ErrorKind::infinite_chain_present);
  OracleConfig tight;
  tight.element_bound = 5;
  CHECK_ERROR(enumerate_elements(l2l3(), tight), ErrorKind::bound_exceeded);
}

TEST_CASE("sampling is seeded and stays in the algebra") {
  const ProductAlgebra a = make_algebra({{"a", Linf}, {"b", L(4)}});
  std::mt19937_64 r1(5), r2(5);
  for (int i = 0; i < 50; ++i) {
    const Element f = sample_element(a, r1, 9);
    CHECK(f == sample_element(a, r2, 9));
    CHECK(f[0].value().denominator() <= 9);
    CHECK(chain_contains(L(4), f[1].value()));
  }
  int visits = 0;
  OracleConfig config;
  config.samples = 17;
  for_each_checked_element(a, [&](const Element&) { ++visits; }, config);
  CHECK(visits == 17);
  CHECK_FALSE(is_enumerable(a));
  CHECK(is_enumerable(l2l3()));
}

TEST_CASE("boolean center") {
  const ProductAlgebra a = l3l2();
  CHECK(boolean_center_contains(make_element(a, {q(0), q(1)})));
  CHECK_FALSE(boolean_center_contains(make_element(a, {q(1, 2), q(1)})));
  CHECK(boolean_center_contains(zero(a)));
  for (const Element& f : enumerate_elements(a)) {
    CHECK(boolean_center_contains(f) == (oplus(f, f) == f));
  }
}

TEST_CASE("principal_ideal matches the generated ideal") {
  const ProductAlgebra a = l3l2();
  const Element gen = make_element(a, {q(1, 2), q(0)});
  const SupportIdeal ideal = principal_ideal(gen);
  CHECK(ideal.free() == std::vector<bool>{true, false});
  for (const Element& f : enumerate_elements(a)) {
    bool below = false;
    for (std::int64_t n = 1; n <= 6; ++n) below = below || leq_elem(f, nat_mult(n, gen));
    CHECK(ideal_membership(f, ideal) == below);
  }
  CHECK(principal_ideal(zero(a)).free_count() == 0);
  CHECK(principal_ideal(unit(a)).free_count() == 2);
}

TEST_CASE("ideal membership and suprema") {
  const ProductAlgebra a = l2l3();
  const SupportIdeal ma = maximal_ideals(a).at(0);
  CHECK(ma.free_labels() == std::vector<std::string>{"b"});
  CHECK(ideal_membership(make_element(a, {q(0), q(1, 2)}), ma));
  CHECK_FALSE(ideal_membership(make_element(a, {q(1), q(0)}), ma));
  const SupportIdeal none = support_ideal(a, std::vector<std::string>{});
  CHECK(ideal_membership(zero(a), none));
  CHECK(ideal_sup(ma) == make_element(a, {q(0), q(1)}));
  CHECK(ideal_sup(none) == zero(a));
  CHECK(ideal_sup(direct_sum_ideal(a)) == unit(a));
  CHECK_ERROR(support_ideal(a, std::vector<std::string>{"z"}), ErrorKind::unknown_label);
}

TEST_CASE("maximal ideals") {
  CHECK(maximal_ideals(l2l3()).size() == 2);
  const auto simple = maximal_ideals(make_algebra({{"a", L(5)}}));
  REQUIRE(simple.size() == 1);
  CHECK(simple[0].free_count() == 0);
  CHECK(maximal_ideals(ProductAlgebra{}).empty());
}

TEST_CASE("maximal ideals are the maximal proper ideals found by the oracle") {
  const ProductAlgebra a = l2l3();
  const auto ideals = brute_force_ideals(a);
  const std::size_t size = *a.cardinality();
  std::vector<ElementSet> maximal;
  for (const ElementSet& i : ideals) {
    if (std::count(i.begin(), i.end(), true) == static_cast<long>(size)) continue;
    bool is_max = true;
    for (const ElementSet& j : ideals) {
      if (j == i || std::count(j.begin(), j.end(), true) == static_cast<long>(size)) continue;
      bool contains = true;
      for (std::size_t k = 0; k < size; ++k) contains = contains && (!i[k] || j[k]);
      if (contains) is_max = false;
    }
    if (is_max) maximal.push_back(i);
  }
  std::vector<ElementSet> expected;
  for (const SupportIdeal& m : maximal_ideals(a)) expected.push_back(element_set(m));
  std::sort(maximal.begin(), maximal.end());
  std::sort(expected.begin(), expected.end());
  CHECK(maximal == expected);
}

TEST_CASE("principality report") {
  const ProductAlgebra a = l2l3();
  const PrincipalityReport mb = principality_report(maximal_ideals(a).at(1));
  CHECK(mb.principal);
  CHECK(mb.unique_point);
  CHECK(mb.excludes_direct_sum);
  CHECK(mb.sup_in_center);
  CHECK(mb.agree());
  CHECK(mb.generator == make_element(a, {q(1), q(0)}));
  CHECK(mb.point == "b");

  const ProductAlgebra l2 = make_algebra({{"x", L(2)}});
  const PrincipalityReport zero_ideal = principality_report(maximal_ideals(l2).at(0));
  CHECK(zero_ideal.agree());
  CHECK(zero_ideal.principal);

  CHECK_ERROR(principality_report(support_ideal(a, std::vector<std::string>{})),
              ErrorKind::not_maximal);
}

TEST_CASE("quotients and the finite/infinite split") {
  const ProductAlgebra a = make_algebra({{"a", L(4)}, {"b", L(2)}});
  CHECK(quotient_by_maximal(a, "a") == L(4));
  CHECK(quotient_by_maximal(make_algebra({{"x", Linf}}), "x") == Linf);
  CHECK_ERROR(quotient_by_maximal(a, "z"), ErrorKind::unknown_label);

  const auto [fin, inf] = split_fin_inf(make_algebra({{"a", L(2)}, {"b", Linf}, {"c", L(3)}}));
  CHECK(fin == make_algebra({{"a", L(2)}, {"c", L(3)}}));
  CHECK(inf == make_algebra({{"b", Linf}}));
  CHECK(split_fin_inf(a).first == a);
  CHECK(split_fin_inf(a).second.empty());
  const ProductAlgebra infs = make_algebra({{"a", Linf}, {"b", Linf}});
  CHECK(split_fin_inf(infs).first.empty());
  CHECK(split_fin_inf(infs).second == infs);
}

TEST_CASE("archimedean_rank") {
  const ProductAlgebra l4 = make_algebra({{"a", L(4)}});
  CHECK(archimedean_rank(zero(l4)) == 1);
  CHECK(archimedean_rank(make_element(l4, {q(1, 3)})) == 3);
  const ProductAlgebra a = make_algebra({{"a", L(3)}, {"b", L(5)}});
  CHECK(archimedean_rank(make_element(a, {q(1, 2), q(1, 4)})) == 4);
  for (const Element& f : enumerate_elements(make_algebra({{"a", L(5)}, {"b", L(7)}}))) {
    CHECK(archimedean_rank(f) == brute_rank(f));
  }
  std::mt19937_64 rng(3);
  const ProductAlgebra inf = make_algebra({{"a", Linf}, {"b", Linf}});
  for (int i = 0; i < 100; ++i) {
    const Element f = sample_element(inf, rng, 12);
    CHECK(archimedean_rank(f) == brute_rank(f));
  }
}

TEST_CASE("brute_force_ideals") {
  CHECK(brute_force_ideals(make_algebra({{"a", L(3)}})).size() == 2);
  const ProductAlgebra a = l2l3();
  auto found = brute_force_ideals(a);
  CHECK(found.size() == 4);
  std::vector<ElementSet> expected;
  for (bool x : {false, true}) {
    for (bool y : {false, true}) expected.push_back(element_set(SupportIdeal(a, {x, y})));
  }
  std::sort(found.begin(), found.end());
  std::sort(expected.begin(), expected.end());
  CHECK(found == expected);
  CHECK_ERROR(brute_force_ideals(make_algebra({{"a", Linf}})), ErrorKind::infinite_chain_present);
  CHECK_ERROR(brute_force_ideals(make_algebra({{"a", L(5)}, {"b", L(5)}})), ErrorKind::too_large);
}

TEST_CASE("brute_force_homs") {
  const ProductAlgebra l2 = make_algebra({{"y", L(2)}});
  const ProductAlgebra l3 = make_algebra({{"y", L(3)}});
  CHECK(brute_force_homs(make_algebra({{"a", L(2)}, {"b", L(2)}}), l2).size() == 2);
  CHECK(brute_force_homs(l3l2(), l3).size() == 2);
  CHECK(brute_force_homs(l3, l2).empty());
  OracleConfig tight;
  tight.hom_bound = 100;
  CHECK_ERROR(brute_force_homs(l3l2(), l3, tight), ErrorKind::too_large);
}

TEST_CASE("brute_force_homs tables are homomorphisms") {
  const ProductAlgebra a = l3l2();
  const ProductAlgebra b = make_algebra({{"u", L(3)}, {"v", L(2)}});
  const auto xs = enumerate_elements(a);
  const auto ys = enumerate_elements(b);
  const auto homs = brute_force_homs(a, b);
  CHECK_FALSE(homs.empty());
  for (const ElementMap& h : homs) {
    CHECK(ys[h[element_index(zero(a))]] == zero(b));
    for (const Element& f : xs) {
      CHECK(ys[h[element_index(neg(f))]] == neg(ys[h[element_index(f)]]));
      for (const Element& g : xs) {
        CHECK(ys[h[element_index(oplus(f, g))]] ==
              oplus(ys[h[element_index(f)]], ys[h[element_index(g)]]));
      }
    }
  }
}
