#include "mvdual/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "mvdual/algebra.hpp"
#include "mvdual/chain.hpp"
#include "mvdual/dsl.hpp"
#include "mvdual/duality.hpp"
#include "mvdual/error.hpp"
#include "mvdual/multiset.hpp"
#include "mvdual/structure.hpp"

namespace mvdual {

namespace {

struct Checker {
  std::uint64_t checks = 0;
  bool ok = true;
  std::string first_failure;

  template <class Describe>
  void operator()(bool condition, Describe&& describe) {
    ++checks;
    if (!condition && ok) {
      ok = false;
      first_failure = describe();
    }
  }

  // Runs `body`, recording any escaping library error as a failure.
  template <class Body, class Describe>
  void guard(Body&& body, Describe&& describe) {
    try {
      body();
    } catch (const std::exception& e) {
      (*this)(false, [&] { return describe() + ": " + e.what(); });
    }
  }
};

ChainSize L(std::int64_t n) { return ChainSize::finite(n); }
const ChainSize Linf = ChainSize::infinite();

// Products of 1..max_factors chains drawn with repetition from `chains`, in
// non-decreasing order so each isomorphism class appears once.
std::vector<ProductAlgebra> algebra_family(const std::vector<ChainSize>& chains,
                                           std::size_t max_factors,
                                           std::uint64_t max_size = UINT64_MAX) {
  std::vector<ProductAlgebra> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (!pick.empty()) {
      std::vector<Factor> factors;
      for (std::size_t i = 0; i < pick.size(); ++i) {
        factors.push_back({"x" + std::to_string(i + 1), chains[pick[i]]});
      }
      ProductAlgebra a = make_algebra(std::move(factors));
      auto size = a.cardinality();
      if (size && *size > max_size) return;
      out.push_back(std::move(a));
    }
    if (pick.size() == max_factors) return;
    for (std::size_t c = from; c < chains.size(); ++c) {
      pick.push_back(c);
      grow(c);
      pick.pop_back();
    }
  };
  grow(0);
  return out;
}

// Multisets with 0..max_points points, multiplicities non-decreasing.
std::vector<EMultiset> multiset_family(const std::vector<Multiplicity>& mults,
                                       std::size_t max_points) {
  std::vector<EMultiset> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    std::vector<Point> points;
    for (std::size_t i = 0; i < pick.size(); ++i) {
      points.push_back({"p" + std::to_string(i + 1), mults[pick[i]]});
    }
    out.push_back(make_multiset(std::move(points)));
    if (pick.size() == max_points) return;
    for (std::size_t m = from; m < mults.size(); ++m) {
      pick.push_back(m);
      grow(m);
      pick.pop_back();
    }
  };
  grow(0);
  return out;
}

std::vector<Multiplicity> duality_multiplicities() {
  return {Multiplicity::finite(1), Multiplicity::finite(2), Multiplicity::finite(3),
          Multiplicity::finite(4), Multiplicity::finite(6), Multiplicity::infinite()};
}

std::vector<ChainValue> chain_elements(ChainSize c) {
  std::vector<ChainValue> out;
  for (std::int64_t k = 0; k < c.size(); ++k) {
    out.push_back(make_chain_value(Rational{k, c.size() - 1}, c));
  }
  return out;
}

template <class T>
void check_mv_laws(Checker& check, const T& a, const T& b, const T& c, const T& zero_v,
                   const T& one_v, const std::string& where) {
  auto at = [&](const char* law) { return std::string(law) + " fails in " + where; };
  check(oplus(a, b) == oplus(b, a), [&] { return at("commutativity of (+)"); });
  check(oplus(oplus(a, b), c) == oplus(a, oplus(b, c)), [&] { return at("associativity of (+)"); });
  check(oplus(a, zero_v) == a, [&] { return at("a (+) 0 = a"); });
  check(oplus(a, one_v) == one_v, [&] { return at("a (+) 1 = 1"); });
  check(neg(neg(a)) == a, [&] { return at("involution"); });
  check(neg(zero_v) == one_v, [&] { return at("~0 = 1"); });
  check(oplus(neg(oplus(neg(a), b)), b) == oplus(neg(oplus(neg(b), a)), a),
        [&] { return at("MV axiom"); });
  check(odot(a, b) == neg(oplus(neg(a), neg(b))), [&] { return at("odot definition"); });
  check(meet(a, join(a, b)) == a, [&] { return at("absorption /\\ over \\/"); });
  check(join(a, meet(a, b)) == a, [&] { return at("absorption \\/ over /\\"); });
  check(meet(a, b) == meet(b, a) && join(a, b) == join(b, a),
        [&] { return at("lattice commutativity"); });
}

// 1. MV axioms on chains and small products.
SuiteResult suite_mv_axioms(const SelftestOptions& opt) {
  Checker check;
  const std::int64_t max_n = opt.scale == Scale::full ? 12 : 7;
  const std::size_t pairs = opt.scale == Scale::full ? 10000 : 1000;

  for (std::int64_t n = 2; n <= max_n; ++n) {
    const auto values = chain_elements(L(n));
    const auto z = chain_zero(L(n));
    const auto u = chain_one(L(n));
    for (const auto& a : values) {
      for (const auto& b : values) {
        for (const auto& c : values) {
          check_mv_laws(check, a, b, c, z, u, to_string(L(n)));
        }
        for (MvOp op : {MvOp::oplus, MvOp::neg, MvOp::odot, MvOp::meet, MvOp::join}) {
          const auto r = mv_op(op, a, b);
          check(r.chain() == L(n) && chain_contains(L(n), r.value()),
                [&] { return "closure fails in " + to_string(L(n)); });
        }
      }
    }
  }

  std::mt19937_64 rng(opt.config.seed);
  std::uniform_int_distribution<std::int64_t> den(1, 60);
  auto draw = [&] {
    const std::int64_t q = den(rng);
    return make_chain_value(Rational{std::uniform_int_distribution<std::int64_t>(0, q)(rng), q},
                            Linf);
  };
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto a = draw(), b = draw(), c = draw();
    check_mv_laws(check, a, b, c, chain_zero(Linf), chain_one(Linf), "Linf");
  }

  for (const auto& algebra : {make_algebra({{"a", L(2)}, {"b", L(3)}}),
                              make_algebra({{"a", L(3)}, {"b", L(4)}})}) {
    const auto elems = enumerate_elements(algebra);
    const auto z = zero(algebra), u = unit(algebra);
    for (const auto& f : elems) {
      for (const auto& g : elems) {
        check_mv_laws(check, f, g, elems[elems.size() / 2], z, u, "L2 * L3 / L3 * L4");
      }
    }
  }

  if (opt.inject_fault) {
    const auto half = make_chain_value(Rational{1, 2}, L(3));
    check(oplus(half, half) == half, [] { return "injected fault: 1/2 (+) 1/2 = 1/2"; });
  }
  return {1, "", check.ok, check.checks, 0, 0, check.first_failure};
}

// 2. Ideals of finite products are support ideals, and every maximal ideal
// passes all four principality tests.
SuiteResult suite_principal_ideals(const SelftestOptions& opt) {
  Checker check;
  std::vector<ChainSize> chains = {L(2), L(3), L(4)};
  if (opt.scale == Scale::full) chains.push_back(L(5));
  for (const auto& algebra : algebra_family(chains, 3, 16)) {
    const std::string where = render(algebra);
    check.guard(
        [&] {
          auto oracle = brute_force_ideals(algebra, opt.config);
          std::vector<ElementSet> supports;
          const std::size_t d = algebra.dimension();
          for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
            std::vector<bool> free(d);
            for (std::size_t i = 0; i < d; ++i) free[i] = (mask >> i & 1) != 0;
            supports.push_back(element_set(SupportIdeal{algebra, free}, opt.config));
          }
          std::sort(oracle.begin(), oracle.end());
          std::sort(supports.begin(), supports.end());
          check(oracle == supports, [&] { return "ideals of " + where + " are not the I_D"; });

          // Maximal members of the oracle's list.
          auto subset = [](const ElementSet& s, const ElementSet& t) {
            for (std::size_t i = 0; i < s.size(); ++i) {
              if (s[i] && !t[i]) return false;
            }
            return true;
          };
          const ElementSet whole(oracle.front().size(), true);
          std::vector<ElementSet> oracle_max;
          for (const auto& s : oracle) {
            if (s == whole) continue;
            bool maximal = true;
            for (const auto& t : oracle) {
              if (t != whole && t != s && subset(s, t)) maximal = false;
            }
            if (maximal) oracle_max.push_back(s);
          }
          std::vector<ElementSet> claimed;
          for (const auto& m : maximal_ideals(algebra)) claimed.push_back(element_set(m, opt.config));
          std::sort(oracle_max.begin(), oracle_max.end());
          std::sort(claimed.begin(), claimed.end());
          check(oracle_max == claimed, [&] { return "maximal ideals of " + where + " differ"; });

          const auto elements = enumerate_elements(algebra, opt.config);
          for (const auto& m : maximal_ideals(algebra)) {
            const auto report = principality_report(m);
            check(report.agree() && report.principal,
                  [&] { return "principality tests disagree on " + where; });
            if (!report.generator) continue;
            // The ideal generated by the witness, by enumeration: f <= n*a with
            // n large enough that n*a has stabilized.
            const Element big = nat_mult(static_cast<std::int64_t>(elements.size()), *report.generator);
            const ElementSet members = element_set(m, opt.config);
            for (std::size_t i = 0; i < elements.size(); ++i) {
              check(leq_elem(elements[i], big) == members[i],
                    [&] { return "generator witness of a maximal ideal of " + where + " is wrong"; });
            }
            const Element sup = ideal_sup(m);
            check(ideal_membership(sup, m) && boolean_center_contains(sup),
                  [&] { return "sup M not in M and B(A) for " + where; });
          }
        },
        [&] { return where; });
  }
  return {2, "", check.ok, check.checks, 0, 0, check.first_failure};
}

// 3. Homomorphisms found by exhaustive search are exactly those induced by
// admissible index maps.
SuiteResult suite_hom_oracle(const SelftestOptions& opt) {
  Checker check;
  std::vector<ChainSize> chains = {L(2), L(3), L(4)};
  if (opt.scale == Scale::full) chains.push_back(L(5));
  const auto family = algebra_family(chains, 3);
  std::uint64_t pairs = 0;
  for (const auto& a : family) {
    for (const auto& b : family) {
      const std::uint64_t na = *a.cardinality(), nb = *b.cardinality();
      long double maps = 1;
      for (std::uint64_t i = 0; i < na && maps <= 1e18L; ++i) maps *= static_cast<long double>(nb);
      if (maps > static_cast<long double>(opt.config.hom_bound)) continue;
      ++pairs;
      const std::string where = render(a) + " -> " + render(b);
      check.guard(
          [&] {
            auto oracle = brute_force_homs(a, b, opt.config);
            std::vector<ElementMap> induced;
            for (const auto& h : enumerate_continuous_homs(a, b)) {
              induced.push_back(induced_element_map(h, opt.config));
            }
            std::sort(oracle.begin(), oracle.end());
            std::sort(induced.begin(), induced.end());
            check(std::adjacent_find(induced.begin(), induced.end()) == induced.end(),
                  [&] { return "two index maps induce the same hom " + where; });
            check(oracle == induced, [&] {
              return "hom sets differ for " + where + ": oracle " + std::to_string(oracle.size()) +
                     ", index maps " + std::to_string(induced.size());
            });
          },
          [&] { return where; });
    }
  }
  check(pairs > 0, [] { return "no algebra pair within the hom bound"; });
  return {3, "", check.ok, check.checks, 0, 0, check.first_failure};
}

using IndexMap = std::vector<std::size_t>;

// 4. Hom-set bijection, functor laws and both naturality squares.
SuiteResult suite_duality(const SelftestOptions& opt) {
  Checker check;
  const auto family = multiset_family(duality_multiplicities(), 3);
  const std::size_t n = family.size();

  std::vector<ProductAlgebra> alg(n);
  for (std::size_t i = 0; i < n; ++i) alg[i] = algebra_of(family[i]);

  // morphisms[i][j] = Hom(X_i, X_j); homs[j][i] = continuous F(X_j) -> F(X_i)
  std::vector<std::vector<std::vector<EMMorphism>>> morphisms(n, std::vector<std::vector<EMMorphism>>(n));
  std::vector<std::vector<std::vector<ContinuousHom>>> homs(n, std::vector<std::vector<ContinuousHom>>(n));
  std::vector<std::vector<std::vector<ContinuousHom>>> images(n, std::vector<std::vector<ContinuousHom>>(n));

  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = family[i];
    check(algebra_hom_of(identity_morphism(x)) == identity_hom(alg[i]),
          [&] { return "F(id) != id on " + render(x); });
    check(multiset_morphism_of(identity_hom(alg[i])) == identity_morphism(multiset_of(alg[i])),
          [&] { return "H(id) != id on " + render(alg[i]); });
    for (std::size_t j = 0; j < n; ++j) {
      const auto& y = family[j];
      const std::string where = render(x) + " -> " + render(y);
      morphisms[i][j] = enumerate_morphisms(x, y);
      homs[j][i] = enumerate_continuous_homs(alg[j], alg[i]);
      check(morphisms[i][j].size() == homs[j][i].size(), [&] {
        return "|Hom(" + where + ")| = " + std::to_string(morphisms[i][j].size()) +
               " but there are " + std::to_string(homs[j][i].size()) + " continuous homs back";
      });

      std::set<IndexMap> via_functor;
      for (const auto& phi : morphisms[i][j]) {
        const ContinuousHom f_phi = algebra_hom_of(phi);
        images[i][j].push_back(f_phi);
        via_functor.insert(f_phi.index_map());
        check(check_eta_naturality(phi), [&] { return "eta square fails for " + where; });
      }
      std::set<IndexMap> direct;
      for (const auto& h : homs[j][i]) direct.insert(h.index_map());
      check(via_functor.size() == morphisms[i][j].size() && via_functor == direct,
            [&] { return "F is not a bijection onto the homs for " + where; });

      for (const auto& psi : homs[j][i]) {
        check(check_epsilon_naturality(psi, opt.config),
              [&] { return "epsilon square fails for " + render(alg[j]) + " -> " + render(alg[i]); });
      }
    }
  }

  // Composition laws over every triple of the family.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t a = 0; a < morphisms[i][j].size(); ++a) {
          for (std::size_t b = 0; b < morphisms[j][k].size(); ++b) {
            const EMMorphism composite = compose_morphisms(morphisms[j][k][b], morphisms[i][j][a]);
            check(algebra_hom_of(composite) == compose_homs(images[i][j][a], images[j][k][b]),
                  [&] { return "F(psi . phi) != F(phi) . F(psi)"; });
          }
        }
        // H on homs F(X_k) -> F(X_j) -> F(X_i)
        for (const auto& g : homs[k][j]) {
          for (const auto& h : homs[j][i]) {
            check(multiset_morphism_of(compose_homs(h, g)) ==
                      compose_morphisms(multiset_morphism_of(g), multiset_morphism_of(h)),
                  [&] { return "H(h . g) != H(g) . H(h)"; });
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& phi : morphisms[i][j]) {
        check(compose_morphisms(identity_morphism(family[j]), phi) == phi &&
                  compose_morphisms(phi, identity_morphism(family[i])) == phi,
              [&] { return "identity is not neutral for composition"; });
      }
    }
  }
  return {4, "", check.ok, check.checks, 0, 0, check.first_failure};
}

// 5. eta is a multiplicity-preserving bijection; epsilon reads f(x) at p_x.
SuiteResult suite_unit_counit(const SelftestOptions& opt) {
  Checker check;
  const auto family = multiset_family(duality_multiplicities(), opt.scale == Scale::full ? 4 : 3);
  for (const auto& x : family) {
    const std::string where = render(x);
    const EMMorphism e = eta(x);
    std::vector<bool> hit(e.target().size(), false);
    bool injective = true;
    for (std::size_t p = 0; p < x.size(); ++p) {
      const std::size_t q = e.map()[p];
      if (hit[q]) injective = false;
      hit[q] = true;
      check(e.target().mult(q) == x.mult(p), [&] { return "eta changes a multiplicity on " + where; });
    }
    check(injective && e.target().size() == x.size() &&
              std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }),
          [&] { return "eta is not bijective on " + where; });
    std::vector<std::size_t> back(x.size());
    for (std::size_t p = 0; p < x.size(); ++p) back[e.map()[p]] = p;
    const EMMorphism inverse = validate_morphism(e.target(), x, back);
    check(compose_morphisms(inverse, e) == identity_morphism(x) &&
              compose_morphisms(e, inverse) == identity_morphism(e.target()),
          [&] { return "eta has no two-sided inverse on " + where; });
    check(is_isomorphic(profile_of(x), profile_of(e.target())),
          [&] { return "H(F(X)) has a different profile from X = " + where; });
  }

  std::vector<ProductAlgebra> algebras;
  for (const auto& x : family) algebras.push_back(algebra_of(x));
  for (const auto& a : algebra_family({L(2), L(3), Linf}, 2)) algebras.push_back(a);
  for (const auto& a : algebras) {
    const std::string where = render(a);
    const ContinuousHom e = epsilon(a);
    check(is_surjective_hom(e) && e.target().dimension() == a.dimension(),
          [&] { return "epsilon is not bijective on " + where; });
    std::vector<ContinuousHom> chis;
    for (const auto& f : a.factors()) chis.push_back(projection(a, f.label));
    for_each_checked_element(
        a,
        [&](const Element& f) {
          const Element g = apply_hom(e, f);
          for (std::size_t x = 0; x < a.dimension(); ++x) {
            // coordinate chi = p_x of epsilon(f) must be chi(f)
            const auto pos = e.target().position_of(chis[x].target().label(0));
            check(g[pos].value() == apply_hom(chis[x], f)[0].value(),
                  [&] { return "epsilon(f)(chi) != chi(f) on " + where; });
          }
        },
        opt.config);
  }
  return {5, "", check.ok, check.checks, 0, 0, check.first_failure};
}

// 6. Surjectivity from the index map agrees with the computed image.
SuiteResult suite_surjectivity(const SelftestOptions& opt) {
  Checker check;
  std::vector<ChainSize> chains = {L(2), L(3), L(4)};
  if (opt.scale == Scale::full) chains.push_back(L(5));
  const auto family = algebra_family(chains, 3, 36);
  for (const auto& c : family) {
    const auto elements = enumerate_elements(c, opt.config);
    for (const auto& b : family) {
      for (const auto& h : enumerate_continuous_homs(c, b)) {
        std::set<std::uint64_t> image;
        for (const auto& f : elements) image.insert(element_index(apply_hom(h, f)));
        const bool onto = image.size() == *b.cardinality();
        check(is_surjective_hom(h) == onto, [&] {
          return "is_surjective_hom wrong for " + render(c) + " -> " + render(b);
        });
      }
    }
  }
  return {6, "", check.ok, check.checks, 0, 0, check.first_failure};
}

// 7. Lifting along surjections for algebras with an L2 factor; no hom to L2
// otherwise.
SuiteResult suite_projectivity(const SelftestOptions& opt) {
  Checker check;
  const std::vector<ChainSize> chains = {L(2), L(3), L(4), Linf};
  std::mt19937_64 rng(opt.config.seed);
  auto pick_chain = [&] { return chains[std::uniform_int_distribution<std::size_t>(0, 3)(rng)]; };
  auto count = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t instances = opt.scale == Scale::full ? 2000 : 100;

  for (std::size_t t = 0; t < instances; ++t) {
    // A with an L2 factor at a random position.
    const std::size_t na = count(1, 3);
    const std::size_t s0 = count(0, na - 1);
    std::vector<Factor> fa;
    for (std::size_t i = 0; i < na; ++i) fa.push_back({"a" + std::to_string(i + 1), i == s0 ? L(2) : pick_chain()});
    const ProductAlgebra a = make_algebra(fa);

    const std::size_t nb = count(1, 3);
    std::vector<Factor> fb;
    for (std::size_t i = 0; i < nb; ++i) fb.push_back({"b" + std::to_string(i + 1), pick_chain()});
    const ProductAlgebra b = make_algebra(fb);

    // C holds a copy of every factor of B at shuffled positions plus padding.
    const std::size_t nc = count(nb, 3);
    std::vector<std::size_t> slots(nc);
    for (std::size_t i = 0; i < nc; ++i) slots[i] = i;
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<Factor> fc;
    std::vector<std::size_t> psi_map(nb);
    for (std::size_t i = 0; i < nc; ++i) fc.push_back({"c" + std::to_string(i + 1), pick_chain()});
    for (std::size_t y = 0; y < nb; ++y) {
      fc[slots[y]].chain = b.chain(y);
      psi_map[y] = slots[y];
    }
    const ProductAlgebra c = make_algebra(fc);
    const ContinuousHom psi = make_continuous_hom(c, b, psi_map);

    const auto phis = enumerate_continuous_homs(a, b);
    if (phis.empty()) {
      check(false, [&] { return "no hom " + render(a) + " -> " + render(b) + " despite an L2 factor"; });
      continue;
    }
    const ContinuousHom& phi = phis[count(0, phis.size() - 1)];
    const std::string where = render(a) + " -> " + render(b) + " <<- " + render(c);

    check.guard(
        [&] {
          const ContinuousHom up = lift(phi, psi, a.label(s0));
          check(compose_homs(psi, up) == phi, [&] { return "psi . lift != phi for " + where; });
          for (std::size_t x = 0; x < c.dimension(); ++x) {
            const bool in_image = std::find(psi_map.begin(), psi_map.end(), x) != psi_map.end();
            if (!in_image) {
              check(up.index_map()[x] == s0, [&] { return "lift ignores s0 off the image in " + where; });
            }
          }
          for_each_checked_element(
              a,
              [&](const Element& f) {
                check(apply_hom(psi, apply_hom(up, f)) == apply_hom(phi, f),
                      [&] { return "psi(lift(f)) != phi(f) in " + where; });
              },
              opt.config);
        },
        [&] { return where; });
  }

  const ProductAlgebra l2 = make_algebra({{"t", L(2)}});
  for (const auto& a : algebra_family(chains, 3)) {
    const bool has_l2 = std::any_of(a.factors().begin(), a.factors().end(),
                                    [](const Factor& f) { return f.chain == L(2); });
    const bool homs_exist = !enumerate_continuous_homs(a, l2).empty();
    check(homs_exist == has_l2, [&] { return "Hom(" + render(a) + ", L2) has the wrong emptiness"; });
    check(is_projective(profile_of(a)) == has_l2, [&] { return "is_projective wrong on " + render(a); });
  }
  return {7, "", check.ok, check.checks, 0, 0, check.first_failure};
}

// 8. Separation in powerset algebras and its failure elsewhere.
SuiteResult suite_separation(const SelftestOptions& opt) {
  Checker check;
  const std::size_t max_points = opt.scale == Scale::full ? 5 : 4;
  for (std::size_t d = 0; d <= max_points; ++d) {
    std::vector<Factor> factors;
    for (std::size_t i = 0; i < d; ++i) factors.push_back({"x" + std::to_string(i + 1), L(2)});
    const ProductAlgebra a = make_algebra(factors);
    const auto elements = enumerate_elements(a, opt.config);
    for (const auto& f : elements) {
      for (const auto& g : elements) {
        if (leq_elem(f, g)) {
          bool refused = false;
          try {
            separate(f, g);
          } catch (const Error& e) {
            refused = e.kind() == ErrorKind::f_below_g;
          }
          check(refused, [&] { return "separate accepted f <= g in " + render(a); });
          continue;
        }
        check.guard(
            [&] {
              const ContinuousHom h = separate(f, g);
              check(h.target().dimension() == 1 && apply_hom(h, f)[0].is_one() &&
                        apply_hom(h, g)[0].is_zero(),
                    [&] { return "separate failed on " + render(f) + ", " + render(g); });
            },
            [&] { return "separate " + render(f) + ", " + render(g); });
      }
    }
    check(urysohn_strauss_holds(profile_of(a)), [&] { return "powerset algebra misclassified"; });
  }

  std::vector<ProductAlgebra> targets = {make_algebra({{"t", Linf}})};
  for (std::int64_t n = 2; n <= 7; ++n) targets.push_back(make_algebra({{"t", L(n)}}));
  for (const auto& a : algebra_family({L(2), L(3), L(4)}, 3)) {
    auto x0 = std::find_if(a.factors().begin(), a.factors().end(),
                           [](const Factor& f) { return f.chain != L(2); });
    if (x0 == a.factors().end()) continue;
    const std::size_t pos = static_cast<std::size_t>(x0 - a.factors().begin());
    std::vector<Rational> values(a.dimension(), Rational{0});
    values[pos] = Rational{1, x0->chain.size() - 1};
    const Element witness = make_element(a, std::span<const Rational>(values));
    for (const auto& t : targets) {
      for (const auto& h : enumerate_continuous_homs(a, t)) {
        check(!apply_hom(h, witness)[0].is_one(),
              [&] { return "a hom from " + render(a) + " sends the witness to 1"; });
      }
    }
    bool refused = false;
    try {
      separate(witness, zero(a));
    } catch (const Error& e) {
      refused = e.kind() == ErrorKind::not_boolean_algebra;
    }
    check(refused, [&] { return "separate accepted the non-Boolean " + render(a); });
    check(!urysohn_strauss_holds(profile_of(a)), [&] { return render(a) + " misclassified"; });
  }
  return {8, "", check.ok, check.checks, 0, 0, check.first_failure};
}

// A finite multiset with profile `p`, omega replaced by `stand_in` points.
EMultiset witness_multiset(const Profile& p, std::uint64_t stand_in) {
  std::vector<Point> points;
  for (const auto& [m, c] : p.entries()) {
    const std::uint64_t k = c.is_omega() ? stand_in : c.value();
    for (std::uint64_t i = 0; i < k; ++i) {
      points.push_back({"m" + to_string(m) + "_" + std::to_string(i + 1), m});
    }
  }
  return make_multiset(std::move(points));
}

// 9. Implications between the classification predicates.
SuiteResult suite_predicates(const SelftestOptions& opt) {
  Checker check;
  std::vector<Multiplicity> mults = {Multiplicity::finite(1), Multiplicity::finite(2),
                                     Multiplicity::finite(3), Multiplicity::infinite()};
  std::vector<Cardinality> cards = {Cardinality::finite(1), Cardinality::finite(3), Cardinality::omega()};
  if (opt.scale == Scale::full) {
    mults.push_back(Multiplicity::finite(6));
    cards.push_back(Cardinality::finite(2));
  }
  const ProductAlgebra l2 = make_algebra({{"t", L(2)}});
  // each multiplicity is absent or carries one of the cardinalities
  std::vector<std::size_t> choice(mults.size(), 0);
  while (true) {
    Profile::Entries entries;
    for (std::size_t i = 0; i < mults.size(); ++i) {
      if (choice[i] > 0) entries.emplace(mults[i], cards[choice[i] - 1]);
    }
    const Profile p{entries};
    const std::string where = render(p);
    const bool ed = is_extremally_disconnected(p), stone = is_stone(p), hyper = is_hyperarchimedean(p);
    check(!ed || stone, [&] { return "extremally disconnected but not Stone: " + where; });
    check(!stone || hyper, [&] { return "Stone but not hyperarchimedean: " + where; });
    check(p.empty() || !urysohn_strauss_holds(p) || is_projective(p),
          [&] { return "powerset but not projective: " + where; });

    const EMultiset x = witness_multiset(p, 4);
    check(is_projective(p) == injective_in_em(x), [&] { return "projective != dual injective: " + where; });
    const ProductAlgebra a = algebra_of(x);
    check(is_projective(profile_of(a)) == is_projective(p),
          [&] { return "finite witness changes projectivity: " + where; });
    check(is_projective(p) == !enumerate_continuous_homs(a, l2).empty(),
          [&] { return "projective != Hom(A, L2) nonempty: " + where; });

    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] > cards.size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return {9, "", check.ok, check.checks, 0, 0, check.first_failure};
}

const std::vector<std::string>& dsl_corpus() {
  static const std::vector<std::string> corpus = {
      // algebras
      "L2", "L2 * L3", "Linf", "Linf * L4", "L2 * L2 * L2", "L17 * Linf * L3", "[]",
      "[a:L2]", "[a:L2, b:L3]", "[p:Linf, q:L5, r:L2]", "[x2:L3, x1:L2]", "L100",
      "[left:L4, right:Linf]", "L3*L3",
      // multisets
      "{}", "{a:1}", "{a:2, b:inf}", "{a:1, b:2, c:2}", "{x:inf}", "{p1:6, p2:4, p3:3}",
      "{a:12, b:1}", "{u:inf, v:inf, w:1}", "{a_1:7}", "{z:3,y:2,x:1}",
      "profile{}", "profile{1:omega}", "profile{1:3, inf:omega}", "profile{2:1, 5:omega, inf:2}",
      // terms
      "0", "1", "x", "~x", "~~x", "~x (+) x", "x (.) ~x", "x -> x", "x (+) y (.) z",
      "(x (+) y) (.) z", "x /\\ y \\/ z", "x /\\ (y \\/ z)", "x -> y -> z", "x -> (y -> z)",
      "~(x (+) y)", "(x \\/ y) (+) ~z", "x (.) y (.) z", "x (.) (y (.) z)",
      "~(x -> y) /\\ ~~z", "a1 (+) 0 (.) 1", "((x))", "x \\/ y /\\ z -> w (+) ~v (.) u"};
  return corpus;
}

// 10. Round trips through the renderer and the basic tautologies.
SuiteResult suite_dsl(const SelftestOptions& opt) {
  Checker check;
  std::size_t items = 0;
  for (const auto& text : dsl_corpus()) {
    check.guard(
        [&] {
          ++items;
          std::string canonical;
          if (text.starts_with("{")) {
            const auto m = parse_multiset(text);
            canonical = render(m);
            check(parse_multiset(canonical) == m, [&] { return "multiset round trip: " + text; });
          } else if (text.starts_with("profile{")) {
            const auto p = parse_profile(text);
            canonical = render(p);
            check(parse_profile(canonical) == p, [&] { return "profile round trip: " + text; });
          } else if (text.starts_with("L") || text.starts_with("[")) {
            const auto a = parse_algebra(text);
            canonical = render(a);
            check(parse_algebra(canonical) == a, [&] { return "algebra round trip: " + text; });
          } else {
            const auto t = parse_term(text);
            canonical = render(t);
            check(parse_term(canonical) == t, [&] { return "term round trip: " + text; });
            check(render(parse_term(canonical)) == canonical, [&] { return "term render fixpoint: " + text; });
          }
        },
        [&] { return "corpus item '" + text + "'"; });
  }
  check(items >= 50, [&] { return "corpus has only " + std::to_string(items) + " items"; });

  const Term excluded_middle = parse_term("~x (+) x");
  const Term contradiction = parse_term("x (.) ~x");
  const Term reflexive = parse_term("x -> x");
  std::vector<ChainSize> chains = {L(2), L(3), L(4), L(5), L(6)};
  if (opt.scale == Scale::full) chains.push_back(L(9));
  for (const auto& a : algebra_family(chains, 3, 36)) {
    const Element one = unit(a), nil = zero(a);
    for_each_element(
        a,
        [&](const Element& f) {
          const Environment env{{"x", f}};
          check(eval_term(excluded_middle, env, a) == one && eval_term(reflexive, env, a) == one &&
                    eval_term(contradiction, env, a) == nil,
                [&] { return "tautology fails at " + render(f) + " in " + render(a); });
        },
        opt.config);
  }
  return {10, "", check.ok, check.checks, 0, 0, check.first_failure};
}

}  // namespace

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {1, "MV axioms", 5.0, suite_mv_axioms},
      {2, "principal maximal ideals", 30.0, suite_principal_ideals},
      {3, "hom oracle vs index maps", 60.0, suite_hom_oracle},
      {4, "duality: hom-set bijection, functor laws, naturality", 120.0, suite_duality},
      {5, "eta and epsilon isomorphisms", 30.0, suite_unit_counit},
      {6, "surjective homs", 30.0, suite_surjectivity},
      {7, "projectivity and lifting", 60.0, suite_projectivity},
      {8, "Urysohn-Strauss separation", 10.0, suite_separation},
      {9, "predicate implications", 5.0, suite_predicates},
      {10, "DSL round trip and tautologies", 10.0, suite_dsl},
  };
  return all;
}

SuiteResult run_suite(const Suite& suite, const SelftestOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult result;
  try {
    result = suite.run(options);
  } catch (const std::exception& e) {
    result.correct = false;
    result.detail = std::string("uncaught: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.id = suite.id;
  result.name = suite.name;
  // The full scale enlarges every family; its budgets scale with it.
  result.budget_seconds = suite.budget_seconds * (options.scale == Scale::full ? 10.0 : 1.0);
  return result;
}

std::vector<SuiteResult> run_all_suites(const SelftestOptions& options) {
  std::vector<SuiteResult> out;
  for (const auto& s : suites()) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), s.id) == options.only.end()) {
      continue;
    }
    out.push_back(run_suite(s, options));
  }
  return out;
}

}  // namespace mvdual
