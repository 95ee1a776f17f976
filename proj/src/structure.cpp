#include "mvdual/structure.hpp"

#include <algorithm>

#include "mvdual/error.hpp"

namespace mvdual {

namespace {

const Multiplicity kOne = Multiplicity::finite(1);

}  // namespace

Profile profile_of(const ProductAlgebra& algebra) {
  return profile_of(multiset_of(algebra));
}

bool is_hyperarchimedean(const Profile& p) {
  auto at_inf = p.at(Multiplicity::infinite());
  return !at_inf || at_inf->is_finite();
}

bool is_stone(const Profile& p) { return !p.at(Multiplicity::infinite()); }

bool is_projective(const Profile& p) { return p.at(kOne).has_value(); }

bool is_extremally_disconnected(const Profile& p) {
  return std::all_of(p.entries().begin(), p.entries().end(), [](const auto& e) {
    return e.first.is_finite() && e.second.is_finite();
  });
}

bool urysohn_strauss_holds(const Profile& p) {
  return std::all_of(p.entries().begin(), p.entries().end(),
                     [](const auto& e) { return e.first == kOne; });
}

ContinuousHom separate(const Element& f, const Element& g) {
  const ProductAlgebra& algebra = f.algebra();
  for (const auto& factor : algebra.factors()) {
    if (factor.chain != ChainSize::finite(2)) {
      throw Error(ErrorKind::not_boolean_algebra,
                  "factor '" + factor.label + "' is " + to_string(factor.chain) +
                      ", not L2");
    }
  }
  if (leq_elem(f, g)) {
    throw Error(ErrorKind::f_below_g, "f <= g, nothing to separate");
  }
  for (std::size_t x = 0; x < algebra.dimension(); ++x) {
    if (f[x].is_one() && g[x].is_zero()) return projection(algebra, algebra.label(x));
  }
  // unreachable: in a powerset algebra f not <= g means some f(x)=1, g(x)=0
  throw std::logic_error("separate: no separating point");
}

bool is_surjective_hom(const ContinuousHom& h) {
  const auto& t = h.index_map();
  std::vector<bool> used(h.source().dimension(), false);
  for (std::size_t y = 0; y < t.size(); ++y) {
    if (used[t[y]]) return false;
    used[t[y]] = true;
    if (h.source().chain(t[y]) != h.target().chain(y)) return false;
  }
  return true;
}

ContinuousHom lift(const ContinuousHom& phi, const ContinuousHom& psi,
                   std::string_view s0) {
  const ProductAlgebra& a = phi.source();
  const std::size_t s = a.position_of(s0);
  if (a.chain(s) != ChainSize::finite(2)) {
    throw Error(ErrorKind::no_l2_factor,
                "point '" + std::string(s0) + "' is " + to_string(a.chain(s)) + ", not L2");
  }
  if (!(psi.target() == phi.target())) {
    throw Error(ErrorKind::boundary_mismatch, "phi and psi must share their target");
  }
  if (!is_surjective_hom(psi)) {
    throw Error(ErrorKind::psi_not_surjective, "psi is not onto");
  }
  std::vector<std::size_t> u(psi.source().dimension(), s);
  for (std::size_t y = 0; y < psi.index_map().size(); ++y) {
    u[psi.index_map()[y]] = phi.index_map()[y];
  }
  return make_continuous_hom(a, psi.source(), std::move(u));
}

ContinuousHom lift(const ContinuousHom& phi, const ContinuousHom& psi) {
  const ProductAlgebra& a = phi.source();
  for (const auto& f : a.factors()) {
    if (f.chain == ChainSize::finite(2)) return lift(phi, psi, f.label);
  }
  throw Error(ErrorKind::no_l2_factor, "source algebra has no L2 factor");
}

bool injective_in_em(const EMultiset& x) {
  return std::any_of(x.points().begin(), x.points().end(),
                     [](const Point& p) { return p.mult == kOne; });
}

}  // namespace mvdual
