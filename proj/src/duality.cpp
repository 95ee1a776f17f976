#include "mvdual/duality.hpp"

#include "mvdual/error.hpp"

namespace mvdual {

ContinuousHom make_continuous_hom(const ProductAlgebra& source,
                                  const ProductAlgebra& target,
                                  std::vector<std::size_t> index_map) {
  if (index_map.size() != target.dimension()) {
    throw Error(ErrorKind::invalid_index_map,
                "index map must assign a source point to every target point");
  }
  for (std::size_t y = 0; y < index_map.size(); ++y) {
    const std::size_t x = index_map[y];
    if (x >= source.dimension()) {
      throw Error(ErrorKind::invalid_index_map,
                  "target point '" + target.label(y) + "' maps outside the source");
    }
    if (!chain_subset(source.chain(x), target.chain(y))) {
      throw Error(ErrorKind::invalid_index_map,
                  to_string(source.chain(x)) + " at '" + source.label(x) +
                      "' is not a subalgebra of " + to_string(target.chain(y)) +
                      " at '" + target.label(y) + "'");
    }
  }
  return ContinuousHom{source, target, std::move(index_map)};
}

ContinuousHom make_continuous_hom(const ProductAlgebra& source,
                                  const ProductAlgebra& target,
                                  const std::map<std::string, std::string>& index_map) {
  std::vector<std::size_t> positions;
  for (const auto& f : target.factors()) {
    auto it = index_map.find(f.label);
    if (it == index_map.end()) {
      throw Error(ErrorKind::invalid_index_map,
                  "target point '" + f.label + "' has no source point");
    }
    auto x = source.position(it->second);
    if (!x) {
      throw Error(ErrorKind::invalid_index_map,
                  "'" + it->second + "' is not a source point");
    }
    positions.push_back(*x);
  }
  if (index_map.size() != target.dimension()) {
    throw Error(ErrorKind::invalid_index_map, "index map names unknown target points");
  }
  return make_continuous_hom(source, target, std::move(positions));
}

ContinuousHom identity_hom(const ProductAlgebra& algebra) {
  std::vector<std::size_t> map(algebra.dimension());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return make_continuous_hom(algebra, algebra, std::move(map));
}

ContinuousHom projection(const ProductAlgebra& algebra, std::string_view label) {
  const std::size_t x = algebra.position_of(label);
  return make_continuous_hom(algebra, make_algebra(std::vector<Factor>{algebra.factors()[x]}), {x});
}

Element apply_hom(const ContinuousHom& h, const Element& f) {
  if (!(f.algebra() == h.source())) {
    throw Error(ErrorKind::algebra_mismatch, "element is not in the source algebra");
  }
  std::vector<ChainValue> coords;
  coords.reserve(h.index_map().size());
  for (std::size_t y = 0; y < h.index_map().size(); ++y) {
    coords.push_back(make_chain_value(f[h.index_map()[y]].value(), h.target().chain(y)));
  }
  return make_element(h.target(), std::move(coords));
}

ContinuousHom compose_homs(const ContinuousHom& g, const ContinuousHom& h) {
  if (!(h.target() == g.source())) {
    throw Error(ErrorKind::boundary_mismatch,
                "target of the first hom is not the source of the second");
  }
  std::vector<std::size_t> map(g.index_map().size());
  for (std::size_t z = 0; z < map.size(); ++z) map[z] = h.index_map()[g.index_map()[z]];
  return make_continuous_hom(h.source(), g.target(), std::move(map));
}

std::vector<ContinuousHom> enumerate_continuous_homs(const ProductAlgebra& source,
                                                     const ProductAlgebra& target) {
  std::vector<std::vector<std::size_t>> choices(target.dimension());
  for (std::size_t y = 0; y < target.dimension(); ++y) {
    for (std::size_t x = 0; x < source.dimension(); ++x) {
      if (chain_subset(source.chain(x), target.chain(y))) choices[y].push_back(x);
    }
    if (choices[y].empty()) return {};
  }
  std::vector<ContinuousHom> out;
  std::vector<std::size_t> pick(target.dimension(), 0);
  while (true) {
    std::vector<std::size_t> map(target.dimension());
    for (std::size_t y = 0; y < map.size(); ++y) map[y] = choices[y][pick[y]];
    out.push_back(make_continuous_hom(source, target, std::move(map)));
    std::size_t y = pick.size();
    bool carried_out = true;
    while (y > 0) {
      --y;
      if (++pick[y] < choices[y].size()) {
        carried_out = false;
        break;
      }
      pick[y] = 0;
    }
    if (carried_out) return out;
  }
}

ElementMap induced_element_map(const ContinuousHom& h, const OracleConfig& config) {
  ElementMap table;
  for_each_element(
      h.source(), [&](const Element& f) { table.push_back(element_index(apply_hom(h, f))); },
      config);
  return table;
}

ProductAlgebra algebra_of(const EMultiset& x) {
  std::vector<Factor> factors;
  for (const auto& p : x.points()) {
    factors.push_back({p.label, p.mult.is_infinite() ? ChainSize::infinite()
                                                     : ChainSize::finite(p.mult.value() + 1)});
  }
  return make_algebra(std::move(factors));
}

ContinuousHom algebra_hom_of(const EMMorphism& phi) {
  return make_continuous_hom(algebra_of(phi.target()), algebra_of(phi.source()), phi.map());
}

EMultiset multiset_of(const ProductAlgebra& algebra) {
  std::vector<Point> points;
  for (const auto& f : algebra.factors()) {
    points.push_back({f.label, f.chain.is_infinite() ? Multiplicity::infinite()
                                                     : Multiplicity::finite(f.chain.size() - 1)});
  }
  return make_multiset(std::move(points));
}

EMMorphism multiset_morphism_of(const ContinuousHom& psi) {
  return validate_morphism(multiset_of(psi.target()), multiset_of(psi.source()),
                           psi.index_map());
}

EMMorphism eta(const EMultiset& x) {
  // The points of H(F(X)) are the projections p_x, listed in the order of X.
  const EMultiset hf = multiset_of(algebra_of(x));
  std::vector<std::size_t> map;
  for (const auto& p : x.points()) map.push_back(hf.position_of(p.label));
  return validate_morphism(x, hf, std::move(map));
}

ContinuousHom epsilon(const ProductAlgebra& algebra) {
  const ProductAlgebra fh = algebra_of(multiset_of(algebra));
  // Coordinate p_x of epsilon(f) reads f at x.
  std::vector<std::size_t> map;
  for (const auto& f : fh.factors()) map.push_back(algebra.position_of(f.label));
  return make_continuous_hom(algebra, fh, std::move(map));
}

bool check_eta_naturality(const EMMorphism& phi) {
  const EMMorphism lhs = compose_morphisms(multiset_morphism_of(algebra_hom_of(phi)),
                                           eta(phi.source()));
  const EMMorphism rhs = compose_morphisms(eta(phi.target()), phi);
  return lhs == rhs;
}

bool check_epsilon_naturality(const ContinuousHom& psi, const OracleConfig& config) {
  const ContinuousHom fh_psi = algebra_hom_of(multiset_morphism_of(psi));
  const ContinuousHom eps_source = epsilon(psi.source());
  const ContinuousHom eps_target = epsilon(psi.target());
  bool ok = true;
  for_each_checked_element(
      psi.source(),
      [&](const Element& f) {
        if (!ok) return;
        ok = apply_hom(fh_psi, apply_hom(eps_source, f)) ==
             apply_hom(eps_target, apply_hom(psi, f));
      },
      config);
  return ok;
}

}  // namespace mvdual
