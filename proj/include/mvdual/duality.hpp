#pragma once

// Continuous homomorphisms between finite-index products of chains, stored in
// index-map normal form, and the dual equivalence with extended multisets:
// the functor to algebras (X -> prod L_{sigma(x)+1}), the functor to
// multisets (A -> <X, n_x - 1>), and their natural isomorphisms.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mvdual/algebra.hpp"
#include "mvdual/config.hpp"
#include "mvdual/multiset.hpp"

namespace mvdual {

/// phi : source -> target acting by phi(f)(y) = f(t(y)) for an index map
/// t : Y -> X with L_{n_t(y)} a subalgebra of L_{m_y}.
class ContinuousHom {
 public:
  const ProductAlgebra& source() const noexcept { return source_; }
  const ProductAlgebra& target() const noexcept { return target_; }
  /// Target position -> source position.
  const std::vector<std::size_t>& index_map() const noexcept { return index_map_; }
  const std::string& source_point(std::string_view target_label) const {
    return source_.label(index_map_.at(target_.position_of(target_label)));
  }

  friend bool operator==(const ContinuousHom&, const ContinuousHom&) = default;

 private:
  friend ContinuousHom make_continuous_hom(const ProductAlgebra&, const ProductAlgebra&,
                                           std::vector<std::size_t>);
  ContinuousHom(ProductAlgebra s, ProductAlgebra t, std::vector<std::size_t> m)
      : source_(std::move(s)), target_(std::move(t)), index_map_(std::move(m)) {}

  ProductAlgebra source_;
  ProductAlgebra target_;
  std::vector<std::size_t> index_map_;
};

/// Throws invalid_index_map when the map is not total on the target index or
/// some chain inclusion fails.
ContinuousHom make_continuous_hom(const ProductAlgebra& source,
                                  const ProductAlgebra& target,
                                  std::vector<std::size_t> index_map);
/// Label form: target label -> source label.
ContinuousHom make_continuous_hom(const ProductAlgebra& source,
                                  const ProductAlgebra& target,
                                  const std::map<std::string, std::string>& index_map);

ContinuousHom identity_hom(const ProductAlgebra& algebra);
/// p_x : A -> L_{n_x}, the target being the one-factor algebra {x : n_x}.
ContinuousHom projection(const ProductAlgebra& algebra, std::string_view label);

/// Throws algebra_mismatch if f is not in the source.
Element apply_hom(const ContinuousHom& h, const Element& f);

/// g after h. Throws boundary_mismatch unless target(h) = source(g).
ContinuousHom compose_homs(const ContinuousHom& g, const ContinuousHom& h);

/// All continuous homs A -> B: one admissible source point per target point.
std::vector<ContinuousHom> enumerate_continuous_homs(const ProductAlgebra& source,
                                                     const ProductAlgebra& target);

/// The element table of h, indexed like brute_force_homs output.
ElementMap induced_element_map(const ContinuousHom& h, const OracleConfig& config = {});

/// prod_{x} L_{sigma(x)+1}, with L_inf where sigma(x) = inf.
ProductAlgebra algebra_of(const EMultiset& x);
/// phi : X -> Y gives A_Y -> A_X, f |-> f . phi.
ContinuousHom algebra_hom_of(const EMMorphism& phi);

/// The points of A (standing for the projections p_x) with multiplicity
/// n_x - 1.
EMultiset multiset_of(const ProductAlgebra& algebra);
/// psi : B -> A gives H(A) -> H(B), p_y |-> p_y . psi = p_{t(y)}.
EMMorphism multiset_morphism_of(const ContinuousHom& psi);

/// X -> H(F(X)), x |-> p_x.
EMMorphism eta(const EMultiset& x);
/// A -> F(H(A)), f |-> (p_x |-> f(x)).
ContinuousHom epsilon(const ProductAlgebra& algebra);

/// H(F(phi)) . eta_X = eta_Y . phi as point maps.
bool check_eta_naturality(const EMMorphism& phi);
/// F(H(psi)) . epsilon_B = epsilon_A . psi on every element of B, or on
/// config.samples seeded samples when B cannot be enumerated.
bool check_epsilon_naturality(const ContinuousHom& psi, const OracleConfig& config = {});

}  // namespace mvdual
