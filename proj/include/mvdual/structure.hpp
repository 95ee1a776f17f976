#pragma once

// Structural classification of compact products of chains. Predicates take
// profiles, which also describe infinite index sets. Also here: the separating
// projection for powerset algebras, surjectivity of continuous homs, and the
// lifting map for algebras with an L_2 factor.

#include <string_view>

#include "mvdual/algebra.hpp"
#include "mvdual/duality.hpp"
#include "mvdual/multiset.hpp"

namespace mvdual {

/// Profile of H(A).
Profile profile_of(const ProductAlgebra& algebra);

/// Finitely many L_inf factors. The set of finite chain sizes is finite for
/// every representable profile.
bool is_hyperarchimedean(const Profile& p);
/// No L_inf factor.
bool is_stone(const Profile& p);
/// Some factor is L_2.
bool is_projective(const Profile& p);
/// Finite algebra: finitely many factors, all finite.
bool is_extremally_disconnected(const Profile& p);
/// Powerset algebra: every factor is L_2.
bool urysohn_strauss_holds(const Profile& p);

/// A projection h with h(f) = 1 and h(g) = 0, at the first point where f
/// exceeds g. Throws not_boolean_algebra or f_below_g.
ContinuousHom separate(const Element& f, const Element& g);

/// Injective index map preserving chains exactly.
bool is_surjective_hom(const ContinuousHom& h);

/// Given phi : A -> B, a surjective psi : C -> B and an L_2 point s0 of A,
/// builds lift : A -> C with psi . lift = phi. C's point psi(y) reads
/// phi's source point for y; every other point of C reads s0.
/// Throws no_l2_factor or psi_not_surjective.
ContinuousHom lift(const ContinuousHom& phi, const ContinuousHom& psi,
                   std::string_view s0);
/// Picks the first L_2 point of A as s0.
ContinuousHom lift(const ContinuousHom& phi, const ContinuousHom& psi);

/// Some point has multiplicity 1.
bool injective_in_em(const EMultiset& x);

}  // namespace mvdual
