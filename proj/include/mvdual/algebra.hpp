#pragma once

// Finite-index products of Lukasiewicz chains, their elements, support ideals
// and the brute-force oracles that certify the support-ideal picture.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mvdual/chain.hpp"
#include "mvdual/config.hpp"

namespace mvdual {

struct Factor {
  std::string label;
  ChainSize chain;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// prod_{x in X} L_{n_x} over an ordered, finite, duplicate-free index set.
/// Cheap to copy: the factor list is shared and immutable.
class ProductAlgebra {
 public:
  /// The one-element algebra (empty product).
  ProductAlgebra();

  std::size_t dimension() const noexcept { return data_->factors.size(); }
  bool empty() const noexcept { return dimension() == 0; }
  const std::vector<Factor>& factors() const noexcept { return data_->factors; }
  const std::string& label(std::size_t i) const { return data_->factors.at(i).label; }
  ChainSize chain(std::size_t i) const { return data_->factors.at(i).chain; }

  std::optional<std::size_t> position(std::string_view label) const;
  /// Throws unknown_label.
  std::size_t position_of(std::string_view label) const;

  bool all_finite() const;
  /// |A| when every factor is finite and the product fits in 64 bits.
  std::optional<std::uint64_t> cardinality() const;

  friend bool operator==(const ProductAlgebra& a, const ProductAlgebra& b) {
    return a.data_ == b.data_ || a.data_->factors == b.data_->factors;
  }

 private:
  struct Data {
    std::vector<Factor> factors;
  };
  friend ProductAlgebra make_algebra(std::vector<Factor> factors);
  explicit ProductAlgebra(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Validates labels (distinct). Chain sizes are valid by construction of
/// ChainSize, which rejects n < 2.
ProductAlgebra make_algebra(std::vector<Factor> factors);
ProductAlgebra make_algebra(std::initializer_list<std::pair<std::string, ChainSize>> entries);

class Element {
 public:
  const ProductAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<ChainValue>& coords() const noexcept { return coords_; }
  const ChainValue& operator[](std::size_t i) const { return coords_.at(i); }
  const ChainValue& at(std::string_view label) const {
    return coords_.at(algebra_.position_of(label));
  }

  friend bool operator==(const Element& f, const Element& g) {
    return f.coords_ == g.coords_ && f.algebra_ == g.algebra_;
  }

 private:
  friend Element make_element(const ProductAlgebra& algebra,
                              std::vector<ChainValue> coords);
  Element(ProductAlgebra algebra, std::vector<ChainValue> coords)
      : algebra_(std::move(algebra)), coords_(std::move(coords)) {}

  ProductAlgebra algebra_;
  std::vector<ChainValue> coords_;
};

/// Throws algebra_mismatch if the coordinate count or chains disagree.
Element make_element(const ProductAlgebra& algebra, std::vector<ChainValue> coords);
/// Validates each rational against its factor's chain.
Element make_element(const ProductAlgebra& algebra, std::span<const Rational> values);
Element make_element(const ProductAlgebra& algebra, std::initializer_list<Rational> values);

Element zero(const ProductAlgebra& algebra);
Element unit(const ProductAlgebra& algebra);

/// Coordinatewise MV operation. Throws algebra_mismatch.
Element pointwise_op(MvOp kind, const Element& f,
                     const std::optional<Element>& g = std::nullopt);
Element oplus(const Element& f, const Element& g);
Element neg(const Element& f);
Element odot(const Element& f, const Element& g);
Element meet(const Element& f, const Element& g);
Element join(const Element& f, const Element& g);
Element nat_mult(std::int64_t n, const Element& f);

/// Pointwise order. Throws algebra_mismatch.
bool leq_elem(const Element& f, const Element& g);

/// 1 on `labels`, 0 elsewhere. Throws unknown_label.
Element characteristic(const ProductAlgebra& algebra,
                       std::span<const std::string> labels);
Element characteristic(const ProductAlgebra& algebra,
                       const std::vector<bool>& on);

/// Labels x with f(x) != 0.
std::vector<bool> support(const Element& f);

/// Visits every element of an all-finite algebra in lexicographic order (first
/// factor most significant). Throws infinite_chain_present or bound_exceeded.
void for_each_element(const ProductAlgebra& algebra,
                      const std::function<void(const Element&)>& visit,
                      const OracleConfig& config = {});
std::vector<Element> enumerate_elements(const ProductAlgebra& algebra,
                                        const OracleConfig& config = {});

/// A pseudo-random element: finite coordinates uniform over the chain, L_inf
/// coordinates p/q with q <= max_denominator.
Element sample_element(const ProductAlgebra& algebra, std::mt19937_64& rng,
                       std::int64_t max_denominator);

/// Every element when the algebra is all-finite and within
/// config.element_bound, otherwise config.samples seeded samples.
void for_each_checked_element(const ProductAlgebra& algebra,
                              const std::function<void(const Element&)>& visit,
                              const OracleConfig& config = {});
bool is_enumerable(const ProductAlgebra& algebra, const OracleConfig& config = {});

/// Position of `f` in enumeration order. The algebra must be all-finite.
std::uint64_t element_index(const Element& f);

/// f (+) f = f, i.e. every coordinate is 0 or 1.
bool boolean_center_contains(const Element& f);

/// I_D = { f : f(x) = 0 for every x outside D }.
class SupportIdeal {
 public:
  SupportIdeal(ProductAlgebra algebra, std::vector<bool> free);

  const ProductAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<bool>& free() const noexcept { return free_; }
  bool is_free(std::size_t i) const { return free_.at(i); }
  std::size_t free_count() const;
  std::vector<std::string> free_labels() const;

  friend bool operator==(const SupportIdeal&, const SupportIdeal&) = default;

 private:
  ProductAlgebra algebra_;
  std::vector<bool> free_;
};

SupportIdeal support_ideal(const ProductAlgebra& algebra,
                           std::span<const std::string> free_labels);

/// The ideal generated by `a`: each nonzero coordinate generates its whole
/// simple factor, so the result is I_{supp a}.
SupportIdeal principal_ideal(const Element& a);

bool ideal_membership(const Element& f, const SupportIdeal& ideal);

/// Supremum of I_D, namely the characteristic element of D.
Element ideal_sup(const SupportIdeal& ideal);

/// Kernels of the coordinate projections, one per point, in index order.
std::vector<SupportIdeal> maximal_ideals(const ProductAlgebra& algebra);

/// The ideal of finitely supported elements. Every element of a finite-index
/// product is finitely supported, so this is I_X.
SupportIdeal direct_sum_ideal(const ProductAlgebra& algebra);

/// Each of the four characterizations of a principal maximal ideal, evaluated
/// on its own.
struct PrincipalityReport {
  /// Generated by a single element; `generator` is the witness.
  bool principal = false;
  std::optional<Element> generator;
  /// Exactly one point x0 with M = ker p_{x0}.
  bool unique_point = false;
  std::optional<std::string> point;
  /// M does not contain the direct-sum ideal.
  bool excludes_direct_sum = false;
  /// sup M lies in M and in the Boolean center.
  bool sup_in_center = false;

  bool agree() const {
    return principal == unique_point && unique_point == excludes_direct_sum &&
           excludes_direct_sum == sup_in_center;
  }
};

/// Throws not_maximal unless exactly one coordinate is constrained.
PrincipalityReport principality_report(const SupportIdeal& ideal);

/// A / M_x, identified with the chain of x (the quotient map is p_x).
ChainSize quotient_by_maximal(const ProductAlgebra& algebra, std::string_view label);

/// (A_fin, A_inf), label order preserved.
std::pair<ProductAlgebra, ProductAlgebra> split_fin_inf(const ProductAlgebra& algebra);

/// Least n >= 1 with n*a = (n+1)*a.
std::int64_t archimedean_rank(const Element& a);

/// Membership vector over enumeration indices.
using ElementSet = std::vector<bool>;

/// Every ideal found by scanning all subsets that contain 0. Independent of
/// the support-ideal representation. Throws too_large when |A| exceeds
/// config.ideal_bound.
std::vector<ElementSet> brute_force_ideals(const ProductAlgebra& algebra,
                                           const OracleConfig& config = {});

/// Members of I as an ElementSet, for comparison with the oracle.
ElementSet element_set(const SupportIdeal& ideal, const OracleConfig& config = {});

/// Table from source enumeration index to target enumeration index.
using ElementMap = std::vector<std::uint64_t>;

/// Every map A -> B preserving 0, negation and truncated addition, found by an
/// exhaustive backtracking search over element tables. Throws too_large when
/// |B|^|A| exceeds config.hom_bound.
std::vector<ElementMap> brute_force_homs(const ProductAlgebra& source,
                                         const ProductAlgebra& target,
                                         const OracleConfig& config = {});

}  // namespace mvdual
