#include "mvdual/algebra.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "mvdual/error.hpp"

namespace mvdual {

namespace {

std::string describe(const ProductAlgebra& algebra) {
  if (algebra.empty()) return "[]";
  std::string out;
  for (const auto& f : algebra.factors()) {
    if (!out.empty()) out += " * ";
    out += f.label + ":" + to_string(f.chain);
  }
  return out;
}

void require_same_algebra(const ProductAlgebra& a, const ProductAlgebra& b) {
  if (!(a == b)) {
    throw Error(ErrorKind::algebra_mismatch,
                "elements of " + describe(a) + " and " + describe(b));
  }
}

// Saturating product used for |B|^|A| style bounds.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

}  // namespace

ProductAlgebra::ProductAlgebra() : data_(std::make_shared<const Data>()) {}

std::optional<std::size_t> ProductAlgebra::position(std::string_view label) const {
  const auto& fs = data_->factors;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].label == label) return i;
  }
  return std::nullopt;
}

std::size_t ProductAlgebra::position_of(std::string_view label) const {
  if (auto p = position(label)) return *p;
  throw Error(ErrorKind::unknown_label,
              "no factor labelled '" + std::string(label) + "'");
}

bool ProductAlgebra::all_finite() const {
  return std::all_of(factors().begin(), factors().end(),
                     [](const Factor& f) { return f.chain.is_finite(); });
}

std::optional<std::uint64_t> ProductAlgebra::cardinality() const {
  std::uint64_t n = 1;
  for (const auto& f : factors()) {
    if (f.chain.is_infinite()) return std::nullopt;
    n = saturating_mul(n, static_cast<std::uint64_t>(f.chain.size()));
    if (n == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return n;
}

ProductAlgebra make_algebra(std::vector<Factor> factors) {
  std::set<std::string> seen;
  for (const auto& f : factors) {
    if (!seen.insert(f.label).second) {
      throw Error(ErrorKind::duplicate_label, "label '" + f.label + "' repeats");
    }
  }
  return ProductAlgebra{std::make_shared<const ProductAlgebra::Data>(
      ProductAlgebra::Data{std::move(factors)})};
}

ProductAlgebra make_algebra(
    std::initializer_list<std::pair<std::string, ChainSize>> entries) {
  std::vector<Factor> factors;
  for (const auto& [label, chain] : entries) factors.push_back({label, chain});
  return make_algebra(std::move(factors));
}

Element make_element(const ProductAlgebra& algebra, std::vector<ChainValue> coords) {
  if (coords.size() != algebra.dimension()) {
    throw Error(ErrorKind::algebra_mismatch,
                "expected " + std::to_string(algebra.dimension()) +
                    " coordinates, got " + std::to_string(coords.size()));
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].chain() != algebra.chain(i)) {
      throw Error(ErrorKind::algebra_mismatch,
                  "coordinate '" + algebra.label(i) + "' lives in " +
                      to_string(coords[i].chain()) + ", expected " +
                      to_string(algebra.chain(i)));
    }
  }
  return Element{algebra, std::move(coords)};
}

Element make_element(const ProductAlgebra& algebra, std::span<const Rational> values) {
  if (values.size() != algebra.dimension()) {
    throw Error(ErrorKind::algebra_mismatch,
                "expected " + std::to_string(algebra.dimension()) +
                    " coordinates, got " + std::to_string(values.size()));
  }
  std::vector<ChainValue> coords;
  coords.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    coords.push_back(make_chain_value(values[i], algebra.chain(i)));
  }
  return make_element(algebra, std::move(coords));
}

Element make_element(const ProductAlgebra& algebra,
                     std::initializer_list<Rational> values) {
  return make_element(algebra, std::span<const Rational>(values.begin(), values.size()));
}

Element zero(const ProductAlgebra& algebra) {
  std::vector<ChainValue> coords;
  for (const auto& f : algebra.factors()) coords.push_back(chain_zero(f.chain));
  return make_element(algebra, std::move(coords));
}

Element unit(const ProductAlgebra& algebra) {
  std::vector<ChainValue> coords;
  for (const auto& f : algebra.factors()) coords.push_back(chain_one(f.chain));
  return make_element(algebra, std::move(coords));
}

Element pointwise_op(MvOp kind, const Element& f, const std::optional<Element>& g) {
  std::vector<ChainValue> coords;
  coords.reserve(f.coords().size());
  if (kind == MvOp::neg) {
    for (const auto& c : f.coords()) coords.push_back(neg(c));
    return make_element(f.algebra(), std::move(coords));
  }
  if (!g) throw std::invalid_argument("binary MV operation needs two operands");
  require_same_algebra(f.algebra(), g->algebra());
  for (std::size_t i = 0; i < f.coords().size(); ++i) {
    coords.push_back(mv_op(kind, f[i], (*g)[i]));
  }
  return make_element(f.algebra(), std::move(coords));
}

Element oplus(const Element& f, const Element& g) { return pointwise_op(MvOp::oplus, f, g); }
Element neg(const Element& f) { return pointwise_op(MvOp::neg, f); }
Element odot(const Element& f, const Element& g) { return pointwise_op(MvOp::odot, f, g); }
Element meet(const Element& f, const Element& g) { return pointwise_op(MvOp::meet, f, g); }
Element join(const Element& f, const Element& g) { return pointwise_op(MvOp::join, f, g); }

Element nat_mult(std::int64_t n, const Element& f) {
  std::vector<ChainValue> coords;
  for (const auto& c : f.coords()) coords.push_back(nat_mult(n, c));
  return make_element(f.algebra(), std::move(coords));
}

bool leq_elem(const Element& f, const Element& g) {
  require_same_algebra(f.algebra(), g.algebra());
  for (std::size_t i = 0; i < f.coords().size(); ++i) {
    if (f[i].value() > g[i].value()) return false;
  }
  return true;
}

Element characteristic(const ProductAlgebra& algebra, const std::vector<bool>& on) {
  if (on.size() != algebra.dimension()) {
    throw Error(ErrorKind::algebra_mismatch, "support vector has wrong length");
  }
  std::vector<ChainValue> coords;
  for (std::size_t i = 0; i < on.size(); ++i) {
    coords.push_back(on[i] ? chain_one(algebra.chain(i)) : chain_zero(algebra.chain(i)));
  }
  return make_element(algebra, std::move(coords));
}

Element characteristic(const ProductAlgebra& algebra,
                       std::span<const std::string> labels) {
  std::vector<bool> on(algebra.dimension(), false);
  for (const auto& l : labels) on[algebra.position_of(l)] = true;
  return characteristic(algebra, on);
}

std::vector<bool> support(const Element& f) {
  std::vector<bool> out;
  for (const auto& c : f.coords()) out.push_back(!c.is_zero());
  return out;
}

void for_each_element(const ProductAlgebra& algebra,
                      const std::function<void(const Element&)>& visit,
                      const OracleConfig& config) {
  if (!algebra.all_finite()) {
    throw Error(ErrorKind::infinite_chain_present,
                "cannot enumerate " + describe(algebra) + ": it has an Linf factor");
  }
  auto size = algebra.cardinality();
  if (!size || *size > config.element_bound) {
    throw Error(ErrorKind::bound_exceeded,
                describe(algebra) + " has more than " +
                    std::to_string(config.element_bound) + " elements");
  }
  const std::size_t d = algebra.dimension();
  std::vector<std::int64_t> digits(d, 0);
  std::vector<ChainValue> coords;
  for (std::size_t i = 0; i < d; ++i) coords.push_back(chain_zero(algebra.chain(i)));
  for (std::uint64_t k = 0; k < *size; ++k) {
    visit(make_element(algebra, coords));
    // odometer, last factor fastest
    for (std::size_t i = d; i-- > 0;) {
      const std::int64_t top = algebra.chain(i).size() - 1;
      if (++digits[i] <= top) {
        coords[i] = make_chain_value(Rational{digits[i], top}, algebra.chain(i));
        break;
      }
      digits[i] = 0;
      coords[i] = chain_zero(algebra.chain(i));
    }
  }
}

std::vector<Element> enumerate_elements(const ProductAlgebra& algebra,
                                        const OracleConfig& config) {
  std::vector<Element> out;
  for_each_element(algebra, [&](const Element& f) { out.push_back(f); }, config);
  return out;
}

Element sample_element(const ProductAlgebra& algebra, std::mt19937_64& rng,
                       std::int64_t max_denominator) {
  std::vector<ChainValue> coords;
  for (const auto& f : algebra.factors()) {
    const std::int64_t den =
        f.chain.is_finite()
            ? f.chain.size() - 1
            : std::uniform_int_distribution<std::int64_t>(1, max_denominator)(rng);
    const std::int64_t num = std::uniform_int_distribution<std::int64_t>(0, den)(rng);
    coords.push_back(make_chain_value(Rational{num, den}, f.chain));
  }
  return make_element(algebra, std::move(coords));
}

bool is_enumerable(const ProductAlgebra& algebra, const OracleConfig& config) {
  auto size = algebra.cardinality();
  return size && *size <= config.element_bound;
}

void for_each_checked_element(const ProductAlgebra& algebra,
                              const std::function<void(const Element&)>& visit,
                              const OracleConfig& config) {
  if (is_enumerable(algebra, config)) {
    for_each_element(algebra, visit, config);
    return;
  }
  std::mt19937_64 rng(config.seed);
  for (std::size_t i = 0; i < config.samples; ++i) {
    visit(sample_element(algebra, rng, config.sample_denominator));
  }
}

std::uint64_t element_index(const Element& f) {
  const auto& algebra = f.algebra();
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < algebra.dimension(); ++i) {
    const ChainSize c = algebra.chain(i);
    if (c.is_infinite()) {
      throw Error(ErrorKind::infinite_chain_present, "element_index needs finite chains");
    }
    const Rational scaled = f[i].value() * (c.size() - 1);
    index = index * static_cast<std::uint64_t>(c.size()) +
            static_cast<std::uint64_t>(scaled.numerator());
  }
  return index;
}

bool boolean_center_contains(const Element& f) {
  return std::all_of(f.coords().begin(), f.coords().end(), [](const ChainValue& c) {
    return c.is_zero() || c.is_one();
  });
}

SupportIdeal::SupportIdeal(ProductAlgebra algebra, std::vector<bool> free)
    : algebra_(std::move(algebra)), free_(std::move(free)) {
  if (free_.size() != algebra_.dimension()) {
    throw Error(ErrorKind::algebra_mismatch, "support ideal has wrong length");
  }
}

std::size_t SupportIdeal::free_count() const {
  return static_cast<std::size_t>(std::count(free_.begin(), free_.end(), true));
}

std::vector<std::string> SupportIdeal::free_labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < free_.size(); ++i) {
    if (free_[i]) out.push_back(algebra_.label(i));
  }
  return out;
}

SupportIdeal support_ideal(const ProductAlgebra& algebra,
                           std::span<const std::string> free_labels) {
  std::vector<bool> free(algebra.dimension(), false);
  for (const auto& l : free_labels) free[algebra.position_of(l)] = true;
  return SupportIdeal{algebra, std::move(free)};
}

SupportIdeal principal_ideal(const Element& a) {
  return SupportIdeal{a.algebra(), support(a)};
}

bool ideal_membership(const Element& f, const SupportIdeal& ideal) {
  require_same_algebra(f.algebra(), ideal.algebra());
  for (std::size_t i = 0; i < f.coords().size(); ++i) {
    if (!ideal.is_free(i) && !f[i].is_zero()) return false;
  }
  return true;
}

Element ideal_sup(const SupportIdeal& ideal) {
  return characteristic(ideal.algebra(), ideal.free());
}

std::vector<SupportIdeal> maximal_ideals(const ProductAlgebra& algebra) {
  std::vector<SupportIdeal> out;
  for (std::size_t x = 0; x < algebra.dimension(); ++x) {
    std::vector<bool> free(algebra.dimension(), true);
    free[x] = false;
    out.emplace_back(algebra, std::move(free));
  }
  return out;
}

SupportIdeal direct_sum_ideal(const ProductAlgebra& algebra) {
  // f(x) = 0 for all but finitely many x holds for every f, so no coordinate
  // is constrained.
  return SupportIdeal{algebra, std::vector<bool>(algebra.dimension(), true)};
}

PrincipalityReport principality_report(const SupportIdeal& ideal) {
  const auto& algebra = ideal.algebra();
  if (algebra.empty() || ideal.free_count() + 1 != algebra.dimension()) {
    throw Error(ErrorKind::not_maximal,
                "ideal constrains " +
                    std::to_string(algebra.dimension() - ideal.free_count()) +
                    " coordinates; a maximal ideal constrains exactly one");
  }
  PrincipalityReport report;

  // (1) the characteristic element of the free coordinates generates M.
  Element candidate = characteristic(algebra, ideal.free());
  if (principal_ideal(candidate) == ideal) {
    report.principal = true;
    report.generator = candidate;
  }

  // (2) points x whose projection kernel is M.
  std::vector<std::size_t> points;
  for (std::size_t x = 0; x < algebra.dimension(); ++x) {
    std::vector<bool> kernel(algebra.dimension(), true);
    kernel[x] = false;
    if (SupportIdeal{algebra, kernel} == ideal) points.push_back(x);
  }
  if (points.size() == 1) {
    report.unique_point = true;
    report.point = algebra.label(points.front());
  }

  // (3) containment of the direct-sum ideal, coordinate by coordinate.
  const SupportIdeal sum = direct_sum_ideal(algebra);
  bool contains_sum = true;
  for (std::size_t x = 0; x < algebra.dimension(); ++x) {
    if (sum.is_free(x) && !ideal.is_free(x)) contains_sum = false;
  }
  report.excludes_direct_sum = !contains_sum;

  // (4)
  const Element sup = ideal_sup(ideal);
  report.sup_in_center = ideal_membership(sup, ideal) && boolean_center_contains(sup);
  return report;
}

ChainSize quotient_by_maximal(const ProductAlgebra& algebra, std::string_view label) {
  return algebra.chain(algebra.position_of(label));
}

std::pair<ProductAlgebra, ProductAlgebra> split_fin_inf(const ProductAlgebra& algebra) {
  std::vector<Factor> fin, inf;
  for (const auto& f : algebra.factors()) {
    (f.chain.is_finite() ? fin : inf).push_back(f);
  }
  return {make_algebra(std::move(fin)), make_algebra(std::move(inf))};
}

std::int64_t archimedean_rank(const Element& a) {
  std::int64_t rank = 1;
  for (const auto& c : a.coords()) {
    if (c.is_zero()) continue;
    // ceil(1/v) for v = p/q is ceil(q/p)
    const auto& v = c.value();
    const std::int64_t r = (v.denominator() + v.numerator() - 1) / v.numerator();
    rank = std::max(rank, r);
  }
  return rank;
}

namespace {

struct Tables {
  std::vector<Element> elements;
  std::vector<std::uint64_t> neg;
  std::vector<std::uint64_t> oplus;  // row-major |A| x |A|
};

Tables operation_tables(const ProductAlgebra& algebra, const OracleConfig& config) {
  Tables t;
  t.elements = enumerate_elements(algebra, config);
  const std::size_t n = t.elements.size();
  t.neg.resize(n);
  t.oplus.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    t.neg[i] = element_index(neg(t.elements[i]));
    for (std::size_t j = 0; j < n; ++j) {
      t.oplus[i * n + j] = element_index(oplus(t.elements[i], t.elements[j]));
    }
  }
  return t;
}

}  // namespace

std::vector<ElementSet> brute_force_ideals(const ProductAlgebra& algebra,
                                           const OracleConfig& config) {
  if (!algebra.all_finite()) {
    throw Error(ErrorKind::infinite_chain_present,
                "ideal scan needs a finite algebra, got " + describe(algebra));
  }
  const auto size = algebra.cardinality();
  if (!size || *size > config.ideal_bound || *size > 24) {
    throw Error(ErrorKind::too_large,
                describe(algebra) + " is too large for a subset scan");
  }
  const Tables t = operation_tables(algebra, config);
  const std::size_t n = t.elements.size();

  std::vector<std::uint32_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (leq_elem(t.elements[j], t.elements[i])) below[i] |= 1u << j;
    }
  }
  const std::uint64_t zero_index = element_index(zero(algebra));

  std::vector<ElementSet> ideals;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask >> zero_index & 1)) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      if ((below[i] & mask) != below[i]) ok = false;
      for (std::size_t j = i; ok && j < n; ++j) {
        if ((mask >> j & 1) && !(mask >> t.oplus[i * n + j] & 1)) ok = false;
      }
    }
    if (!ok) continue;
    ElementSet set(n, false);
    for (std::size_t i = 0; i < n; ++i) set[i] = (mask >> i & 1) != 0;
    ideals.push_back(std::move(set));
  }
  return ideals;
}

ElementSet element_set(const SupportIdeal& ideal, const OracleConfig& config) {
  ElementSet set;
  for_each_element(
      ideal.algebra(),
      [&](const Element& f) { set.push_back(ideal_membership(f, ideal)); }, config);
  return set;
}

std::vector<ElementMap> brute_force_homs(const ProductAlgebra& source,
                                         const ProductAlgebra& target,
                                         const OracleConfig& config) {
  if (!source.all_finite() || !target.all_finite()) {
    throw Error(ErrorKind::infinite_chain_present,
                "hom search needs finite algebras");
  }
  const std::uint64_t na = *source.cardinality();
  const std::uint64_t nb = *target.cardinality();
  std::uint64_t maps = 1;
  for (std::uint64_t i = 0; i < na; ++i) {
    maps = saturating_mul(maps, nb);
    if (maps > config.hom_bound) {
      throw Error(ErrorKind::too_large,
                  "|B|^|A| exceeds " + std::to_string(config.hom_bound));
    }
  }

  const Tables a = operation_tables(source, config);
  const Tables b = operation_tables(target, config);

  // Each constraint is checked once, when its largest index gets assigned.
  struct Constraint {
    std::uint64_t lhs, rhs, result;
    bool unary;
  };
  std::vector<std::vector<Constraint>> due(na);
  for (std::uint64_t i = 0; i < na; ++i) {
    const std::uint64_t r = a.neg[i];
    due[std::max(i, r)].push_back({i, i, r, true});
    for (std::uint64_t j = i; j < na; ++j) {
      const std::uint64_t s = a.oplus[i * na + j];
      due[std::max({i, j, s})].push_back({i, j, s, false});
    }
  }
  const std::uint64_t zero_a = element_index(zero(source));
  const std::uint64_t zero_b = element_index(zero(target));

  std::vector<ElementMap> found;
  ElementMap table(na, 0);
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t k) {
    if (k == na) {
      found.push_back(table);
      return;
    }
    for (std::uint64_t image = 0; image < nb; ++image) {
      if (k == zero_a && image != zero_b) continue;
      table[k] = image;
      bool ok = true;
      for (const auto& c : due[k]) {
        const std::uint64_t expect =
            c.unary ? b.neg[table[c.lhs]] : b.oplus[table[c.lhs] * nb + table[c.rhs]];
        if (table[c.result] != expect) {
          ok = false;
          break;
        }
      }
      if (ok) extend(k + 1);
    }
  };
  extend(0);
  return found;
}

}  // namespace mvdual
