#pragma once

// Extended multisets <X, sigma : X -> {1, 2, ..., inf}>, their morphisms
// (maps whose target multiplicity divides every finite source multiplicity),
// and profiles: multiplicity -> cardinality summaries that also describe
// infinite index sets.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mvdual {

class Multiplicity {
 public:
  /// Throws zero_multiplicity for m < 1.
  static Multiplicity finite(std::int64_t m);
  static Multiplicity infinite() { return Multiplicity{0}; }

  bool is_finite() const noexcept { return m_ != 0; }
  bool is_infinite() const noexcept { return m_ == 0; }
  std::int64_t value() const noexcept { return m_; }

  friend bool operator==(Multiplicity, Multiplicity) = default;
  friend std::strong_ordering operator<=>(Multiplicity a, Multiplicity b) {
    if (a.m_ == b.m_) return std::strong_ordering::equal;
    if (a.is_infinite()) return std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    return a.m_ <=> b.m_;
  }

 private:
  explicit constexpr Multiplicity(std::int64_t m) : m_(m) {}
  std::int64_t m_;  // 0 encodes inf
};

/// A positive count or omega (countably infinite).
class Cardinality {
 public:
  static Cardinality finite(std::uint64_t n);
  static Cardinality omega() { return Cardinality{0}; }

  bool is_finite() const noexcept { return n_ != 0; }
  bool is_omega() const noexcept { return n_ == 0; }
  std::uint64_t value() const noexcept { return n_; }

  friend bool operator==(Cardinality, Cardinality) = default;

 private:
  explicit constexpr Cardinality(std::uint64_t n) : n_(n) {}
  std::uint64_t n_;  // 0 encodes omega
};

/// sigma(x) finite forces mu(y) finite with mu(y) | sigma(x).
bool admissible(Multiplicity source, Multiplicity target);

struct Point {
  std::string label;
  Multiplicity mult;

  friend bool operator==(const Point&, const Point&) = default;
};

class EMultiset {
 public:
  EMultiset() = default;

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const std::string& label(std::size_t i) const { return points_.at(i).label; }
  Multiplicity mult(std::size_t i) const { return points_.at(i).mult; }

  std::optional<std::size_t> position(std::string_view label) const;
  /// Throws unknown_label.
  std::size_t position_of(std::string_view label) const;

  friend bool operator==(const EMultiset&, const EMultiset&) = default;

 private:
  friend EMultiset make_multiset(std::vector<Point> points);
  explicit EMultiset(std::vector<Point> points) : points_(std::move(points)) {}
  std::vector<Point> points_;
};

/// Throws duplicate_label.
EMultiset make_multiset(std::vector<Point> points);

class EMMorphism {
 public:
  const EMultiset& source() const noexcept { return source_; }
  const EMultiset& target() const noexcept { return target_; }
  /// Source position -> target position.
  const std::vector<std::size_t>& map() const noexcept { return map_; }
  const std::string& image(std::string_view label) const {
    return target_.label(map_.at(source_.position_of(label)));
  }

  friend bool operator==(const EMMorphism&, const EMMorphism&) = default;

 private:
  friend EMMorphism validate_morphism(const EMultiset&, const EMultiset&,
                                      std::vector<std::size_t>);
  EMMorphism(EMultiset s, EMultiset t, std::vector<std::size_t> m)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}

  EMultiset source_;
  EMultiset target_;
  std::vector<std::size_t> map_;
};

/// Throws non_total (wrong length or out-of-range image) or
/// divisibility_violation.
EMMorphism validate_morphism(const EMultiset& source, const EMultiset& target,
                             std::vector<std::size_t> map);
/// Label form; every source label must be mapped to a target label.
EMMorphism validate_morphism(const EMultiset& source, const EMultiset& target,
                             const std::map<std::string, std::string>& map);

EMMorphism identity_morphism(const EMultiset& x);

/// psi after phi. Throws boundary_mismatch unless target(phi) = source(psi).
EMMorphism compose_morphisms(const EMMorphism& psi, const EMMorphism& phi);

/// Every morphism X -> Y, in lexicographic order of the point map.
std::vector<EMMorphism> enumerate_morphisms(const EMultiset& x, const EMultiset& y);

class Profile {
 public:
  using Entries = std::map<Multiplicity, Cardinality>;

  Profile() = default;
  explicit Profile(Entries entries) : entries_(std::move(entries)) {}

  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::optional<Cardinality> at(Multiplicity m) const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  Entries entries_;
};

/// entries(m) = |sigma^-1(m)|.
Profile profile_of(const EMultiset& x);

bool is_isomorphic(const Profile& p, const Profile& q);

std::string to_string(Multiplicity m);
std::string to_string(Cardinality c);

}  // namespace mvdual
