#include "mvdual/multiset.hpp"

#include <set>

#include "mvdual/error.hpp"

namespace mvdual {

Multiplicity Multiplicity::finite(std::int64_t m) {
  if (m < 1) {
    throw Error(ErrorKind::zero_multiplicity,
                "multiplicity must be at least 1, got " + std::to_string(m));
  }
  return Multiplicity{m};
}

Cardinality Cardinality::finite(std::uint64_t n) {
  if (n == 0) {
    throw Error(ErrorKind::out_of_range, "profile cardinalities are positive");
  }
  return Cardinality{n};
}

bool admissible(Multiplicity source, Multiplicity target) {
  if (source.is_infinite()) return true;
  return target.is_finite() && source.value() % target.value() == 0;
}

std::optional<std::size_t> EMultiset::position(std::string_view label) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].label == label) return i;
  }
  return std::nullopt;
}

std::size_t EMultiset::position_of(std::string_view label) const {
  if (auto p = position(label)) return *p;
  throw Error(ErrorKind::unknown_label, "no point labelled '" + std::string(label) + "'");
}

EMultiset make_multiset(std::vector<Point> points) {
  std::set<std::string> seen;
  for (const auto& p : points) {
    if (!seen.insert(p.label).second) {
      throw Error(ErrorKind::duplicate_label, "label '" + p.label + "' repeats");
    }
  }
  return EMultiset{std::move(points)};
}

EMMorphism validate_morphism(const EMultiset& source, const EMultiset& target,
                             std::vector<std::size_t> map) {
  if (map.size() != source.size()) {
    throw Error(ErrorKind::non_total, "point map must cover every source point");
  }
  for (std::size_t x = 0; x < map.size(); ++x) {
    if (map[x] >= target.size()) {
      throw Error(ErrorKind::non_total,
                  "image of '" + source.label(x) + "' is not a target point");
    }
    if (!admissible(source.mult(x), target.mult(map[x]))) {
      throw Error(ErrorKind::divisibility_violation,
                  "multiplicity " + to_string(target.mult(map[x])) + " of '" +
                      target.label(map[x]) + "' does not divide " +
                      to_string(source.mult(x)) + " of '" + source.label(x) + "'");
    }
  }
  return EMMorphism{source, target, std::move(map)};
}

EMMorphism validate_morphism(const EMultiset& source, const EMultiset& target,
                             const std::map<std::string, std::string>& map) {
  std::vector<std::size_t> positions;
  for (const auto& p : source.points()) {
    auto it = map.find(p.label);
    if (it == map.end()) {
      throw Error(ErrorKind::non_total, "point '" + p.label + "' has no image");
    }
    auto y = target.position(it->second);
    if (!y) {
      throw Error(ErrorKind::non_total,
                  "image '" + it->second + "' is not a target point");
    }
    positions.push_back(*y);
  }
  for (const auto& [label, image] : map) {
    if (!source.position(label)) {
      throw Error(ErrorKind::non_total, "'" + label + "' is not a source point");
    }
  }
  return validate_morphism(source, target, std::move(positions));
}

EMMorphism identity_morphism(const EMultiset& x) {
  std::vector<std::size_t> map(x.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return validate_morphism(x, x, std::move(map));
}

EMMorphism compose_morphisms(const EMMorphism& psi, const EMMorphism& phi) {
  if (!(phi.target() == psi.source())) {
    throw Error(ErrorKind::boundary_mismatch,
                "target of the first morphism is not the source of the second");
  }
  std::vector<std::size_t> map(phi.map().size());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = psi.map()[phi.map()[x]];
  return validate_morphism(phi.source(), psi.target(), std::move(map));
}

std::vector<EMMorphism> enumerate_morphisms(const EMultiset& x, const EMultiset& y) {
  std::vector<std::vector<std::size_t>> choices(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (admissible(x.mult(i), y.mult(j))) choices[i].push_back(j);
    }
    if (choices[i].empty()) return {};
  }
  std::vector<EMMorphism> out;
  std::vector<std::size_t> pick(x.size(), 0);
  while (true) {
    std::vector<std::size_t> map(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) map[i] = choices[i][pick[i]];
    out.push_back(validate_morphism(x, y, std::move(map)));
    std::size_t i = x.size();
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
    if (x.size() == 0) return out;
  }
}

std::optional<Cardinality> Profile::at(Multiplicity m) const {
  auto it = entries_.find(m);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Profile profile_of(const EMultiset& x) {
  std::map<Multiplicity, std::uint64_t> counts;
  for (const auto& p : x.points()) ++counts[p.mult];
  Profile::Entries entries;
  for (const auto& [m, n] : counts) entries.emplace(m, Cardinality::finite(n));
  return Profile{std::move(entries)};
}

bool is_isomorphic(const Profile& p, const Profile& q) { return p == q; }

std::string to_string(Multiplicity m) {
  return m.is_infinite() ? "inf" : std::to_string(m.value());
}

std::string to_string(Cardinality c) {
  return c.is_omega() ? "omega" : std::to_string(c.value());
}

}  // namespace mvdual
