#include "mvdual/json_io.hpp"

#include "mvdual/error.hpp"

namespace mvdual {

namespace {

template <class F>
auto decoding(std::string_view what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::invalid_json, "malformed " + std::string(what) + ": " + e.what());
  }
}

Multiplicity parse_mult(const std::string& s) {
  if (s == "inf") return Multiplicity::infinite();
  const Rational r = parse_rational(s);
  if (r.denominator() != 1) throw Error(ErrorKind::invalid_json, "multiplicity must be an integer");
  return Multiplicity::finite(r.numerator());
}

}  // namespace

Json to_json(const ProductAlgebra& algebra) {
  Json factors = Json::array();
  for (const auto& f : algebra.factors()) {
    factors.push_back({{"label", f.label}, {"chain", to_string(f.chain)}});
  }
  return {{"factors", factors}};
}

Json to_json(const Element& element) {
  Json coords = Json::object();
  for (std::size_t i = 0; i < element.coords().size(); ++i) {
    coords[element.algebra().label(i)] = to_string(element[i]);
  }
  return {{"coords", coords}};
}

Json to_json(const SupportIdeal& ideal) { return {{"free", ideal.free_labels()}}; }

Json to_json(const EMultiset& multiset) {
  Json points = Json::array();
  for (const auto& p : multiset.points()) {
    points.push_back({{"label", p.label}, {"mult", to_string(p.mult)}});
  }
  return {{"points", points}};
}

Json to_json(const Profile& profile) {
  Json entries = Json::array();
  for (const auto& [m, c] : profile.entries()) {
    entries.push_back({{"mult", to_string(m)}, {"card", to_string(c)}});
  }
  return {{"entries", entries}};
}

Json to_json(const ContinuousHom& hom) {
  Json map = Json::object();
  for (std::size_t y = 0; y < hom.index_map().size(); ++y) {
    map[hom.target().label(y)] = hom.source().label(hom.index_map()[y]);
  }
  return {{"source", to_json(hom.source())}, {"target", to_json(hom.target())}, {"index_map", map}};
}

Json to_json(const EMMorphism& morphism) {
  Json map = Json::object();
  for (std::size_t x = 0; x < morphism.map().size(); ++x) {
    map[morphism.source().label(x)] = morphism.target().label(morphism.map()[x]);
  }
  return {{"source", to_json(morphism.source())},
          {"target", to_json(morphism.target())},
          {"map", map}};
}

ProductAlgebra algebra_from_json(const Json& j) {
  return decoding("algebra", [&] {
    std::vector<Factor> factors;
    for (const auto& f : j.at("factors")) {
      factors.push_back(
          {f.at("label").get<std::string>(), parse_chain_size(f.at("chain").get<std::string>())});
    }
    return make_algebra(std::move(factors));
  });
}

Element element_from_json(const Json& j, const ProductAlgebra& algebra) {
  return decoding("element", [&] {
    const Json& coords = j.at("coords");
    if (!coords.is_object() || coords.size() != algebra.dimension()) {
      throw Error(ErrorKind::algebra_mismatch, "element must give one coordinate per factor");
    }
    std::vector<Rational> values;
    for (const auto& f : algebra.factors()) {
      values.push_back(parse_rational(coords.at(f.label).get<std::string>()));
    }
    return make_element(algebra, std::span<const Rational>(values));
  });
}

SupportIdeal ideal_from_json(const Json& j, const ProductAlgebra& algebra) {
  return decoding("ideal", [&] {
    const auto labels = j.at("free").get<std::vector<std::string>>();
    return support_ideal(algebra, labels);
  });
}

EMultiset multiset_from_json(const Json& j) {
  return decoding("multiset", [&] {
    std::vector<Point> points;
    for (const auto& p : j.at("points")) {
      points.push_back({p.at("label").get<std::string>(), parse_mult(p.at("mult").get<std::string>())});
    }
    return make_multiset(std::move(points));
  });
}

Profile profile_from_json(const Json& j) {
  return decoding("profile", [&] {
    Profile::Entries entries;
    for (const auto& e : j.at("entries")) {
      const std::string card = e.at("card").get<std::string>();
      Cardinality c = Cardinality::omega();
      if (card != "omega") {
        const Rational n = parse_rational(card);
        if (n.denominator() != 1 || n.numerator() < 1) {
          throw Error(ErrorKind::invalid_json, "cardinality must be a positive integer or omega");
        }
        c = Cardinality::finite(static_cast<std::uint64_t>(n.numerator()));
      }
      if (!entries.emplace(parse_mult(e.at("mult").get<std::string>()), c).second) {
        throw Error(ErrorKind::invalid_json, "multiplicity listed twice");
      }
    }
    return Profile{std::move(entries)};
  });
}

ContinuousHom hom_from_json(const Json& j) {
  return decoding("hom", [&] {
    return make_continuous_hom(algebra_from_json(j.at("source")), algebra_from_json(j.at("target")),
                               j.at("index_map").get<std::map<std::string, std::string>>());
  });
}

EMMorphism morphism_from_json(const Json& j) {
  return decoding("morphism", [&] {
    return validate_morphism(multiset_from_json(j.at("source")), multiset_from_json(j.at("target")),
                             j.at("map").get<std::map<std::string, std::string>>());
  });
}

}  // namespace mvdual
