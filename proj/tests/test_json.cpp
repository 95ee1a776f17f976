#include <map>
#include <string>

#include "mvdual/json_io.hpp"
#include "support.hpp"

using namespace mvdual;
using mvdual::test::q;

namespace {

ChainSize L(std::int64_t n) { return ChainSize::finite(n); }

}  // namespace

TEST_CASE("algebra and element encodings") {
  const ProductAlgebra a = make_algebra({{"a", L(3)}, {"b", ChainSize::infinite()}});
  const Json j = to_json(a);
  CHECK(j == Json::parse(R"({"factors":[{"label":"a","chain":"L3"},{"label":"b","chain":"Linf"}]})"));
  CHECK(algebra_from_json(j) == a);
  const Element f = make_element(a, {q(1, 2), q(5, 7)});
  CHECK(to_json(f) == Json::parse(R"({"coords":{"a":"1/2","b":"5/7"}})"));
  CHECK(element_from_json(to_json(f), a) == f);
  CHECK_ERROR(element_from_json(Json::parse(R"({"coords":{"a":"1/3","b":"0"}})"), a),
              ErrorKind::not_in_chain);
}

TEST_CASE("ideal encoding") {
  const ProductAlgebra a = make_algebra({{"a", L(3)}, {"b", L(2)}});
  const SupportIdeal i = maximal_ideals(a).at(0);
  CHECK(to_json(i) == Json::parse(R"({"free":["b"]})"));
  CHECK(ideal_from_json(to_json(i), a) == i);
}

TEST_CASE("multiset and profile encodings") {
  const EMultiset x = make_multiset({{"a", Multiplicity::finite(1)}, {"b", Multiplicity::infinite()}});
  CHECK(to_json(x) == Json::parse(R"({"points":[{"label":"a","mult":"1"},{"label":"b","mult":"inf"}]})"));
  CHECK(multiset_from_json(to_json(x)) == x);
  const Profile p{{{Multiplicity::finite(2), Cardinality::omega()}}};
  CHECK(to_json(p) == Json::parse(R"({"entries":[{"mult":"2","card":"omega"}]})"));
  CHECK(profile_from_json(to_json(p)) == p);
}

TEST_CASE("hom and morphism encodings") {
  const ProductAlgebra a = make_algebra({{"a", L(2)}, {"b", L(3)}});
  const ContinuousHom h = projection(a, "b");
  CHECK(to_json(h)["index_map"] == Json::parse(R"({"b":"b"})"));
  CHECK(hom_from_json(to_json(h)) == h);
  const EMultiset x = make_multiset({{"a", Multiplicity::finite(4)}});
  const EMultiset y = make_multiset({{"b", Multiplicity::finite(2)}});
  const EMMorphism phi = validate_morphism(x, y, std::map<std::string, std::string>{{"a", "b"}});
  CHECK(to_json(phi)["map"] == Json::parse(R"({"a":"b"})"));
  CHECK(morphism_from_json(to_json(phi)) == phi);
}

TEST_CASE("malformed json") {
  CHECK_ERROR(algebra_from_json(Json::parse("[1,2]")), ErrorKind::invalid_json);
  CHECK_ERROR(algebra_from_json(Json::parse(R"({"factors":[{"label":"a"}]})")), ErrorKind::invalid_json);
  CHECK_ERROR(multiset_from_json(Json::parse(R"({"points":[{"label":"a","mult":"0"}]})")),
              ErrorKind::zero_multiplicity);
  CHECK_ERROR(algebra_from_json(Json::parse(R"({"factors":[{"label":"a","chain":"L1"}]})")),
              ErrorKind::invalid_chain_size);
}
