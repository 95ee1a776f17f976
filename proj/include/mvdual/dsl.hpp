#pragma once

// Text syntax for algebras, multisets, profiles, elements and MV terms.
//
//   algebra  := factor ("*" factor)*            labels x1, x2, ...
//             | "[" [label ":" chain ("," label ":" chain)*] "]"
//   factor   := "L" integer | "Linf"
//   multiset := "{" [label ":" mult ("," label ":" mult)*] "}"
//   mult     := integer | "inf"
//   profile  := "profile{" [mult ":" card ("," mult ":" card)*] "}"
//   card     := integer | "omega"
//   element  := value | "(" value ("," value)* ")"
//   term     := implies
//   implies  := join ("->" join)*
//   join     := meet ("\/" meet)*
//   meet     := oplus ("/\" oplus)*
//   oplus    := odot ("(+)" odot)*
//   odot     := unary ("(.)" unary)*
//   unary    := "~" unary | "0" | "1" | ident | "(" term ")"
//
// All binary connectives are left-associative.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "mvdual/algebra.hpp"
#include "mvdual/multiset.hpp"

namespace mvdual {

enum class TermKind { zero, one, var, neg, oplus, odot, meet, join, implies };

struct Term {
  TermKind kind = TermKind::zero;
  std::string name;  // variables only
  std::shared_ptr<const Term> lhs;
  std::shared_ptr<const Term> rhs;

  static Term constant(bool one);
  static Term variable(std::string name);
  static Term negation(Term operand);
  static Term binary(TermKind kind, Term lhs, Term rhs);

  friend bool operator==(const Term& a, const Term& b);
};

ProductAlgebra parse_algebra(std::string_view text);
EMultiset parse_multiset(std::string_view text);
Profile parse_profile(std::string_view text);
Term parse_term(std::string_view text);
/// A single value is accepted for one-factor algebras.
Element parse_element(std::string_view text, const ProductAlgebra& algebra);

using Environment = std::map<std::string, Element, std::less<>>;

/// Throws unbound_variable or algebra_mismatch.
Element eval_term(const Term& term, const Environment& env, const ProductAlgebra& algebra);

std::string render(const ProductAlgebra& algebra);
std::string render(const EMultiset& multiset);
std::string render(const Profile& profile);
std::string render(const Term& term);
std::string render(const Element& element);

/// Whatever parse_object recognized from the leading characters.
using ParsedObject = std::variant<ProductAlgebra, EMultiset, Profile>;

/// Dispatches on the first non-space character: "{" multiset, "profile{"
/// profile, anything else algebra.
ParsedObject parse_object(std::string_view text);

}  // namespace mvdual
