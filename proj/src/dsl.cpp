#include "mvdual/dsl.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "mvdual/error.hpp"

namespace mvdual {

Term Term::constant(bool one) { return Term{one ? TermKind::one : TermKind::zero, {}, {}, {}}; }

Term Term::variable(std::string name) { return Term{TermKind::var, std::move(name), {}, {}}; }

Term Term::negation(Term operand) {
  return Term{TermKind::neg, {}, std::make_shared<const Term>(std::move(operand)), {}};
}

Term Term::binary(TermKind kind, Term lhs, Term rhs) {
  return Term{kind, {}, std::make_shared<const Term>(std::move(lhs)),
              std::make_shared<const Term>(std::move(rhs))};
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.name != b.name) return false;
  auto same = [](const std::shared_ptr<const Term>& x, const std::shared_ptr<const Term>& y) {
    if (!x || !y) return !x && !y;
    return *x == *y;
  };
  return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
}

namespace {

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  std::size_t pos() const { return pos_; }

  bool peek(std::string_view token) {
    skip_space();
    return text_.substr(pos_, token.size()) == token;
  }
  bool accept(std::string_view token) {
    if (!peek(token)) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::string label() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a label");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, out);
    if (start == pos_ || ec != std::errc{}) {
      pos_ = start;
      fail("expected an integer");
    }
    return out;
  }

  /// p or p/q
  Rational rational() {
    const std::size_t start = (skip_space(), pos_);
    const std::int64_t num = integer();
    if (!accept("/")) return Rational{num};
    const std::int64_t den = integer();
    if (den == 0) fail_at(start, ErrorKind::syntax_error, "zero denominator");
    return Rational{num, den};
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& what) const {
    fail_at(pos_, ErrorKind::syntax_error, what);
  }
  [[noreturn]] static void fail_at(std::size_t pos, ErrorKind kind, const std::string& what) {
    throw ParseError(kind, pos, what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

ChainSize chain(Cursor& in) {
  in.skip_space();
  const std::size_t start = in.pos();
  if (in.accept("Linf")) return ChainSize::infinite();
  in.expect("L");
  const std::int64_t n = in.integer();
  if (n < 2) {
    Cursor::fail_at(start, ErrorKind::invalid_chain_size,
                    "chain L" + std::to_string(n) + " needs at least 2 elements");
  }
  return ChainSize::finite(n);
}

Multiplicity multiplicity(Cursor& in) {
  in.skip_space();
  const std::size_t start = in.pos();
  if (in.accept("inf")) return Multiplicity::infinite();
  const std::int64_t m = in.integer();
  if (m < 1) Cursor::fail_at(start, ErrorKind::zero_multiplicity, "multiplicity must be at least 1");
  return Multiplicity::finite(m);
}

template <class Item>
void comma_list(Cursor& in, std::string_view close, Item&& item) {
  if (in.accept(close)) return;
  do {
    item();
  } while (in.accept(","));
  in.expect(close);
}

// Binding strength; atoms bind tightest.
int level(TermKind k) {
  switch (k) {
    case TermKind::implies: return 1;
    case TermKind::join: return 2;
    case TermKind::meet: return 3;
    case TermKind::oplus: return 4;
    case TermKind::odot: return 5;
    case TermKind::neg: return 6;
    default: return 7;
  }
}

std::string_view symbol(TermKind k) {
  switch (k) {
    case TermKind::implies: return "->";
    case TermKind::join: return "\\/";
    case TermKind::meet: return "/\\";
    case TermKind::oplus: return "(+)";
    case TermKind::odot: return "(.)";
    default: return "";
  }
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : in_(text) {}

  Term parse() {
    Term t = binary_level(1);
    in_.finish();
    return t;
  }

 private:
  static constexpr TermKind kByLevel[] = {TermKind::implies, TermKind::join, TermKind::meet,
                                          TermKind::oplus, TermKind::odot};

  Term binary_level(int lvl) {
    if (lvl > 5) return unary();
    const TermKind kind = kByLevel[lvl - 1];
    Term lhs = binary_level(lvl + 1);
    while (in_.accept(symbol(kind))) lhs = Term::binary(kind, std::move(lhs), binary_level(lvl + 1));
    return lhs;
  }

  Term unary() {
    if (in_.accept("~")) return Term::negation(unary());
    in_.skip_space();
    if (in_.peek("(+)") || in_.peek("(.)")) in_.fail("operator without left operand");
    if (in_.accept("(")) {
      Term t = binary_level(1);
      in_.expect(")");
      return t;
    }
    if (in_.at_end()) in_.fail("unexpected end of term");
    const std::size_t start = in_.pos();
    std::string word = in_.label();
    if (word == "0" || word == "1") return Term::constant(word == "1");
    if (std::isdigit(static_cast<unsigned char>(word.front()))) {
      Cursor::fail_at(start, ErrorKind::syntax_error, "identifiers cannot start with a digit");
    }
    return Term::variable(std::move(word));
  }

  Cursor in_;
};

void render_term(const Term& t, std::string& out) {
  switch (t.kind) {
    case TermKind::zero: out += "0"; return;
    case TermKind::one: out += "1"; return;
    case TermKind::var: out += t.name; return;
    case TermKind::neg: {
      out += "~";
      const bool wrap = level(t.lhs->kind) < level(TermKind::neg);
      if (wrap) out += "(";
      render_term(*t.lhs, out);
      if (wrap) out += ")";
      return;
    }
    default: {
      const int me = level(t.kind);
      const bool wrap_lhs = level(t.lhs->kind) < me;
      const bool wrap_rhs = level(t.rhs->kind) <= me;
      if (wrap_lhs) out += "(";
      render_term(*t.lhs, out);
      if (wrap_lhs) out += ")";
      out += " ";
      out += symbol(t.kind);
      out += " ";
      if (wrap_rhs) out += "(";
      render_term(*t.rhs, out);
      if (wrap_rhs) out += ")";
    }
  }
}

bool auto_labelled(const ProductAlgebra& algebra) {
  for (std::size_t i = 0; i < algebra.dimension(); ++i) {
    if (algebra.label(i) != "x" + std::to_string(i + 1)) return false;
  }
  return !algebra.empty();
}

}  // namespace

ProductAlgebra parse_algebra(std::string_view text) {
  Cursor in(text);
  std::vector<Factor> factors;
  if (in.accept("[")) {
    comma_list(in, "]", [&] {
      std::string label = in.label();
      in.expect(":");
      factors.push_back({std::move(label), chain(in)});
    });
  } else {
    do {
      factors.push_back({"x" + std::to_string(factors.size() + 1), chain(in)});
    } while (in.accept("*"));
  }
  in.finish();
  return make_algebra(std::move(factors));
}

EMultiset parse_multiset(std::string_view text) {
  Cursor in(text);
  std::vector<Point> points;
  in.expect("{");
  comma_list(in, "}", [&] {
    std::string label = in.label();
    in.expect(":");
    points.push_back({std::move(label), multiplicity(in)});
  });
  in.finish();
  return make_multiset(std::move(points));
}

Profile parse_profile(std::string_view text) {
  Cursor in(text);
  Profile::Entries entries;
  in.expect("profile{");
  comma_list(in, "}", [&] {
    const std::size_t start = (in.skip_space(), in.pos());
    Multiplicity m = multiplicity(in);
    in.expect(":");
    Cardinality c = Cardinality::omega();
    if (!in.accept("omega")) {
      const std::size_t at = (in.skip_space(), in.pos());
      const std::int64_t n = in.integer();
      if (n < 1) Cursor::fail_at(at, ErrorKind::syntax_error, "cardinality must be positive");
      c = Cardinality::finite(static_cast<std::uint64_t>(n));
    }
    if (!entries.emplace(m, c).second) {
      Cursor::fail_at(start, ErrorKind::duplicate_label, "multiplicity listed twice");
    }
  });
  in.finish();
  return Profile{std::move(entries)};
}

Term parse_term(std::string_view text) { return TermParser{text}.parse(); }

Element parse_element(std::string_view text, const ProductAlgebra& algebra) {
  Cursor in(text);
  std::vector<Rational> values;
  if (in.accept("(")) {
    comma_list(in, ")", [&] { values.push_back(in.rational()); });
  } else {
    values.push_back(in.rational());
  }
  in.finish();
  return make_element(algebra, std::span<const Rational>(values));
}

Element eval_term(const Term& term, const Environment& env, const ProductAlgebra& algebra) {
  switch (term.kind) {
    case TermKind::zero: return zero(algebra);
    case TermKind::one: return unit(algebra);
    case TermKind::var: {
      auto it = env.find(term.name);
      if (it == env.end()) {
        throw Error(ErrorKind::unbound_variable, "variable '" + term.name + "' is unbound");
      }
      if (!(it->second.algebra() == algebra)) {
        throw Error(ErrorKind::algebra_mismatch,
                    "variable '" + term.name + "' is bound outside the algebra");
      }
      return it->second;
    }
    case TermKind::neg: return neg(eval_term(*term.lhs, env, algebra));
    case TermKind::implies:
      return oplus(neg(eval_term(*term.lhs, env, algebra)), eval_term(*term.rhs, env, algebra));
    case TermKind::oplus:
    case TermKind::odot:
    case TermKind::meet:
    case TermKind::join: {
      static constexpr auto op = [](TermKind k) {
        switch (k) {
          case TermKind::oplus: return MvOp::oplus;
          case TermKind::odot: return MvOp::odot;
          case TermKind::meet: return MvOp::meet;
          default: return MvOp::join;
        }
      };
      return pointwise_op(op(term.kind), eval_term(*term.lhs, env, algebra),
                          eval_term(*term.rhs, env, algebra));
    }
  }
  return zero(algebra);
}

std::string render(const ProductAlgebra& algebra) {
  std::string out;
  if (auto_labelled(algebra)) {
    for (const auto& f : algebra.factors()) {
      if (!out.empty()) out += " * ";
      out += to_string(f.chain);
    }
    return out;
  }
  out = "[";
  for (std::size_t i = 0; i < algebra.dimension(); ++i) {
    if (i) out += ", ";
    out += algebra.label(i) + ":" + to_string(algebra.chain(i));
  }
  return out + "]";
}

std::string render(const EMultiset& multiset) {
  std::string out = "{";
  for (std::size_t i = 0; i < multiset.size(); ++i) {
    if (i) out += ", ";
    out += multiset.label(i) + ":" + to_string(multiset.mult(i));
  }
  return out + "}";
}

std::string render(const Profile& profile) {
  std::string out = "profile{";
  bool first = true;
  for (const auto& [m, c] : profile.entries()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(m) + ":" + to_string(c);
  }
  return out + "}";
}

std::string render(const Term& term) {
  std::string out;
  render_term(term, out);
  return out;
}

std::string render(const Element& element) {
  std::string out = "(";
  for (std::size_t i = 0; i < element.coords().size(); ++i) {
    if (i) out += ", ";
    out += to_string(element[i]);
  }
  return out + ")";
}

ParsedObject parse_object(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  const std::string_view rest = text.substr(i);
  if (rest.starts_with("profile{")) return parse_profile(text);
  if (rest.starts_with("{")) return parse_multiset(text);
  return parse_algebra(text);
}

}  // namespace mvdual
