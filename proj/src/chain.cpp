#include "mvdual/chain.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "mvdual/error.hpp"

namespace mvdual {

ChainSize ChainSize::finite(std::int64_t n) {
  if (n < 2) {
    throw Error(ErrorKind::invalid_chain_size,
                "chain L" + std::to_string(n) + " needs at least 2 elements");
  }
  return ChainSize{n};
}

bool chain_contains(ChainSize c, const Rational& v) {
  if (v < 0 || v > 1) return false;
  if (c.is_infinite()) return true;
  // v = k/(n-1) iff the reduced denominator divides n-1.
  return (c.size() - 1) % v.denominator() == 0;
}

ChainValue make_chain_value(const Rational& v, ChainSize c) {
  if (v < 0 || v > 1) {
    throw Error(ErrorKind::out_of_range,
                "value " + to_string(v) + " lies outside [0,1]");
  }
  if (!chain_contains(c, v)) {
    throw Error(ErrorKind::not_in_chain,
                to_string(v) + " is not an element of " + to_string(c));
  }
  return ChainValue{c, v};
}

namespace {

void require_same_chain(const ChainValue& a, const ChainValue& b) {
  if (a.chain() != b.chain()) {
    throw Error(ErrorKind::chain_mismatch,
                "operands live in " + to_string(a.chain()) + " and " +
                    to_string(b.chain()));
  }
}

}  // namespace

ChainValue mv_op(MvOp kind, const ChainValue& a,
                 const std::optional<ChainValue>& b) {
  if (kind == MvOp::neg) return make_chain_value(1 - a.value(), a.chain());
  if (!b) {
    throw std::invalid_argument("binary MV operation needs two operands");
  }
  require_same_chain(a, *b);
  const Rational& x = a.value();
  const Rational& y = b->value();
  switch (kind) {
    case MvOp::oplus:
      return make_chain_value(std::min(x + y, Rational{1}), a.chain());
    case MvOp::odot:
      return make_chain_value(std::max(x + y - 1, Rational{0}), a.chain());
    case MvOp::meet:
      return make_chain_value(std::min(x, y), a.chain());
    case MvOp::join:
      return make_chain_value(std::max(x, y), a.chain());
    case MvOp::neg:
      break;
  }
  return a;
}

ChainValue oplus(const ChainValue& a, const ChainValue& b) {
  return mv_op(MvOp::oplus, a, b);
}
ChainValue neg(const ChainValue& a) { return mv_op(MvOp::neg, a); }
ChainValue odot(const ChainValue& a, const ChainValue& b) {
  return mv_op(MvOp::odot, a, b);
}
ChainValue meet(const ChainValue& a, const ChainValue& b) {
  return mv_op(MvOp::meet, a, b);
}
ChainValue join(const ChainValue& a, const ChainValue& b) {
  return mv_op(MvOp::join, a, b);
}

ChainValue nat_mult(std::int64_t n, const ChainValue& a) {
  if (n < 1) {
    throw Error(ErrorKind::out_of_range, "nat_mult needs n >= 1");
  }
  // n >= denominator already forces n*a >= 1.
  if (!a.is_zero() && n >= a.value().denominator()) {
    return chain_one(a.chain());
  }
  return make_chain_value(std::min(a.value() * n, Rational{1}), a.chain());
}

bool chain_subset(ChainSize c1, ChainSize c2) {
  if (c2.is_infinite()) return true;
  if (c1.is_infinite()) return false;
  return (c2.size() - 1) % (c1.size() - 1) == 0;
}

ChainValue chain_zero(ChainSize c) { return make_chain_value(0, c); }
ChainValue chain_one(ChainSize c) { return make_chain_value(1, c); }

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(ChainSize c) {
  return c.is_infinite() ? "Linf" : "L" + std::to_string(c.size());
}

std::string to_string(const ChainValue& v) { return to_string(v.value()); }

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::syntax_error,
                "malformed number '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational{parse_int(text, text)};
  std::int64_t num = parse_int(text.substr(0, slash), text);
  std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorKind::syntax_error,
                "zero denominator in '" + std::string(text) + "'");
  }
  return Rational{num, den};
}

ChainSize parse_chain_size(std::string_view text) {
  if (text == "Linf") return ChainSize::infinite();
  if (text.size() < 2 || text.front() != 'L') {
    throw Error(ErrorKind::syntax_error,
                "expected L<n> or Linf, got '" + std::string(text) + "'");
  }
  return ChainSize::finite(parse_int(text.substr(1), text));
}

}  // namespace mvdual
