#pragma once

// Exact arithmetic in the Lukasiewicz chains L_n = {0, 1/(n-1), ..., 1} and
// in L_inf, modelled as the rationals of [0,1].

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mvdual/rational.hpp"

namespace mvdual {

/// Either Finite(n) with n >= 2 or Infinite.
class ChainSize {
 public:
  static ChainSize finite(std::int64_t n);
  static ChainSize infinite() { return ChainSize{0}; }

  bool is_finite() const noexcept { return n_ != 0; }
  bool is_infinite() const noexcept { return n_ == 0; }

  /// Number of elements; only meaningful for finite chains.
  std::int64_t size() const noexcept { return n_; }

  friend bool operator==(ChainSize, ChainSize) = default;
  /// Finite chains ordered by size, Infinite last.
  friend std::strong_ordering operator<=>(ChainSize a, ChainSize b) {
    if (a.n_ == b.n_) return std::strong_ordering::equal;
    if (a.is_infinite()) return std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    return a.n_ <=> b.n_;
  }

 private:
  explicit constexpr ChainSize(std::int64_t n) : n_(n) {}
  std::int64_t n_;  // 0 encodes Infinite
};

class ChainValue {
 public:
  ChainSize chain() const noexcept { return chain_; }
  const Rational& value() const noexcept { return value_; }

  bool is_zero() const { return value_ == Rational{0}; }
  bool is_one() const { return value_ == Rational{1}; }

  friend bool operator==(const ChainValue&, const ChainValue&) = default;

 private:
  friend ChainValue make_chain_value(const Rational& v, ChainSize c);
  ChainValue(ChainSize c, Rational v) : chain_(c), value_(v) {}

  ChainSize chain_;
  Rational value_;
};

/// Validates membership of `v` in L_c. Throws out_of_range or not_in_chain.
ChainValue make_chain_value(const Rational& v, ChainSize c);

/// True iff `v` lies in L_c.
bool chain_contains(ChainSize c, const Rational& v);

enum class MvOp { oplus, neg, odot, meet, join };

/// Applies one of the five MV operations. `b` must be present for the binary
/// kinds and is ignored for neg. Throws chain_mismatch if the operands live in
/// different chains.
ChainValue mv_op(MvOp kind, const ChainValue& a,
                 const std::optional<ChainValue>& b = std::nullopt);

ChainValue oplus(const ChainValue& a, const ChainValue& b);
ChainValue neg(const ChainValue& a);
ChainValue odot(const ChainValue& a, const ChainValue& b);
ChainValue meet(const ChainValue& a, const ChainValue& b);
ChainValue join(const ChainValue& a, const ChainValue& b);

/// n-fold truncated sum a (+) ... (+) a, i.e. min(n*a, 1). Requires n >= 1.
ChainValue nat_mult(std::int64_t n, const ChainValue& a);

/// L_{c1} is a subalgebra of L_{c2}: (n-1) | (m-1) for finite chains.
bool chain_subset(ChainSize c1, ChainSize c2);

ChainValue chain_zero(ChainSize c);
ChainValue chain_one(ChainSize c);

/// "p/q" in lowest terms, or "0" / "1".
std::string to_string(const Rational& r);
/// "L<n>" or "Linf".
std::string to_string(ChainSize c);
std::string to_string(const ChainValue& v);

/// Parses "p/q", "p", or a decimal-free integer. Throws syntax_error.
Rational parse_rational(std::string_view text);
/// Parses "L<n>" or "Linf". Throws syntax_error or invalid_chain_size.
ChainSize parse_chain_size(std::string_view text);

}  // namespace mvdual
