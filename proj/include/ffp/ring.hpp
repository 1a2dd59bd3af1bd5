#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ffp/errors.hpp"
#include "ffp/field.hpp"

namespace ffp {

/// Exponents live well inside 32 bits; arithmetic that would exceed the cap
/// is a hard error rather than a silent wrap (bracket powers grow fast).
inline constexpr std::uint32_t kMaxExponent = 0x7fffffff;

/// An exponent vector, one entry per ring variable.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

  std::size_t nvars() const noexcept { return e_.size(); }
  std::uint32_t exponent(std::size_t i) const { return e_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return e_; }

  std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : e_) d += e;
    return d;
  }
  bool is_one() const noexcept {
    for (auto e : e_)
      if (e != 0) return false;
    return true;
  }

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const noexcept;  // *this | o
  std::optional<Monomial> divided_by(const Monomial& o) const;
  Monomial scaled(std::uint64_t factor) const;  // every exponent * factor

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> e_;
};

/// Total order on exponent vectors: lex, graded reverse lex, or a block
/// order that eliminates the first `elim_count` variables (lex on the block,
/// an inner order on the rest). All three are multiplicative well-orderings
/// with 1 minimal.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { lex, grevlex, block };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0, Kind::lex); }
  static MonomialOrder grevlex() {
    return MonomialOrder(Kind::grevlex, 0, Kind::grevlex);
  }
  static MonomialOrder block(unsigned elim_count, Kind inner) {
    if (inner == Kind::block)
      throw input_error("nested block orders are not supported");
    if (elim_count == 0)
      throw input_error("block order needs at least one elimination variable");
    return MonomialOrder(Kind::block, elim_count, inner);
  }

  Kind kind() const noexcept { return kind_; }
  unsigned elim_count() const noexcept { return elim_; }
  Kind inner() const noexcept { return inner_; }

  /// Three-way compare: positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, unsigned elim, Kind inner)
      : kind_(kind), elim_(elim), inner_(inner) {}

  Kind kind_;
  unsigned elim_;
  Kind inner_;
};

/// The ambient polynomial ring F_p[x_1, ..., x_n] together with its active
/// monomial order. Immutable; shared via RingPtr. Two rings are compatible
/// when their characteristic, variable lists and orders all agree.
class Ring {
 public:
  Ring(PrimeChar p, std::vector<std::string> vars,
       MonomialOrder order = MonomialOrder::grevlex());

  const PrimeChar& characteristic() const noexcept { return p_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const std::string& variable(std::size_t i) const { return vars_.at(i); }
  std::optional<std::size_t> variable_index(std::string_view name) const;
  const MonomialOrder& order() const noexcept { return order_; }

  bool same_as(const Ring& o) const {
    return p_ == o.p_ && vars_ == o.vars_ && order_ == o.order_;
  }

 private:
  PrimeChar p_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars,
                         MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<Ring>(PrimeChar(p), std::move(vars), order);
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

}  // namespace ffp
