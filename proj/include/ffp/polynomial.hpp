#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ffp/ring.hpp"

namespace ffp {

struct Term {
  Monomial mono;
  std::uint32_t coeff;  // in [1, p-1] inside a normalized polynomial

  friend bool operator==(const Term&, const Term&) = default;
};

/// An exact multivariate polynomial over F_p in canonical form: term list
/// strictly descending in the ring's monomial order, no zero coefficients,
/// no duplicate monomials. The zero polynomial is the empty list. Values are
/// immutable after construction and all operations are pure.
class Polynomial {
 public:
  /// The zero polynomial of `ring`.
  explicit Polynomial(RingPtr ring);
  /// Normalizes an arbitrary term list: reduces coefficients mod p, merges
  /// duplicate monomials, sorts, drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, std::uint64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index,
                             std::uint32_t exp = 1);
  static Polynomial from_monomial(RingPtr ring, Monomial m,
                                  std::uint32_t coeff = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  bool is_unit() const noexcept {  // nonzero constant
    return terms_.size() == 1 && terms_[0].mono.is_one();
  }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  std::uint64_t total_degree() const noexcept;  // 0 for the zero polynomial

  std::uint32_t constant_coefficient() const noexcept;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// c * m * (*this); the workhorse of division loops.
  Polynomial times_term(std::uint32_t c, const Monomial& m) const;
  Polynomial times_scalar(std::uint32_t c) const;
  Polynomial monic() const;  // leading coefficient normalized to 1

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

 private:
  void normalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// f^{p^e}, computed term-wise: exponent vectors scaled by p^e, coefficients
/// fixed (the Frobenius is the identity on F_p). Agrees with repeated
/// multiplication to the power p^e.
Polynomial frobenius_power(const Polynomial& f, unsigned e);

/// u^{nu_n} via the recursion u^{nu_{n+1}} = u * (u^{nu_n})^p; u^{nu_0} = 1.
Polynomial nu_power(const Polynomial& u, unsigned n);

/// Formal partial derivative with respect to variable `var`.
Polynomial derivative(const Polynomial& f, std::size_t var);

/// Quotient f/g when g divides f exactly, std::nullopt otherwise. g != 0.
std::optional<Polynomial> exact_divide(const Polynomial& f,
                                       const Polynomial& g);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace ffp
