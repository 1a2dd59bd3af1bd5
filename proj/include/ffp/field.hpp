#pragma once

#include <cstdint>

#include "ffp/errors.hpp"

namespace ffp {

/// The prime characteristic p, with arithmetic on canonical residues in
/// [0, p). Primality is checked at construction by trial division. p is
/// capped at 2^16 so residue products fit in 64-bit intermediates.
class PrimeChar {
 public:
  static constexpr std::uint32_t kMaxChar = 1u << 16;

  explicit PrimeChar(std::uint32_t p) : p_(p) {
    if (p < 2) throw input_error("characteristic must be a prime >= 2");
    if (p > kMaxChar) throw input_error("characteristic exceeds 2^16");
    for (std::uint32_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) throw input_error("characteristic must be prime");
    }
  }

  std::uint32_t value() const noexcept { return p_; }

  std::uint32_t reduce(std::uint64_t v) const noexcept {
    return static_cast<std::uint32_t>(v % p_);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    return (a + b) % p_;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return (a + p_ - b) % p_;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return (p_ - a) % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }

  /// Inverse of a nonzero residue, by the extended Euclidean algorithm.
  std::uint32_t inv(std::uint32_t a) const {
    if (a % p_ == 0) throw input_error("division by zero residue");
    std::int64_t r0 = p_, r1 = a % p_, s0 = 0, s1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      r0 -= q * r1;
      std::swap(r0, r1);
      s0 -= q * s1;
      std::swap(s0, s1);
    }
    return static_cast<std::uint32_t>(((s0 % p_) + p_) % p_);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint64_t base = a % p_, acc = 1 % p_;
    while (e != 0) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
  }

  friend bool operator==(const PrimeChar&, const PrimeChar&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace ffp
