#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ffp/polynomial.hpp"

namespace ffp {

/// Resource limits. These are configuration, not constants: the CLI exposes
/// the pair cap, tests tighten them to provoke the error paths.
struct Limits {
  std::size_t max_pairs = 100'000;          // Buchberger pair-queue cap
  std::size_t max_terms = 200'000;          // per-polynomial cap in reductions
  std::size_t max_combinations = 1'000'000; // generator avoidance search cap
  std::size_t max_matrix_entries = 1u << 24;  // Macaulay oracle cap
  unsigned max_chain_cap = 12;              // annihilator chain depth guard
};

/// A finitely generated ideal: the generator list with zero polynomials
/// removed (the zero ideal is the empty list) and a lazily computed reduced
/// Groebner basis cache. The cached basis is unique for the ring's order, so
/// ideal equality is decidable by basis comparison. An Ideal must not be
/// shared mutably across threads while a basis computation is in flight;
/// once the cache is filled it is freely shareable read-only.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  static Ideal principal(Polynomial g);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero_ideal() const noexcept { return gens_.empty(); }

  /// The unique reduced Groebner basis under the ring's order; computed on
  /// first use and cached. Every element is monic and no term of any element
  /// is divisible by the leading monomial of another.
  const std::vector<Polynomial>& groebner_basis(const Limits& limits = {}) const;
  bool basis_cached() const noexcept { return basis_.has_value(); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::optional<std::vector<Polynomial>> basis_;
};

}  // namespace ffp
