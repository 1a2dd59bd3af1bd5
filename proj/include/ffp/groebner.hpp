#pragma once

#include <span>
#include <vector>

#include "ffp/ideal.hpp"

namespace ffp {

/// Remainder of f under full multivariate division by `divisors`: f - r lies
/// in the ideal they generate and no term of r is divisible by any leading
/// monomial of the divisors. Deterministic: divisors are tried in list
/// order and the leading term is reduced first.
Polynomial normal_form(const Polynomial& f,
                       std::span<const Polynomial> divisors,
                       const Limits& limits = {});

/// S(f, g) = (lcm/lt(f)) f - (lcm/lt(g)) g.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger's algorithm with the normal pair-selection strategy (minimal
/// lcm degree first) and the coprime and chain criteria, followed by
/// autoreduction. The result is the unique reduced Groebner basis, sorted
/// descending by leading monomial.
std::vector<Polynomial> reduced_groebner_basis(
    const RingPtr& ring, std::span<const Polynomial> generators,
    const Limits& limits = {});

bool member(const Polynomial& f, const Ideal& I, const Limits& limits = {});

/// Equality by comparison of reduced bases; containment of J in I by
/// membership of every generator of J.
bool ideal_equal(const Ideal& I, const Ideal& J, const Limits& limits = {});
bool ideal_contains(const Ideal& I, const Ideal& J,
                    const Limits& limits = {});

/// Post-check used by tests: every S-polynomial of `basis` reduces to zero.
bool spolynomials_reduce_to_zero(std::span<const Polynomial> basis,
                                 const Limits& limits = {});

}  // namespace ffp
