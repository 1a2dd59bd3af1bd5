#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "ffp/field.hpp"

namespace ffp {

using BigInt = boost::multiprecision::cpp_int;

/// The exponent value nu_n = 1 + p + p^2 + ... + p^{n-1}, with nu_0 = 0.
/// Exact at every n; the values outgrow 64 bits long before the exponent
/// caps elsewhere in the library are reached.
struct NuValue {
  unsigned n = 0;
  BigInt value;

  friend bool operator==(const NuValue&, const NuValue&) = default;
};

inline NuValue nu(const PrimeChar& p, unsigned n) {
  BigInt value = 0, q = 1;
  for (unsigned i = 0; i < n; ++i) {
    value += q;
    q *= p.value();
  }
  return NuValue{n, std::move(value)};
}

}  // namespace ffp
