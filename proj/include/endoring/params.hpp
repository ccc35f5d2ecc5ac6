#pragma once

#include <cstdint>

#include "endoring/errors.hpp"

namespace endoring {

using Int = std::int64_t;

// Largest modulus we accept: floor(sqrt(2^63 - 1)). Keeping p^m below this
// guarantees that a product of two residues never overflows Int.
inline constexpr Int kMaxModulus = 3037000499;

// The ambient rings Z_p and Z_{p^m}. Construct through make_params; the
// fields are not re-validated afterwards.
struct RingParams {
    Int p = 0;
    Int m = 0;
    Int modulus = 0; // p^m, cached

    Int leading_power() const { return modulus / p; } // p^(m-1)

    bool operator==(const RingParams&) const = default;
};

bool is_prime(Int n);

// Validates (p, m) and caches p^m.
// Throws NotPrime, BadExponent (m < 2), or Overflow (p^m > kMaxModulus).
RingParams make_params(Int p, Int m);

// a mod b with the result in [0, b); b > 0.
inline Int mod_floor(Int a, Int b) {
    Int r = a % b;
    return r < 0 ? r + b : r;
}

} // namespace endoring
