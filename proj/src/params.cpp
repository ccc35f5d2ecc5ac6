#include "endoring/params.hpp"

#include <string>

namespace endoring {

bool is_prime(Int n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

RingParams make_params(Int p, Int m) {
    if (!is_prime(p)) {
        throw NotPrime("p = " + std::to_string(p) + " is not prime");
    }
    if (m < 2) {
        // For m = 1 the endomorphism ring is the full 2x2 matrix ring over
        // Z_p with a different invertibility law; the p^(m-1)c bottom-left
        // shape only makes sense from m = 2 on.
        throw BadExponent("m = " + std::to_string(m) + "; the exponent must be at least 2");
    }
    Int modulus = 1;
    for (Int i = 0; i < m; ++i) {
        if (modulus > kMaxModulus / p) {
            throw Overflow("p^m exceeds the supported modulus " + std::to_string(kMaxModulus));
        }
        modulus *= p;
    }
    return RingParams{p, m, modulus};
}

} // namespace endoring
