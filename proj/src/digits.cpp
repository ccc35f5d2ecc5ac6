#include "endoring/digits.hpp"

#include <string>

namespace endoring {

namespace {

void require_same_ring(const RingParams& a, const RingParams& b) {
    if (!(a == b)) {
        throw ParamMismatch("operands live in Z_" + std::to_string(a.modulus) +
                            " and Z_" + std::to_string(b.modulus));
    }
}

// Inverse of x mod p for x in [1, p). Scan is fine at desk scale and keeps
// the digit layer free of the Euclid code used by the oracle.
Int unit_inverse_mod_p(Int x, Int p) {
    for (Int y = 1; y < p; ++y) {
        if (x * y % p == 1) return y;
    }
    return 0; // unreachable for prime p and x != 0
}

} // namespace

Int carry_bound(const RingParams& pr) {
    return pr.m * pr.p * (pr.p - 1);
}

CarryState carry_step(const RingParams& pr, Int value) {
    if (value < 0 || value >= carry_bound(pr)) {
        throw Error("CarryBound", "accumulator " + std::to_string(value) +
                                      " out of range [0, " + std::to_string(carry_bound(pr)) + ")");
    }
    return CarryState{value, value / pr.p};
}

Digits digits_from_int(const RingParams& pr, Int n) {
    n = mod_floor(n, pr.modulus);
    Digits d{pr, std::vector<Int>(static_cast<std::size_t>(pr.m), 0)};
    for (Int i = 0; i < pr.m; ++i) {
        d.u[static_cast<std::size_t>(i)] = n % pr.p;
        n /= pr.p;
    }
    return d;
}

Int digits_to_int(const Digits& d) {
    Int n = 0;
    for (std::size_t i = d.u.size(); i-- > 0;) {
        n = n * d.params.p + d.u[i];
    }
    return n;
}

Digits zero(const RingParams& pr) {
    return Digits{pr, std::vector<Int>(static_cast<std::size_t>(pr.m), 0)};
}

Digits one(const RingParams& pr) {
    Digits d = zero(pr);
    d.u[0] = 1;
    return d;
}

Digits add(const Digits& d1, const Digits& d2) {
    require_same_ring(d1.params, d2.params);
    const RingParams& pr = d1.params;
    Digits out = zero(pr);
    CarryState cs{0, 0};
    for (std::size_t k = 0; k < out.u.size(); ++k) {
        cs = carry_step(pr, d1.u[k] + d2.u[k] + cs.carry); // v_k
        out.u[k] = cs.value % pr.p;
    }
    return out;
}

Digits neg(const Digits& d) {
    const RingParams& pr = d.params;
    Digits out = zero(pr);
    CarryState cs{0, 0};
    for (std::size_t k = 0; k < out.u.size(); ++k) {
        // v_k is the digit that makes position k of d + (-d) vanish; w_k is
        // that position's full sum, whose floored carry feeds position k+1.
        Int v = mod_floor(-(d.u[k] + cs.carry), pr.p);
        out.u[k] = v;
        cs = carry_step(pr, d.u[k] + v + cs.carry); // w_k, always 0 or p
    }
    return out;
}

Digits mul(const Digits& d1, const Digits& d2) {
    require_same_ring(d1.params, d2.params);
    const RingParams& pr = d1.params;
    Digits out = zero(pr);
    CarryState cs{0, 0};
    for (std::size_t k = 0; k < out.u.size(); ++k) {
        Int row = cs.carry; // floor(w_{k-1}/p); the top row reads w_{m-2}
        for (std::size_t i = 0; i <= k; ++i) {
            row += d1.u[i] * d2.u[k - i];
        }
        cs = carry_step(pr, row); // w_k
        out.u[k] = cs.value % pr.p;
    }
    return out;
}

Digits inv(const Digits& d) {
    const RingParams& pr = d.params;
    if (d.u[0] == 0) {
        throw NotAUnit(std::to_string(digits_to_int(d)) + " has zero low digit mod " +
                       std::to_string(pr.p));
    }
    const Int u0_inv = unit_inverse_mod_p(d.u[0], pr.p);
    Digits s = zero(pr);
    s.u[0] = u0_inv;
    CarryState cs = carry_step(pr, d.u[0] * u0_inv); // w_0 = 1 mod p
    for (std::size_t k = 1; k < s.u.size(); ++k) {
        // Known part of product digit k: s_0..s_{k-1} convolved with d plus
        // the incoming carry. Choosing s_k = -u0^{-1} * known kills the
        // digit, so the product stays 1.
        Int known = cs.carry;
        for (std::size_t j = 0; j < k; ++j) {
            known += d.u[k - j] * s.u[j];
        }
        s.u[k] = mod_floor(-u0_inv * (known % pr.p), pr.p);
        cs = carry_step(pr, known + d.u[0] * s.u[k]); // w_k, = 0 mod p
    }
    return s;
}

bool is_unit(const Digits& d) {
    return d.u[0] != 0;
}

Digits add_top_term(const Digits& d, Int k) {
    Digits out = d;
    out.u.back() = mod_floor(out.u.back() + k, d.params.p);
    return out;
}

} // namespace endoring
