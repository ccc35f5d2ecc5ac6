#pragma once

#include <vector>

#include "endoring/params.hpp"

namespace endoring {

// An element of Z_{p^m} as its canonical base-p digit vector, little-endian:
// value = u[0] + p*u[1] + ... + p^(m-1)*u[m-1], every digit in [0, p).
// Digits are always stored fully reduced; intermediate accumulators live in
// CarryState only.
struct Digits {
    RingParams params;
    std::vector<Int> u;

    bool operator==(const Digits&) const = default;
};

// One digit position's accumulator before reduction, plus its floored carry
// into the next position.
struct CarryState {
    Int value = 0;
    Int carry = 0;
};

// Strict upper bound m*p*(p-1) on any accumulator produced by the digit
// recurrences. A convolution row contributes at most m*(p-1)^2 and the
// incoming carry at most (m-1)*(p-1)-1, which together stay below m*p*(p-1).
// Note the naive estimate m*(p-1)^2 + p is NOT an upper bound: carries out
// of convolution rows exceed p (at p=5, m=3 the largest accumulator is 55).
Int carry_bound(const RingParams& pr);

// Reduces an accumulator to (value, floor(value/p)); throws Error if the
// overflow-safety bound is violated (a library bug, not a user error).
CarryState carry_step(const RingParams& pr, Int value);

// Base-p decomposition of n mod p^m. Out-of-range and negative inputs are
// reduced into [0, p^m) first.
Digits digits_from_int(const RingParams& pr, Int n);

// Exact inverse of digits_from_int: sum of u[i]*p^i, in [0, p^m).
Int digits_to_int(const Digits& d);

Digits zero(const RingParams& pr);
Digits one(const RingParams& pr);

// (d1 + d2) mod p^m by the single-carry digit recurrence.
// Throws ParamMismatch if the operands live in different rings.
Digits add(const Digits& d1, const Digits& d2);

// (-d) mod p^m, digit by digit; add(d, neg(d)) is zero.
Digits neg(const Digits& d);

// (d1 * d2) mod p^m by convolution rows with carried overflow.
Digits mul(const Digits& d1, const Digits& d2);

// Multiplicative inverse, lifted one digit at a time: the k-th digit of the
// inverse is chosen so the k-th digit of the running product vanishes.
// Throws NotAUnit when u[0] = 0.
Digits inv(const Digits& d);

// Units of Z_{p^m} are exactly the elements with u[0] != 0.
bool is_unit(const Digits& d);

// (d + p^(m-1)*k) mod p^m: adds k to the top digit mod p. Used where a
// matrix entry contributes only a multiple of p^(m-1).
Digits add_top_term(const Digits& d, Int k);

} // namespace endoring
