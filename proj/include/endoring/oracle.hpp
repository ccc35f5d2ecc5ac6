#pragma once

#include "endoring/matrix.hpp"

namespace endoring::oracle {

// Reference implementations on plain integers. Everything here avoids the
// digit vectors and carry chains of the main library so that a bug on
// either side cannot cancel against the other.

// The unique inverse of n mod modulus, in [0, modulus), by extended Euclid.
// Throws NotCoprime when gcd(n, modulus) != 1.
Int euclid_inv(Int n, Int modulus);

// Plain componentwise arithmetic mod `modulus`.
Int naive_add(Int a, Int b, Int modulus);
Int naive_neg(Int a, Int modulus);
Int naive_mul(Int a, Int b, Int modulus);

// A ring element in written form: the bottom-left entry is stored as the
// full value c_full in [0, p^m), constrained to a multiple of p^(m-1).
struct NaiveMatrix {
    RingParams params;
    Int a = 0;
    Int b = 0;
    Int c_full = 0;
    Int d = 0;

    bool operator==(const NaiveMatrix&) const = default;
};

// Throws Error on entries outside their ranges or a bottom-left that is not
// a multiple of p^(m-1).
NaiveMatrix make_naive(const RingParams& pr, Int a, Int b, Int c_full, Int d);

NaiveMatrix naive_identity(const RingParams& pr);
NaiveMatrix naive_mat_add(const NaiveMatrix& M1, const NaiveMatrix& M2);

// The ring product evaluated with ordinary integer mod operations:
// top row mod p (with the full d in the cross terms), bottom row mod p^m.
NaiveMatrix naive_mat_mul(const NaiveMatrix& M1, const NaiveMatrix& M2);

// Streams every ring element exactly once; the total count is p^(m+3).
// Construction throws BudgetExceeded when p^(m+3) > budget.
class RingEnumerator {
public:
    explicit RingEnumerator(const RingParams& pr, Int budget = 1'000'000);

    // Writes the next element and returns true, or returns false when the
    // ring is exhausted.
    bool next(NaiveMatrix& out);

    Int total() const { return total_; }

private:
    RingParams params_;
    Int total_ = 0;
    Int index_ = 0;
};

// Counts elements with a two-sided inverse by exhaustive pair search.
// Quadratic; construction throws BudgetExceeded when p^(m+3) > budget.
Int count_units_bruteforce(const RingParams& pr, Int budget = 2048);

// Representation bridge. The conversions use the public digit codecs; the
// arithmetic on each side stays independent.
NaiveMatrix to_naive(const EndoMatrix& A);
EndoMatrix from_naive(const NaiveMatrix& M);

} // namespace endoring::oracle
