#pragma once

#include <vector>

#include "endoring/digits.hpp"

namespace endoring {

// An element of the matrix ring E_{p,p^m}:
//
//     [ a            b ]     a, b, c in Z_p,  d in Z_{p^m}.
//     [ p^(m-1)*c    d ]
//
// The bottom-left entry is always a multiple of p^(m-1); only its cofactor c
// is stored. d is kept in digit form.
struct EndoMatrix {
    RingParams params;
    Int a = 0;
    Int b = 0;
    Int c = 0;
    Digits d;

    bool operator==(const EndoMatrix&) const = default;
};

// The monic quadratic x^2 + r*x + s annihilating a matrix; coefficients are
// elements of Z_{p^m}.
struct AnnPoly {
    Digits r;
    Digits s;

    bool operator==(const AnnPoly&) const = default;
};

// Integer polynomial, little-endian coefficients (coeffs[i] multiplies x^i).
// An empty vector is the zero polynomial; nonzero polynomials carry no
// trailing zero coefficients.
struct IntPoly {
    std::vector<Int> coeffs;

    Int degree() const { return static_cast<Int>(coeffs.size()) - 1; }
    bool operator==(const IntPoly&) const = default;
};

IntPoly make_poly(std::vector<Int> coeffs);

// Builds a matrix from the cofactor form; entries must already be canonical
// (0 <= a,b,c < p and 0 <= d < p^m) or Error is thrown.
EndoMatrix make_matrix(const RingParams& pr, Int a, Int b, Int c, Int d);

// Builds a matrix from the written form, where the bottom-left entry is the
// full value p^(m-1)*c. Throws LiteralError if any entry is out of range or
// the bottom-left is not a multiple of p^(m-1).
EndoMatrix matrix_from_full(const RingParams& pr, Int a, Int b, Int c_full, Int d);

// The full bottom-left entry p^(m-1)*c.
Int bottom_left(const EndoMatrix& A);

EndoMatrix mat_zero(const RingParams& pr);
EndoMatrix mat_identity(const RingParams& pr);

// Entrywise sum: a, b, c mod p; d in digit arithmetic.
EndoMatrix mat_add(const EndoMatrix& A1, const EndoMatrix& A2);

// Entrywise negation; mat_add(A, mat_neg(A)) is the zero matrix.
EndoMatrix mat_neg(const EndoMatrix& A);

// Ring product:
//   a = a1*a2                      (mod p)
//   b = a1*b2 + b1*(d2 mod p)      (mod p)
//   c = c1*a2 + c2*(d1 mod p)      (mod p)
//   d = p^(m-1)*c1*b2 + d1*d2      (mod p^m)
// Cross terms against d reduce d through its low digit first, since the
// receiving entry lives in Z_p.
EndoMatrix mat_mul(const EndoMatrix& A1, const EndoMatrix& A2);

// n*A for any integer n: first-row entries and c scale by n mod p, d by
// n mod p^m. Equals the n-fold sum of A.
EndoMatrix scalar_mul(Int n, const EndoMatrix& A);

// A^e for e >= 0 by repeated squaring; A^0 is the identity.
EndoMatrix mat_pow(const EndoMatrix& A, Int e);

// A is invertible iff a != 0 and d's low digit u_0 != 0.
bool is_invertible(const EndoMatrix& A);

// Closed-form inverse:
//   [ a^-1                    -a^-1*b*u0^-1                  ]
//   [ p^(m-1)*(-a^-1*c*u0^-1)  d^-1 with top digit += c*a^-1*b*u0^-2 ]
// Throws NotInvertible when the criterion fails.
EndoMatrix inverse_direct(const EndoMatrix& A);

// r = -(a+d) mod p^m, s = (a*d - p^(m-1)*b*c) mod p^m; the quadratic
// x^2 + r*x + s annihilates A.
AnnPoly annihilating_poly(const EndoMatrix& A);

IntPoly to_int_poly(const AnnPoly& f);

// A^-1 = -s^-1 * (A + r*I), via the annihilating quadratic. Agrees with
// inverse_direct on every invertible matrix.
EndoMatrix inverse_via_minpoly(const EndoMatrix& A);

// Least-degree monic annihilator with coefficients in [0, p^m): x + e
// (e = -d mod p^m) when b = c = 0 and a = d mod p, else the annihilating
// quadratic. The quadratic is not always minimal, hence the explicit
// degree-1 test.
IntPoly minimal_poly(const EndoMatrix& A);

// g(A) computed by dividing g by the monic annihilating quadratic and
// evaluating the degree-<=1 remainder; identical to Horner evaluation.
EndoMatrix poly_eval(const IntPoly& g, const EndoMatrix& A);

struct Census {
    Int ring_size = 0;  // p^(m+3)
    Int unit_count = 0; // p^(m+1) * (p-1)^2

    bool operator==(const Census&) const = default;
};

// Closed-form element and unit counts. Throws Overflow if either exceeds
// the host integer width.
Census census(const RingParams& pr);

} // namespace endoring
