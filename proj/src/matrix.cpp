#include "endoring/matrix.hpp"

#include <string>

namespace endoring {

namespace {

void require_same_ring(const RingParams& a, const RingParams& b) {
    if (!(a == b)) {
        throw ParamMismatch("matrices live in E_{" + std::to_string(a.p) + "," +
                            std::to_string(a.modulus) + "} and E_{" + std::to_string(b.p) +
                            "," + std::to_string(b.modulus) + "}");
    }
}

Int unit_inverse_mod_p(Int x, Int p) {
    for (Int y = 1; y < p; ++y) {
        if (x * y % p == 1) return y;
    }
    return 0;
}

} // namespace

IntPoly make_poly(std::vector<Int> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return IntPoly{std::move(coeffs)};
}

EndoMatrix make_matrix(const RingParams& pr, Int a, Int b, Int c, Int d) {
    if (a < 0 || a >= pr.p || b < 0 || b >= pr.p || c < 0 || c >= pr.p) {
        throw Error("BadEntry", "first-row entries and the cofactor must lie in [0, p)");
    }
    if (d < 0 || d >= pr.modulus) {
        throw Error("BadEntry", "d must lie in [0, p^m)");
    }
    return EndoMatrix{pr, a, b, c, digits_from_int(pr, d)};
}

EndoMatrix matrix_from_full(const RingParams& pr, Int a, Int b, Int c_full, Int d) {
    const Int lead = pr.leading_power();
    if (a < 0 || a >= pr.p) {
        throw LiteralError("entry " + std::to_string(a) + " is out of range [0, " +
                           std::to_string(pr.p) + ")");
    }
    if (b < 0 || b >= pr.p) {
        throw LiteralError("entry " + std::to_string(b) + " is out of range [0, " +
                           std::to_string(pr.p) + ")");
    }
    if (c_full < 0 || c_full >= pr.modulus) {
        throw LiteralError("entry " + std::to_string(c_full) + " is out of range [0, " +
                           std::to_string(pr.modulus) + ")");
    }
    if (c_full % lead != 0) {
        throw LiteralError("bottom-left entry " + std::to_string(c_full) +
                           " is not a multiple of " + std::to_string(lead));
    }
    if (d < 0 || d >= pr.modulus) {
        throw LiteralError("entry " + std::to_string(d) + " is out of range [0, " +
                           std::to_string(pr.modulus) + ")");
    }
    return EndoMatrix{pr, a, b, c_full / lead, digits_from_int(pr, d)};
}

Int bottom_left(const EndoMatrix& A) {
    return A.params.leading_power() * A.c;
}

EndoMatrix mat_zero(const RingParams& pr) {
    return EndoMatrix{pr, 0, 0, 0, zero(pr)};
}

EndoMatrix mat_identity(const RingParams& pr) {
    return EndoMatrix{pr, 1, 0, 0, one(pr)};
}

EndoMatrix mat_add(const EndoMatrix& A1, const EndoMatrix& A2) {
    require_same_ring(A1.params, A2.params);
    const Int p = A1.params.p;
    return EndoMatrix{A1.params, (A1.a + A2.a) % p, (A1.b + A2.b) % p, (A1.c + A2.c) % p,
                      add(A1.d, A2.d)};
}

EndoMatrix mat_neg(const EndoMatrix& A) {
    const Int p = A.params.p;
    return EndoMatrix{A.params, mod_floor(-A.a, p), mod_floor(-A.b, p), mod_floor(-A.c, p),
                      neg(A.d)};
}

EndoMatrix mat_mul(const EndoMatrix& A1, const EndoMatrix& A2) {
    require_same_ring(A1.params, A2.params);
    const Int p = A1.params.p;
    const Int u0_1 = A1.d.u[0];
    const Int u0_2 = A2.d.u[0];
    Digits d = add_top_term(mul(A1.d, A2.d), A1.c * A2.b % p);
    return EndoMatrix{A1.params, A1.a * A2.a % p, (A1.a * A2.b + A1.b * u0_2) % p,
                      (A1.c * A2.a + A2.c * u0_1) % p, std::move(d)};
}

EndoMatrix scalar_mul(Int n, const EndoMatrix& A) {
    const Int p = A.params.p;
    const Int np = mod_floor(n, p);
    Digits nd = digits_from_int(A.params, mod_floor(n, A.params.modulus));
    return EndoMatrix{A.params, A.a * np % p, A.b * np % p, A.c * np % p, mul(nd, A.d)};
}

EndoMatrix mat_pow(const EndoMatrix& A, Int e) {
    if (e < 0) {
        throw Error("BadExponent", "matrix powers take nonnegative exponents");
    }
    EndoMatrix acc = mat_identity(A.params);
    EndoMatrix base = A;
    while (e > 0) {
        if (e & 1) acc = mat_mul(acc, base);
        e >>= 1;
        if (e > 0) base = mat_mul(base, base);
    }
    return acc;
}

bool is_invertible(const EndoMatrix& A) {
    return A.a != 0 && A.d.u[0] != 0;
}

EndoMatrix inverse_direct(const EndoMatrix& A) {
    if (!is_invertible(A)) {
        throw NotInvertible(A.a == 0 ? "a = 0" : "u_0 = 0 (d is not a unit mod p)");
    }
    const RingParams& pr = A.params;
    const Int p = pr.p;
    const Int a_inv = unit_inverse_mod_p(A.a, p);
    const Int u0_inv = unit_inverse_mod_p(A.d.u[0], p);

    const Int b_out = mod_floor(-a_inv * A.b % p * u0_inv, p);
    const Int c_out = mod_floor(-a_inv * A.c % p * u0_inv, p);
    // d^-1 with the correction c*a^-1*b*u0^-2 folded into the top digit.
    const Int corr = A.c * a_inv % p * A.b % p * u0_inv % p * u0_inv % p;
    Digits d_inv = inv(A.d);
    Digits d_out = add_top_term(d_inv, corr);

    // The digit-level expression equals (d^-1 + p^(m-1)*corr) mod p^m.
    if (digits_to_int(d_out) !=
        (digits_to_int(d_inv) + pr.leading_power() * corr) % pr.modulus) {
        throw Error("Internal", "inverse bottom-right entry disagrees with its integer form");
    }
    return EndoMatrix{pr, a_inv, b_out, c_out, std::move(d_out)};
}

AnnPoly annihilating_poly(const EndoMatrix& A) {
    const RingParams& pr = A.params;
    const Digits a_digits = digits_from_int(pr, A.a);
    Digits r = neg(add(a_digits, A.d));
    const Int bc_term = pr.leading_power() * (A.b * A.c % pr.p) % pr.modulus;
    Digits s = add(mul(a_digits, A.d), neg(digits_from_int(pr, bc_term)));
    return AnnPoly{std::move(r), std::move(s)};
}

IntPoly to_int_poly(const AnnPoly& f) {
    return make_poly({digits_to_int(f.s), digits_to_int(f.r), 1});
}

EndoMatrix inverse_via_minpoly(const EndoMatrix& A) {
    if (!is_invertible(A)) {
        throw NotInvertible(A.a == 0 ? "a = 0" : "u_0 = 0 (d is not a unit mod p)");
    }
    AnnPoly f = annihilating_poly(A);
    const Int r = digits_to_int(f.r);
    const Int neg_s_inv = digits_to_int(neg(inv(f.s)));
    return scalar_mul(neg_s_inv, mat_add(A, scalar_mul(r, mat_identity(A.params))));
}

IntPoly minimal_poly(const EndoMatrix& A) {
    const RingParams& pr = A.params;
    const Int d_int = digits_to_int(A.d);
    if (A.b == 0 && A.c == 0 && A.a == d_int % pr.p) {
        return make_poly({mod_floor(-d_int, pr.modulus), 1});
    }
    return to_int_poly(annihilating_poly(A));
}

EndoMatrix poly_eval(const IntPoly& g, const EndoMatrix& A) {
    const RingParams& pr = A.params;
    const Int M = pr.modulus;
    // Reduce the coefficients mod p^m up front. The division below is the
    // integer division by the monic quadratic; since only the remainder's
    // residues act on A, coefficients may be kept reduced throughout
    // without changing the result.
    std::vector<Int> work;
    work.reserve(g.coeffs.size());
    for (Int c : g.coeffs) work.push_back(mod_floor(c, M));

    if (work.size() > 2) {
        AnnPoly f = annihilating_poly(A);
        const Int r = digits_to_int(f.r);
        const Int s = digits_to_int(f.s);
        for (std::size_t i = work.size(); i-- > 2;) {
            const Int q = work[i];
            work[i] = 0;
            work[i - 1] = mod_floor(work[i - 1] - q * r, M);
            work[i - 2] = mod_floor(work[i - 2] - q * s, M);
        }
        work.resize(2);
    }

    EndoMatrix out = mat_zero(pr);
    if (work.size() > 1) out = scalar_mul(work[1], A);
    if (!work.empty()) out = mat_add(out, scalar_mul(work[0], mat_identity(pr)));
    return out;
}

Census census(const RingParams& pr) {
    auto checked_mul = [](Int a, Int b) {
        Int out = 0;
        if (__builtin_mul_overflow(a, b, &out)) {
            throw Overflow("census count exceeds the host integer width");
        }
        return out;
    };
    Int ring_size = 1;
    for (Int i = 0; i < pr.m + 3; ++i) ring_size = checked_mul(ring_size, pr.p);
    Int unit_count = 1;
    for (Int i = 0; i < pr.m + 1; ++i) unit_count = checked_mul(unit_count, pr.p);
    unit_count = checked_mul(unit_count, (pr.p - 1) * (pr.p - 1));
    return Census{ring_size, unit_count};
}

} // namespace endoring
