#include "endoring/oracle.hpp"

#include <string>
#include <vector>

namespace endoring::oracle {

Int euclid_inv(Int n, Int modulus) {
    Int old_r = mod_floor(n, modulus), r = modulus;
    Int old_s = 1, s = 0;
    while (r != 0) {
        const Int q = old_r / r;
        Int t = r;
        r = old_r - q * r;
        old_r = t;
        t = s;
        s = old_s - q * s;
        old_s = t;
    }
    if (old_r != 1) {
        throw NotCoprime("gcd(" + std::to_string(n) + ", " + std::to_string(modulus) +
                         ") = " + std::to_string(old_r));
    }
    return mod_floor(old_s, modulus);
}

Int naive_add(Int a, Int b, Int modulus) {
    return mod_floor(a + b, modulus);
}

Int naive_neg(Int a, Int modulus) {
    return mod_floor(-a, modulus);
}

Int naive_mul(Int a, Int b, Int modulus) {
    return mod_floor(a * b, modulus);
}

NaiveMatrix make_naive(const RingParams& pr, Int a, Int b, Int c_full, Int d) {
    if (a < 0 || a >= pr.p || b < 0 || b >= pr.p) {
        throw Error("BadEntry", "first-row entries must lie in [0, p)");
    }
    if (c_full < 0 || c_full >= pr.modulus || c_full % pr.leading_power() != 0) {
        throw Error("BadEntry", "bottom-left entry must be a multiple of p^(m-1) in [0, p^m)");
    }
    if (d < 0 || d >= pr.modulus) {
        throw Error("BadEntry", "d must lie in [0, p^m)");
    }
    return NaiveMatrix{pr, a, b, c_full, d};
}

NaiveMatrix naive_identity(const RingParams& pr) {
    return NaiveMatrix{pr, 1, 0, 0, 1};
}

NaiveMatrix naive_mat_add(const NaiveMatrix& M1, const NaiveMatrix& M2) {
    if (!(M1.params == M2.params)) {
        throw ParamMismatch("naive matrices live over different parameters");
    }
    const RingParams& pr = M1.params;
    return NaiveMatrix{pr, (M1.a + M2.a) % pr.p, (M1.b + M2.b) % pr.p,
                       (M1.c_full + M2.c_full) % pr.modulus, (M1.d + M2.d) % pr.modulus};
}

NaiveMatrix naive_mat_mul(const NaiveMatrix& M1, const NaiveMatrix& M2) {
    if (!(M1.params == M2.params)) {
        throw ParamMismatch("naive matrices live over different parameters");
    }
    const RingParams& pr = M1.params;
    return NaiveMatrix{pr, M1.a * M2.a % pr.p, (M1.a * M2.b + M1.b * M2.d) % pr.p,
                       (M1.c_full * M2.a + M2.c_full * M1.d) % pr.modulus,
                       (M1.c_full * M2.b + M1.d * M2.d) % pr.modulus};
}

RingEnumerator::RingEnumerator(const RingParams& pr, Int budget) : params_(pr) {
    Int total = pr.modulus; // choices of d; three more factors of p for a, b, c
    bool exceeded = total > budget;
    for (Int i = 0; i < 3 && !exceeded; ++i) {
        if (total > budget / pr.p) exceeded = true;
        else total *= pr.p;
    }
    if (exceeded) {
        throw BudgetExceeded("ring has p^(m+3) elements, more than the budget " +
                             std::to_string(budget));
    }
    total_ = total;
}

bool RingEnumerator::next(NaiveMatrix& out) {
    if (index_ >= total_) return false;
    const RingParams& pr = params_;
    Int i = index_++;
    const Int d = i % pr.modulus;
    i /= pr.modulus;
    const Int c = i % pr.p;
    i /= pr.p;
    const Int b = i % pr.p;
    i /= pr.p;
    const Int a = i;
    out = NaiveMatrix{pr, a, b, pr.leading_power() * c, d};
    return true;
}

Int count_units_bruteforce(const RingParams& pr, Int budget) {
    std::vector<NaiveMatrix> elements;
    RingEnumerator en(pr, budget);
    NaiveMatrix M;
    while (en.next(M)) elements.push_back(M);

    const NaiveMatrix id = naive_identity(pr);
    Int count = 0;
    for (const NaiveMatrix& A : elements) {
        for (const NaiveMatrix& B : elements) {
            if (naive_mat_mul(A, B) == id && naive_mat_mul(B, A) == id) {
                ++count;
                break;
            }
        }
    }
    return count;
}

NaiveMatrix to_naive(const EndoMatrix& A) {
    return NaiveMatrix{A.params, A.a, A.b, bottom_left(A), digits_to_int(A.d)};
}

EndoMatrix from_naive(const NaiveMatrix& M) {
    return EndoMatrix{M.params, M.a, M.b, M.c_full / M.params.leading_power(),
                      digits_from_int(M.params, M.d)};
}

} // namespace endoring::oracle
