#include <doctest.h>

#include <random>

#include "endoring/matrix.hpp"
#include "endoring/oracle.hpp"

using namespace endoring;

namespace {

// The running worked example: A = [[2,3],[75,67]] over p=5, m=3, with
// A^-1 = [[3,3],[75,103]].
EndoMatrix example_matrix(const RingParams& pr) {
    return make_matrix(pr, 2, 3, 3, 67);
}

std::vector<EndoMatrix> all_matrices(const RingParams& pr) {
    std::vector<EndoMatrix> out;
    oracle::RingEnumerator en(pr);
    oracle::NaiveMatrix M;
    while (en.next(M)) out.push_back(oracle::from_naive(M));
    return out;
}

EndoMatrix random_matrix(const RingParams& pr, std::mt19937_64& rng) {
    auto r = [&](Int mod) { return static_cast<Int>(rng() % static_cast<std::uint64_t>(mod)); };
    return make_matrix(pr, r(pr.p), r(pr.p), r(pr.p), r(pr.modulus));
}

// Direct evaluation of g at A, highest coefficient first. Used as the
// reference for poly_eval's divide-then-evaluate route.
EndoMatrix horner(const IntPoly& g, const EndoMatrix& A) {
    EndoMatrix acc = mat_zero(A.params);
    for (std::size_t i = g.coeffs.size(); i-- > 0;) {
        acc = mat_add(mat_mul(acc, A), scalar_mul(g.coeffs[i], mat_identity(A.params)));
    }
    return acc;
}

} // namespace

TEST_CASE("zero and identity") {
    const RingParams pr = make_params(5, 3);
    const EndoMatrix z = mat_zero(pr);
    CHECK(z == make_matrix(pr, 0, 0, 0, 0));
    const EndoMatrix id = mat_identity(pr);
    CHECK(id == make_matrix(pr, 1, 0, 0, 1));
    CHECK(mat_mul(id, example_matrix(pr)) == example_matrix(pr));
    CHECK(mat_neg(z) == z);
}

TEST_CASE("matrix_from_full parses the written bottom-left entry") {
    const RingParams pr = make_params(5, 3);
    const EndoMatrix A = matrix_from_full(pr, 2, 3, 75, 67);
    CHECK(A == example_matrix(pr));
    CHECK(bottom_left(A) == 75);

    CHECK_THROWS_AS(matrix_from_full(pr, 2, 3, 7, 67), LiteralError);   // 25 does not divide 7
    CHECK_THROWS_AS(matrix_from_full(pr, 5, 3, 75, 67), LiteralError);  // a out of range
    CHECK_THROWS_AS(matrix_from_full(pr, 2, 3, 75, 125), LiteralError); // d out of range
    CHECK_THROWS_AS(matrix_from_full(pr, 2, 3, 150, 67), LiteralError); // c_full out of range
}

TEST_CASE("mat_add works entrywise") {
    const RingParams pr = make_params(5, 3);
    const EndoMatrix A = example_matrix(pr);
    CHECK(mat_add(A, mat_zero(pr)) == A);

    // Adding diag(4, 56) wraps the top-left: (2+4) mod 5 = 1.
    CHECK(mat_add(A, make_matrix(pr, 4, 0, 0, 56)) == make_matrix(pr, 1, 3, 3, 123));
    // A + 56*I reduces the scalar per entry modulus: top-left (2+1) mod 5.
    CHECK(mat_add(A, scalar_mul(56, mat_identity(pr))) == make_matrix(pr, 3, 3, 3, 123));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 10'000; ++i) {
        const EndoMatrix X = random_matrix(pr, rng);
        CHECK(mat_add(X, mat_neg(X)) == mat_zero(pr));
    }

    CHECK_THROWS_AS(mat_add(A, mat_identity(make_params(7, 2))), ParamMismatch);
}

TEST_CASE("mat_neg negates entrywise") {
    const RingParams pr = make_params(5, 3);
    CHECK(mat_neg(example_matrix(pr)) == make_matrix(pr, 3, 2, 2, 58));

    for (const EndoMatrix& A : all_matrices(make_params(2, 2))) {
        CHECK(mat_neg(mat_neg(A)) == A);
    }
}

TEST_CASE("mat_mul matches the ring product") {
    const RingParams pr = make_params(5, 3);
    const EndoMatrix A = example_matrix(pr);
    const EndoMatrix N = make_matrix(pr, 3, 3, 3, 103);
    CHECK(mat_mul(A, N) == mat_identity(pr));
    CHECK(mat_mul(N, A) == mat_identity(pr));

    SUBCASE("noncommutativity witness at (2,2)") {
        const RingParams pr22 = make_params(2, 2);
        const EndoMatrix A1 = make_matrix(pr22, 0, 1, 0, 0);
        const EndoMatrix A2 = make_matrix(pr22, 0, 0, 1, 0);
        CHECK(mat_mul(A1, A2) == mat_zero(pr22));
        CHECK(mat_mul(A2, A1) == make_matrix(pr22, 0, 0, 0, 2));
    }

    SUBCASE("identity law, exhaustively at (2,2)") {
        const RingParams pr22 = make_params(2, 2);
        for (const EndoMatrix& X : all_matrices(pr22)) {
            CHECK(mat_mul(X, mat_identity(pr22)) == X);
            CHECK(mat_mul(mat_identity(pr22), X) == X);
        }
    }
}

TEST_CASE("ring axioms, exhaustively at (2,2)") {
    const RingParams pr = make_params(2, 2);
    const std::vector<EndoMatrix> all = all_matrices(pr);
    const EndoMatrix id = mat_identity(pr);
    for (const EndoMatrix& A : all) {
        CHECK(mat_add(A, mat_neg(A)) == mat_zero(pr));
        CHECK(mat_mul(A, id) == A);
        CHECK(mat_mul(id, A) == A);
        for (const EndoMatrix& B : all) {
            CHECK(mat_add(A, B) == mat_add(B, A));
            for (const EndoMatrix& C : all) {
                CHECK(mat_add(mat_add(A, B), C) == mat_add(A, mat_add(B, C)));
                CHECK(mat_mul(mat_mul(A, B), C) == mat_mul(A, mat_mul(B, C)));
                CHECK(mat_mul(A, mat_add(B, C)) == mat_add(mat_mul(A, B), mat_mul(A, C)));
                CHECK(mat_mul(mat_add(A, B), C) == mat_add(mat_mul(A, C), mat_mul(B, C)));
            }
        }
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(11);
    for (const RingParams& pr : {make_params(5, 3), make_params(97, 2)}) {
        for (int i = 0; i < 10'000; ++i) {
            const EndoMatrix A = random_matrix(pr, rng);
            const EndoMatrix B = random_matrix(pr, rng);
            const EndoMatrix C = random_matrix(pr, rng);
            CHECK(mat_add(mat_add(A, B), C) == mat_add(A, mat_add(B, C)));
            CHECK(mat_mul(mat_mul(A, B), C) == mat_mul(A, mat_mul(B, C)));
            CHECK(mat_mul(A, mat_add(B, C)) == mat_add(mat_mul(A, B), mat_mul(A, C)));
            CHECK(mat_mul(mat_add(A, B), C) == mat_add(mat_mul(A, C), mat_mul(B, C)));
        }
    }
}

TEST_CASE("scalar_mul reduces per entry modulus") {
    const RingParams pr = make_params(5, 3);
    CHECK(scalar_mul(11, make_matrix(pr, 3, 3, 3, 123)) == make_matrix(pr, 3, 3, 3, 103));
    const EndoMatrix A = example_matrix(pr);
    CHECK(scalar_mul(0, A) == mat_zero(pr));
    CHECK(scalar_mul(1, A) == A);
    CHECK(scalar_mul(-1, A) == mat_neg(A));

    SUBCASE("equals the n-fold sum") {
        std::mt19937_64 rng(3);
        const EndoMatrix X = random_matrix(pr, rng);
        EndoMatrix sum = mat_zero(pr);
        for (Int n = 0; n <= 12; ++n) {
            CHECK(scalar_mul(n, X) == sum);
            sum = mat_add(sum, X);
        }
    }
}

TEST_CASE("mat_pow by repeated squaring") {
    const RingParams pr = make_params(5, 3);
    const EndoMatrix A = example_matrix(pr);
    CHECK(mat_pow(A, 0) == mat_identity(pr));
    CHECK(mat_pow(A, 1) == A);
    CHECK(mat_pow(A, 3) == mat_mul(A, mat_mul(A, A)));
    EndoMatrix direct = mat_identity(pr);
    for (int i = 0; i < 9; ++i) direct = mat_mul(direct, A);
    CHECK(mat_pow(A, 9) == direct);
    CHECK_THROWS_AS(mat_pow(A, -1), Error);
}

TEST_CASE("invertibility criterion") {
    const RingParams pr = make_params(5, 3);
    CHECK(is_invertible(example_matrix(pr)));
    CHECK_FALSE(is_invertible(mat_zero(pr)));
    CHECK_FALSE(is_invertible(make_matrix(pr, 0, 1, 0, 1))); // a = 0
    CHECK_FALSE(is_invertible(make_matrix(pr, 1, 1, 0, 25))); // u_0 = 0

    // Exactly 8 of the 32 elements at (2,2) pass, matching brute force.
    const RingParams pr22 = make_params(2, 2);
    Int count = 0;
    for (const EndoMatrix& A : all_matrices(pr22)) {
        if (is_invertible(A)) ++count;
    }
    CHECK(count == 8);
    CHECK(count == oracle::count_units_bruteforce(pr22));
}

TEST_CASE("inverse_direct computes the closed-form inverse") {
    const RingParams pr = make_params(5, 3);
    CHECK(inverse_direct(example_matrix(pr)) == make_matrix(pr, 3, 3, 3, 103));
    CHECK(inverse_direct(mat_identity(pr)) == mat_identity(pr));
    CHECK_THROWS_AS(inverse_direct(mat_zero(pr)), NotInvertible);

    SUBCASE("matches the unique two-sided inverse, exhaustively") {
        for (const RingParams& params : {make_params(2, 2), make_params(3, 2)}) {
            const std::vector<EndoMatrix> all = all_matrices(params);
            const EndoMatrix id = mat_identity(params);
            for (const EndoMatrix& A : all) {
                if (!is_invertible(A)) continue;
                const EndoMatrix B = inverse_direct(A);
                CHECK(mat_mul(A, B) == id);
                CHECK(mat_mul(B, A) == id);
                // Uniqueness: no other element is a two-sided inverse.
                for (const EndoMatrix& C : all) {
                    if (mat_mul(A, C) == id && mat_mul(C, A) == id) CHECK(C == B);
                }
            }
        }
    }
}

TEST_CASE("annihilating_poly produces the quadratic coefficients") {
    const RingParams pr = make_params(5, 3);
    const AnnPoly f = annihilating_poly(example_matrix(pr));
    CHECK(digits_to_int(f.r) == 56);
    CHECK(digits_to_int(f.s) == 34);

    const AnnPoly fid = annihilating_poly(mat_identity(pr));
    CHECK(digits_to_int(fid.r) == 123);
    CHECK(digits_to_int(fid.s) == 1);

    for (const EndoMatrix& A : all_matrices(make_params(2, 2))) {
        CHECK(poly_eval(to_int_poly(annihilating_poly(A)), A) == mat_zero(A.params));
    }
}

TEST_CASE("inverse_via_minpoly agrees with inverse_direct") {
    const RingParams pr = make_params(5, 3);
    CHECK(inverse_via_minpoly(example_matrix(pr)) == make_matrix(pr, 3, 3, 3, 103));
    CHECK(inverse_via_minpoly(mat_identity(pr)) == mat_identity(pr));
    CHECK_THROWS_AS(inverse_via_minpoly(make_matrix(pr, 0, 1, 0, 1)), NotInvertible);

    for (const RingParams& params :
         {make_params(2, 2), make_params(2, 3), make_params(3, 2)}) {
        for (const EndoMatrix& A : all_matrices(params)) {
            if (is_invertible(A)) {
                CHECK(inverse_via_minpoly(A) == inverse_direct(A));
            }
        }
    }
}

TEST_CASE("minimal_poly returns the least-degree monic annihilator") {
    const RingParams pr = make_params(5, 3);
    CHECK(minimal_poly(example_matrix(pr)) == make_poly({34, 56, 1}));
    CHECK(minimal_poly(mat_identity(pr)) == make_poly({124, 1}));
    CHECK(minimal_poly(mat_zero(pr)) == make_poly({0, 1}));
    CHECK(minimal_poly(scalar_mul(7, mat_identity(pr))) == make_poly({118, 1}));

    SUBCASE("minimality, exhaustively at (2,2)") {
        const RingParams pr22 = make_params(2, 2);
        for (const EndoMatrix& A : all_matrices(pr22)) {
            const IntPoly f = minimal_poly(A);
            CHECK(poly_eval(f, A) == mat_zero(pr22));
            if (f.degree() == 2) {
                for (Int e = 0; e < pr22.modulus; ++e) {
                    CHECK(poly_eval(make_poly({e, 1}), A) != mat_zero(pr22));
                }
            }
        }
    }

    SUBCASE("the quadratic is kept verbatim even when not minimal") {
        // x - 1 kills the identity, yet the quadratic stays (x-1)^2-shaped.
        const AnnPoly f = annihilating_poly(mat_identity(pr));
        CHECK(to_int_poly(f).degree() == 2);
        CHECK(minimal_poly(mat_identity(pr)).degree() == 1);
    }
}

TEST_CASE("poly_eval divides by the annihilating quadratic") {
    const RingParams pr = make_params(5, 3);
    const EndoMatrix A = example_matrix(pr);

    CHECK(poly_eval(make_poly({34, 56, 1}), A) == mat_zero(pr));
    CHECK(poly_eval(make_poly({0, 1}), A) == A);
    CHECK(poly_eval(make_poly({}), A) == mat_zero(pr));
    CHECK(poly_eval(make_poly({42}), A) == scalar_mul(42, mat_identity(pr)));

    std::mt19937_64 rng(19);
    SUBCASE("x^3 equals the triple product on random matrices") {
        for (int i = 0; i < 1000; ++i) {
            const EndoMatrix X = random_matrix(pr, rng);
            CHECK(poly_eval(make_poly({0, 0, 0, 1}), X) == mat_mul(X, mat_mul(X, X)));
        }
    }

    SUBCASE("identical to Horner evaluation for random polynomials") {
        for (int i = 0; i < 1000; ++i) {
            const EndoMatrix X = random_matrix(pr, rng);
            std::vector<Int> coeffs(1 + rng() % 7);
            for (Int& c : coeffs) c = static_cast<Int>(rng() % 125);
            const IntPoly g = make_poly(std::move(coeffs));
            CHECK(poly_eval(g, X) == horner(g, X));
        }
    }

    SUBCASE("negative coefficients reduce into the ring") {
        const IntPoly g = make_poly({-91, -69, 1}); // same residues as {34, 56, 1}
        CHECK(poly_eval(g, A) == mat_zero(pr));
    }
}

TEST_CASE("census returns the closed-form counts") {
    CHECK(census(make_params(2, 2)) == Census{32, 8});
    CHECK(census(make_params(5, 3)) == Census{15625, 10000});
    CHECK(census(make_params(3, 2)) == Census{243, 108});
    // p^(m+3) = 46337^5 does not fit the host width.
    CHECK_THROWS_AS(census(make_params(46337, 2)), Overflow);
}
