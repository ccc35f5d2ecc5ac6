#include <doctest.h>

#include <random>

#include "endoring/module_point.hpp"
#include "endoring/oracle.hpp"

using namespace endoring;

namespace {

std::vector<EndoMatrix> all_matrices(const RingParams& pr) {
    std::vector<EndoMatrix> out;
    oracle::RingEnumerator en(pr);
    oracle::NaiveMatrix M;
    while (en.next(M)) out.push_back(oracle::from_naive(M));
    return out;
}

std::vector<ModulePoint> all_points(const RingParams& pr) {
    std::vector<ModulePoint> out;
    for (Int x = 0; x < pr.p; ++x) {
        for (Int y = 0; y < pr.modulus; ++y) out.push_back(make_point(pr, x, y));
    }
    return out;
}

} // namespace

TEST_CASE("make_point validates its components") {
    const RingParams pr = make_params(5, 3);
    const ModulePoint v = make_point(pr, 2, 75);
    CHECK(v.x == 2);
    CHECK(digits_to_int(v.y) == 75);
    CHECK_THROWS_AS(make_point(pr, 5, 0), Error);
    CHECK_THROWS_AS(make_point(pr, 0, 125), Error);
}

TEST_CASE("point_add is componentwise") {
    const RingParams pr72 = make_params(7, 2);
    CHECK(point_add(make_point(pr72, 3, 3), make_point(pr72, 5, 5)) == make_point(pr72, 1, 8));

    const RingParams pr = make_params(5, 3);
    const ModulePoint v = make_point(pr, 2, 75);
    CHECK(point_add(v, make_point(pr, 0, 0)) == v);
    CHECK(point_add(make_point(pr, 2, 75), make_point(pr, 3, 67)) == make_point(pr, 0, 17));

    CHECK_THROWS_AS(point_add(v, make_point(pr72, 0, 0)), ParamMismatch);
}

TEST_CASE("apply sends the generators to the matrix columns") {
    const RingParams pr = make_params(5, 3);
    const EndoMatrix A = make_matrix(pr, 2, 3, 3, 67);
    CHECK(apply(A, make_point(pr, 1, 0)) == make_point(pr, 2, 75));
    CHECK(apply(A, make_point(pr, 0, 1)) == make_point(pr, 3, 67));
    CHECK(apply(A, make_point(pr, 1, 1)) == make_point(pr, 0, 17));
    CHECK_THROWS_AS(apply(A, make_point(make_params(7, 2), 0, 0)), ParamMismatch);
}

TEST_CASE("the action is additive and respects products, exhaustively at (2,2)") {
    const RingParams pr = make_params(2, 2);
    const std::vector<EndoMatrix> mats = all_matrices(pr);
    const std::vector<ModulePoint> points = all_points(pr);
    for (const EndoMatrix& A : mats) {
        for (const ModulePoint& v : points) {
            for (const ModulePoint& w : points) {
                CHECK(apply(A, point_add(v, w)) == point_add(apply(A, v), apply(A, w)));
            }
        }
        for (const EndoMatrix& B : mats) {
            for (const ModulePoint& v : points) {
                CHECK(apply(mat_mul(A, B), v) == apply(A, apply(B, v)));
                CHECK(apply(mat_add(A, B), v) == point_add(apply(A, v), apply(B, v)));
            }
        }
    }
}

TEST_CASE("the action laws hold on random triples at (5,3)") {
    const RingParams pr = make_params(5, 3);
    std::mt19937_64 rng(23);
    auto r = [&](Int mod) { return static_cast<Int>(rng() % static_cast<std::uint64_t>(mod)); };
    auto random_matrix = [&] {
        return make_matrix(pr, r(pr.p), r(pr.p), r(pr.p), r(pr.modulus));
    };
    auto random_point = [&] { return make_point(pr, r(pr.p), r(pr.modulus)); };
    for (int i = 0; i < 10'000; ++i) {
        const EndoMatrix A = random_matrix();
        const EndoMatrix B = random_matrix();
        const ModulePoint v = random_point();
        const ModulePoint w = random_point();
        CHECK(apply(mat_mul(A, B), v) == apply(A, apply(B, v)));
        CHECK(apply(mat_add(A, B), v) == point_add(apply(A, v), apply(B, v)));
        CHECK(apply(A, point_add(v, w)) == point_add(apply(A, v), apply(A, w)));
    }
}

TEST_CASE("matrices are determined by their generator images") {
    const RingParams pr = make_params(2, 2);
    const std::vector<EndoMatrix> mats = all_matrices(pr);
    const ModulePoint e1 = make_point(pr, 1, 0);
    const ModulePoint e2 = make_point(pr, 0, 1);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        for (std::size_t j = i + 1; j < mats.size(); ++j) {
            const bool same_images = apply(mats[i], e1) == apply(mats[j], e1) &&
                                     apply(mats[i], e2) == apply(mats[j], e2);
            CHECK_FALSE(same_images);
        }
    }
}
