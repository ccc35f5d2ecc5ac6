#include "endoring/verify.hpp"

#include <random>

#include "endoring/module_point.hpp"
#include "endoring/oracle.hpp"

namespace endoring {

namespace {

using oracle::NaiveMatrix;

constexpr Int kExhaustiveDigitCap = 3125; // p^m at or below this: all pairs

struct Verifier {
    const RingParams& pr;
    const VerifyOptions& opt;
    std::mt19937_64 rng;
    std::vector<CheckResult> results;

    Verifier(const RingParams& p, const VerifyOptions& o) : pr(p), opt(o), rng(o.seed) {}

    Int random_residue(Int modulus) {
        return static_cast<Int>(rng() % static_cast<std::uint64_t>(modulus));
    }

    EndoMatrix random_matrix() {
        return make_matrix(pr, random_residue(pr.p), random_residue(pr.p), random_residue(pr.p),
                           random_residue(pr.modulus));
    }

    EndoMatrix random_invertible() {
        while (true) {
            EndoMatrix A = random_matrix();
            if (is_invertible(A)) return A;
        }
    }

    ModulePoint random_point() {
        return make_point(pr, random_residue(pr.p), random_residue(pr.modulus));
    }

    void report(const std::string& name, bool ok, const std::string& detail) {
        results.push_back(CheckResult{name, ok, false, detail});
    }

    void skip(const std::string& name, const std::string& why) {
        results.push_back(CheckResult{name, true, true, why});
    }

    bool ring_fits(Int budget) const {
        Int total = pr.modulus;
        for (Int i = 0; i < 3; ++i) {
            if (total > budget / pr.p) return false;
            total *= pr.p;
        }
        return total <= budget;
    }

    std::vector<NaiveMatrix> all_elements() {
        std::vector<NaiveMatrix> out;
        oracle::RingEnumerator en(pr, opt.budget);
        NaiveMatrix M;
        while (en.next(M)) out.push_back(M);
        return out;
    }

    void check_digits() {
        const Int M = pr.modulus;
        const bool exhaustive = M <= kExhaustiveDigitCap;
        std::vector<Digits> table;
        if (exhaustive) {
            table.reserve(static_cast<std::size_t>(M));
            for (Int n = 0; n < M; ++n) table.push_back(digits_from_int(pr, n));
        }

        Int round_trip_bad = 0, add_bad = 0, mul_bad = 0, neg_bad = 0, inv_bad = 0,
            unit_bad = 0;
        auto probe = [&](Int x, Int y) {
            const Digits dx = exhaustive ? table[static_cast<std::size_t>(x)]
                                         : digits_from_int(pr, x);
            const Digits dy = exhaustive ? table[static_cast<std::size_t>(y)]
                                         : digits_from_int(pr, y);
            if (digits_to_int(add(dx, dy)) != oracle::naive_add(x, y, M)) ++add_bad;
            if (digits_to_int(mul(dx, dy)) != oracle::naive_mul(x, y, M)) ++mul_bad;
        };
        auto probe_one = [&](Int x) {
            const Digits dx = exhaustive ? table[static_cast<std::size_t>(x)]
                                         : digits_from_int(pr, x);
            if (digits_to_int(dx) != x) ++round_trip_bad;
            if (digits_to_int(neg(dx)) != oracle::naive_neg(x, M)) ++neg_bad;
            const bool unit = x % pr.p != 0;
            if (is_unit(dx) != unit) ++unit_bad;
            if (unit && digits_to_int(inv(dx)) != oracle::euclid_inv(x, M)) ++inv_bad;
        };

        Int pairs = 0, singles = 0;
        if (exhaustive) {
            for (Int x = 0; x < M; ++x) {
                probe_one(x);
                ++singles;
                for (Int y = 0; y < M; ++y) {
                    probe(x, y);
                    ++pairs;
                }
            }
        } else {
            for (Int i = 0; i < opt.samples; ++i) {
                probe_one(random_residue(M));
                ++singles;
                probe(random_residue(M), random_residue(M));
                ++pairs;
            }
        }
        const std::string how = exhaustive ? "exhaustive" : "random";
        report("digit add/mul vs plain mod arithmetic", add_bad == 0 && mul_bad == 0,
               how + ", " + std::to_string(pairs) + " pairs");
        report("digit neg/inv vs plain mod and extended Euclid",
               neg_bad == 0 && inv_bad == 0 && unit_bad == 0,
               how + ", " + std::to_string(singles) + " elements");
        report("digit round trip", round_trip_bad == 0,
               how + ", " + std::to_string(singles) + " elements");
    }

    void check_enumeration() {
        if (!ring_fits(opt.budget)) {
            skip("ring enumeration count", "p^(m+3) exceeds the enumeration budget");
            return;
        }
        const Census c = census(pr);
        const std::vector<NaiveMatrix> all = all_elements();
        report("ring enumeration count", static_cast<Int>(all.size()) == c.ring_size,
               std::to_string(all.size()) + " elements");
    }

    void check_matrix_ops() {
        const bool exhaustive = ring_fits(1024);
        Int add_bad = 0, mul_bad = 0, bridge_bad = 0, pairs = 0;
        auto probe = [&](const NaiveMatrix& X, const NaiveMatrix& Y) {
            const EndoMatrix ex = oracle::from_naive(X);
            const EndoMatrix ey = oracle::from_naive(Y);
            if (oracle::to_naive(ex) != X || oracle::to_naive(ey) != Y) ++bridge_bad;
            if (oracle::to_naive(mat_add(ex, ey)) != oracle::naive_mat_add(X, Y)) ++add_bad;
            if (oracle::to_naive(mat_mul(ex, ey)) != oracle::naive_mat_mul(X, Y)) ++mul_bad;
            ++pairs;
        };
        if (exhaustive) {
            const std::vector<NaiveMatrix> all = all_elements();
            for (const NaiveMatrix& X : all) {
                for (const NaiveMatrix& Y : all) probe(X, Y);
            }
        } else {
            for (Int i = 0; i < opt.samples; ++i) {
                probe(oracle::to_naive(random_matrix()), oracle::to_naive(random_matrix()));
            }
        }
        report("matrix add/mul digit vs naive representation",
               add_bad == 0 && mul_bad == 0 && bridge_bad == 0,
               std::string(exhaustive ? "exhaustive" : "random") + ", " +
                   std::to_string(pairs) + " pairs");
    }

    void check_invertibility() {
        if (ring_fits(opt.pair_budget)) {
            const std::vector<NaiveMatrix> all = all_elements();
            const NaiveMatrix id = oracle::naive_identity(pr);
            Int bad = 0;
            for (const NaiveMatrix& X : all) {
                bool found = false;
                for (const NaiveMatrix& Y : all) {
                    if (oracle::naive_mat_mul(X, Y) == id &&
                        oracle::naive_mat_mul(Y, X) == id) {
                        found = true;
                        break;
                    }
                }
                if (found != is_invertible(oracle::from_naive(X))) ++bad;
            }
            report("invertibility criterion vs exhaustive pair search", bad == 0,
                   std::to_string(all.size()) + " elements");
            return;
        }
        // Too many elements for the pair search: count the criterion across
        // the whole ring if it fits the enumeration budget, else sample.
        if (ring_fits(opt.budget)) {
            oracle::RingEnumerator en(pr, opt.budget);
            NaiveMatrix M;
            Int count = 0;
            while (en.next(M)) {
                if (is_invertible(oracle::from_naive(M))) ++count;
            }
            report("invertible element count vs closed form", count == census(pr).unit_count,
                   std::to_string(count) + " invertible");
        } else {
            skip("invertible element count vs closed form",
                 "p^(m+3) exceeds the enumeration budget");
        }
        Int bad = 0;
        for (Int i = 0; i < opt.samples; ++i) {
            const EndoMatrix A = random_invertible();
            const EndoMatrix B = inverse_direct(A);
            if (mat_mul(A, B) != mat_identity(pr) || mat_mul(B, A) != mat_identity(pr)) ++bad;
        }
        report("random invertibles have two-sided inverses", bad == 0,
               std::to_string(opt.samples) + " samples");
    }

    void check_annihilation_and_inverses() {
        Int ann_bad = 0, inv_bad = 0, elements = 0, invertibles = 0;
        auto probe = [&](const EndoMatrix& A) {
            ++elements;
            if (poly_eval(to_int_poly(annihilating_poly(A)), A) != mat_zero(pr)) ++ann_bad;
            if (is_invertible(A)) {
                ++invertibles;
                const EndoMatrix direct = inverse_direct(A);
                if (direct != inverse_via_minpoly(A) || mat_mul(A, direct) != mat_identity(pr) ||
                    mat_mul(direct, A) != mat_identity(pr)) {
                    ++inv_bad;
                }
            }
        };
        const bool exhaustive = ring_fits(opt.budget);
        if (exhaustive) {
            oracle::RingEnumerator en(pr, opt.budget);
            NaiveMatrix M;
            while (en.next(M)) probe(oracle::from_naive(M));
        } else {
            for (Int i = 0; i < opt.samples; ++i) probe(random_matrix());
        }
        const std::string how = exhaustive ? "exhaustive" : "random";
        report("annihilating quadratic kills every element", ann_bad == 0,
               how + ", " + std::to_string(elements) + " elements");
        report("both inverse routes agree and invert", inv_bad == 0,
               how + ", " + std::to_string(invertibles) + " invertibles");
    }

    void check_module_action() {
        Int add_law_bad = 0, mul_law_bad = 0, phi_add_bad = 0, cases = 0;
        auto probe = [&](const EndoMatrix& A, const EndoMatrix& B, const ModulePoint& v,
                         const ModulePoint& w) {
            ++cases;
            if (apply(A, point_add(v, w)) != point_add(apply(A, v), apply(A, w))) ++add_law_bad;
            if (apply(mat_mul(A, B), v) != apply(A, apply(B, v))) ++mul_law_bad;
            if (apply(mat_add(A, B), v) != point_add(apply(A, v), apply(B, v))) ++phi_add_bad;
        };
        const bool exhaustive = ring_fits(256);
        if (exhaustive) {
            const std::vector<NaiveMatrix> all = all_elements();
            std::vector<ModulePoint> points;
            for (Int x = 0; x < pr.p; ++x) {
                for (Int y = 0; y < pr.modulus; ++y) points.push_back(make_point(pr, x, y));
            }
            for (const NaiveMatrix& X : all) {
                const EndoMatrix A = oracle::from_naive(X);
                for (const NaiveMatrix& Y : all) {
                    const EndoMatrix B = oracle::from_naive(Y);
                    // Every point feeds every law; the second point of each
                    // pair is the cyclic neighbor.
                    for (std::size_t i = 0; i < points.size(); ++i) {
                        probe(A, B, points[i], points[(i + 1) % points.size()]);
                    }
                }
            }
        } else {
            for (Int i = 0; i < opt.samples; ++i) {
                probe(random_matrix(), random_matrix(), random_point(), random_point());
            }
        }
        report("module action is additive and multiplicative",
               add_law_bad == 0 && mul_law_bad == 0 && phi_add_bad == 0,
               std::string(exhaustive ? "exhaustive" : "random") + ", " +
                   std::to_string(cases) + " cases");
    }

    void check_unit_density() {
        const Census c = census(pr);
        // unit_count / ring_size == (1 - 1/p)^2, cleared of denominators.
        const bool ok = c.unit_count * pr.p * pr.p == c.ring_size * (pr.p - 1) * (pr.p - 1);
        report("unit density equals (1 - 1/p)^2", ok,
               std::to_string(c.unit_count) + " / " + std::to_string(c.ring_size));
    }

    void check_minimal_poly() {
        if (!ring_fits(opt.pair_budget) || pr.modulus > kExhaustiveDigitCap) {
            skip("minimal polynomial minimality", "degree-1 scan too large for the budget");
            return;
        }
        Int bad = 0, elements = 0;
        oracle::RingEnumerator en(pr, opt.budget);
        NaiveMatrix M;
        while (en.next(M)) {
            ++elements;
            const EndoMatrix A = oracle::from_naive(M);
            const IntPoly f = minimal_poly(A);
            if (poly_eval(f, A) != mat_zero(pr)) {
                ++bad;
                continue;
            }
            if (f.degree() == 2) {
                for (Int e = 0; e < pr.modulus; ++e) {
                    if (poly_eval(make_poly({e, 1}), A) == mat_zero(pr)) {
                        ++bad;
                        break;
                    }
                }
            }
        }
        report("minimal polynomial minimality", bad == 0,
               std::to_string(elements) + " elements");
    }
};

} // namespace

std::vector<CheckResult> run_verification(const RingParams& pr, const VerifyOptions& options) {
    Verifier v(pr, options);
    v.check_digits();
    v.check_enumeration();
    v.check_matrix_ops();
    v.check_invertibility();
    v.check_annihilation_and_inverses();
    v.check_module_action();
    v.check_unit_density();
    v.check_minimal_poly();
    return std::move(v.results);
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results) {
        if (!r.passed) return false;
    }
    return true;
}

} // namespace endoring
