#include "endoring/module_point.hpp"

#include <string>

namespace endoring {

ModulePoint make_point(const RingParams& pr, Int x, Int y) {
    if (x < 0 || x >= pr.p) {
        throw Error("BadEntry", "x must lie in [0, p)");
    }
    if (y < 0 || y >= pr.modulus) {
        throw Error("BadEntry", "y must lie in [0, p^m)");
    }
    return ModulePoint{pr, x, digits_from_int(pr, y)};
}

ModulePoint point_add(const ModulePoint& v1, const ModulePoint& v2) {
    if (!(v1.params == v2.params)) {
        throw ParamMismatch("points live in different modules");
    }
    return ModulePoint{v1.params, (v1.x + v2.x) % v1.params.p, add(v1.y, v2.y)};
}

ModulePoint apply(const EndoMatrix& A, const ModulePoint& v) {
    if (!(A.params == v.params)) {
        throw ParamMismatch("matrix and point live over different parameters");
    }
    const Int p = A.params.p;
    // b meets y through y's residue mod p; c contributes only at the top
    // digit of the second component.
    const Int x_out = (A.a * v.x + A.b * v.y.u[0]) % p;
    Digits y_out = add_top_term(mul(A.d, v.y), A.c * v.x % p);
    return ModulePoint{A.params, x_out, std::move(y_out)};
}

} // namespace endoring
