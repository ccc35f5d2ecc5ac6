#pragma once

#include "endoring/matrix.hpp"

namespace endoring {

// An element (x, y) of Z_p x Z_{p^m}, the module the matrices act on.
struct ModulePoint {
    RingParams params;
    Int x = 0;
    Digits y;

    bool operator==(const ModulePoint&) const = default;
};

// Throws Error if x or y is out of range.
ModulePoint make_point(const RingParams& pr, Int x, Int y);

// Componentwise sum, x mod p and y mod p^m.
ModulePoint point_add(const ModulePoint& v1, const ModulePoint& v2);

// The endomorphism action: the image of (x, y) is
//   ( a*x + b*(y mod p) mod p,  p^(m-1)*c*x + d*y mod p^m ),
// i.e. x times the image of (1, 0) plus y times the image of (0, 1).
ModulePoint apply(const EndoMatrix& A, const ModulePoint& v);

} // namespace endoring
