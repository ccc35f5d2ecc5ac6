#include "endoring/format.hpp"

namespace endoring {

std::string digit_form(const RingParams& pr, Int n) {
    const Digits d = digits_from_int(pr, n);
    std::string out;
    for (std::size_t i = d.u.size(); i-- > 0;) {
        if (d.u[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(d.u[i]);
        } else if (i == 1) {
            out += std::to_string(pr.p) + "*" + std::to_string(d.u[i]);
        } else {
            out += std::to_string(pr.p) + "^" + std::to_string(i) + "*" + std::to_string(d.u[i]);
        }
    }
    return out.empty() ? "0" : out;
}

std::string to_string(const EndoMatrix& A) {
    return "[[" + std::to_string(A.a) + "," + std::to_string(A.b) + "],[" +
           std::to_string(bottom_left(A)) + "," + std::to_string(digits_to_int(A.d)) + "]]";
}

std::string to_string(const ModulePoint& v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(digits_to_int(v.y)) + ")";
}

std::string to_string(const IntPoly& g) {
    if (g.coeffs.empty()) return "0";
    std::string out;
    for (std::size_t i = g.coeffs.size(); i-- > 0;) {
        const Int c = g.coeffs[i];
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            std::string term = (c == 1) ? "" : std::to_string(c);
            term += "x";
            if (i > 1) term += "^" + std::to_string(i);
            out += term;
        }
    }
    return out;
}

} // namespace endoring
