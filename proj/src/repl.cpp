#include "endoring/repl.hpp"

#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "endoring/format.hpp"

namespace endoring {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_for(const RingParams& pr, const Value& v) {
    ordered_json j;
    j["p"] = pr.p;
    j["m"] = pr.m;
    if (const auto* n = std::get_if<Int>(&v)) {
        j["kind"] = "int";
        j["value"] = *n;
    } else if (const auto* A = std::get_if<EndoMatrix>(&v)) {
        j["kind"] = "matrix";
        j["value"] = {{A->a, A->b}, {bottom_left(*A), digits_to_int(A->d)}};
    } else if (const auto* pt = std::get_if<ModulePoint>(&v)) {
        j["kind"] = "point";
        j["value"] = {pt->x, digits_to_int(pt->y)};
    } else {
        j["kind"] = "poly";
        j["value"] = std::get<IntPoly>(v).coeffs;
    }
    return j;
}

std::string annotate(const RingParams& pr, Int n) {
    return "  " + std::to_string(n) + " = " + digit_form(pr, n) + "\n";
}

} // namespace

std::string render_value(const RingParams& pr, const Value& v, bool json) {
    if (json) return json_for(pr, v).dump() + "\n";
    if (const auto* n = std::get_if<Int>(&v)) {
        return std::to_string(*n) + "\n";
    }
    if (const auto* A = std::get_if<EndoMatrix>(&v)) {
        std::string out = to_string(*A) + "\n";
        // Echo the base-p expansion of the second row wherever it says more
        // than the plain integer does.
        if (const Int c_full = bottom_left(*A); c_full >= pr.p) out += annotate(pr, c_full);
        if (const Int d = digits_to_int(A->d); d >= pr.p) out += annotate(pr, d);
        return out;
    }
    if (const auto* pt = std::get_if<ModulePoint>(&v)) {
        return to_string(*pt) + "\n";
    }
    return to_string(std::get<IntPoly>(v)) + "\n";
}

int run_stream(const RingParams& pr, std::istream& in, std::ostream& out, std::ostream& err,
               const ReplOptions& options) {
    Session session{pr, {}};
    std::string line;
    while (true) {
        if (options.interactive) out << "> " << std::flush;
        if (!std::getline(in, line)) break;
        int code = 0;
        try {
            const std::optional<Statement> stmt = parse_statement(pr, line);
            if (!stmt) continue;
            if (const std::optional<Value> v = run_statement(*stmt, session)) {
                out << render_value(pr, *v, options.json);
            }
        } catch (const LexError& e) {
            code = 2;
            err << "error: " << e.what() << "\n";
        } catch (const ParseError& e) {
            code = 2;
            err << "error: " << e.what() << "\n";
        } catch (const LiteralError& e) {
            code = 2;
            err << "error: " << e.what() << "\n";
        } catch (const Error& e) {
            code = 1;
            err << "error: " << e.what() << "\n";
        }
        if (code != 0 && !options.interactive) return code;
    }
    if (options.interactive) out << "\n";
    return 0;
}

} // namespace endoring
