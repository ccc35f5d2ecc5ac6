#include <fstream>
#include <iostream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "endoring/format.hpp"
#include "endoring/oracle.hpp"
#include "endoring/repl.hpp"
#include "endoring/verify.hpp"

namespace {

// Exit codes: 0 success, 1 evaluation error, 2 parse/lex error,
// 3 verification failure, 4 bad parameters.
constexpr int kExitVerifyFailed = 3;
constexpr int kExitBadParams = 4;

int run_eval(const endoring::RingParams& pr, const std::string& script, bool json) {
    endoring::ReplOptions options;
    options.json = json;
    if (!script.empty()) {
        std::ifstream file(script);
        if (!file) {
            std::cerr << "error: cannot open script '" << script << "'\n";
            return kExitBadParams;
        }
        return endoring::run_stream(pr, file, std::cout, std::cerr, options);
    }
    options.interactive = isatty(fileno(stdin)) != 0;
    if (options.interactive) {
        std::cout << "endoring: arithmetic in End(Z_" << pr.p << " x Z_" << pr.modulus
                  << "); matrices are [[a,b],[" << pr.leading_power() << "*c,d]]\n";
    }
    return endoring::run_stream(pr, std::cin, std::cout, std::cerr, options);
}

int run_verify(const endoring::RingParams& pr, endoring::Int budget, bool json) {
    endoring::VerifyOptions options;
    options.budget = budget;
    const std::vector<endoring::CheckResult> results = endoring::run_verification(pr, options);
    for (const endoring::CheckResult& r : results) {
        if (json) {
            std::cout << "{\"check\":\"" << r.name << "\",\"status\":\""
                      << (r.skipped ? "skip" : (r.passed ? "ok" : "fail")) << "\",\"detail\":\""
                      << r.detail << "\"}\n";
            continue;
        }
        const char* status = r.skipped ? "skip" : (r.passed ? "ok  " : "FAIL");
        std::cout << status << "  " << r.name << " (" << r.detail << ")\n";
    }
    if (!endoring::all_passed(results)) {
        std::cout << "verification FAILED at p=" << pr.p << " m=" << pr.m << "\n";
        return kExitVerifyFailed;
    }
    std::cout << "all checks passed at p=" << pr.p << " m=" << pr.m << "\n";
    return 0;
}

int run_census(const endoring::RingParams& pr, bool json) {
    const endoring::Census c = endoring::census(pr);
    if (json) {
        std::cout << "{\"p\":" << pr.p << ",\"m\":" << pr.m << ",\"kind\":\"census\""
                  << ",\"ring_size\":" << c.ring_size << ",\"unit_count\":" << c.unit_count
                  << "}\n";
    } else {
        std::cout << "ring size:  " << c.ring_size << "\n"
                  << "unit count: " << c.unit_count << "\n"
                  << "density:    (1 - 1/" << pr.p << ")^2\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic in End(Z_p x Z_{p^m}) through its matrix representation"};
    app.require_subcommand(0, 1);

    endoring::Int p = 0;
    endoring::Int m = 0;
    bool json = false;
    std::string script;
    endoring::Int budget = 1'000'000;

    app.add_option("--p", p, "prime p")->required();
    app.add_option("--m", m, "exponent m (at least 2)")->required();
    app.add_flag("--json", json, "machine-readable output, one JSON object per line");
    app.add_option("script", script, "script to evaluate (default: read standard input)");

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate expressions (the default)");
    eval_cmd->fallthrough();
    std::string eval_script;
    eval_cmd->add_option("script", eval_script, "script to evaluate");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "cross-check the arithmetic against the brute-force oracle");
    verify_cmd->fallthrough();
    verify_cmd->add_option("--budget", budget, "ring enumeration cap (default 1000000)");

    CLI::App* census_cmd = app.add_subcommand("census", "print element and unit counts");
    census_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadParams;
    }

    try {
        const endoring::RingParams pr = endoring::make_params(p, m);
        if (verify_cmd->parsed()) return run_verify(pr, budget, json);
        if (census_cmd->parsed()) return run_census(pr, json);
        if (eval_cmd->parsed() && !eval_script.empty()) script = eval_script;
        return run_eval(pr, script, json);
    } catch (const endoring::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }
}
