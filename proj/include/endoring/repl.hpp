#pragma once

#include <iosfwd>

#include "endoring/eval.hpp"

namespace endoring {

struct ReplOptions {
    bool json = false;        // one JSON object per result instead of text
    bool interactive = false; // print prompts, keep going after errors
};

// Renders one evaluated value. In text mode matrices are followed by
// indented digit-form annotations for second-row entries of at least p.
std::string render_value(const RingParams& pr, const Value& v, bool json);

// Reads statements line by line from `in`, evaluating against one session.
// Results go to `out`, errors to `err`. Non-interactive runs stop at the
// first error; the return value is the process exit code (0 ok,
// 1 evaluation error, 2 parse/lex error).
int run_stream(const RingParams& pr, std::istream& in, std::ostream& out, std::ostream& err,
               const ReplOptions& options);

} // namespace endoring
