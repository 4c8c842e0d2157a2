#ifndef HS_ERRORS_HPP
#define HS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hs {

// Exit-code taxonomy used by the CLI: 0 success, 2 verification failure,
// 3 budget exhausted, 4 input error.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input (bad characteristic, unknown
// variable, mismatched rings, witness that fails its stated containments).
struct input_error : error {
    using error::error;
};

// A configured step budget ran out before an answer was certain.  Never a
// wrong answer: callers either re-run with a bigger budget or report
// "inconclusive".
struct budget_error : error {
    using error::error;
};

// An internal hard check failed: a certificate did not re-evaluate, a
// solver output did not verify, or a promised membership does not hold.
struct verification_error : error {
    using error::error;
};

}  // namespace hs

#endif
