#ifndef HS_PROBLEM_HPP
#define HS_PROBLEM_HPP

#include <map>

#include "hs/leaps.hpp"

namespace hs {

// One JSON problem format shared by all verbs; polynomials travel as
// strings in the declared variables.
struct WitnessSpec {
    std::vector<std::string> generators;
    std::optional<int> height;
    std::string purpose;
};

struct ProblemAssertions {
    bool complete_intersection = false;
    bool radical = false;
    std::optional<int> equidimensional_codim;
};

struct ProblemSpec {
    std::uint32_t characteristic = 0;
    std::vector<std::string> variables;
    std::vector<std::string> ideal;
    std::string order = "grevlex";
    std::map<std::string, std::string> derivation;  // empty when absent
    bool has_derivation = false;
    std::optional<std::string> delta;
    std::vector<WitnessSpec> primes;
    ProblemAssertions assertions;
    std::vector<std::map<std::string, std::string>> hs_rows;  // empty when absent
};

ProblemSpec parse_problem_text(const std::string& json_text);
ProblemSpec parse_problem_file(const std::string& path);

struct Flags {
    std::optional<std::string> order;  // overrides the problem's order
    std::size_t max_order = 8;
    std::string method = "auto";  // ci | equidim | reduced | auto
    std::optional<std::size_t> degree_bound;
    std::optional<std::size_t> ell;
    std::string mode = "exact";  // leaps: exact | degree-bounded
    bool text = false;
};

// Exit codes: 0 success, 2 verification failure, 3 budget exhausted,
// 4 input error.
struct RunResult {
    std::string output;
    int exit_code = 0;
};

// Routes a verb to the owning module and renders the deterministic report.
// A report is produced even on failure.
RunResult dispatch(const std::string& verb, const ProblemSpec& spec, const Flags& flags);

}  // namespace hs

#endif
