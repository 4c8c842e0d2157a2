#include "hs/budget.hpp"

#include <cstdlib>

namespace hs {

std::uint64_t Budget::default_limit() {
    if (const char* env = std::getenv("HS_BUDGET_STEPS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw input_error("HS_BUDGET_STEPS must be a positive integer");
    }
    return 20'000'000ULL;
}

}  // namespace hs
