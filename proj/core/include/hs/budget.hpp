#ifndef HS_BUDGET_HPP
#define HS_BUDGET_HPP

#include <cstdint>

#include "hs/errors.hpp"

namespace hs {

// Step counter shared by the basis engine and the search loops.  Exceeding
// the limit raises budget_error; partial results are never reported as
// answers.  The CLI seeds the limit from HS_BUDGET_STEPS.
class Budget {
  public:
    Budget() : limit_(default_limit()) {}
    explicit Budget(std::uint64_t limit) : limit_(limit) {}

    void charge(std::uint64_t steps = 1) {
        used_ += steps;
        if (used_ > limit_) throw budget_error("step budget exhausted");
    }
    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

    // HS_BUDGET_STEPS if set, otherwise a generous desk-scale default.
    static std::uint64_t default_limit();

  private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

}  // namespace hs

#endif
