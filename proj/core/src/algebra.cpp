#include "hs/algebra.hpp"

#include <algorithm>

namespace hs {

PresentedAlgebra::PresentedAlgebra(RingPtr ring, Ideal ideal, MonomialOrder order,
                                   Budget* budget)
    : ring_(std::move(ring)),
      ideal_(std::move(ideal)),
      order_(order),
      basis_(buchberger(ideal_, order, budget)) {
    if (*ideal_.ring() != *ring_) throw input_error("ideal ring mismatch");
}

AlgebraPtr make_algebra(RingPtr ring, std::vector<Polynomial> gens, MonomialOrder order,
                        Budget* budget) {
    Ideal ideal(ring, std::move(gens));
    return std::make_shared<PresentedAlgebra>(std::move(ring), std::move(ideal), order, budget);
}

AlgebraPtr make_free_algebra(RingPtr ring, MonomialOrder order) {
    Ideal ideal = Ideal::zero(ring);
    return std::make_shared<PresentedAlgebra>(std::move(ring), std::move(ideal), order);
}

std::vector<Monomial> finite_staircase(const PresentedAlgebra& A) {
    const std::size_t n = A.nvars();
    std::vector<Monomial> lms;
    for (const Polynomial& e : A.basis().elements()) lms.push_back(e.leading_monomial());

    // Finite iff every variable has a pure power among the leading terms.
    std::vector<std::uint32_t> box(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t bound = 0;
        for (const Monomial& m : lms) {
            bool pure = m[i] > 0;
            for (std::size_t j = 0; j < n && pure; ++j)
                if (j != i && m[j] > 0) pure = false;
            if (pure) bound = bound ? std::min(bound, m[i]) : m[i];
        }
        if (bound == 0) throw input_error("algebra is not artinian: variable " +
                                          A.ring()->variable(i) + " has no pure power leading term");
        box[i] = bound;
    }

    std::vector<Monomial> staircase;
    std::vector<std::uint32_t> e(n, 0);
    for (;;) {
        Monomial m(e);
        bool standard = true;
        for (const Monomial& lm : lms)
            if (lm.divides(m)) {
                standard = false;
                break;
            }
        if (standard) staircase.push_back(m);
        std::size_t i = 0;
        while (i < n) {
            if (++e[i] < box[i]) break;
            e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    std::sort(staircase.begin(), staircase.end(), [&](const Monomial& a, const Monomial& b) {
        return A.order().less(a, b);
    });
    return staircase;
}

}  // namespace hs
