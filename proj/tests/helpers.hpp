#ifndef HS_TEST_HELPERS_HPP
#define HS_TEST_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "hs/algebra.hpp"
#include "hs/polynomial.hpp"

namespace hstest {

using namespace hs;

inline RingPtr ring_q(std::vector<std::string> vars) {
    return make_ring(Field::rationals(), std::move(vars));
}

inline RingPtr ring_p(std::uint32_t p, std::vector<std::string> vars) {
    return make_ring(Field::prime(p), std::move(vars));
}

inline Polynomial P(const RingPtr& r, const std::string& s) {
    return parse_polynomial(r, s);
}

inline std::vector<Polynomial> PV(const RingPtr& r, const std::vector<std::string>& ss) {
    std::vector<Polynomial> out;
    for (const auto& s : ss) out.push_back(P(r, s));
    return out;
}

// Deterministic random polynomial: up to max_terms terms, exponents below
// max_exp, coefficients across the whole field (small ints over Q).
inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring,
                              std::size_t max_terms = 5, std::uint32_t max_exp = 3) {
    std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
    std::uniform_int_distribution<std::uint32_t> expd(0, max_exp);
    std::uniform_int_distribution<long long> coeffd(-6, 6);
    std::vector<Term> terms;
    std::size_t k = nterms(rng);
    for (std::size_t t = 0; t < k; ++t) {
        std::vector<std::uint32_t> e(ring->nvars());
        for (auto& x : e) x = expd(rng);
        Coeff c = ring->field().from_int(coeffd(rng));
        if (!c.is_zero()) terms.push_back({Monomial(std::move(e)), c});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace hstest

#endif
