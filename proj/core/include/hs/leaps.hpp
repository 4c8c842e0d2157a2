#ifndef HS_LEAPS_HPP
#define HS_LEAPS_HPP

#include "hs/integrate.hpp"

namespace hs {

// Finite-dimensional algebra over a prime field with its staircase basis.
struct ArtinianModel {
    AlgebraPtr algebra;
    std::vector<Monomial> staircase;  // ascending in the algebra's order
    std::size_t dimension = 0;        // over F_p
    bool local = false;               // every variable nilpotent
};

ArtinianModel artinian_model(AlgebraPtr A);

// F_p-basis of the module of derivations, as the kernel of the Jacobian
// acting on A^n linearized over the staircase.
std::vector<std::vector<Polynomial>> derivation_basis(const ArtinianModel& M,
                                                      Budget* budget = nullptr);

enum class IntegrabilityMode { ExactArtinian, DegreeBounded };

struct IntegrabilityResult {
    enum class Answer { Yes, No, Unknown };
    Answer answer = Answer::Unknown;
    std::optional<HSDerivation> witness;  // set on yes
    std::string certificate;
    std::uint64_t nodes = 0;  // DFS nodes explored
};

// Exact-artinian mode: depth-first search over the affine solution space of
// each extension order; "no" only after exhausting every branch.
// Degree-bounded mode: lifts the unknowns to R with total degree <= D and
// proceeds greedily; returns yes or unknown, never no.
IntegrabilityResult is_m_integrable(const AlgebraPtr& A, const std::vector<Polynomial>& delta,
                                    std::size_t m, IntegrabilityMode mode,
                                    std::size_t degree_bound = 0, Budget* budget = nullptr,
                                    const std::optional<HSDerivation>& hint = std::nullopt);

struct LeapEntry {
    std::size_t order = 0;
    std::vector<Polynomial> witness_delta;
    std::optional<HSDerivation> witness_integral;  // validated (order-1)-integral
    std::string obstruction_note;
    bool power_of_p = false;
};

struct LeapReport {
    std::size_t bound = 0;
    std::uint32_t characteristic = 0;
    std::vector<LeapEntry> leaps;
    bool exact = true;
    std::size_t degree_bound = 0;  // for non-exact reports
    bool complete = true;          // false when a budget cut the scan short
    std::string note;
    std::vector<std::size_t> ider_dims;  // dim_Fp IDer(A;s), s = 1..bound (exact mode)

    bool all_leaps_powers_of_p() const;
};

// Exact census: enumerates the F_p-space of (s-1)-integrable derivations
// level by level and tests each element for s-integrability.
LeapReport leap_scan(const ArtinianModel& M, std::size_t bound, Budget* budget = nullptr);

// Degree-bounded semi-decision: either certify integrals for the coordinate
// derivations of a free algebra, or follow one supplied derivation.
LeapReport leap_scan_degree_bounded(const AlgebraPtr& A,
                                    const std::optional<std::vector<Polynomial>>& delta,
                                    std::size_t bound, std::size_t degree_bound,
                                    Budget* budget = nullptr);

// dim over A/m of Der / m^power Der for a local artinian model.
std::size_t leap_bound(const ArtinianModel& M, std::size_t power, Budget* budget = nullptr);

// Smallest N >= 1 with m^N contained in J, testing all degree-N products of
// the generators; nullopt when the cap is reached.
std::optional<std::size_t> min_power_in_ideal(const Ideal& max_ideal, const Ideal& J,
                                              std::size_t cap, Budget* budget = nullptr);

}  // namespace hs

#endif
