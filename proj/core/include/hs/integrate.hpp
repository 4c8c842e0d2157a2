#ifndef HS_INTEGRATE_HPP
#define HS_INTEGRATE_HPP

#include <optional>
#include <string>

#include "hs/derivation.hpp"
#include "hs/fplinalg.hpp"
#include "hs/jacobian.hpp"

namespace hs {

// Log of every membership/validity check a run performed.
struct CheckEntry {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct Transcript {
    std::vector<CheckEntry> checks;

    void add(std::string name, bool pass, std::string detail = "");
    // Records the check; throws verification_error when it failed.
    void require(std::string name, bool pass, std::string detail = "");
    bool all_pass() const;
};

// State entering one extension step: a partial integral of length nu-1
// whose table entries lie in the constraint ideal Ma (unit ideal when
// unconstrained).
struct StepContext {
    AlgebraPtr algebra;
    std::vector<Polynomial> gens;                  // generating set in play (lifts)
    std::vector<std::vector<Polynomial>> partial;  // rows 1..nu-1 of the table
    Ideal constraint;                              // Ma

    std::size_t next_order() const { return partial.size() + 1; }
};

// The augmented linear system deciding the step: matrix entries are the
// reduced Jacobian, the right-hand side is -F_alpha where F_alpha is the
// t^nu coefficient of the partial integral applied to generator alpha.
struct ObstructionSystem {
    std::vector<std::vector<Polynomial>> matrix;  // s x n, reduced
    std::vector<Polynomial> obstruction;          // F_alpha, reduced
    std::size_t order = 0;
};

// Computes the obstruction coefficients; verifies the partial really is an
// integral below nu and, when the table lies in Ma, that every F_alpha
// lies in Ma^2.
ObstructionSystem obstruction(const StepContext& ctx, Transcript* transcript = nullptr,
                              Budget* budget = nullptr);

struct CofactorSolution {
    std::vector<Polynomial> xi;  // reduced; zero outside the minor's columns
    // xi[cols[q]] = sum_i coeffs[q][i] * b[rows[i]] exactly in R.
    std::vector<std::vector<Polynomial>> coeffs;
};

// Solves M x = delta * b through the cofactors of the given minor,
// verifying the product and the membership of every coordinate in the
// ideal generated by the minor-row entries of b before returning.
CofactorSolution cofactor_solve(const PresentedAlgebra& A,
                                const std::vector<std::vector<Polynomial>>& M,
                                const std::vector<Polynomial>& b, const Polynomial& delta,
                                const std::vector<std::size_t>& rows,
                                const std::vector<std::size_t>& cols, Budget* budget = nullptr);

enum class Method {
    CompleteIntersection,
    EquidimensionalDelta,
    ReducedLog,
    ArtinianLinear,
    DegreeBounded,
};

enum class Outcome { Extended, Obstructed, Inconclusive };

std::string method_name(Method m);
std::string outcome_name(Outcome o);

struct ExtensionResult {
    Outcome outcome = Outcome::Inconclusive;
    Method method = Method::CompleteIntersection;
    std::optional<HSDerivation> witness;
    std::size_t reached_order = 0;
    std::string detail;
    Transcript transcript;
};

// delta with delta(A) inside J_r for a presentation by exactly r
// generators: order-by-order integral with every table entry in J_r.
ExtensionResult integrate_ci(const AlgebraPtr& A, const std::vector<Polynomial>& delta,
                             std::size_t m, Budget* budget = nullptr);

// Equidimensional algebra satisfying the height condition: integral of
// Delta*delta with every table entry in <Delta>.  When log_ideal is given
// the table is kept as exact Delta-multiples in R and checked logarithmic
// at each order.
ExtensionResult integrate_equidim(const AlgebraPtr& A, const std::vector<Polynomial>& delta,
                                  const Polynomial& Delta,
                                  const std::vector<PrimeWitness>& primes, std::size_t m,
                                  const std::optional<Ideal>& log_ideal = std::nullopt,
                                  Budget* budget = nullptr);

// Radical ideal with a supplied minimal decomposition: runs the
// equidimensional procedure on the components missing Delta and descends
// the logarithmic integral to A.
ExtensionResult integrate_reduced(const AlgebraPtr& A, const std::vector<Polynomial>& delta,
                                  const Polynomial& Delta,
                                  const std::vector<PrimeWitness>& decomposition, std::size_t m,
                                  Budget* budget = nullptr);

// Solution set of one extension step over an artinian F_p algebra,
// linearized over the staircase basis.
struct AffineSpace {
    bool empty = true;
    std::vector<Polynomial> particular;             // vector over A, length n
    std::vector<std::vector<Polynomial>> kernel;    // basis of homogeneous solutions
    std::size_t coordinates = 0;                    // unknowns in the linearization
};

AffineSpace linear_extension_space(const StepContext& ctx, Budget* budget = nullptr);

}  // namespace hs

#endif
