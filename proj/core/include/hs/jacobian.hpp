#ifndef HS_JACOBIAN_HPP
#define HS_JACOBIAN_HPP

#include "hs/algebra.hpp"

namespace hs {

// Matrix of partials of a generating set: row i is the gradient of gens[i].
// Entries are kept as lifts in R; reduce through the algebra when needed.
struct JacobianMatrix {
    std::vector<Polynomial> gens;
    std::vector<std::vector<Polynomial>> entries;  // rows() x cols()

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return entries.empty() ? 0 : entries[0].size(); }
};

JacobianMatrix jacobian(const std::vector<Polynomial>& gens);

// Exact determinant of the submatrix selected by (rows, cols), by cofactor
// expansion.  Index vectors select rows/columns in the given order.
Polynomial matrix_minor(const std::vector<std::vector<Polynomial>>& entries,
                        const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols, const RingPtr& ring);

Polynomial minor_det(const JacobianMatrix& M, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols);

struct MinorRef {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    Polynomial lifted;   // determinant in R
    Polynomial reduced;  // normal form in A, nonzero
};

// Ideal of level x level minors of the Jacobian of the algebra's stored
// generators, reduced mod I with zero minors dropped.  Level 0 is the unit
// ideal by the empty-minor convention.
struct FittingIdeal {
    std::size_t level = 0;
    std::vector<MinorRef> minors;

    std::vector<Polynomial> generators() const;
    std::vector<Polynomial> lifted_generators() const;
    bool is_zero() const { return minors.empty(); }
};

FittingIdeal fitting_ideal(const PresentedAlgebra& A, std::size_t level,
                           Budget* budget = nullptr);

// Same, over an explicit generating set of the same ideal.
FittingIdeal fitting_ideal(const PresentedAlgebra& A, const std::vector<Polynomial>& gens,
                           std::size_t level, Budget* budget = nullptr);

// A claimed prime containing the ideal under study.  Primality is a trusted
// input assumption (no decomposition machinery here); the height is
// recomputed from the staircase and must match any claimed value.
class PrimeWitness {
  public:
    PrimeWitness(RingPtr ring, std::vector<Polynomial> gens,
                 std::optional<int> claimed_height = std::nullopt, Budget* budget = nullptr);

    const Ideal& ideal() const { return ideal_; }
    const GroebnerBasis& basis() const { return basis_; }
    int height() const { return height_; }
    bool contains(const Polynomial& f) const { return ideal_membership(f, basis_); }

  private:
    Ideal ideal_;
    GroebnerBasis basis_;
    int height_;
};

// Largest size of a minor of M with nonzero normal form mod P; requires
// every generator behind M to lie in P.
int rank_at_prime(const JacobianMatrix& M, const PrimeWitness& P, Budget* budget = nullptr);

struct JhetReport {
    std::vector<bool> holds;  // one flag per supplied prime
    bool all = true;
};

// For each P: true iff some generator of the level-het(P) Fitting ideal
// lies outside P.
JhetReport check_jhet(const PresentedAlgebra& A, const std::vector<PrimeWitness>& primes,
                      Budget* budget = nullptr);

struct GenericGenerators {
    std::vector<Polynomial> all;       // S, generates I
    std::vector<Polynomial> selected;  // F, subset of S with the rank property
    std::size_t max_height = 0;        // r
};

// Builds a generating set S of I containing an r-element subset F whose
// Jacobian attains rank het(P) at every supplied prime.  Extends F one
// element at a time; when the two inductive candidates each fail at one
// prime, combines them as h_m + lambda*h_1 with lambda found through the
// intersection of the remaining primes.
GenericGenerators generic_generators(const Ideal& I, const std::vector<PrimeWitness>& primes,
                                     Budget* budget = nullptr);

}  // namespace hs

#endif
