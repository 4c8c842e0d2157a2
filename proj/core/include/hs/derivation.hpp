#ifndef HS_DERIVATION_HPP
#define HS_DERIVATION_HPP

#include "hs/series.hpp"

namespace hs {

struct ValidationReport {
    bool ok = true;
    std::size_t failing_generator = 0;  // index into the ideal's generators
    std::size_t failing_order = 0;
    Polynomial residue;  // the nonzero coefficient witnessing the failure
};

// Truncated Hasse-Schmidt derivation of length m, stored by its generator
// images xi(mu, i) = D_mu(x_i).  The table determines the whole derivation:
// the action on any element is substitution of the generator series.
class HSDerivation {
  public:
    HSDerivation(AlgebraPtr algebra, std::size_t length,
                 std::vector<std::vector<Polynomial>> xi, bool run_validation = true);

    static HSDerivation identity(AlgebraPtr algebra, std::size_t length);

    const AlgebraPtr& algebra() const { return algebra_; }
    std::size_t length() const { return length_; }
    bool validated() const { return validated_; }

    // mu in 1..length.
    const Polynomial& xi(std::size_t mu, std::size_t i) const;
    const std::vector<std::vector<Polynomial>>& table() const { return xi_; }

    // phi_D(x_i) in A[t]/<t^(length+1)>.
    TruncatedSeries generator_series(std::size_t i) const;
    // phi_D on an arbitrary lift.
    TruncatedSeries apply(const Polynomial& lift) const;

    bool operator==(const HSDerivation& o) const;
    bool is_identity() const;

  private:
    AlgebraPtr algebra_;
    std::size_t length_;
    std::vector<std::vector<Polynomial>> xi_;  // xi_[mu-1][i]
    bool validated_ = false;

    friend ValidationReport validate(const HSDerivation&);
};

// phi_D(f_alpha) = 0 for every ideal generator; checking generators
// suffices because phi_D is multiplicative.
ValidationReport validate(const HSDerivation& D);

// Group law (D o E)_alpha = sum_{i+j=alpha} D_i E_j, computed by
// substituting E's series into D's action.
HSDerivation compose(const HSDerivation& D, const HSDerivation& E);

// Group inverse, solved order by order from the triangular relations.
HSDerivation inverse(const HSDerivation& D);

// Drop the rows above n.
HSDerivation truncate(const HSDerivation& D, std::size_t n);

// phi_D(g) lies in J*A[t]_m for every generator g of J.
bool is_logarithmic(const HSDerivation& D, const Ideal& J, Budget* budget = nullptr);

std::vector<Polynomial> first_component(const HSDerivation& D);

// xi defines a derivation of A: sum_j d_j(f_alpha) xi_j = 0 in A for all
// ideal generators.
bool derivation_check(const PresentedAlgebra& A, const std::vector<Polynomial>& xi);

}  // namespace hs

#endif
