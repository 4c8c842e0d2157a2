#ifndef HS_GROEBNER_HPP
#define HS_GROEBNER_HPP

#include <optional>
#include <vector>

#include "hs/budget.hpp"
#include "hs/polynomial.hpp"

namespace hs {

// Finitely generated ideal of the ambient ring.  Zero generators are
// dropped at construction.
class Ideal {
  public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

  private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
};

// f = sum quotients[i] * basis[i] + remainder, exactly; no term of the
// remainder is divisible by any basis leading term.
struct DivisionCertificate {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

// Reduced Groebner basis, optionally with the transformation expressing
// each element over the source generators (elements()[k] equals
// sum_i transform()[k][i] * source().generators()[i]).  Transforms are
// opt-in: the representation polynomials grow much faster than the basis,
// so only the certificate extractions that need them pay for them.
class GroebnerBasis {
  public:
    const std::vector<Polynomial>& elements() const { return elements_; }
    const MonomialOrder& order() const { return order_; }
    const Ideal& source() const { return source_; }
    const RingPtr& ring() const { return source_.ring(); }

    bool has_transform() const { return !transform_.empty() || elements_.empty(); }
    const std::vector<std::vector<Polynomial>>& transform() const;

    bool is_unit_ideal() const;

  private:
    friend GroebnerBasis buchberger(const Ideal&, MonomialOrder, Budget*, bool);
    Ideal source_;
    MonomialOrder order_;
    std::vector<Polynomial> elements_;
    std::vector<std::vector<Polynomial>> transform_;
};

// Buchberger with the Gebauer-Moeller pair criteria and sugar selection.
// Deterministic for fixed input and order.
GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order = MonomialOrder::grevlex(),
                         Budget* budget = nullptr, bool with_transform = false);

// Multivariate division of f by an ordered list of divisors.
DivisionCertificate divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                           const MonomialOrder& order);

// Division against the basis; the remainder is the canonical representative
// of f modulo the ideal.
DivisionCertificate normal_form(const Polynomial& f, const GroebnerBasis& basis);
Polynomial reduce(const Polynomial& f, const GroebnerBasis& basis);

bool ideal_membership(const Polynomial& f, const GroebnerBasis& basis);
bool ideal_membership(const Polynomial& f, const Ideal& ideal, Budget* budget = nullptr);

// Coefficients c with f = sum c[i] * source generator i, when f lies in the
// ideal; nullopt otherwise.
std::optional<std::vector<Polynomial>> membership_certificate(const Polynomial& f,
                                                              const GroebnerBasis& basis);

// Generators of I cap J via one-variable elimination of t from tI + (1-t)J.
Ideal ideal_intersection(const Ideal& I, const Ideal& J, Budget* budget = nullptr);

// Generators of (I : f) for f nonzero.
Ideal ideal_quotient(const Ideal& I, const Polynomial& f, Budget* budget = nullptr);

// Krull dimension of R/I from the staircase of the leading-term ideal;
// -1 for the unit ideal.
int krull_dimension(const Ideal& I, Budget* budget = nullptr);

// Mutual membership of generators.
bool same_ideal(const Ideal& I, const Ideal& J, Budget* budget = nullptr);

}  // namespace hs

#endif
