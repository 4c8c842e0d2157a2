#ifndef HS_ALGEBRA_HPP
#define HS_ALGEBRA_HPP

#include <memory>

#include "hs/groebner.hpp"

namespace hs {

// A = R/I with a cached reduced basis.  Elements of A are represented by
// their normal forms; reduce() maps any lift to the canonical
// representative of its class.
class PresentedAlgebra {
  public:
    PresentedAlgebra(RingPtr ring, Ideal ideal, MonomialOrder order = MonomialOrder::grevlex(),
                     Budget* budget = nullptr);

    const RingPtr& ring() const { return ring_; }
    const Ideal& ideal() const { return ideal_; }
    const GroebnerBasis& basis() const { return basis_; }
    const MonomialOrder& order() const { return order_; }
    std::size_t nvars() const { return ring_->nvars(); }

    Polynomial reduce(const Polynomial& f) const { return hs::reduce(f, basis_); }
    bool is_zero(const Polynomial& f) const { return reduce(f).is_zero(); }
    bool is_trivial() const { return basis_.is_unit_ideal(); }  // A = 0

    Polynomial zero() const { return Polynomial::zero(ring_, order_); }
    Polynomial one() const {
        return Polynomial::constant(ring_, ring_->field().one(), order_);
    }

  private:
    RingPtr ring_;
    Ideal ideal_;
    MonomialOrder order_;
    GroebnerBasis basis_;
};

using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

AlgebraPtr make_algebra(RingPtr ring, std::vector<Polynomial> gens,
                        MonomialOrder order = MonomialOrder::grevlex(),
                        Budget* budget = nullptr);

// The ambient ring viewed as an algebra with zero ideal.
AlgebraPtr make_free_algebra(RingPtr ring, MonomialOrder order = MonomialOrder::grevlex());

// Standard monomials (the staircase) when A is finite-dimensional over its
// field: monomials outside the leading-term ideal, ascending in the
// algebra's order.  Throws input_error when the staircase is infinite.
std::vector<Monomial> finite_staircase(const PresentedAlgebra& A);

}  // namespace hs

#endif
