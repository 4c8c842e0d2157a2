#ifndef HS_POLYNOMIAL_HPP
#define HS_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "hs/monomial.hpp"
#include "hs/ring.hpp"

namespace hs {

struct Term {
    Monomial mono;
    Coeff coeff;
};

// Sparse exact multivariate polynomial.  Terms are kept strictly
// descending under the carried monomial order; no zero coefficients are
// stored, so equal polynomials have identical term vectors once sorted
// under the same order.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring, MonomialOrder order = MonomialOrder::grevlex());

    static Polynomial zero(RingPtr ring, MonomialOrder order = MonomialOrder::grevlex());
    static Polynomial constant(RingPtr ring, const Coeff& c,
                               MonomialOrder order = MonomialOrder::grevlex());
    static Polynomial variable(RingPtr ring, std::size_t i,
                               MonomialOrder order = MonomialOrder::grevlex());
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms,
                                 MonomialOrder order = MonomialOrder::grevlex());

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    std::uint32_t total_degree() const;  // 0 for the zero polynomial
    std::size_t nterms() const { return terms_.size(); }

    // Leading data under the carried order.
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Coeff& leading_coeff() const { return leading_term().coeff; }

    // Same terms, re-sorted under another order.
    Polynomial with_order(const MonomialOrder& order) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Coeff& c) const;
    Polynomial mul_term(const Monomial& m, const Coeff& c) const;
    Polynomial pow(std::uint32_t e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Coeff coefficient(const Monomial& m) const;
    Polynomial monic() const;  // divide by the leading coefficient

    // Formal partial derivative with respect to variable j, reduced in
    // characteristic p.
    Polynomial derivative(std::size_t j) const;

    // Deterministic printing: terms descending in the carried order.
    std::string str() const;

    void check_same_ring(const Polynomial& o) const;

  private:
    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Term> terms_;

    void normalize(std::vector<Term> raw);
};

// Exact parser for the polynomial string grammar: integer (or a/b)
// coefficients, optional '*', '^' for powers, '(' ')' grouping, variables
// from the ring's declared list.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text,
                            MonomialOrder order = MonomialOrder::grevlex());

}  // namespace hs

#endif
