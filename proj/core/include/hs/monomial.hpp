#ifndef HS_MONOMIAL_HPP
#define HS_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "hs/errors.hpp"

namespace hs {

// Exponent vector of fixed length (the ambient variable count).
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial variable(std::size_t nvars, std::size_t i) {
        Monomial m(nvars);
        m.e_.at(i) = 1;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t degree() const;
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Exact quotient; requires o.divides(*this).
    Monomial operator/(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    const std::vector<std::uint32_t>& exponents() const { return e_; }

  private:
    std::vector<std::uint32_t> e_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

// Term order: grevlex, lex, or a two-block elimination order whose first
// block (the variables being eliminated) is compared grevlex first.
// All three are total, multiplicative well-orders.
class MonomialOrder {
  public:
    enum class Kind { Grevlex, Lex, Block };

    MonomialOrder() : kind_(Kind::Grevlex) {}

    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder elimination_block(std::size_t k) {
        return MonomialOrder(Kind::Block, k);
    }

    Kind kind() const { return kind_; }
    std::size_t block() const { return block_; }

    // Strict a < b in this order.
    bool less(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && block_ == o.block_;
    }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

    std::string name() const;
    static MonomialOrder from_name(const std::string& s);

  private:
    MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}
    Kind kind_;
    std::size_t block_ = 0;
};

}  // namespace hs

#endif
