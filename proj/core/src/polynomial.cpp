#include "hs/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hs {

Ring::Ring(Field field, std::vector<std::string> vars)
    : field_(field), vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                throw input_error("duplicate variable name: " + vars_[i]);
}

std::optional<std::size_t> Ring::variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

std::string Ring::str() const {
    std::string s = field_.str() + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    return s + "]";
}

RingPtr make_ring(Field field, std::vector<std::string> vars) {
    return std::make_shared<Ring>(field, std::move(vars));
}

Polynomial::Polynomial(RingPtr ring, MonomialOrder order)
    : ring_(std::move(ring)), order_(order) {}

Polynomial Polynomial::zero(RingPtr ring, MonomialOrder order) {
    return Polynomial(std::move(ring), order);
}

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c, MonomialOrder order) {
    Polynomial p(ring, order);
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(ring->nvars()), c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i, MonomialOrder order) {
    if (i >= ring->nvars()) throw input_error("variable index out of range");
    Polynomial p(ring, order);
    p.terms_.push_back({Monomial::variable(ring->nvars(), i), ring->field().one()});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms, MonomialOrder order) {
    Polynomial p(std::move(ring), order);
    p.normalize(std::move(terms));
    return p;
}

void Polynomial::normalize(std::vector<Term> raw) {
    for (const Term& t : raw) {
        if (t.mono.nvars() != ring_->nvars())
            throw input_error("term arity does not match ring");
    }
    std::sort(raw.begin(), raw.end(), [&](const Term& a, const Term& b) {
        return order_.greater(a.mono, b.mono);
    });
    terms_.clear();
    for (Term& t : raw) {
        if (!terms_.empty() && terms_.back().mono == t.mono) {
            terms_.back().coeff = terms_.back().coeff + t.coeff;
            if (terms_.back().coeff.is_zero()) terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            terms_.push_back(std::move(t));
        }
    }
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one();
}

std::uint32_t Polynomial::total_degree() const {
    std::uint32_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw input_error("leading term of zero polynomial");
    return terms_.front();
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
    if (order == order_) return *this;
    Polynomial p(ring_, order);
    p.normalize(terms_);
    return p;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (!ring_ || !o.ring_) throw input_error("uninitialized polynomial");
    if (ring_ != o.ring_ && *ring_ != *o.ring_) throw input_error("ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    const Polynomial& rhs = o.order_ == order_ ? o : o.with_order(order_);
    Polynomial r(ring_, order_);
    r.terms_.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        if (terms_[i].mono == rhs.terms_[j].mono) {
            Coeff c = terms_[i].coeff + rhs.terms_[j].coeff;
            if (!c.is_zero()) r.terms_.push_back({terms_[i].mono, c});
            ++i, ++j;
        } else if (order_.greater(terms_[i].mono, rhs.terms_[j].mono)) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(rhs.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < rhs.terms_.size(); ++j) r.terms_.push_back(rhs.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    auto cmp = [this](const Monomial& a, const Monomial& b) {
        return order_.greater(a, b);
    };
    std::map<Monomial, Coeff, decltype(cmp)> acc(cmp);
    for (const Term& a : terms_) {
        for (const Term& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            Coeff c = a.coeff * b.coeff;
            auto it = acc.find(m);
            if (it == acc.end()) {
                if (!c.is_zero()) acc.emplace(std::move(m), std::move(c));
            } else {
                it->second = it->second + c;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
    Polynomial r(ring_, order_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) r.terms_.push_back({m, c});
    return r;
}

Polynomial Polynomial::operator*(const Coeff& c) const {
    if (c.is_zero()) return Polynomial(ring_, order_);
    Polynomial r(*this);
    for (Term& t : r.terms_) t.coeff = t.coeff * c;
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Coeff& c) const {
    if (c.is_zero()) return Polynomial(ring_, order_);
    Polynomial r(*this);
    for (Term& t : r.terms_) {
        t.mono = t.mono * m;
        t.coeff = t.coeff * c;
    }
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial acc = Polynomial::constant(ring_, ring_->field().one(), order_);
    Polynomial base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    check_same_ring(o);
    const Polynomial& rhs = o.order_ == order_ ? o : o.with_order(order_);
    if (terms_.size() != rhs.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != rhs.terms_[i].mono || terms_[i].coeff != rhs.terms_[i].coeff)
            return false;
    return true;
}

Coeff Polynomial::coefficient(const Monomial& m) const {
    for (const Term& t : terms_)
        if (t.mono == m) return t.coeff;
    return ring_->field().zero();
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * leading_coeff().inverse();
}

Polynomial Polynomial::derivative(std::size_t j) const {
    if (!ring_) throw input_error("uninitialized polynomial");
    if (j >= ring_->nvars()) throw input_error("derivative index out of range");
    std::vector<Term> out;
    for (const Term& t : terms_) {
        std::uint32_t e = t.mono[j];
        if (e == 0) continue;
        Coeff c = t.coeff * ring_->field().from_int(static_cast<long long>(e));
        if (c.is_zero()) continue;
        auto exps = t.mono.exponents();
        exps[j] -= 1;
        out.push_back({Monomial(std::move(exps)), c});
    }
    return from_terms(ring_, std::move(out), order_);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    const bool modular = ring_->field().is_prime_field();
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Coeff c = t.coeff;
        if (first) {
            first = false;
            if (!modular && c.rat_value() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            if (!modular && c.rat_value() < 0) {
                os << " - ";
                c = -c;
            } else {
                os << " + ";
            }
        }
        if (t.mono.is_one()) {
            os << c.str();
        } else {
            bool printed = false;
            if (!c.is_one()) {
                os << c.str();
                printed = true;
            }
            for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
                if (t.mono[i] == 0) continue;
                if (printed) os << "*";
                os << ring_->variable(i);
                if (t.mono[i] > 1) os << "^" << t.mono[i];
                printed = true;
            }
        }
    }
    return os.str();
}

}  // namespace hs
