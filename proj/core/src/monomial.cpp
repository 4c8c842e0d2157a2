#include "hs/monomial.hpp"

#include <algorithm>

namespace hs {

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (auto e : e_) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw input_error("monomial arity mismatch");
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw input_error("monomial arity mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    if (!o.divides(*this)) throw input_error("inexact monomial division");
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> e(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> e(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) e[i] = std::min(a[i], b[i]);
    return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

namespace {

// a < b under grevlex restricted to indices [lo, hi).
bool grevlex_less(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

bool lex_less(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

}  // namespace

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars()) throw input_error("monomial arity mismatch");
    switch (kind_) {
        case Kind::Grevlex:
            return grevlex_less(a, b, 0, a.nvars());
        case Kind::Lex:
            return lex_less(a, b);
        case Kind::Block: {
            std::size_t k = std::min(block_, a.nvars());
            if (grevlex_less(a, b, 0, k)) return true;
            if (grevlex_less(b, a, 0, k)) return false;
            return grevlex_less(a, b, k, a.nvars());
        }
    }
    return false;
}

std::string MonomialOrder::name() const {
    switch (kind_) {
        case Kind::Grevlex:
            return "grevlex";
        case Kind::Lex:
            return "lex";
        case Kind::Block:
            return "block(" + std::to_string(block_) + ")";
    }
    return "?";
}

MonomialOrder MonomialOrder::from_name(const std::string& s) {
    if (s == "grevlex") return grevlex();
    if (s == "lex") return lex();
    throw input_error("unknown monomial order: " + s);
}

}  // namespace hs
