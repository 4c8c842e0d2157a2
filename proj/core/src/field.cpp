#include "hs/field.hpp"

namespace hs {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 16)) throw input_error("prime modulus must be < 2^16");
    if (!is_prime_u32(p)) throw input_error("characteristic must be 0 or prime");
    Field f;
    f.p_ = p;
    return f;
}

Coeff Field::zero() const { return from_int(0); }
Coeff Field::one() const { return from_int(1); }

Coeff Field::from_int(long long v) const {
    Coeff c;
    c.p_ = p_;
    if (p_ == 0) {
        c.rat_ = mpq_class(static_cast<long>(v));
    } else {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        c.fp_ = static_cast<std::uint32_t>(r);
    }
    return c;
}

Coeff Field::from_mpz(const mpz_class& v) const {
    Coeff c;
    c.p_ = p_;
    if (p_ == 0) {
        c.rat_ = mpq_class(v);
    } else {
        mpz_class r = v % mpz_class(p_);
        if (r < 0) r += p_;
        c.fp_ = static_cast<std::uint32_t>(r.get_ui());
    }
    return c;
}

Coeff Field::from_mpq(const mpq_class& v) const {
    if (p_ == 0) {
        Coeff c;
        c.rat_ = v;
        c.rat_.canonicalize();
        return c;
    }
    Coeff num = from_mpz(mpz_class(v.get_num()));
    Coeff den = from_mpz(mpz_class(v.get_den()));
    return num / den;
}

std::string Field::str() const {
    return p_ ? "GF(" + std::to_string(p_) + ")" : "QQ";
}

bool Coeff::is_zero() const { return p_ ? fp_ == 0 : rat_ == 0; }
bool Coeff::is_one() const { return p_ ? fp_ == 1 : rat_ == 1; }

Coeff Coeff::operator+(const Coeff& o) const {
    check_same(o);
    Coeff r;
    r.p_ = p_;
    if (p_) {
        std::uint32_t s = fp_ + o.fp_;
        r.fp_ = s >= p_ ? s - p_ : s;
    } else {
        r.rat_ = rat_ + o.rat_;
    }
    return r;
}

Coeff Coeff::operator-(const Coeff& o) const { return *this + (-o); }

Coeff Coeff::operator*(const Coeff& o) const {
    check_same(o);
    Coeff r;
    r.p_ = p_;
    if (p_) {
        // p < 2^16, so the product fits in 32 bits.
        r.fp_ = (fp_ * o.fp_) % p_;
    } else {
        r.rat_ = rat_ * o.rat_;
    }
    return r;
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inverse(); }

Coeff Coeff::operator-() const {
    Coeff r;
    r.p_ = p_;
    if (p_) {
        r.fp_ = fp_ == 0 ? 0 : p_ - fp_;
    } else {
        r.rat_ = -rat_;
    }
    return r;
}

Coeff Coeff::inverse() const {
    if (is_zero()) throw input_error("division by zero coefficient");
    Coeff r;
    r.p_ = p_;
    if (p_) {
        // Fermat: a^(p-2) mod p.
        std::uint64_t base = fp_, acc = 1, e = p_ - 2;
        while (e) {
            if (e & 1) acc = (acc * base) % p_;
            base = (base * base) % p_;
            e >>= 1;
        }
        r.fp_ = static_cast<std::uint32_t>(acc);
    } else {
        r.rat_ = 1 / rat_;
    }
    return r;
}

Coeff Coeff::pow(std::uint64_t e) const {
    Coeff acc = field().one();
    Coeff base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Coeff::operator==(const Coeff& o) const {
    if (p_ != o.p_) return false;
    return p_ ? fp_ == o.fp_ : rat_ == o.rat_;
}

std::string Coeff::str() const {
    if (p_) return std::to_string(fp_);
    return rat_.get_str();
}

}  // namespace hs
