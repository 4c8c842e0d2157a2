#ifndef HS_FIELD_HPP
#define HS_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hs/errors.hpp"

namespace hs {

class Coeff;

// Coefficient field of the ambient ring: F_p for a prime p < 2^16, or the
// rationals (characteristic 0).  Arithmetic is exact in both cases.
class Field {
  public:
    Field() = default;  // rationals

    static Field rationals() { return Field(); }
    static Field prime(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    bool is_prime_field() const { return p_ != 0; }

    Coeff zero() const;
    Coeff one() const;
    Coeff from_int(long long v) const;
    Coeff from_mpz(const mpz_class& v) const;
    Coeff from_mpq(const mpq_class& v) const;

    bool operator==(const Field& other) const { return p_ == other.p_; }
    bool operator!=(const Field& other) const { return !(*this == other); }

    std::string str() const;

  private:
    std::uint32_t p_ = 0;  // 0 marks the rationals
};

// A single exact field element carrying its field tag.  F_p values are
// canonical representatives in [0, p); rationals are arbitrary-precision
// and kept in lowest terms by GMP.
class Coeff {
  public:
    Coeff() = default;  // rational zero

    std::uint32_t characteristic() const { return p_; }
    Field field() const { return p_ ? Field::prime(p_) : Field::rationals(); }

    bool is_zero() const;
    bool is_one() const;

    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator/(const Coeff& o) const;
    Coeff operator-() const;
    Coeff inverse() const;
    Coeff pow(std::uint64_t e) const;

    bool operator==(const Coeff& o) const;
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    // Canonical printing: "c" in [0,p) for F_p; "a" or "a/b" for rationals.
    std::string str() const;

    // F_p value in [0, p); only meaningful for prime fields.
    std::uint32_t fp_value() const { return fp_; }
    const mpq_class& rat_value() const { return rat_; }

  private:
    friend class Field;
    std::uint32_t p_ = 0;
    std::uint32_t fp_ = 0;
    mpq_class rat_;

    void check_same(const Coeff& o) const {
        if (p_ != o.p_) throw input_error("coefficient field mismatch");
    }
};

bool is_prime_u32(std::uint32_t n);

}  // namespace hs

#endif
