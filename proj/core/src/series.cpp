#include "hs/series.hpp"

namespace hs {

TruncatedSeries::TruncatedSeries(AlgebraPtr algebra, std::size_t m)
    : algebra_(std::move(algebra)), m_(m) {
    c_.assign(m_ + 1, algebra_->zero());
}

TruncatedSeries TruncatedSeries::constant(AlgebraPtr algebra, std::size_t m,
                                          const Polynomial& c) {
    TruncatedSeries s(algebra, m);
    s.c_[0] = algebra->reduce(c);
    return s;
}

TruncatedSeries TruncatedSeries::generator_series(AlgebraPtr algebra, std::size_t m,
                                                  std::size_t i,
                                                  std::span<const Polynomial> xi) {
    TruncatedSeries s(algebra, m);
    s.c_[0] = algebra->reduce(Polynomial::variable(algebra->ring(), i, algebra->order()));
    for (std::size_t mu = 1; mu <= m && mu <= xi.size(); ++mu)
        s.c_[mu] = algebra->reduce(xi[mu - 1]);
    return s;
}

bool TruncatedSeries::is_zero() const {
    for (const Polynomial& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

void TruncatedSeries::set_coefficient(std::size_t mu, const Polynomial& value) {
    c_.at(mu) = algebra_->reduce(value);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (m_ != o.m_) throw input_error("series truncation mismatch");
    TruncatedSeries r(algebra_, m_);
    for (std::size_t i = 0; i <= m_; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    if (m_ != o.m_) throw input_error("series truncation mismatch");
    TruncatedSeries r(algebra_, m_);
    for (std::size_t i = 0; i <= m_; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (m_ != o.m_) throw input_error("series truncation mismatch");
    TruncatedSeries r(algebra_, m_);
    for (std::size_t i = 0; i <= m_; ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= m_; ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        }
    }
    for (Polynomial& c : r.c_) c = algebra_->reduce(c);
    return r;
}

TruncatedSeries TruncatedSeries::scale(const Polynomial& a) const {
    TruncatedSeries r(algebra_, m_);
    for (std::size_t i = 0; i <= m_; ++i)
        r.c_[i] = algebra_->reduce(c_[i] * a);
    return r;
}

TruncatedSeries TruncatedSeries::pow(std::uint32_t e) const {
    TruncatedSeries acc = constant(algebra_, m_, algebra_->one());
    TruncatedSeries base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    if (m_ != o.m_) return false;
    for (std::size_t i = 0; i <= m_; ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

TruncatedSeries truncated_substitution(const Polynomial& f,
                                       std::span<const TruncatedSeries> images,
                                       std::size_t m) {
    if (images.empty()) throw input_error("substitution requires at least one image");
    const AlgebraPtr& A = images[0].algebra();
    if (f.ring()->nvars() != images.size() || *f.ring() != *A->ring())
        throw input_error("ring mismatch between polynomial and images");
    for (const TruncatedSeries& s : images)
        if (s.truncation_order() != m) throw input_error("series truncation mismatch");

    TruncatedSeries acc(A, m);
    for (const Term& t : f.terms()) {
        TruncatedSeries prod = TruncatedSeries::constant(
            A, m, Polynomial::constant(A->ring(), t.coeff, A->order()));
        for (std::size_t i = 0; i < images.size(); ++i)
            if (t.mono[i] > 0) prod = prod * images[i].pow(t.mono[i]);
        acc = acc + prod;
    }
    return acc;
}

}  // namespace hs
