#ifndef HS_SERIES_HPP
#define HS_SERIES_HPP

#include <span>

#include "hs/algebra.hpp"

namespace hs {

// Element of A[t]/<t^(m+1)>: coefficients c0..cm are normal forms in A.
class TruncatedSeries {
  public:
    TruncatedSeries(AlgebraPtr algebra, std::size_t m);

    static TruncatedSeries constant(AlgebraPtr algebra, std::size_t m, const Polynomial& c);
    // x_i plus the given higher coefficients xi[mu-1] at t^mu.
    static TruncatedSeries generator_series(AlgebraPtr algebra, std::size_t m, std::size_t i,
                                            std::span<const Polynomial> xi);

    const AlgebraPtr& algebra() const { return algebra_; }
    std::size_t truncation_order() const { return m_; }
    const Polynomial& coefficient(std::size_t mu) const { return c_.at(mu); }
    bool is_zero() const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scale(const Polynomial& a) const;
    TruncatedSeries pow(std::uint32_t e) const;

    bool operator==(const TruncatedSeries& o) const;

    void set_coefficient(std::size_t mu, const Polynomial& value);

  private:
    AlgebraPtr algebra_;
    std::size_t m_;
    std::vector<Polynomial> c_;
};

// f evaluated at the given images of the variables, all powers beyond t^m
// discarded; coefficients are normal forms in the images' algebra.
TruncatedSeries truncated_substitution(const Polynomial& f,
                                       std::span<const TruncatedSeries> images,
                                       std::size_t m);

}  // namespace hs

#endif
