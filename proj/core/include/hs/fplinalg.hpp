#ifndef HS_FPLINALG_HPP
#define HS_FPLINALG_HPP

#include <cstdint>
#include <vector>

#include "hs/errors.hpp"

namespace hs {

using FpVec = std::vector<std::uint32_t>;

// Solution set of a dense linear system over F_p: a particular solution
// plus a kernel basis, or inconsistent.
struct FpSolution {
    bool consistent = false;
    FpVec particular;
    std::vector<FpVec> kernel;
};

// Solve rows * x = rhs over F_p by Gaussian elimination with deterministic
// pivoting.
FpSolution solve_fp(std::uint32_t p, std::vector<FpVec> rows, FpVec rhs);

// Row space accumulator in reduced row echelon form.
class FpSpan {
  public:
    FpSpan(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim) {}

    // Returns true if the vector enlarged the span.
    bool add(FpVec v);
    bool contains(FpVec v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t ambient_dim() const { return dim_; }
    const std::vector<FpVec>& basis() const { return rows_; }

  private:
    std::uint32_t p_;
    std::size_t dim_;
    std::vector<FpVec> rows_;    // echelon rows, pivot columns increasing
    std::vector<std::size_t> pivots_;

    void eliminate(FpVec& v) const;
};

}  // namespace hs

#endif
