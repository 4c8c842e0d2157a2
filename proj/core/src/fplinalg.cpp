#include "hs/fplinalg.hpp"

namespace hs {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t base = a % p, acc = 1, e = p - 2;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

}  // namespace

FpSolution solve_fp(std::uint32_t p, std::vector<FpVec> rows, FpVec rhs) {
    if (rows.size() != rhs.size()) throw input_error("system shape mismatch");
    const std::size_t m = rows.size();
    const std::size_t n = m ? rows[0].size() : 0;
    for (const FpVec& r : rows)
        if (r.size() != n) throw input_error("ragged system");

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && rows[piv][col] % p == 0) ++piv;
        if (piv == m) continue;
        std::swap(rows[piv], rows[rank]);
        std::swap(rhs[piv], rhs[rank]);
        std::uint32_t inv = inv_mod(rows[rank][col], p);
        for (std::size_t j = col; j < n; ++j)
            rows[rank][j] = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(rows[rank][j]) * inv % p);
        rhs[rank] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(rhs[rank]) * inv % p);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || rows[i][col] % p == 0) continue;
            std::uint64_t f = rows[i][col] % p;
            for (std::size_t j = col; j < n; ++j)
                rows[i][j] = static_cast<std::uint32_t>(
                    (rows[i][j] + (p - 1) * f % p * rows[rank][j]) % p);
            rhs[i] = static_cast<std::uint32_t>((rhs[i] + (p - 1) * f % p * rhs[rank]) % p);
        }
        pivot_col.push_back(col);
        ++rank;
    }

    FpSolution sol;
    for (std::size_t i = rank; i < m; ++i)
        if (rhs[i] % p != 0) return sol;  // inconsistent
    sol.consistent = true;
    sol.particular.assign(n, 0);
    for (std::size_t r = 0; r < rank; ++r) sol.particular[pivot_col[r]] = rhs[r] % p;

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        FpVec v(n, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            std::uint32_t a = rows[r][free_col] % p;
            v[pivot_col[r]] = a ? p - a : 0;
        }
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

void FpSpan::eliminate(FpVec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint64_t f = v[pivots_[r]] % p_;
        if (f == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            v[j] = static_cast<std::uint32_t>((v[j] + (p_ - 1) * f % p_ * rows_[r][j]) % p_);
    }
}

bool FpSpan::add(FpVec v) {
    if (v.size() != dim_) throw input_error("span dimension mismatch");
    for (auto& x : v) x %= p_;
    eliminate(v);
    std::size_t piv = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
        if (v[j]) {
            piv = j;
            break;
        }
    if (piv == dim_) return false;
    std::uint32_t inv = inv_mod(v[piv], p_);
    for (auto& x : v) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * inv % p_);
    // Back-eliminate the new pivot from existing rows, keep rows sorted.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint64_t f = rows_[r][piv] % p_;
        if (f == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            rows_[r][j] = static_cast<std::uint32_t>(
                (rows_[r][j] + (p_ - 1) * f % p_ * v[j]) % p_);
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
    return true;
}

bool FpSpan::contains(FpVec v) const {
    if (v.size() != dim_) throw input_error("span dimension mismatch");
    for (auto& x : v) x %= p_;
    eliminate(v);
    for (std::uint32_t x : v)
        if (x % p_) return false;
    return true;
}

}  // namespace hs
