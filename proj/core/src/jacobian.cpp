#include "hs/jacobian.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hs {

namespace {

// Strictly increasing k-subsets of {0..n-1}, lexicographic.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        fn(idx);
        if (k == 0) return;
        std::size_t i = k;
        bool advanced = false;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

Polynomial det_recursive(const std::vector<std::vector<Polynomial>>& m,
                         const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols, const RingPtr& ring) {
    const std::size_t k = rows.size();
    if (k == 0) return Polynomial::constant(ring, ring->field().one());
    if (k == 1) return m[rows[0]][cols[0]];
    Polynomial acc = Polynomial::zero(ring);
    bool negate = false;
    for (std::size_t j = 0; j < k; ++j, negate = !negate) {
        const Polynomial& pivot = m[rows[0]][cols[j]];
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> sub_cols;
        for (std::size_t c = 0; c < k; ++c)
            if (c != j) sub_cols.push_back(cols[c]);
        Polynomial cof = pivot * det_recursive(m, sub_rows, sub_cols, ring);
        acc = negate ? acc - cof : acc + cof;
    }
    return acc;
}

}  // namespace

JacobianMatrix jacobian(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw input_error("jacobian of empty generator list");
    const RingPtr& ring = gens[0].ring();
    JacobianMatrix M;
    M.gens = gens;
    for (const Polynomial& g : gens) {
        if (*g.ring() != *ring) throw input_error("generator ring mismatch");
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < ring->nvars(); ++j) row.push_back(g.derivative(j));
        M.entries.push_back(std::move(row));
    }
    return M;
}

Polynomial matrix_minor(const std::vector<std::vector<Polynomial>>& entries,
                        const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols, const RingPtr& ring) {
    if (rows.size() != cols.size()) throw input_error("minor must be square");
    return det_recursive(entries, rows, cols, ring);
}

Polynomial minor_det(const JacobianMatrix& M, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
    return matrix_minor(M.entries, rows, cols, M.gens[0].ring());
}

std::vector<Polynomial> FittingIdeal::generators() const {
    std::vector<Polynomial> out;
    for (const MinorRef& m : minors) out.push_back(m.reduced);
    return out;
}

std::vector<Polynomial> FittingIdeal::lifted_generators() const {
    std::vector<Polynomial> out;
    for (const MinorRef& m : minors) out.push_back(m.lifted);
    return out;
}

FittingIdeal fitting_ideal(const PresentedAlgebra& A, std::size_t level, Budget* budget) {
    return fitting_ideal(A, A.ideal().generators(), level, budget);
}

FittingIdeal fitting_ideal(const PresentedAlgebra& A, const std::vector<Polynomial>& gens,
                           std::size_t level, Budget* budget) {
    if (level > A.nvars()) throw input_error("fitting level out of range");
    FittingIdeal J;
    J.level = level;
    if (level == 0) {
        Polynomial one = A.one();
        Polynomial red = A.reduce(one);
        if (!red.is_zero()) J.minors.push_back({{}, {}, one, red});
        return J;
    }
    if (gens.empty() || level > gens.size()) return J;  // no minors: zero ideal
    JacobianMatrix M = jacobian(gens);
    Budget local;
    Budget& bud = budget ? *budget : local;
    for_each_subset(M.rows(), level, [&](const std::vector<std::size_t>& rows) {
        for_each_subset(M.cols(), level, [&](const std::vector<std::size_t>& cols) {
            bud.charge();
            Polynomial d = minor_det(M, rows, cols);
            if (d.is_zero()) return;
            Polynomial red = A.reduce(d);
            if (red.is_zero()) return;
            J.minors.push_back({rows, cols, d, red});
        });
    });
    return J;
}

PrimeWitness::PrimeWitness(RingPtr ring, std::vector<Polynomial> gens,
                           std::optional<int> claimed_height, Budget* budget)
    : ideal_(ring, std::move(gens)),
      basis_(buchberger(ideal_, MonomialOrder::grevlex(), budget)) {
    if (basis_.is_unit_ideal()) throw input_error("prime witness is the unit ideal");
    int dim = krull_dimension(ideal_, budget);
    height_ = static_cast<int>(ring->nvars()) - dim;
    if (claimed_height && *claimed_height != height_)
        throw input_error("claimed height " + std::to_string(*claimed_height) +
                          " disagrees with computed height " + std::to_string(height_));
}

int rank_at_prime(const JacobianMatrix& M, const PrimeWitness& P, Budget* budget) {
    for (const Polynomial& g : M.gens)
        if (!P.contains(g)) throw input_error("witness does not contain the ideal");
    Budget local;
    Budget& bud = budget ? *budget : local;
    for (std::size_t ell = std::min(M.rows(), M.cols()); ell >= 1; --ell) {
        bool found = false;
        for_each_subset(M.rows(), ell, [&](const std::vector<std::size_t>& rows) {
            if (found) return;
            for_each_subset(M.cols(), ell, [&](const std::vector<std::size_t>& cols) {
                if (found) return;
                bud.charge();
                Polynomial d = minor_det(M, rows, cols);
                if (!d.is_zero() && !P.contains(d)) found = true;
            });
        });
        if (found) return static_cast<int>(ell);
    }
    return 0;
}

JhetReport check_jhet(const PresentedAlgebra& A, const std::vector<PrimeWitness>& primes,
                      Budget* budget) {
    JhetReport report;
    std::map<int, FittingIdeal> cache;
    for (const PrimeWitness& P : primes) {
        for (const Polynomial& g : A.ideal().generators())
            if (!P.contains(g)) throw input_error("witness does not contain the ideal");
        int h = P.height();
        auto it = cache.find(h);
        if (it == cache.end())
            it = cache.emplace(h, fitting_ideal(A, static_cast<std::size_t>(h), budget)).first;
        bool holds = false;
        for (const MinorRef& m : it->second.minors)
            if (!P.contains(m.lifted)) {
                holds = true;
                break;
            }
        report.holds.push_back(holds);
        report.all = report.all && holds;
    }
    return report;
}

namespace {

// True iff some (#F+1)-column minor of J(F, g) lies outside P.
bool extends_rank_at(const std::vector<Polynomial>& F, const Polynomial& g,
                     const PrimeWitness& P, Budget& bud) {
    std::vector<Polynomial> gens = F;
    gens.push_back(g);
    JacobianMatrix M = jacobian(gens);
    const std::size_t k = gens.size();
    if (k > M.cols()) return false;
    std::vector<std::size_t> rows(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = i;
    bool found = false;
    for_each_subset(M.cols(), k, [&](const std::vector<std::size_t>& cols) {
        if (found) return;
        bud.charge();
        Polynomial d = minor_det(M, rows, cols);
        if (!d.is_zero() && !P.contains(d)) found = true;
    });
    return found;
}

// lambda in the intersection of rest, outside avoid: first the intersection
// generators, then small linear combinations of them.
Polynomial find_lambda(const std::vector<const PrimeWitness*>& rest, const PrimeWitness& avoid,
                       Budget& bud) {
    Ideal W = rest[0]->ideal();
    for (std::size_t i = 1; i < rest.size(); ++i)
        W = ideal_intersection(W, rest[i]->ideal(), &bud);
    for (const Polynomial& w : W.generators())
        if (!avoid.contains(w)) return w;
    const Field& field = W.ring()->field();
    std::uint32_t p = field.characteristic();
    long long cmax = p ? std::min<long long>(p - 1, 4) : 4;
    const auto& gens = W.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            for (long long a = 1; a <= cmax; ++a) {
                for (long long b = 1; b <= cmax; ++b) {
                    bud.charge();
                    Polynomial cand = gens[i] * field.from_int(a) + gens[j] * field.from_int(b);
                    if (!cand.is_zero() && !avoid.contains(cand)) return cand;
                }
            }
        }
    }
    throw budget_error("no separating lambda found in the prime intersection");
}

// One step of the inductive extension: g in I with rank J(F cup {g}) equal
// to min(#F+1, het(P)) at every prime in scope.
Polynomial extend_once(const std::vector<Polynomial>& F, const std::vector<Polynomial>& S,
                       const std::vector<const PrimeWitness*>& scope, Budget& bud) {
    const std::size_t ell = F.size();
    std::vector<const PrimeWitness*> tall;  // primes of height > #F
    for (const PrimeWitness* P : scope)
        if (P->height() > static_cast<int>(ell)) tall.push_back(P);
    if (tall.empty())
        throw verification_error("extension step called with no prime above current rank");

    if (tall.size() == 1) {
        for (const Polynomial& h : S) {
            bool duplicate = false;
            for (const Polynomial& f : F)
                if (f == h) {
                    duplicate = true;
                    break;
                }
            if (duplicate) continue;
            if (extends_rank_at(F, h, *tall[0], bud)) return h;
        }
        throw verification_error(
            "no generator raises the Jacobian rank; witness data inconsistent with J^het");
    }

    const PrimeWitness* first = tall.front();
    const PrimeWitness* last = tall.back();
    std::vector<const PrimeWitness*> scope_no_first, scope_no_last;
    for (const PrimeWitness* P : scope) {
        if (P != first) scope_no_first.push_back(P);
        if (P != last) scope_no_last.push_back(P);
    }
    Polynomial h_m = extend_once(F, S, scope_no_first, bud);
    if (extends_rank_at(F, h_m, *first, bud)) return h_m;
    Polynomial h_1 = extend_once(F, S, scope_no_last, bud);
    if (extends_rank_at(F, h_1, *last, bud)) return h_1;

    std::vector<const PrimeWitness*> rest(tall.begin() + 1, tall.end());
    Polynomial lambda = find_lambda(rest, *first, bud);
    Polynomial g = h_m + lambda * h_1;
    for (const PrimeWitness* P : tall)
        if (!extends_rank_at(F, g, *P, bud))
            throw verification_error(
                "combined candidate fails the rank condition; witnesses may not be prime");
    return g;
}

}  // namespace

GenericGenerators generic_generators(const Ideal& I, const std::vector<PrimeWitness>& primes,
                                     Budget* budget) {
    if (primes.empty()) throw input_error("generic generators require at least one prime");
    if (I.is_zero_ideal()) throw input_error("generic generators of the zero ideal");
    Budget local;
    Budget& bud = budget ? *budget : local;

    PresentedAlgebra A(I.ring(), I, MonomialOrder::grevlex(), &bud);
    JhetReport jh = check_jhet(A, primes, &bud);
    if (!jh.all) throw input_error("J^het condition fails at a supplied prime");

    std::size_t r = 0;
    for (const PrimeWitness& P : primes) r = std::max(r, static_cast<std::size_t>(P.height()));

    GenericGenerators out;
    out.max_height = r;
    out.all = I.generators();
    std::vector<const PrimeWitness*> scope;
    for (const PrimeWitness& P : primes) scope.push_back(&P);

    while (out.selected.size() < r) {
        Polynomial g = extend_once(out.selected, out.all, scope, bud);
        out.selected.push_back(g);
        bool present = false;
        for (const Polynomial& s : out.all)
            if (s == g) {
                present = true;
                break;
            }
        if (!present) out.all.push_back(g);
    }

    // Postconditions, checked exactly: <S> = I and the rank property.
    if (!same_ideal(Ideal(I.ring(), out.all), I, &bud))
        throw verification_error("generic generating set fails to generate the ideal");
    if (!out.selected.empty()) {  // r = 0 only for height-0 witnesses
        JacobianMatrix JF = jacobian(out.selected);
        for (const PrimeWitness& P : primes) {
            if (rank_at_prime(JF, P, &bud) != P.height())
                throw verification_error("rank postcondition fails at a supplied prime");
        }
    }
    return out;
}

}  // namespace hs
