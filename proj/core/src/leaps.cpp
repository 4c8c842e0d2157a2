#include "hs/leaps.hpp"

#include <map>

namespace hs {

ArtinianModel artinian_model(AlgebraPtr A) {
    if (!A->ring()->field().is_prime_field())
        throw input_error("artinian model requires a prime field");
    if (A->is_trivial()) throw input_error("the zero algebra has no artinian model");
    ArtinianModel M;
    M.staircase = finite_staircase(*A);
    M.dimension = M.staircase.size();
    M.local = true;
    for (std::size_t i = 0; i < A->nvars(); ++i) {
        Polynomial x = Polynomial::variable(A->ring(), i, A->order());
        if (!A->is_zero(x.pow(static_cast<std::uint32_t>(M.dimension)))) {
            M.local = false;
            break;
        }
    }
    M.algebra = std::move(A);
    return M;
}

std::vector<std::vector<Polynomial>> derivation_basis(const ArtinianModel& M, Budget* budget) {
    // The order-1 extension space of the empty table is exactly the kernel
    // of the Jacobian.
    StepContext ctx{M.algebra, M.algebra->ideal().generators(), {},
                    Ideal::unit(M.algebra->ring())};
    AffineSpace space = linear_extension_space(ctx, budget);
    if (space.empty) throw verification_error("derivation space is never empty");
    for (const Polynomial& c : space.particular)
        if (!c.is_zero()) throw verification_error("homogeneous system returned a shift");
    return space.kernel;
}

namespace {

struct DfsState {
    const AlgebraPtr& A;
    const std::vector<Polynomial>& gens;
    std::size_t target;
    Budget& bud;
    std::uint64_t nodes = 0;
    std::size_t deepest_obstruction = 0;
    const std::vector<std::vector<Polynomial>>* hint = nullptr;
};

// Candidate enumeration: particular solution first, then kernel
// combinations in base-p counting order.  While the search prefix matches
// the hint (a witness one order shorter), its row for the current level is
// tried first.
bool dfs_extend(DfsState& st, std::vector<std::vector<Polynomial>>& table, bool on_hint) {
    if (table.size() >= st.target) return true;
    st.bud.charge();
    ++st.nodes;

    StepContext ctx{st.A, st.gens, table, Ideal::unit(st.A->ring())};
    AffineSpace space = linear_extension_space(ctx, &st.bud);
    const std::size_t nu = table.size() + 1;
    if (space.empty) {
        st.deepest_obstruction = std::max(st.deepest_obstruction, nu);
        return false;
    }

    const std::uint32_t p = st.A->ring()->field().characteristic();
    const std::size_t k = space.kernel.size();
    std::vector<std::uint32_t> c(k, 0);

    std::optional<std::vector<Polynomial>> hint_row;
    if (on_hint && st.hint && nu - 1 < st.hint->size()) hint_row = (*st.hint)[nu - 1];

    auto try_row = [&](std::vector<Polynomial> row, bool row_on_hint) {
        table.push_back(std::move(row));
        if (dfs_extend(st, table, row_on_hint)) return true;
        table.pop_back();
        return false;
    };

    if (hint_row && try_row(*hint_row, true)) return true;

    for (;;) {
        std::vector<Polynomial> row = space.particular;
        for (std::size_t i = 0; i < k; ++i) {
            if (c[i] == 0) continue;
            Coeff f = st.A->ring()->field().from_int(c[i]);
            for (std::size_t j = 0; j < row.size(); ++j)
                row[j] = st.A->reduce(row[j] + space.kernel[i][j] * f);
        }
        bool is_hint = hint_row && row == *hint_row;
        if (!is_hint && try_row(std::move(row), false)) return true;
        // next coefficient vector
        std::size_t i = 0;
        while (i < k) {
            if (++c[i] < p) break;
            c[i] = 0;
            ++i;
        }
        if (i == k) break;
    }
    return false;
}

std::vector<Monomial> monomials_up_to(const RingPtr& ring, std::uint32_t deg) {
    std::vector<Monomial> out;
    const std::size_t n = ring->nvars();
    std::vector<std::uint32_t> e(n, 0);
    for (;;) {
        std::uint32_t total = 0;
        for (auto x : e) total += x;
        if (total <= deg) out.push_back(Monomial(e));
        std::size_t i = 0;
        while (i < n) {
            if (++e[i] <= deg) break;
            e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return out;
}

IntegrabilityResult degree_bounded_search(const AlgebraPtr& A,
                                          const std::vector<Polynomial>& delta, std::size_t m,
                                          std::size_t D, Budget& bud) {
    IntegrabilityResult res;
    const RingPtr& ring = A->ring();
    const std::uint32_t p = ring->field().characteristic();
    if (p == 0) throw input_error("degree-bounded mode requires a prime field");

    std::vector<Monomial> monos = monomials_up_to(ring, static_cast<std::uint32_t>(D));
    const std::size_t n = ring->nvars();
    const std::size_t unknowns = n * monos.size();

    std::vector<std::vector<Polynomial>> table = {std::vector<Polynomial>()};
    table[0].reserve(n);
    for (const Polynomial& d : delta) table[0].push_back(A->reduce(d));

    if (A->ideal().is_zero_ideal()) {
        // Nothing to obstruct: extend by zero rows.
        for (std::size_t nu = 2; nu <= m; ++nu)
            table.emplace_back(n, Polynomial::zero(ring, A->order()));
        res.answer = IntegrabilityResult::Answer::Yes;
        res.witness = HSDerivation(A, m, table, true);
        res.certificate = "free algebra: zero extension";
        return res;
    }

    for (std::size_t nu = 2; nu <= m; ++nu) {
        bud.charge();
        StepContext ctx{A, A->ideal().generators(), table, Ideal::unit(ring)};
        ObstructionSystem obs = obstruction(ctx, nullptr, &bud);

        // Collect the support of all reduced products to index coordinates.
        std::map<Monomial, std::size_t, std::function<bool(const Monomial&, const Monomial&)>>
            slots([&](const Monomial& a, const Monomial& b) { return A->order().less(a, b); });
        auto intern = [&](const Polynomial& f) {
            for (const Term& t : f.terms())
                if (!slots.count(t.mono)) slots.emplace(t.mono, slots.size());
        };
        std::vector<std::vector<Polynomial>> prod(obs.matrix.size());
        for (std::size_t al = 0; al < obs.matrix.size(); ++al) {
            intern(obs.obstruction[al]);
            for (std::size_t j = 0; j < n; ++j)
                for (const Monomial& mono : monos) {
                    Polynomial pb = Polynomial::from_terms(ring, {{mono, ring->field().one()}},
                                                           A->order());
                    Polynomial red = A->reduce(obs.matrix[al][j] * pb);
                    intern(red);
                    prod[al].push_back(red);
                }
        }
        const std::size_t coords = slots.size();
        auto coord_vec = [&](const Polynomial& f) {
            FpVec v(coords, 0);
            for (const Term& t : f.terms()) v[slots.at(t.mono)] = t.coeff.fp_value();
            return v;
        };

        std::vector<FpVec> rows;
        FpVec rhs;
        for (std::size_t al = 0; al < obs.matrix.size(); ++al) {
            std::vector<FpVec> colvecs;
            for (const Polynomial& f : prod[al]) colvecs.push_back(coord_vec(f));
            FpVec target = coord_vec(A->reduce(-obs.obstruction[al]));
            for (std::size_t e = 0; e < coords; ++e) {
                FpVec row(unknowns, 0);
                for (std::size_t u = 0; u < unknowns; ++u) row[u] = colvecs[u][e];
                rows.push_back(std::move(row));
                rhs.push_back(target[e]);
            }
        }
        FpSolution sol = solve_fp(p, std::move(rows), std::move(rhs));
        if (!sol.consistent) {
            res.answer = IntegrabilityResult::Answer::Unknown;
            res.certificate = "no solution of total degree <= " + std::to_string(D) +
                              " at order " + std::to_string(nu);
            return res;
        }
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Term> terms;
            for (std::size_t b = 0; b < monos.size(); ++b) {
                std::uint32_t cv = sol.particular[j * monos.size() + b] % p;
                if (cv) terms.push_back({monos[b], ring->field().from_int(cv)});
            }
            row.push_back(A->reduce(Polynomial::from_terms(ring, std::move(terms), A->order())));
        }
        table.push_back(std::move(row));
    }

    HSDerivation D_found(A, m, table, true);
    res.answer = IntegrabilityResult::Answer::Yes;
    res.witness = D_found;
    res.certificate = "witness found with degree bound " + std::to_string(D);
    return res;
}

}  // namespace

IntegrabilityResult is_m_integrable(const AlgebraPtr& A, const std::vector<Polynomial>& delta,
                                    std::size_t m, IntegrabilityMode mode,
                                    std::size_t degree_bound, Budget* budget,
                                    const std::optional<HSDerivation>& hint) {
    if (m < 1) throw input_error("order must be at least 1");
    if (!derivation_check(*A, delta)) throw input_error("input is not a derivation");
    Budget local;
    Budget& bud = budget ? *budget : local;

    if (mode == IntegrabilityMode::DegreeBounded)
        return degree_bounded_search(A, delta, m, degree_bound, bud);

    IntegrabilityResult res;
    std::vector<std::vector<Polynomial>> table = {std::vector<Polynomial>()};
    for (const Polynomial& d : delta) table[0].push_back(A->reduce(d));

    DfsState st{A, A->ideal().generators(), m, bud};
    if (hint) st.hint = &hint->table();
    try {
        if (dfs_extend(st, table, true)) {
            res.answer = IntegrabilityResult::Answer::Yes;
            res.witness = HSDerivation(A, m, table, true);
            res.certificate = "validated witness after " + std::to_string(st.nodes) + " nodes";
        } else {
            res.answer = IntegrabilityResult::Answer::No;
            res.certificate = "exhausted " + std::to_string(st.nodes) +
                              " branch nodes; every branch is obstructed by order " +
                              std::to_string(st.deepest_obstruction);
        }
    } catch (const budget_error&) {
        res.answer = IntegrabilityResult::Answer::Unknown;
        res.certificate = "budget exhausted after " + std::to_string(st.nodes) + " nodes";
    }
    res.nodes = st.nodes;
    return res;
}

bool LeapReport::all_leaps_powers_of_p() const {
    for (const LeapEntry& e : leaps)
        if (!e.power_of_p) return false;
    return true;
}

namespace {

bool is_power_of(std::size_t s, std::uint32_t p) {
    if (s < 2) return false;
    while (s % p == 0) s /= p;
    return s == 1;
}

std::size_t log_base_p(std::size_t count, std::uint32_t p) {
    std::size_t d = 0;
    while (count > 1) {
        if (count % p) throw verification_error("integrable set size is not a power of p");
        count /= p;
        ++d;
    }
    return d;
}

}  // namespace

LeapReport leap_scan(const ArtinianModel& M, std::size_t bound, Budget* budget) {
    Budget local;
    Budget& bud = budget ? *budget : local;
    const AlgebraPtr& A = M.algebra;
    const std::uint32_t p = A->ring()->field().characteristic();

    LeapReport report;
    report.bound = bound;
    report.characteristic = p;

    std::vector<std::vector<Polynomial>> basis = derivation_basis(M, &bud);
    const std::size_t d = basis.size();
    double count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    if (count > (1u << 22)) {
        report.complete = false;
        report.note = "derivation space too large to enumerate exactly (p^" +
                      std::to_string(d) + " elements)";
        return report;
    }

    struct Element {
        std::vector<Polynomial> delta;
        std::optional<HSDerivation> witness;
    };
    std::vector<Element> survivors;
    {
        const std::size_t n = A->nvars();
        std::vector<std::uint32_t> c(d, 0);
        for (;;) {
            bud.charge();
            std::vector<Polynomial> delta(n, A->zero());
            for (std::size_t i = 0; i < d; ++i) {
                if (c[i] == 0) continue;
                Coeff f = A->ring()->field().from_int(c[i]);
                for (std::size_t j = 0; j < n; ++j)
                    delta[j] = A->reduce(delta[j] + basis[i][j] * f);
            }
            HSDerivation order_one(A, 1, {delta}, true);
            survivors.push_back({std::move(delta), std::move(order_one)});
            std::size_t i = 0;
            while (i < d) {
                if (++c[i] < p) break;
                c[i] = 0;
                ++i;
            }
            if (i == d) break;
        }
    }
    report.ider_dims.push_back(d);  // IDer(A;1) = Der

    for (std::size_t s = 2; s <= bound && report.complete; ++s) {
        std::vector<Element> next;
        std::optional<LeapEntry> leap;
        for (Element& el : survivors) {
            IntegrabilityResult res = is_m_integrable(
                A, el.delta, s, IntegrabilityMode::ExactArtinian, 0, &bud, el.witness);
            if (res.answer == IntegrabilityResult::Answer::Yes) {
                next.push_back({el.delta, res.witness});
            } else if (res.answer == IntegrabilityResult::Answer::No) {
                if (!leap) {
                    LeapEntry e;
                    e.order = s;
                    e.witness_delta = el.delta;
                    e.witness_integral = el.witness;
                    e.obstruction_note = res.certificate;
                    e.power_of_p = is_power_of(s, p);
                    leap = std::move(e);
                }
            } else {
                report.complete = false;
                report.note = "budget exhausted at order " + std::to_string(s);
                break;
            }
        }
        if (!report.complete) break;
        const bool shrank = next.size() < survivors.size();
        if (shrank != leap.has_value())
            throw verification_error("leap bookkeeping disagreement");
        if (leap) report.leaps.push_back(std::move(*leap));
        report.ider_dims.push_back(log_base_p(next.size(), p));
        survivors = std::move(next);
    }
    return report;
}

LeapReport leap_scan_degree_bounded(const AlgebraPtr& A,
                                    const std::optional<std::vector<Polynomial>>& delta,
                                    std::size_t bound, std::size_t degree_bound,
                                    Budget* budget) {
    Budget local;
    Budget& bud = budget ? *budget : local;
    LeapReport report;
    report.bound = bound;
    report.characteristic = A->ring()->field().characteristic();
    report.exact = false;
    report.degree_bound = degree_bound;

    auto scan_one = [&](const std::vector<Polynomial>& dv, const std::string& label) {
        for (std::size_t s = 2; s <= bound; ++s) {
            IntegrabilityResult res =
                is_m_integrable(A, dv, s, IntegrabilityMode::DegreeBounded, degree_bound, &bud);
            if (res.answer == IntegrabilityResult::Answer::Yes) continue;
            LeapEntry e;
            e.order = s;
            e.witness_delta = dv;
            e.obstruction_note = label + ": " + res.certificate +
                                 " (not a certified leap: the degree bound may be too small)";
            e.power_of_p = is_power_of(s, report.characteristic);
            report.leaps.push_back(std::move(e));
            report.complete = false;
            return;
        }
    };

    if (delta) {
        scan_one(*delta, "supplied derivation");
    } else if (A->ideal().is_zero_ideal()) {
        // Coordinate derivations generate Der as an A-module; integrability
        // of the generators forces integrability of the whole module.
        for (std::size_t i = 0; i < A->nvars(); ++i) {
            std::vector<Polynomial> dv(A->nvars(), A->zero());
            dv[i] = A->one();
            scan_one(dv, "coordinate derivation " + A->ring()->variable(i));
            if (!report.complete) return report;
        }
        report.note = "coordinate derivations integrate to every order up to the bound";
    } else {
        throw input_error(
            "degree-bounded census needs the zero ideal or an explicit derivation");
    }
    return report;
}

std::size_t leap_bound(const ArtinianModel& M, std::size_t power, Budget* budget) {
    if (!M.local) throw input_error("leap bound requires a local artinian algebra");
    Budget local;
    Budget& bud = budget ? *budget : local;
    const AlgebraPtr& A = M.algebra;
    const std::uint32_t p = A->ring()->field().characteristic();
    const std::size_t n = A->nvars();
    const std::size_t dim = M.dimension;

    std::vector<std::vector<Polynomial>> basis = derivation_basis(M, &bud);

    auto coords = [&](const std::vector<Polynomial>& vec) {
        FpVec v(n * dim, 0);
        for (std::size_t j = 0; j < n; ++j)
            for (const Term& t : vec[j].terms())
                for (std::size_t b = 0; b < dim; ++b)
                    if (M.staircase[b] == t.mono) v[j * dim + b] = t.coeff.fp_value();
        return v;
    };

    FpSpan der(p, n * dim);
    for (const auto& eta : basis) der.add(coords(eta));

    // m^power * Der is spanned over F_p by w * eta for monomials w of
    // degree >= power (exponents below the nilpotency index).
    FpSpan sub(p, n * dim);
    std::vector<std::uint32_t> e(n, 0);
    const std::uint32_t cap = static_cast<std::uint32_t>(dim);
    for (;;) {
        std::uint32_t total = 0;
        for (auto x : e) total += x;
        if (total >= power) {
            Polynomial w = Polynomial::from_terms(
                A->ring(), {{Monomial(e), A->ring()->field().one()}}, A->order());
            Polynomial wred = A->reduce(w);
            if (!wred.is_zero()) {
                for (const auto& eta : basis) {
                    bud.charge();
                    std::vector<Polynomial> scaled;
                    for (const Polynomial& c : eta) scaled.push_back(A->reduce(wred * c));
                    sub.add(coords(scaled));
                }
            }
        }
        std::size_t i = 0;
        while (i < n) {
            if (++e[i] < cap) break;
            e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return der.rank() - sub.rank();
}

std::optional<std::size_t> min_power_in_ideal(const Ideal& max_ideal, const Ideal& J,
                                              std::size_t cap, Budget* budget) {
    if (J.is_zero_ideal()) throw input_error("target ideal must be nonzero");
    Budget local;
    Budget& bud = budget ? *budget : local;
    GroebnerBasis gb = buchberger(J, MonomialOrder::grevlex(), &bud);
    const auto& gens = max_ideal.generators();
    if (gens.empty()) throw input_error("maximal ideal needs generators");

    for (std::size_t N = 1; N <= cap; ++N) {
        // All degree-N products of the generators, by multisets.
        std::vector<std::size_t> idx(N, 0);
        bool all_in = true;
        for (;;) {
            bud.charge();
            Polynomial prod = Polynomial::constant(J.ring(), J.ring()->field().one());
            for (std::size_t k = 0; k < N; ++k) prod = prod * gens[idx[k]];
            if (!ideal_membership(prod, gb)) {
                all_in = false;
                break;
            }
            // next non-decreasing index tuple
            std::size_t k = N;
            bool advanced = false;
            while (k-- > 0) {
                if (idx[k] + 1 < gens.size()) {
                    ++idx[k];
                    for (std::size_t l = k + 1; l < N; ++l) idx[l] = idx[k];
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
        if (all_in) return N;
    }
    return std::nullopt;
}

}  // namespace hs
