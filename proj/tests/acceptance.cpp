// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "hs/leaps.hpp"
#include "hs/problem.hpp"

using namespace hs;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto secs = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count() /
                1000.0;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " ["
         << secs << " s]";
    if (!detail.empty()) line << " -- " << detail;
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
}

RingPtr ring_p(std::uint32_t p, std::vector<std::string> vars) {
    return make_ring(Field::prime(p), std::move(vars));
}

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

std::vector<Polynomial> PV(const RingPtr& r, const std::vector<std::string>& ss) {
    std::vector<Polynomial> out;
    for (const auto& s : ss) out.push_back(P(r, s));
    return out;
}

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, std::size_t max_terms,
                       std::uint32_t max_exp) {
    std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
    std::uniform_int_distribution<std::uint32_t> expd(0, max_exp);
    std::uniform_int_distribution<long long> coeffd(-6, 6);
    std::vector<Term> terms;
    std::size_t k = nterms(rng);
    for (std::size_t t = 0; t < k; ++t) {
        std::vector<std::uint32_t> e(ring->nvars());
        for (auto& x : e) x = expd(rng);
        Coeff c = ring->field().from_int(coeffd(rng));
        if (!c.is_zero()) terms.push_back({Monomial(std::move(e)), c});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

struct CensusCase {
    std::uint32_t p;
    std::vector<std::string> vars;
    std::vector<std::string> gens;
    std::size_t bound;
};

LeapReport run_census(const CensusCase& c) {
    auto r = ring_p(c.p, c.vars);
    ArtinianModel M = artinian_model(make_algebra(r, PV(r, c.gens)));
    return leap_scan(M, c.bound);
}

// ---------------------------------------------------------------------------

bool crit1(std::string& detail) {
    struct Want {
        CensusCase c;
        std::vector<std::size_t> leaps;
    };
    std::vector<Want> wants = {
        {{2, {"x"}, {"x^2"}, 8}, {2}},
        {{2, {"x"}, {"x^4"}, 8}, {4}},
        {{3, {"x"}, {"x^3"}, 9}, {3}},
    };
    for (const Want& w : wants) {
        LeapReport rep = run_census(w.c);
        std::vector<std::size_t> got;
        for (const LeapEntry& e : rep.leaps) got.push_back(e.order);
        if (!rep.complete || got != w.leaps) {
            detail = "census of " + w.c.gens[0] + " over F" + std::to_string(w.c.p) +
                     " returned " + std::to_string(got.size()) + " leaps";
            return false;
        }
    }
    return true;
}

bool crit2(std::string& detail) {
    std::vector<CensusCase> corpus = {
        {2, {"x"}, {"x^2"}, 8},
        {2, {"x"}, {"x^3"}, 8},
        {2, {"x"}, {"x^4"}, 8},
        {2, {"x"}, {"x^5"}, 6},
        {2, {"x", "y"}, {"x^2", "y^2"}, 8},
        {2, {"x", "y"}, {"x^2", "x*y", "y^2"}, 8},
        {2, {"x", "y"}, {"x^2", "y^3"}, 6},
        {3, {"x"}, {"x^2"}, 9},
        {3, {"x"}, {"x^3"}, 9},
        {3, {"x"}, {"x^4"}, 8},
        {5, {"x"}, {"x^2"}, 10},
    };
    std::size_t total_leaps = 0;
    for (const CensusCase& c : corpus) {
        LeapReport rep = run_census(c);
        if (!rep.complete) {
            detail = "scan incomplete for " + c.gens[0] + " over F" + std::to_string(c.p);
            return false;
        }
        total_leaps += rep.leaps.size();
        if (!rep.all_leaps_powers_of_p()) {
            detail = "non p-power leap for " + c.gens[0] + " over F" + std::to_string(c.p);
            return false;
        }
    }
    detail = std::to_string(corpus.size()) + " algebras, " + std::to_string(total_leaps) +
             " leaps, all powers of p";
    return true;
}

bool crit3(std::string& detail) {
    auto r = ring_p(2, {"x", "y"});
    auto A = make_algebra(r, PV(r, {"y^2 + x^3"}));
    ExtensionResult res = integrate_ci(A, PV(r, {"0", "x^2"}), 16);
    if (res.outcome != Outcome::Extended || !res.witness) {
        detail = "no integral produced";
        return false;
    }
    if (!validate(*res.witness).ok || !res.transcript.all_pass()) {
        detail = "witness or transcript failed";
        return false;
    }
    GroebnerBasis gb = buchberger(Ideal(r, PV(r, {"x^2", "y^2 + x^3"})));
    for (std::size_t mu = 1; mu <= 16; ++mu)
        for (std::size_t i = 0; i < 2; ++i)
            if (!ideal_membership(res.witness->xi(mu, i), gb)) {
                detail = "table entry escapes <x^2> at order " + std::to_string(mu);
                return false;
            }
    detail = "validated to order 16 with full membership transcript";
    return true;
}

bool crit4(std::string& detail) {
    // Every step of criterion 3.
    auto rc = ring_p(2, {"x", "y"});
    auto cusp = make_algebra(rc, PV(rc, {"y^2 + x^3"}));
    ExtensionResult res = integrate_ci(cusp, PV(rc, {"0", "x^2"}), 16);
    std::size_t keypoint_checks = 0;
    for (const CheckEntry& e : res.transcript.checks) {
        if (e.name == "obstruction lies in the constraint ideal squared") {
            ++keypoint_checks;
            if (!e.pass) {
                detail = "key point failed in the order-16 run";
                return false;
            }
        }
    }
    if (keypoint_checks < 15) {
        detail = "expected a key point check per step, saw " + std::to_string(keypoint_checks);
        return false;
    }

    // 100 randomized contexts with the table inside Ma.
    std::mt19937_64 rng(2024);
    auto r = ring_p(2, {"x", "y"});
    auto A = make_algebra(r, PV(r, {"x^2", "y^2"}));
    Ideal Ma(r, PV(r, {"x", "y"}));
    GroebnerBasis gbMa2 = buchberger(Ideal(r, PV(r, {"x^2", "x*y", "y^2"})));
    for (int iter = 0; iter < 100; ++iter) {
        std::size_t len = 1 + (iter % 4);
        std::vector<std::vector<Polynomial>> partial;
        for (std::size_t mu = 0; mu < len; ++mu) {
            std::vector<Polynomial> row;
            for (int i = 0; i < 2; ++i)
                row.push_back(A->reduce(P(r, "x") * random_poly(rng, r, 2, 1) +
                                        P(r, "y") * random_poly(rng, r, 2, 1)));
            partial.push_back(row);
        }
        StepContext ctx{A, A->ideal().generators(), partial, Ma};
        ObstructionSystem obs = obstruction(ctx);
        for (const Polynomial& F : obs.obstruction)
            if (!ideal_membership(F, gbMa2)) {
                detail = "random context " + std::to_string(iter) + " broke the invariant";
                return false;
            }
    }
    detail = std::to_string(keypoint_checks) + " in-run checks plus 100 random contexts";
    return true;
}

bool crit5(std::string& detail) {
    std::mt19937_64 rng(777);
    int solved = 0;

    auto run_family = [&](const AlgebraPtr& A, std::size_t nrows, std::size_t ncols,
                          int want) {
        const RingPtr& ring = A->ring();
        int done = 0;
        while (done < want) {
            std::vector<std::vector<Polynomial>> M(nrows);
            for (auto& row : M)
                for (std::size_t j = 0; j < ncols; ++j)
                    row.push_back(A->reduce(random_poly(rng, ring, 2, 1)));
            std::vector<Polynomial> z;
            for (std::size_t j = 0; j < ncols; ++j)
                z.push_back(A->reduce(random_poly(rng, ring, 2, 1)));
            std::vector<Polynomial> b(nrows, A->zero());
            for (std::size_t i = 0; i < nrows; ++i)
                for (std::size_t j = 0; j < ncols; ++j)
                    b[i] = A->reduce(b[i] + M[i][j] * z[j]);

            // Largest minor with nonzero normal form, deterministic scan.
            std::vector<std::size_t> brows, bcols;
            Polynomial best = A->zero();
            for (std::size_t sz = std::min(nrows, ncols); sz >= 1 && best.is_zero(); --sz) {
                std::vector<std::size_t> rs(sz), cs(sz);
                std::function<void(std::size_t, std::size_t)> walk_rows =
                    [&](std::size_t pos, std::size_t from) {
                        if (!best.is_zero()) return;
                        if (pos == sz) {
                            std::function<void(std::size_t, std::size_t)> walk_cols =
                                [&](std::size_t cpos, std::size_t cfrom) {
                                    if (!best.is_zero()) return;
                                    if (cpos == sz) {
                                        Polynomial d =
                                            A->reduce(matrix_minor(M, rs, cs, ring));
                                        if (!d.is_zero()) {
                                            best = d;
                                            brows = rs;
                                            bcols = cs;
                                        }
                                        return;
                                    }
                                    for (std::size_t c = cfrom; c < ncols; ++c) {
                                        cs[cpos] = c;
                                        walk_cols(cpos + 1, c + 1);
                                    }
                                };
                            walk_cols(0, 0);
                            return;
                        }
                        for (std::size_t rr = from; rr < nrows; ++rr) {
                            rs[pos] = rr;
                            walk_rows(pos + 1, rr + 1);
                        }
                    };
                walk_rows(0, 0);
            }
            if (best.is_zero()) continue;
            // cofactor_solve verifies M xi = delta b and the <b>-membership
            // before returning; any failure throws.
            cofactor_solve(*A, M, b, best, brows, bcols);
            ++done;
            ++solved;
        }
    };

    auto r1 = ring_p(3, {"x"});
    run_family(make_algebra(r1, PV(r1, {"x^2"})), 2, 3, 100);
    auto r2 = ring_p(2, {"x", "y"});
    run_family(make_algebra(r2, PV(r2, {"x^2", "x*y", "y^2"})), 2, 3, 100);

    detail = std::to_string(solved) + " systems solved and verified";
    return solved == 200;
}

bool crit6(std::string& detail) {
    auto r = make_ring(Field::rationals(), {"x", "y", "z"});
    Ideal I(r, PV(r, {"x*z", "y*z"}));
    std::vector<PrimeWitness> ps;
    ps.emplace_back(r, PV(r, {"x", "y"}), 2);
    ps.emplace_back(r, PV(r, {"z"}), 1);
    GenericGenerators gg = generic_generators(I, ps);
    if (gg.selected.size() != 2) {
        detail = "selected set has size " + std::to_string(gg.selected.size());
        return false;
    }
    JacobianMatrix JF = jacobian(gg.selected);
    if (rank_at_prime(JF, ps[0]) != 2 || rank_at_prime(JF, ps[1]) != 1) {
        detail = "rank postcondition failed";
        return false;
    }
    if (!same_ideal(Ideal(r, gg.all), I)) {
        detail = "output does not generate the ideal";
        return false;
    }
    return true;
}

bool crit7(std::string& detail) {
    std::vector<CensusCase> corpus = {
        {2, {"x"}, {"x^2"}, 8},
        {2, {"x"}, {"x^3"}, 8},
        {2, {"x"}, {"x^4"}, 8},
        {2, {"x", "y"}, {"x^2", "x*y", "y^2"}, 8},
        {3, {"x"}, {"x^2"}, 9},
        {3, {"x"}, {"x^3"}, 9},
    };
    int certified = 0;
    for (const CensusCase& c : corpus) {
        auto r = ring_p(c.p, c.vars);
        ArtinianModel M = artinian_model(make_algebra(r, PV(r, c.gens)));
        LeapReport rep = leap_scan(M, c.bound);
        if (!rep.complete || !M.local) continue;
        std::vector<std::vector<Polynomial>> basis = derivation_basis(M);

        // Smallest power with every m^M Der basis vector B-integrable.
        std::optional<std::size_t> power;
        for (std::size_t cand = 1; cand <= M.dimension && !power; ++cand) {
            // Spanning vectors of m^cand * Der: monomial multiples.
            bool all = true;
            std::vector<std::uint32_t> e(c.vars.size(), 0);
            const std::uint32_t cap = static_cast<std::uint32_t>(M.dimension);
            for (;;) {
                std::uint32_t total = 0;
                for (auto x : e) total += x;
                if (total >= cand && total <= cap) {
                    Polynomial w = Polynomial::from_terms(
                        r, {{Monomial(e), r->field().one()}});
                    if (!M.algebra->is_zero(w)) {
                        for (const auto& eta : basis) {
                            std::vector<Polynomial> scaled;
                            for (const Polynomial& cc : eta)
                                scaled.push_back(M.algebra->reduce(w * cc));
                            IntegrabilityResult res = is_m_integrable(
                                M.algebra, scaled, c.bound, IntegrabilityMode::ExactArtinian);
                            if (res.answer != IntegrabilityResult::Answer::Yes) {
                                all = false;
                                break;
                            }
                        }
                    }
                }
                if (!all) break;
                std::size_t i = 0;
                while (i < e.size()) {
                    if (++e[i] <= cap) break;
                    e[i] = 0;
                    ++i;
                }
                if (i == e.size()) break;
            }
            if (all) power = cand;
        }
        if (!power) continue;
        ++certified;
        std::size_t bound_value = leap_bound(M, *power);
        if (rep.leaps.size() > bound_value) {
            detail = "leap count " + std::to_string(rep.leaps.size()) + " exceeds bound " +
                     std::to_string(bound_value) + " for " + c.gens[0];
            return false;
        }
    }
    if (certified == 0) {
        detail = "no corpus algebra certified a power";
        return false;
    }
    detail = std::to_string(certified) + " algebras certified and bounded";
    return true;
}

bool crit8(std::string& detail) {
    std::mt19937_64 rng(4242);
    int done = 0;

    auto random_free_table = [&](const AlgebraPtr& A, std::size_t m) {
        std::vector<std::vector<Polynomial>> xi;
        for (std::size_t mu = 0; mu < m; ++mu) {
            std::vector<Polynomial> row;
            for (std::size_t i = 0; i < A->nvars(); ++i)
                row.push_back(random_poly(rng, A->ring(), 3, 2));
            xi.push_back(std::move(row));
        }
        return HSDerivation(A, m, std::move(xi), true);
    };
    auto random_maximal_table = [&](const AlgebraPtr& A, std::size_t m) {
        // Entries in the maximal ideal of F2[x,y]/<x^2,y^2>: always valid.
        std::vector<std::vector<Polynomial>> xi;
        for (std::size_t mu = 0; mu < m; ++mu) {
            std::vector<Polynomial> row;
            for (std::size_t i = 0; i < A->nvars(); ++i)
                row.push_back(A->reduce(
                    P(A->ring(), "x") * random_poly(rng, A->ring(), 2, 1) +
                    P(A->ring(), "y") * random_poly(rng, A->ring(), 2, 1)));
            xi.push_back(std::move(row));
        }
        return HSDerivation(A, m, std::move(xi), true);
    };

    std::vector<std::pair<AlgebraPtr, bool>> algebras = {
        {make_free_algebra(ring_p(2, {"x", "y"})), false},
        {make_free_algebra(ring_p(3, {"x"})), false},
        {make_free_algebra(make_ring(Field::rationals(), {"x", "y"})), false},
        {make_algebra(ring_p(2, {"x", "y"}), PV(ring_p(2, {"x", "y"}), {"x^2", "y^2"})), true},
    };
    for (const auto& [A, maximal] : algebras) {
        for (int iter = 0; iter < 25; ++iter) {
            std::size_t m = 1 + (iter % 4);
            HSDerivation D = maximal ? random_maximal_table(A, m) : random_free_table(A, m);
            HSDerivation E = maximal ? random_maximal_table(A, m) : random_free_table(A, m);
            HSDerivation F = maximal ? random_maximal_table(A, m) : random_free_table(A, m);
            HSDerivation id = HSDerivation::identity(A, m);
            if (!(compose(compose(D, E), F) == compose(D, compose(E, F)))) {
                detail = "associativity failed";
                return false;
            }
            if (!(compose(D, id) == D) || !(compose(id, D) == D)) {
                detail = "identity failed";
                return false;
            }
            HSDerivation Dinv = inverse(D);
            if (!compose(D, Dinv).is_identity() || !compose(Dinv, D).is_identity()) {
                detail = "inverse failed";
                return false;
            }
            for (std::size_t nn = 1; nn < m; ++nn) {
                if (!(truncate(compose(D, E), nn) ==
                      compose(truncate(D, nn), truncate(E, nn)))) {
                    detail = "truncation homomorphism failed";
                    return false;
                }
            }
            ++done;
        }
    }
    detail = std::to_string(done) + " random validated derivations exercised";
    return done == 100;
}

bool crit9(std::string& detail) {
    std::mt19937_64 rng(909);
    // 500 random division certificates re-evaluated exactly.  Prime-field
    // divisors are drawn at random (rare pathological bases are redrawn
    // under a small step budget); rational divisors are curated to keep
    // coefficient growth in check, with random dividends throughout.
    int certified = 0;
    auto divide_random = [&](const GroebnerBasis& gb, const RingPtr& r) {
        Polynomial f = random_poly(rng, r, 6, 3);
        DivisionCertificate cert = normal_form(f, gb);
        Polynomial acc = cert.remainder;
        for (std::size_t k = 0; k < gb.elements().size(); ++k)
            acc = acc + cert.quotients[k] * gb.elements()[k];
        return acc == f;
    };

    for (const RingPtr& r : {ring_p(5, {"x", "y"}), ring_p(2, {"x", "y", "z"})}) {
        int done = 0;
        while (done < 200) {
            std::vector<Polynomial> gens;
            for (int g = 0; g < 2 + done % 2; ++g)
                gens.push_back(random_poly(rng, r, 3, 2));
            Ideal I(r, gens);
            if (I.is_zero_ideal()) continue;
            Budget bud(20000);
            GroebnerBasis gb;
            try {
                gb = buchberger(I, MonomialOrder::grevlex(), &bud);
            } catch (const budget_error&) {
                continue;  // pathological random instance, redraw
            }
            if (!divide_random(gb, r)) {
                detail = "certificate identity failed";
                return false;
            }
            ++done;
            ++certified;
        }
    }
    {
        RingPtr rq = make_ring(Field::rationals(), {"x", "y"});
        std::vector<std::vector<std::string>> curated = {
            {"x^2 - y", "y^3"},
            {"x*y - 1"},
            {"x^2 + y^2 - 1", "x - y^2"},
            {"x^3 - 2*y", "x*y - 3"},
            {"y^2 - x^3"},
        };
        std::vector<GroebnerBasis> bases;
        for (const auto& gens : curated) bases.push_back(buchberger(Ideal(rq, PV(rq, gens))));
        for (int iter = 0; iter < 100; ++iter) {
            if (!divide_random(bases[static_cast<std::size_t>(iter) % bases.size()], rq)) {
                detail = "certificate identity failed over the rationals";
                return false;
            }
            ++certified;
        }
    }
    if (certified != 500) {
        detail = "only " + std::to_string(certified) + " certificates";
        return false;
    }

    // Membership vs the monomial-ideal oracle, degree <= 6, <= 3 variables.
    auto r3 = ring_p(2, {"x", "y", "z"});
    std::uniform_int_distribution<std::uint32_t> expd(0, 3);
    std::uniform_int_distribution<int> ngen(1, 4);
    int oracle_cases = 0;
    for (int iter = 0; iter < 150; ++iter) {
        std::vector<Monomial> mgens;
        std::vector<Polynomial> pgens;
        int k = ngen(rng);
        for (int i = 0; i < k; ++i) {
            Monomial m(std::vector<std::uint32_t>{expd(rng), expd(rng), expd(rng)});
            mgens.push_back(m);
            pgens.push_back(Polynomial::from_terms(r3, {{m, r3->field().one()}}));
        }
        GroebnerBasis gb = buchberger(Ideal(r3, pgens));
        for (int j = 0; j < 4; ++j) {
            Polynomial f = random_poly(rng, r3, 4, 2);
            bool oracle = true;
            for (const Term& t : f.terms()) {
                bool divisible = false;
                for (const Monomial& g : mgens)
                    if (g.divides(t.mono)) divisible = true;
                if (!divisible) oracle = false;
            }
            if (ideal_membership(f, gb) != oracle) {
                detail = "membership disagrees with the oracle";
                return false;
            }
            ++oracle_cases;
        }
    }
    detail = "500 certificates, " + std::to_string(oracle_cases) + " oracle comparisons";
    return true;
}

bool crit10(std::string& detail) {
    auto r = ring_p(2, {"x"});
    auto A = make_algebra(r, PV(r, {"x^2"}));
    ArtinianModel M = artinian_model(A);

    std::vector<std::vector<Polynomial>> ders = {PV(r, {"0"}), PV(r, {"1"}), PV(r, {"x"}),
                                                 PV(r, {"1 + x"})};
    std::size_t comparisons = 0;
    for (std::size_t m = 1; m <= 6; ++m) {
        // Enumerate all |A|^m tables (n = 1, dim 2 over F2).
        const std::size_t cells = m * M.dimension;
        std::vector<std::uint32_t> c(cells, 0);
        std::vector<std::vector<Polynomial>> reachable;  // first components of valid tables
        for (;;) {
            std::vector<std::vector<Polynomial>> table(m);
            std::size_t idx = 0;
            for (std::size_t mu = 0; mu < m; ++mu) {
                std::vector<Term> terms;
                for (std::size_t b = 0; b < M.dimension; ++b, ++idx)
                    if (c[idx]) terms.push_back({M.staircase[b], r->field().one()});
                table[mu].push_back(Polynomial::from_terms(r, std::move(terms)));
            }
            HSDerivation cand(A, m, table, false);
            if (validate(cand).ok) reachable.push_back(table[0]);
            std::size_t k = 0;
            while (k < cells) {
                if (++c[k] < 2) break;
                c[k] = 0;
                ++k;
            }
            if (k == cells) break;
        }
        for (const auto& delta : ders) {
            bool oracle = false;
            for (const auto& fc : reachable)
                if (fc[0] == A->reduce(delta[0])) oracle = true;
            IntegrabilityResult res =
                is_m_integrable(A, delta, m, IntegrabilityMode::ExactArtinian);
            if ((res.answer == IntegrabilityResult::Answer::Yes) != oracle) {
                detail = "disagreement at m = " + std::to_string(m);
                return false;
            }
            ++comparisons;
        }
    }
    detail = std::to_string(comparisons) + " oracle comparisons across m <= 6";
    return true;
}

}  // namespace

int main() {
    criterion(1, "exact leap census of the motivating examples", crit1);
    criterion(2, "every exact leap over the artinian corpus is a power of p", crit2);
    criterion(3, "complete-intersection integral of x^2 d_y on the cusp to order 16", crit3);
    criterion(4, "obstruction coefficients stay in the constraint ideal squared", crit4);
    criterion(5, "cofactor solver on 200 randomized consistent systems", crit5);
    criterion(6, "generic generators attain the witness heights on the two-component ideal",
              crit6);
    criterion(7, "leap counts obey the derivation-module dimension bound", crit7);
    criterion(8, "group laws for truncated derivations on 100 random instances", crit8);
    criterion(9, "division certificates re-evaluate and membership matches the oracle", crit9);
    criterion(10, "search agrees with full table enumeration on F2[x]/<x^2>", crit10);

    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
