#include "hs/integrate.hpp"

#include <map>

namespace hs {

void Transcript::add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

void Transcript::require(std::string name, bool pass, std::string detail) {
    add(name, pass, detail);
    if (!pass) {
        const CheckEntry& e = checks.back();
        throw verification_error(e.name + (e.detail.empty() ? "" : " (" + e.detail + ")"));
    }
}

bool Transcript::all_pass() const {
    for (const CheckEntry& e : checks)
        if (!e.pass) return false;
    return true;
}

std::string method_name(Method m) {
    switch (m) {
        case Method::CompleteIntersection: return "complete-intersection";
        case Method::EquidimensionalDelta: return "equidimensional-delta";
        case Method::ReducedLog: return "reduced-log";
        case Method::ArtinianLinear: return "artinian-linear";
        case Method::DegreeBounded: return "degree-bounded";
    }
    return "?";
}

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Extended: return "extended";
        case Outcome::Obstructed: return "obstructed";
        case Outcome::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

// Products g_i * g_j (i <= j), the generating set of Ma^2.
std::vector<Polynomial> pairwise_products(const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j) out.push_back(gens[i] * gens[j]);
    return out;
}

std::vector<Polynomial> with_ideal(const std::vector<Polynomial>& gens, const Ideal& I) {
    std::vector<Polynomial> out = gens;
    for (const Polynomial& f : I.generators()) out.push_back(f);
    return out;
}

bool constraint_is_trivial(const Ideal& Ma) {
    for (const Polynomial& g : Ma.generators())
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& d) {
    if (f.is_zero()) return Polynomial::zero(f.ring(), f.order());
    DivisionCertificate cert = divide(f, {d}, f.order());
    if (!cert.remainder.is_zero()) return std::nullopt;
    return cert.quotients[0];
}

}  // namespace

ObstructionSystem obstruction(const StepContext& ctx, Transcript* transcript, Budget* budget) {
    const AlgebraPtr& A = ctx.algebra;
    const std::size_t nu = ctx.next_order();
    const std::size_t n = A->nvars();
    if (ctx.gens.empty()) throw input_error("obstruction needs a generating set");
    for (const auto& row : ctx.partial)
        if (row.size() != n) throw input_error("partial table has wrong arity");

    auto note = [&](const std::string& name, bool pass, const std::string& detail = "") {
        if (transcript) transcript->add(name, pass, detail);
        if (!pass) throw verification_error(name + (detail.empty() ? "" : " (" + detail + ")"));
    };

    const bool constrained = !constraint_is_trivial(ctx.constraint);
    if (constrained) {
        GroebnerBasis gbMa = buchberger(
            Ideal(A->ring(), with_ideal(ctx.constraint.generators(), A->ideal())),
            A->order(), budget);
        bool all_in = true;
        for (const auto& row : ctx.partial)
            for (const Polynomial& e : row)
                if (!ideal_membership(e, gbMa)) all_in = false;
        note("partial table lies in the constraint ideal", all_in);
    }

    std::vector<TruncatedSeries> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Polynomial> rows;
        for (const auto& row : ctx.partial) rows.push_back(row[i]);
        images.push_back(TruncatedSeries::generator_series(A, nu, i, rows));
    }

    ObstructionSystem sys;
    sys.order = nu;
    for (const Polynomial& g : ctx.gens) {
        TruncatedSeries s = truncated_substitution(g, images, nu);
        for (std::size_t mu = 0; mu < nu; ++mu)
            note("partial integral is exact below the step order", s.coefficient(mu).is_zero(),
                 "order " + std::to_string(mu));
        sys.obstruction.push_back(s.coefficient(nu));
    }

    if (constrained) {
        GroebnerBasis gbMa2 = buchberger(
            Ideal(A->ring(),
                  with_ideal(pairwise_products(ctx.constraint.generators()), A->ideal())),
            A->order(), budget);
        for (std::size_t a = 0; a < sys.obstruction.size(); ++a)
            note("obstruction lies in the constraint ideal squared",
                 ideal_membership(sys.obstruction[a], gbMa2),
                 "generator " + std::to_string(a));
    }

    JacobianMatrix J = jacobian(ctx.gens);
    for (std::size_t a = 0; a < J.rows(); ++a) {
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < n; ++j) row.push_back(A->reduce(J.entries[a][j]));
        sys.matrix.push_back(std::move(row));
    }
    return sys;
}

CofactorSolution cofactor_solve(const PresentedAlgebra& A,
                                const std::vector<std::vector<Polynomial>>& M,
                                const std::vector<Polynomial>& b, const Polynomial& delta,
                                const std::vector<std::size_t>& rows,
                                const std::vector<std::size_t>& cols, Budget* budget) {
    const std::size_t s = M.size();
    const std::size_t n = s ? M[0].size() : 0;
    const std::size_t r = rows.size();
    if (r == 0 || r != cols.size()) throw input_error("minor index shape mismatch");
    if (b.size() != s) throw input_error("right-hand side shape mismatch");
    const RingPtr& ring = A.ring();

    Polynomial det = matrix_minor(M, rows, cols, ring);
    if (!A.is_zero(det - delta))
        throw input_error("delta is not the determinant of the indicated minor");

    CofactorSolution sol;
    sol.xi.assign(n, A.zero());
    sol.coeffs.assign(r, std::vector<Polynomial>(r, A.zero()));
    for (std::size_t q = 0; q < r; ++q) {
        std::vector<std::size_t> cols_wo;
        for (std::size_t c = 0; c < r; ++c)
            if (c != q) cols_wo.push_back(cols[c]);
        Polynomial acc = Polynomial::zero(ring, A.order());
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<std::size_t> rows_wo;
            for (std::size_t x = 0; x < r; ++x)
                if (x != i) rows_wo.push_back(rows[x]);
            Polynomial mnr = matrix_minor(M, rows_wo, cols_wo, ring);
            if (((q + i) & 1) != 0) mnr = -mnr;
            sol.coeffs[q][i] = mnr;
            acc = acc + mnr * b[rows[i]];
        }
        sol.xi[cols[q]] = A.reduce(acc);
    }

    // Unconditional verification: M xi = delta b in A, row by row.
    for (std::size_t a = 0; a < s; ++a) {
        Polynomial lhs = Polynomial::zero(ring, A.order());
        for (std::size_t j = 0; j < n; ++j)
            if (!sol.xi[j].is_zero()) lhs = lhs + M[a][j] * sol.xi[j];
        if (!A.is_zero(lhs - delta * b[a]))
            throw verification_error(
                "cofactor solution does not satisfy the system: the rank hypothesis fails at row " +
                std::to_string(a));
    }

    // Membership of every coordinate in the ideal of the minor-row entries.
    std::vector<Polynomial> bgens;
    for (std::size_t i = 0; i < r; ++i) bgens.push_back(b[rows[i]]);
    GroebnerBasis gbb =
        buchberger(Ideal(ring, with_ideal(bgens, A.ideal())), A.order(), budget);
    for (std::size_t j = 0; j < n; ++j)
        if (!sol.xi[j].is_zero() && !ideal_membership(sol.xi[j], gbb))
            throw verification_error("cofactor solution coordinate escapes the right-hand side ideal");
    return sol;
}

namespace {

std::vector<Polynomial> certificate_or_throw(const Polynomial& f, const GroebnerBasis& gb,
                                             const std::string& what) {
    auto cert = membership_certificate(f, gb);
    if (!cert) throw verification_error(what);
    return *cert;
}

}  // namespace

ExtensionResult integrate_ci(const AlgebraPtr& A, const std::vector<Polynomial>& delta,
                             std::size_t m, Budget* budget) {
    ExtensionResult res;
    res.method = Method::CompleteIntersection;
    Transcript& T = res.transcript;
    Budget local;
    Budget& bud = budget ? *budget : local;
    if (m < 1) throw input_error("target order must be at least 1");

    const std::vector<Polynomial>& gens = A->ideal().generators();
    const std::size_t n = A->nvars();
    const std::size_t r = gens.size();
    if (delta.size() != n) throw input_error("derivation vector has wrong arity");

    if (!derivation_check(*A, delta)) throw input_error("input is not a derivation of A");
    T.add("input is a derivation", true);

    std::vector<std::vector<Polynomial>> table;
    std::vector<Polynomial> row1;
    for (const Polynomial& d : delta) row1.push_back(A->reduce(d));
    table.push_back(row1);

    if (r == 0) {
        // Free algebra: extend by zero rows.
        for (std::size_t nu = 2; nu <= m; ++nu)
            table.emplace_back(n, Polynomial::zero(A->ring(), A->order()));
        res.witness = HSDerivation(A, m, std::move(table), true);
        T.add("witness validates", true);
        res.outcome = Outcome::Extended;
        res.reached_order = m;
        return res;
    }

    FittingIdeal fit = fitting_ideal(*A, r, &bud);
    const std::size_t a = fit.minors.size();

    if (a == 0) {
        // J_r = 0 admits only the zero derivation.
        for (const Polynomial& d : delta)
            if (!A->is_zero(d))
                throw input_error("delta does not map into J_r (which is zero)");
        T.add("delta lies in J_r = 0", true);
        res.witness = HSDerivation::identity(A, m);
        T.add("witness validates", true);
        res.outcome = Outcome::Extended;
        res.reached_order = m;
        return res;
    }

    Ideal Ma(A->ring(), fit.lifted_generators());
    GroebnerBasis gbJr =
        buchberger(Ideal(A->ring(), with_ideal(fit.lifted_generators(), A->ideal())),
                   A->order(), &bud);
    for (std::size_t i = 0; i < n; ++i)
        if (!ideal_membership(delta[i], gbJr))
            throw input_error("delta(x_" + std::to_string(i) + ") is not in J_r");
    T.add("delta maps into J_r", true);

    GroebnerBasis gbMinors =
        buchberger(Ideal(A->ring(), with_ideal(fit.lifted_generators(), A->ideal())),
                   A->order(), &bud, /*with_transform=*/true);
    GroebnerBasis gbProducts = buchberger(
        Ideal(A->ring(), with_ideal(pairwise_products(fit.lifted_generators()), A->ideal())),
        A->order(), &bud, /*with_transform=*/true);

    JacobianMatrix J = jacobian(gens);
    std::vector<std::vector<Polynomial>> jacRed;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < n; ++j) row.push_back(A->reduce(J.entries[i][j]));
        jacRed.push_back(std::move(row));
    }

    for (std::size_t nu = 2; nu <= m; ++nu) {
        StepContext ctx{A, gens, table, Ma};
        ObstructionSystem obs = obstruction(ctx, &T, &bud);

        // F_alpha = sum_lambda Delta_lambda h_{alpha lambda} with h in J_r.
        std::vector<std::vector<Polynomial>> h(r);
        for (std::size_t al = 0; al < r; ++al) {
            h[al].assign(a, Polynomial::zero(A->ring(), A->order()));
            const Polynomial& F = obs.obstruction[al];
            if (F.is_zero()) continue;

            std::vector<Polynomial> cand =
                certificate_or_throw(F, gbMinors,
                                     "obstruction " + std::to_string(al) +
                                         " has no certificate over the minors");
            bool lands_in_jr = true;
            for (std::size_t l = 0; l < a; ++l) {
                cand[l] = A->reduce(cand[l]);
                if (!cand[l].is_zero() && !ideal_membership(cand[l], gbJr)) lands_in_jr = false;
            }
            if (lands_in_jr) {
                for (std::size_t l = 0; l < a; ++l) h[al][l] = cand[l];
            } else {
                // Retry over the minor products: F in J_r^2 by the step
                // invariant, so the grouped coefficients land in J_r.
                std::vector<Polynomial> cand2 = certificate_or_throw(
                    F, gbProducts,
                    "obstruction " + std::to_string(al) +
                        " escapes J_r^2; the step invariant was broken upstream");
                std::size_t k = 0;
                for (std::size_t l = 0; l < a; ++l)
                    for (std::size_t mu = l; mu < a; ++mu, ++k)
                        if (!cand2[k].is_zero())
                            h[al][l] =
                                A->reduce(h[al][l] + cand2[k] * fit.minors[mu].lifted);
            }

            Polynomial recon = Polynomial::zero(A->ring(), A->order());
            for (std::size_t l = 0; l < a; ++l)
                recon = recon + fit.minors[l].reduced * h[al][l];
            T.require("h-certificate reconstructs the obstruction",
                      A->is_zero(recon - F), "generator " + std::to_string(al));
            for (std::size_t l = 0; l < a; ++l)
                T.require("h lies in J_r",
                          h[al][l].is_zero() || ideal_membership(h[al][l], gbJr),
                          "generator " + std::to_string(al));
        }

        std::vector<Polynomial> xi(n, Polynomial::zero(A->ring(), A->order()));
        for (std::size_t l = 0; l < a; ++l) {
            std::vector<Polynomial> b;
            bool nonzero = false;
            for (std::size_t al = 0; al < r; ++al) {
                b.push_back(h[al][l]);
                nonzero = nonzero || !h[al][l].is_zero();
            }
            if (!nonzero) continue;
            CofactorSolution cs = cofactor_solve(*A, jacRed, b, fit.minors[l].reduced,
                                                 fit.minors[l].rows, fit.minors[l].cols, &bud);
            for (std::size_t j = 0; j < n; ++j) xi[j] = A->reduce(xi[j] - cs.xi[j]);
        }

        for (std::size_t al = 0; al < r; ++al) {
            Polynomial lhs = obs.obstruction[al];
            for (std::size_t j = 0; j < n; ++j)
                if (!xi[j].is_zero()) lhs = lhs + jacRed[al][j] * xi[j];
            T.require("extension system solved", A->is_zero(lhs),
                      "order " + std::to_string(nu) + ", generator " + std::to_string(al));
        }
        for (std::size_t j = 0; j < n; ++j)
            T.require("new table row lies in J_r",
                      xi[j].is_zero() || ideal_membership(xi[j], gbJr),
                      "order " + std::to_string(nu));
        table.push_back(std::move(xi));
    }

    res.witness = HSDerivation(A, m, std::move(table), true);
    T.add("witness validates", true);
    res.outcome = Outcome::Extended;
    res.reached_order = m;
    return res;
}

namespace {

// Shared order-by-order engine behind the equidimensional and reduced
// procedures.  In exact mode every table entry is kept as an exact
// Delta-multiple in R (the logarithmic descent needs the membership at the
// level of R, not just mod I); otherwise entries are normal forms.
std::vector<std::vector<Polynomial>> equidim_engine(
    const AlgebraPtr& B, const std::vector<Polynomial>& S,
    const std::vector<Polynomial>& delta, const Polynomial& Delta, std::size_t level,
    std::size_t m, const std::optional<Ideal>& log_ideal, bool exact_multiples, Transcript& T,
    Budget& bud) {
    const RingPtr& ring = B->ring();
    const std::size_t n = B->nvars();
    const std::size_t s = S.size();

    FittingIdeal fit = fitting_ideal(*B, S, level, &bud);
    if (fit.is_zero())
        throw input_error("the level-" + std::to_string(level) +
                          " minor ideal vanishes; no non-zerodivisor Delta can exist");
    const std::size_t a = fit.minors.size();

    GroebnerBasis gbMinors = buchberger(
        Ideal(ring, with_ideal(fit.lifted_generators(), B->ideal())), B->order(), &bud,
        /*with_transform=*/true);
    std::vector<Polynomial> gamma = certificate_or_throw(
        Delta, gbMinors, "Delta is not in the lifted minor ideal plus the ideal");
    T.add("Delta certified over the minor generators", true);

    Polynomial Delta2 = Delta * Delta;
    GroebnerBasis gbDelta2 = buchberger(Ideal(ring, with_ideal({Delta2}, B->ideal())),
                                        B->order(), &bud, /*with_transform=*/true);
    GroebnerBasis gbDelta = buchberger(Ideal(ring, with_ideal({Delta}, B->ideal())),
                                       B->order(), &bud);
    GroebnerBasis gbLog =
        log_ideal ? buchberger(Ideal(ring, with_ideal(log_ideal->generators(), B->ideal())),
                               B->order(), &bud)
                  : GroebnerBasis{};

    JacobianMatrix J = jacobian(S);
    std::vector<std::vector<Polynomial>> jacRed;
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < n; ++j) row.push_back(B->reduce(J.entries[i][j]));
        jacRed.push_back(std::move(row));
    }

    AlgebraPtr free_alg = make_free_algebra(ring, B->order());

    // Row 1: Delta * delta, exact in R when tracking exact multiples.
    std::vector<std::vector<Polynomial>> table;
    {
        std::vector<Polynomial> row1;
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial e = Delta * delta[i];
            row1.push_back(exact_multiples ? e : B->reduce(e));
        }
        table.push_back(std::move(row1));
    }

    for (std::size_t nu = 2; nu <= m; ++nu) {
        // Obstruction coefficients.  Exact mode expands in R and checks the
        // lower coefficients modulo the ideal by hand.
        std::vector<Polynomial> F_exact(s), F_red(s);
        {
            const AlgebraPtr& ctx_alg = exact_multiples ? free_alg : B;
            std::vector<TruncatedSeries> images;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Polynomial> rows;
                for (const auto& row : table) rows.push_back(row[i]);
                images.push_back(TruncatedSeries::generator_series(ctx_alg, nu, i, rows));
            }
            for (std::size_t al = 0; al < s; ++al) {
                TruncatedSeries ser = truncated_substitution(S[al], images, nu);
                for (std::size_t mu = 0; mu < nu; ++mu)
                    T.require("partial integral is exact below the step order",
                              B->is_zero(ser.coefficient(mu)),
                              "order " + std::to_string(mu) + ", generator " +
                                  std::to_string(al));
                F_exact[al] = ser.coefficient(nu);
                F_red[al] = B->reduce(F_exact[al]);
            }
        }

        // F_alpha = Delta * h_alpha with h_alpha in <Delta>.
        std::vector<Polynomial> h_exact(s), h_red(s);
        for (std::size_t al = 0; al < s; ++al) {
            if (F_exact[al].is_zero()) {
                h_exact[al] = Polynomial::zero(ring, B->order());
                h_red[al] = h_exact[al];
                continue;
            }
            Polynomial q;
            if (exact_multiples) {
                // Every monomial of F carries at least two table factors,
                // each an exact Delta-multiple.
                auto quo = divide_exact(F_exact[al], Delta2);
                if (quo) {
                    q = *quo;
                } else {
                    std::vector<Polynomial> cert = certificate_or_throw(
                        F_exact[al], gbDelta2,
                        "obstruction escapes <Delta^2>; the step invariant was broken");
                    q = cert[0];
                }
            } else {
                std::vector<Polynomial> cert = certificate_or_throw(
                    F_red[al], gbDelta2,
                    "obstruction escapes <Delta^2>; the step invariant was broken");
                q = cert[0];
            }
            T.add("obstruction lies in <Delta^2>", true, "generator " + std::to_string(al));
            h_exact[al] = Delta * q;
            h_red[al] = B->reduce(h_exact[al]);
            T.require("Delta * h reconstructs the obstruction",
                      B->is_zero(Delta * h_red[al] - F_red[al]),
                      "generator " + std::to_string(al));
        }

        // Per-minor cofactor solves with right-hand side gamma_l * h.
        std::vector<Polynomial> xi_exact(n, Polynomial::zero(ring, B->order()));
        std::vector<Polynomial> xi_red(n, B->zero());
        for (std::size_t l = 0; l < a; ++l) {
            std::vector<Polynomial> b_exact(s), b_red(s);
            bool nonzero = false;
            for (std::size_t al = 0; al < s; ++al) {
                b_exact[al] = gamma[l] * h_exact[al];
                b_red[al] = B->reduce(b_exact[al]);
                nonzero = nonzero || !b_red[al].is_zero();
            }
            if (!nonzero) continue;
            CofactorSolution cs = cofactor_solve(*B, jacRed, b_red, fit.minors[l].reduced,
                                                 fit.minors[l].rows, fit.minors[l].cols, &bud);
            for (std::size_t j = 0; j < n; ++j)
                xi_red[j] = B->reduce(xi_red[j] - cs.xi[j]);
            if (exact_multiples) {
                const auto& rows = fit.minors[l].rows;
                const auto& cols = fit.minors[l].cols;
                for (std::size_t qi = 0; qi < cols.size(); ++qi) {
                    Polynomial acc = Polynomial::zero(ring, B->order());
                    for (std::size_t ri = 0; ri < rows.size(); ++ri)
                        acc = acc + cs.coeffs[qi][ri] * b_exact[rows[ri]];
                    xi_exact[cols[qi]] = xi_exact[cols[qi]] - acc;
                }
            }
        }

        std::vector<Polynomial> xi_final(n, B->zero());
        if (exact_multiples) {
            for (std::size_t j = 0; j < n; ++j) {
                auto w = divide_exact(xi_exact[j], Delta);
                if (!w)
                    throw verification_error(
                        "solution coordinate is not an exact Delta multiple");
                xi_final[j] = Delta * B->reduce(*w);
            }
            T.add("new table row is an exact Delta multiple", true,
                  "order " + std::to_string(nu));
        } else {
            xi_final = xi_red;
            for (std::size_t j = 0; j < n; ++j)
                T.require("new table row lies in <Delta>",
                          xi_final[j].is_zero() || ideal_membership(xi_final[j], gbDelta),
                          "order " + std::to_string(nu));
        }

        // Aggregate system check mod the ideal.
        for (std::size_t al = 0; al < s; ++al) {
            Polynomial lhs = F_red[al];
            for (std::size_t j = 0; j < n; ++j)
                if (!xi_final[j].is_zero()) lhs = lhs + jacRed[al][j] * xi_final[j];
            T.require("extension system solved", B->is_zero(lhs),
                      "order " + std::to_string(nu) + ", generator " + std::to_string(al));
        }

        table.push_back(xi_final);

        if (log_ideal) {
            // New-order coefficient of phi(g) stays in the ideal being
            // tracked, for every generator g.
            std::vector<TruncatedSeries> images;
            const AlgebraPtr& ctx_alg = exact_multiples ? free_alg : B;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Polynomial> rows;
                for (const auto& row : table) rows.push_back(row[i]);
                images.push_back(TruncatedSeries::generator_series(ctx_alg, nu, i, rows));
            }
            for (const Polynomial& g : log_ideal->generators()) {
                TruncatedSeries ser = truncated_substitution(g, images, nu);
                T.require("logarithmic at the new order",
                          reduce(ser.coefficient(nu), gbLog).is_zero(),
                          "order " + std::to_string(nu));
            }
        }
    }
    return table;
}

int common_height_or_throw(const std::vector<PrimeWitness>& primes) {
    if (primes.empty()) throw input_error("at least one prime witness is required");
    int r = primes[0].height();
    for (const PrimeWitness& P : primes)
        if (P.height() != r)
            throw input_error("witness heights disagree with the equidimensionality assertion");
    return r;
}

}  // namespace

ExtensionResult integrate_equidim(const AlgebraPtr& A, const std::vector<Polynomial>& delta,
                                  const Polynomial& Delta,
                                  const std::vector<PrimeWitness>& primes, std::size_t m,
                                  const std::optional<Ideal>& log_ideal, Budget* budget) {
    ExtensionResult res;
    res.method = Method::EquidimensionalDelta;
    Transcript& T = res.transcript;
    Budget local;
    Budget& bud = budget ? *budget : local;
    if (m < 1) throw input_error("target order must be at least 1");
    if (delta.size() != A->nvars()) throw input_error("derivation vector has wrong arity");
    if (Delta.is_zero()) throw input_error("Delta must be a non-zerodivisor, got zero");

    if (!derivation_check(*A, delta)) throw input_error("input is not a derivation of A");
    T.add("input is a derivation", true);

    int r = common_height_or_throw(primes);
    JhetReport jh = check_jhet(*A, primes, &bud);
    if (!jh.all) throw input_error("the height condition on Fitting ideals fails");
    T.add("height condition holds at all witnesses", true);

    Ideal Iq = ideal_quotient(A->ideal(), Delta, &bud);
    if (!same_ideal(Iq, A->ideal(), &bud))
        throw input_error("Delta is a zerodivisor: (I : Delta) exceeds I");
    T.add("Delta is a non-zerodivisor", true);

    if (log_ideal) {
        GroebnerBasis gbLog = buchberger(
            Ideal(A->ring(), with_ideal(log_ideal->generators(), A->ideal())), A->order(),
            &bud);
        for (const Polynomial& g : log_ideal->generators()) {
            Polynomial img = Polynomial::zero(A->ring(), A->order());
            for (std::size_t j = 0; j < delta.size(); ++j)
                img = img + g.derivative(j) * delta[j];
            T.require("delta is logarithmic along the tracked ideal",
                      reduce(img, gbLog).is_zero());
        }
    }

    GenericGenerators gg = generic_generators(A->ideal(), primes, &bud);
    T.add("generic generating set with the rank property found", true);

    std::vector<std::vector<Polynomial>> table =
        equidim_engine(A, gg.all, delta, Delta, static_cast<std::size_t>(r), m, log_ideal,
                       /*exact_multiples=*/log_ideal.has_value(), T, bud);

    std::vector<std::vector<Polynomial>> reduced_table;
    for (const auto& row : table) {
        std::vector<Polynomial> red;
        for (const Polynomial& e : row) red.push_back(A->reduce(e));
        reduced_table.push_back(std::move(red));
    }
    res.witness = HSDerivation(A, m, std::move(reduced_table), true);
    T.add("witness validates", true);
    for (std::size_t i = 0; i < delta.size(); ++i)
        T.require("first row is Delta * delta",
                  res.witness->xi(1, i) == A->reduce(Delta * delta[i]));
    res.outcome = Outcome::Extended;
    res.reached_order = m;
    return res;
}

ExtensionResult integrate_reduced(const AlgebraPtr& A, const std::vector<Polynomial>& delta,
                                  const Polynomial& Delta,
                                  const std::vector<PrimeWitness>& decomposition, std::size_t m,
                                  Budget* budget) {
    ExtensionResult res;
    res.method = Method::ReducedLog;
    Transcript& T = res.transcript;
    Budget local;
    Budget& bud = budget ? *budget : local;
    if (m < 1) throw input_error("target order must be at least 1");
    if (decomposition.empty()) throw input_error("a minimal decomposition is required");
    if (delta.size() != A->nvars()) throw input_error("derivation vector has wrong arity");
    const RingPtr& ring = A->ring();

    // Decomposition verifies: I = intersection of the witnesses.
    for (const PrimeWitness& P : decomposition)
        for (const Polynomial& f : A->ideal().generators())
            if (!P.contains(f)) throw input_error("a witness does not contain the ideal");
    Ideal inter = decomposition[0].ideal();
    for (std::size_t i = 1; i < decomposition.size(); ++i)
        inter = ideal_intersection(inter, decomposition[i].ideal(), &bud);
    T.require("decomposition intersects to the ideal", same_ideal(inter, A->ideal(), &bud));

    if (!derivation_check(*A, delta))
        throw input_error("input does not preserve the ideal (not logarithmic)");
    T.add("delta is logarithmic along the ideal", true);

    int r = 0;
    for (const PrimeWitness& P : decomposition) r = std::max(r, P.height());

    // Delta must come from a lifting of the level-r minor ideal.
    FittingIdeal fitA = fitting_ideal(*A, static_cast<std::size_t>(r), &bud);
    GroebnerBasis gbJr0 = buchberger(
        Ideal(ring, with_ideal(fitA.lifted_generators(), A->ideal())), A->order(), &bud);
    if (!ideal_membership(Delta, gbJr0))
        throw input_error("Delta is not in the lifted minor ideal plus the ideal");
    T.add("Delta lies in the lifted minor ideal", true);

    // Components missing Delta.
    std::vector<PrimeWitness> survivors;
    std::vector<const PrimeWitness*> containing;
    for (const PrimeWitness& P : decomposition) {
        if (P.contains(Delta))
            containing.push_back(&P);
        else
            survivors.push_back(P);
    }

    if (survivors.empty()) {
        // Delta lies in every component, hence in I: the induced derivation
        // is zero and the identity integrates it.
        T.add("Delta lies in the ideal; Delta*delta vanishes on A", true);
        res.witness = HSDerivation::identity(A, m);
        res.outcome = Outcome::Extended;
        res.reached_order = m;
        return res;
    }
    for (const PrimeWitness& P : survivors)
        T.require("surviving component has the maximal height", P.height() == r,
                  "decomposition inconsistent");

    Ideal I1 = survivors[0].ideal();
    for (std::size_t i = 1; i < survivors.size(); ++i)
        I1 = ideal_intersection(I1, survivors[i].ideal(), &bud);
    AlgebraPtr B = std::make_shared<PresentedAlgebra>(ring, I1, A->order(), &bud);

    if (!derivation_check(*B, delta))
        throw verification_error("delta does not preserve the component intersection");
    T.add("delta is logarithmic along the component intersection", true);

    Ideal I1q = ideal_quotient(I1, Delta, &bud);
    T.require("Delta is a non-zerodivisor on the component algebra",
              same_ideal(I1q, I1, &bud));

    JhetReport jh = check_jhet(*B, survivors, &bud);
    if (!jh.all)
        throw verification_error("height condition fails on the surviving components");
    T.add("height condition holds on the surviving components", true);

    GenericGenerators gg = generic_generators(I1, survivors, &bud);
    T.add("generic generating set with the rank property found", true);

    std::vector<std::vector<Polynomial>> table =
        equidim_engine(B, gg.all, delta, Delta, static_cast<std::size_t>(r), m,
                       std::make_optional(I1), /*exact_multiples=*/true, T, bud);

    // The table over R: valid over the free algebra by construction,
    // logarithmic along every component containing Delta through the exact
    // Delta-multiples, and along I by the intersection.
    AlgebraPtr free_alg = make_free_algebra(ring, A->order());
    HSDerivation E(free_alg, m, table, true);
    for (const PrimeWitness* Q : containing)
        T.require("logarithmic along a component containing Delta",
                  is_logarithmic(E, Q->ideal(), &bud));
    T.require("logarithmic along the full ideal", is_logarithmic(E, A->ideal(), &bud));

    std::vector<std::vector<Polynomial>> reduced_table;
    for (const auto& row : table) {
        std::vector<Polynomial> red;
        for (const Polynomial& e : row) red.push_back(A->reduce(e));
        reduced_table.push_back(std::move(red));
    }
    res.witness = HSDerivation(A, m, std::move(reduced_table), true);
    T.add("descended integral validates", true);
    for (std::size_t i = 0; i < delta.size(); ++i)
        T.require("first row is Delta * delta",
                  res.witness->xi(1, i) == A->reduce(Delta * delta[i]));
    res.outcome = Outcome::Extended;
    res.reached_order = m;
    return res;
}

AffineSpace linear_extension_space(const StepContext& ctx, Budget* budget) {
    const AlgebraPtr& A = ctx.algebra;
    const std::uint32_t p = A->ring()->field().characteristic();
    if (p == 0) throw input_error("artinian linearization requires a prime field");
    std::vector<Monomial> staircase = finite_staircase(*A);  // throws if not artinian

    ObstructionSystem obs = obstruction(ctx, nullptr, budget);
    const std::size_t n = A->nvars();
    const std::size_t dim = staircase.size();
    const std::size_t unknowns = n * dim;

    auto slot = [&](const Monomial& mono) -> std::size_t {
        for (std::size_t b = 0; b < dim; ++b)
            if (staircase[b] == mono) return b;
        throw verification_error("reduced monomial escapes the staircase");
    };
    auto coords = [&](const Polynomial& f) {
        FpVec v(dim, 0);
        for (const Term& t : f.terms()) v[slot(t.mono)] = t.coeff.fp_value();
        return v;
    };

    std::vector<FpVec> rows;
    FpVec rhs;
    for (std::size_t al = 0; al < ctx.gens.size(); ++al) {
        // Coordinates of M_aj * b for every unknown (j, b).
        std::vector<FpVec> prod(unknowns);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t b = 0; b < dim; ++b) {
                Polynomial pb = Polynomial::from_terms(
                    A->ring(), {{staircase[b], A->ring()->field().one()}}, A->order());
                prod[j * dim + b] = coords(A->reduce(obs.matrix[al][j] * pb));
            }
        }
        FpVec target = coords(A->reduce(-obs.obstruction[al]));
        for (std::size_t e = 0; e < dim; ++e) {
            FpVec row(unknowns, 0);
            for (std::size_t u = 0; u < unknowns; ++u) row[u] = prod[u][e];
            rows.push_back(std::move(row));
            rhs.push_back(target[e]);
        }
    }

    FpSolution sol = solve_fp(p, std::move(rows), std::move(rhs));
    AffineSpace space;
    space.coordinates = unknowns;
    if (!sol.consistent) return space;
    space.empty = false;

    auto to_polys = [&](const FpVec& v) {
        std::vector<Polynomial> out;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Term> terms;
            for (std::size_t b = 0; b < dim; ++b) {
                std::uint32_t c = v[j * dim + b] % p;
                if (c) terms.push_back({staircase[b], A->ring()->field().from_int(c)});
            }
            out.push_back(Polynomial::from_terms(A->ring(), std::move(terms), A->order()));
        }
        return out;
    };
    space.particular = to_polys(sol.particular);
    for (const FpVec& k : sol.kernel) space.kernel.push_back(to_polys(k));
    return space;
}

}  // namespace hs
