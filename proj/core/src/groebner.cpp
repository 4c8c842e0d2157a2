#include "hs/groebner.hpp"

#include <algorithm>
#include <map>

namespace hs {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (Polynomial& g : gens) {
        if (g.is_zero()) continue;
        if (*g.ring() != *ring_) throw input_error("generator ring mismatch");
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::unit(RingPtr ring) {
    Polynomial one = Polynomial::constant(ring, ring->field().one());
    return Ideal(ring, {one});
}

bool GroebnerBasis::is_unit_ideal() const {
    return elements_.size() == 1 && elements_[0].is_one();
}

const std::vector<std::vector<Polynomial>>& GroebnerBasis::transform() const {
    if (!has_transform())
        throw input_error("basis was computed without transform tracking");
    return transform_;
}

DivisionCertificate divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                           const MonomialOrder& order) {
    DivisionCertificate cert;
    cert.quotients.assign(divisors.size(), Polynomial::zero(f.ring(), order));
    Polynomial h = f.with_order(order);
    Polynomial r = Polynomial::zero(f.ring(), order);
    while (!h.is_zero()) {
        const Term t = h.leading_term();  // copy: h is reassigned below
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const Polynomial& g = divisors[i];
            if (g.is_zero()) continue;
            if (!g.leading_monomial().divides(t.mono)) continue;
            Monomial u = t.mono / g.leading_monomial();
            Coeff c = t.coeff / g.leading_coeff();
            cert.quotients[i] =
                cert.quotients[i] + Polynomial::from_terms(f.ring(), {{u, c}}, order);
            h = h - g.with_order(order).mul_term(u, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            Polynomial lt = Polynomial::from_terms(f.ring(), {t}, order);
            r = r + lt;
            h = h - lt;
        }
    }
    cert.remainder = r;
    return cert;
}

namespace {

struct WorkPoly {
    Polynomial p;                     // monic
    std::vector<Polynomial> rep;      // over the source generators
    std::uint32_t sugar;
};

struct Pair {
    std::size_t i, j;
    Monomial lcm_;
    std::uint32_t sugar;
};

// Full reduction of (h, rep) against the current basis, keeping the
// representation in sync when tracked.  Returns the remainder.
void reduce_work(Polynomial& h, std::vector<Polynomial>& rep, std::uint32_t& sugar,
                 const std::vector<WorkPoly>& basis, const MonomialOrder& order,
                 Budget& budget) {
    Polynomial tail = Polynomial::zero(h.ring(), order);
    while (!h.is_zero()) {
        budget.charge();
        const Term t = h.leading_term();  // copy: h is reassigned below
        bool reduced = false;
        for (const WorkPoly& g : basis) {
            if (g.p.is_zero()) continue;
            if (!g.p.leading_monomial().divides(t.mono)) continue;
            Monomial u = t.mono / g.p.leading_monomial();
            h = h - g.p.mul_term(u, t.coeff);  // basis is monic
            for (std::size_t k = 0; k < rep.size(); ++k)
                if (!g.rep[k].is_zero()) rep[k] = rep[k] - g.rep[k].mul_term(u, t.coeff);
            sugar = std::max(sugar, g.sugar + u.degree());
            reduced = true;
            break;
        }
        if (!reduced) {
            Polynomial lt = Polynomial::from_terms(h.ring(), {t}, order);
            tail = tail + lt;
            h = h - lt;
        }
    }
    h = tail;
}

void make_monic(WorkPoly& w) {
    if (w.p.is_zero() || w.p.leading_coeff().is_one()) return;
    Coeff inv = w.p.leading_coeff().inverse();
    w.p = w.p * inv;
    for (Polynomial& r : w.rep) r = r * inv;
}

// Gebauer-Moeller update of the pair set after appending basis element t.
void update_pairs(std::vector<Pair>& pairs, const std::vector<WorkPoly>& basis,
                  std::size_t t) {
    const Monomial& lt = basis[t].p.leading_monomial();
    struct Cand {
        std::size_t i;
        Monomial lcm_;
        bool cop;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < t; ++i) {
        if (basis[i].p.is_zero()) continue;
        const Monomial& li = basis[i].p.leading_monomial();
        cands.push_back({i, lcm(li, lt), coprime(li, lt)});
    }
    // M criterion: drop candidates whose lcm is properly divided by another's.
    std::vector<bool> keep(cands.size(), true);
    for (std::size_t a = 0; a < cands.size(); ++a) {
        for (std::size_t b = 0; b < cands.size() && keep[a]; ++b) {
            if (a == b || !keep[b]) continue;
            if (cands[b].lcm_ != cands[a].lcm_ && cands[b].lcm_.divides(cands[a].lcm_))
                keep[a] = false;
        }
    }
    // F criterion: among equal lcms keep the first.
    for (std::size_t a = 0; a < cands.size(); ++a) {
        if (!keep[a]) continue;
        for (std::size_t b = a + 1; b < cands.size(); ++b)
            if (keep[b] && cands[b].lcm_ == cands[a].lcm_) keep[b] = false;
    }
    // B criterion: coprime leading monomials reduce to zero.
    for (std::size_t a = 0; a < cands.size(); ++a)
        if (keep[a] && cands[a].cop) keep[a] = false;

    // Prune old pairs via the chain criterion.
    std::vector<Pair> surviving;
    for (const Pair& pr : pairs) {
        const Monomial& li = basis[pr.i].p.leading_monomial();
        const Monomial& lj = basis[pr.j].p.leading_monomial();
        if (lt.divides(pr.lcm_) && lcm(li, lt) != pr.lcm_ && lcm(lj, lt) != pr.lcm_)
            continue;
        surviving.push_back(pr);
    }
    pairs = std::move(surviving);

    for (std::size_t a = 0; a < cands.size(); ++a) {
        if (!keep[a]) continue;
        std::size_t i = cands[a].i;
        std::uint32_t sug =
            std::max(basis[i].sugar + (cands[a].lcm_ / basis[i].p.leading_monomial()).degree(),
                     basis[t].sugar + (cands[a].lcm_ / lt).degree());
        pairs.push_back({i, t, cands[a].lcm_, sug});
    }
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order, Budget* budget,
                         bool with_transform) {
    Budget local;
    Budget& bud = budget ? *budget : local;

    const RingPtr& ring = ideal.ring();
    const std::size_t ngens = ideal.generators().size();
    const std::size_t nrep = with_transform ? ngens : 0;

    std::vector<WorkPoly> basis;
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < ngens; ++i) {
        WorkPoly w;
        w.p = ideal.generators()[i].with_order(order);
        w.rep.assign(nrep, Polynomial::zero(ring, order));
        if (with_transform) w.rep[i] = Polynomial::constant(ring, ring->field().one(), order);
        w.sugar = w.p.total_degree();
        reduce_work(w.p, w.rep, w.sugar, basis, order, bud);
        if (w.p.is_zero()) continue;
        make_monic(w);
        basis.push_back(std::move(w));
        update_pairs(pairs, basis, basis.size() - 1);
    }

    while (!pairs.empty()) {
        bud.charge();
        // Normal selection by sugar, ties by lcm order then indices.
        std::size_t best = 0;
        for (std::size_t a = 1; a < pairs.size(); ++a) {
            const Pair& x = pairs[a];
            const Pair& y = pairs[best];
            if (x.sugar != y.sugar) {
                if (x.sugar < y.sugar) best = a;
            } else if (x.lcm_ != y.lcm_) {
                if (order.less(x.lcm_, y.lcm_)) best = a;
            } else if (x.j != y.j ? x.j < y.j : x.i < y.i) {
                best = a;
            }
        }
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        const WorkPoly& gi = basis[pr.i];
        const WorkPoly& gj = basis[pr.j];
        Monomial ui = pr.lcm_ / gi.p.leading_monomial();
        Monomial uj = pr.lcm_ / gj.p.leading_monomial();
        Coeff one = ring->field().one();

        WorkPoly s;
        s.p = gi.p.mul_term(ui, one) - gj.p.mul_term(uj, one);
        s.rep.assign(nrep, Polynomial::zero(ring, order));
        for (std::size_t k = 0; k < nrep; ++k) {
            Polynomial a = gi.rep[k].mul_term(ui, one);
            Polynomial b = gj.rep[k].mul_term(uj, one);
            s.rep[k] = a - b;
        }
        s.sugar = pr.sugar;
        reduce_work(s.p, s.rep, s.sugar, basis, order, bud);
        if (s.p.is_zero()) continue;
        make_monic(s);
        basis.push_back(std::move(s));
        update_pairs(pairs, basis, basis.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another's.
    std::vector<std::size_t> order_idx(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
        return order.less(basis[a].p.leading_monomial(), basis[b].p.leading_monomial());
    });
    std::vector<std::size_t> kept;
    for (std::size_t idx : order_idx) {
        bool redundant = false;
        for (std::size_t k : kept)
            if (basis[k].p.leading_monomial().divides(basis[idx].p.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(idx);
    }

    // Inter-reduce tails.
    std::vector<WorkPoly> reduced;
    for (std::size_t pass = 0; pass < kept.size(); ++pass) {
        std::vector<WorkPoly> others;
        for (std::size_t k = 0; k < kept.size(); ++k)
            if (k != pass) others.push_back(basis[kept[k]]);
        WorkPoly w = basis[kept[pass]];
        reduce_work(w.p, w.rep, w.sugar, others, order, bud);
        if (w.p.is_zero()) continue;  // cannot happen for a minimal basis
        make_monic(w);
        reduced.push_back(std::move(w));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const WorkPoly& a, const WorkPoly& b) {
        return order.less(a.p.leading_monomial(), b.p.leading_monomial());
    });

    GroebnerBasis out;
    out.source_ = ideal;
    out.order_ = order;
    for (WorkPoly& w : reduced) {
        out.elements_.push_back(std::move(w.p));
        if (with_transform) out.transform_.push_back(std::move(w.rep));
    }
    return out;
}

DivisionCertificate normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    return divide(f, basis.elements(), basis.order());
}

Polynomial reduce(const Polynomial& f, const GroebnerBasis& basis) {
    if (basis.elements().empty()) return f.with_order(basis.order());
    return normal_form(f, basis).remainder;
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& basis) {
    return reduce(f, basis).is_zero();
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal, Budget* budget) {
    return ideal_membership(f, buchberger(ideal, MonomialOrder::grevlex(), budget));
}

std::optional<std::vector<Polynomial>> membership_certificate(const Polynomial& f,
                                                              const GroebnerBasis& basis) {
    DivisionCertificate cert = normal_form(f, basis);
    if (!cert.remainder.is_zero()) return std::nullopt;
    const std::size_t ngens = basis.source().generators().size();
    std::vector<Polynomial> coeffs(ngens, Polynomial::zero(basis.ring(), basis.order()));
    for (std::size_t k = 0; k < basis.elements().size(); ++k) {
        if (cert.quotients[k].is_zero()) continue;
        for (std::size_t i = 0; i < ngens; ++i)
            if (!basis.transform()[k][i].is_zero())
                coeffs[i] = coeffs[i] + cert.quotients[k] * basis.transform()[k][i];
    }
    return coeffs;
}

namespace {

// Shift a polynomial into the ring with one auxiliary variable prepended.
Polynomial shift_up(const Polynomial& f, const RingPtr& ext) {
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
        std::vector<std::uint32_t> e(t.mono.nvars() + 1, 0);
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) e[i + 1] = t.mono[i];
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(ext, std::move(terms));
}

Polynomial shift_down(const Polynomial& f, const RingPtr& base) {
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
        std::vector<std::uint32_t> e(t.mono.nvars() - 1);
        for (std::size_t i = 1; i < t.mono.nvars(); ++i) e[i - 1] = t.mono[i];
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(base, std::move(terms));
}

}  // namespace

Ideal ideal_intersection(const Ideal& I, const Ideal& J, Budget* budget) {
    if (I.is_zero_ideal()) return I;
    if (J.is_zero_ideal()) return J;
    const RingPtr& ring = I.ring();
    if (*ring != *J.ring()) throw input_error("ring mismatch");

    std::vector<std::string> vars;
    vars.push_back("@t");
    for (const std::string& v : ring->variables()) vars.push_back(v);
    RingPtr ext = make_ring(ring->field(), vars);

    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, ext->field().one()) - t;
    std::vector<Polynomial> gens;
    for (const Polynomial& f : I.generators()) gens.push_back(t * shift_up(f, ext));
    for (const Polynomial& g : J.generators()) gens.push_back(one_minus_t * shift_up(g, ext));

    GroebnerBasis gb =
        buchberger(Ideal(ext, std::move(gens)), MonomialOrder::elimination_block(1), budget);
    std::vector<Polynomial> result;
    for (const Polynomial& e : gb.elements()) {
        bool has_t = false;
        for (const Term& term : e.terms())
            if (term.mono[0] > 0) {
                has_t = true;
                break;
            }
        if (!has_t) result.push_back(shift_down(e, ring));
    }
    return Ideal(ring, std::move(result));
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& f, Budget* budget) {
    if (f.is_zero()) throw input_error("ideal quotient by zero");
    Ideal fI(I.ring(), {f});
    Ideal common = ideal_intersection(I, fI, budget);
    std::vector<Polynomial> gens;
    for (const Polynomial& w : common.generators()) {
        DivisionCertificate cert = divide(w, {f}, w.order());
        if (!cert.remainder.is_zero())
            throw verification_error("intersection generator not divisible in ideal quotient");
        gens.push_back(cert.quotients[0]);
    }
    return Ideal(I.ring(), std::move(gens));
}

int krull_dimension(const Ideal& I, Budget* budget) {
    const std::size_t n = I.ring()->nvars();
    if (n > 20) throw input_error("staircase dimension limited to 20 variables");
    if (I.is_zero_ideal()) return static_cast<int>(n);
    GroebnerBasis gb = buchberger(I, MonomialOrder::grevlex(), budget);
    if (gb.is_unit_ideal()) return -1;
    std::vector<Monomial> lms;
    for (const Polynomial& e : gb.elements()) lms.push_back(e.leading_monomial());

    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (const Monomial& m : lms) {
            bool supported = true;
            for (std::size_t i = 0; i < n && supported; ++i)
                if (m[i] > 0 && !(mask & (1u << i))) supported = false;
            if (supported) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

bool same_ideal(const Ideal& I, const Ideal& J, Budget* budget) {
    GroebnerBasis gi = buchberger(I, MonomialOrder::grevlex(), budget);
    GroebnerBasis gj = buchberger(J, MonomialOrder::grevlex(), budget);
    for (const Polynomial& f : I.generators())
        if (!ideal_membership(f, gj)) return false;
    for (const Polynomial& g : J.generators())
        if (!ideal_membership(g, gi)) return false;
    return true;
}

}  // namespace hs
