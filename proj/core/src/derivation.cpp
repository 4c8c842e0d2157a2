#include "hs/derivation.hpp"

namespace hs {

HSDerivation::HSDerivation(AlgebraPtr algebra, std::size_t length,
                           std::vector<std::vector<Polynomial>> xi, bool run_validation)
    : algebra_(std::move(algebra)), length_(length), xi_(std::move(xi)) {
    if (length_ < 1) throw input_error("derivation length must be at least 1");
    if (xi_.size() != length_) throw input_error("table has wrong number of rows");
    const std::size_t n = algebra_->nvars();
    for (auto& row : xi_) {
        if (row.size() != n) throw input_error("table row has wrong arity");
        for (Polynomial& entry : row) entry = algebra_->reduce(entry);
    }
    if (run_validation) {
        ValidationReport rep = validate(*this);
        if (!rep.ok)
            throw verification_error(
                "table is not a Hasse-Schmidt derivation: generator " +
                std::to_string(rep.failing_generator) + " fails at order " +
                std::to_string(rep.failing_order));
        validated_ = true;
    }
}

HSDerivation HSDerivation::identity(AlgebraPtr algebra, std::size_t length) {
    const std::size_t n = algebra->nvars();
    std::vector<std::vector<Polynomial>> xi(
        length, std::vector<Polynomial>(n, Polynomial::zero(algebra->ring(), algebra->order())));
    return HSDerivation(std::move(algebra), length, std::move(xi), true);
}

const Polynomial& HSDerivation::xi(std::size_t mu, std::size_t i) const {
    if (mu < 1 || mu > length_) throw input_error("row index out of range");
    return xi_.at(mu - 1).at(i);
}

TruncatedSeries HSDerivation::generator_series(std::size_t i) const {
    std::vector<Polynomial> rows;
    rows.reserve(length_);
    for (std::size_t mu = 1; mu <= length_; ++mu) rows.push_back(xi_[mu - 1][i]);
    return TruncatedSeries::generator_series(algebra_, length_, i, rows);
}

TruncatedSeries HSDerivation::apply(const Polynomial& lift) const {
    std::vector<TruncatedSeries> images;
    images.reserve(algebra_->nvars());
    for (std::size_t i = 0; i < algebra_->nvars(); ++i) images.push_back(generator_series(i));
    return truncated_substitution(lift, images, length_);
}

bool HSDerivation::operator==(const HSDerivation& o) const {
    if (length_ != o.length_ || *algebra_->ring() != *o.algebra_->ring()) return false;
    for (std::size_t mu = 0; mu < length_; ++mu)
        for (std::size_t i = 0; i < xi_[mu].size(); ++i)
            if (xi_[mu][i] != o.xi_[mu][i]) return false;
    return true;
}

bool HSDerivation::is_identity() const {
    for (const auto& row : xi_)
        for (const Polynomial& e : row)
            if (!e.is_zero()) return false;
    return true;
}

ValidationReport validate(const HSDerivation& D) {
    ValidationReport rep;
    const auto& gens = D.algebra()->ideal().generators();
    for (std::size_t a = 0; a < gens.size(); ++a) {
        TruncatedSeries s = D.apply(gens[a]);
        for (std::size_t mu = 0; mu <= D.length(); ++mu) {
            if (!s.coefficient(mu).is_zero()) {
                rep.ok = false;
                rep.failing_generator = a;
                rep.failing_order = mu;
                rep.residue = s.coefficient(mu);
                return rep;
            }
        }
    }
    return rep;
}

HSDerivation compose(const HSDerivation& D, const HSDerivation& E) {
    if (D.length() != E.length()) throw input_error("length mismatch in composition");
    if (*D.algebra()->ring() != *E.algebra()->ring())
        throw input_error("algebra mismatch in composition");
    const std::size_t m = D.length();
    const AlgebraPtr& A = D.algebra();
    const std::size_t n = A->nvars();

    std::vector<std::vector<Polynomial>> xi(
        m, std::vector<Polynomial>(n, Polynomial::zero(A->ring(), A->order())));
    for (std::size_t i = 0; i < n; ++i) {
        // phi_{D o E}(x_i) = sum_j phi_D(E_j(x_i)) t^j.
        std::vector<Polynomial> acc(m + 1, Polynomial::zero(A->ring(), A->order()));
        for (std::size_t j = 0; j <= m; ++j) {
            Polynomial cj = j == 0 ? Polynomial::variable(A->ring(), i, A->order())
                                   : E.xi(j, i);
            if (cj.is_zero()) continue;
            TruncatedSeries img = D.apply(cj);
            for (std::size_t k = 0; j + k <= m; ++k)
                acc[j + k] = acc[j + k] + img.coefficient(k);
        }
        for (std::size_t mu = 1; mu <= m; ++mu) xi[mu - 1][i] = A->reduce(acc[mu]);
    }
    return HSDerivation(A, m, std::move(xi), true);
}

HSDerivation inverse(const HSDerivation& D) {
    const std::size_t m = D.length();
    const AlgebraPtr& A = D.algebra();
    const std::size_t n = A->nvars();

    // E_alpha(x_i) = -sum_{mu=1..alpha} D_mu(E_{alpha-mu}(x_i)), E_0 = id.
    std::vector<std::vector<Polynomial>> xi(
        m, std::vector<Polynomial>(n, Polynomial::zero(A->ring(), A->order())));
    for (std::size_t alpha = 1; alpha <= m; ++alpha) {
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial sum = Polynomial::zero(A->ring(), A->order());
            for (std::size_t mu = 1; mu <= alpha; ++mu) {
                Polynomial prev = alpha - mu == 0
                                      ? Polynomial::variable(A->ring(), i, A->order())
                                      : xi[alpha - mu - 1][i];
                if (prev.is_zero()) continue;
                sum = sum + D.apply(prev).coefficient(mu);
            }
            xi[alpha - 1][i] = A->reduce(-sum);
        }
    }
    HSDerivation E(A, m, std::move(xi), true);
    if (!compose(D, E).is_identity() || !compose(E, D).is_identity())
        throw verification_error("inverse verification failed");
    return E;
}

HSDerivation truncate(const HSDerivation& D, std::size_t n) {
    if (n < 1 || n > D.length()) throw input_error("truncation length out of range");
    if (n == D.length()) return D;
    std::vector<std::vector<Polynomial>> xi(D.table().begin(), D.table().begin() + n);
    return HSDerivation(D.algebra(), n, std::move(xi), true);
}

bool is_logarithmic(const HSDerivation& D, const Ideal& J, Budget* budget) {
    if (J.is_zero_ideal()) return true;
    std::vector<Polynomial> gens = J.generators();
    for (const Polynomial& f : D.algebra()->ideal().generators()) gens.push_back(f);
    GroebnerBasis gb = buchberger(Ideal(J.ring(), std::move(gens)),
                                  MonomialOrder::grevlex(), budget);
    for (const Polynomial& g : J.generators()) {
        TruncatedSeries s = D.apply(g);
        for (std::size_t mu = 0; mu <= D.length(); ++mu)
            if (!reduce(s.coefficient(mu), gb).is_zero()) return false;
    }
    return true;
}

std::vector<Polynomial> first_component(const HSDerivation& D) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < D.algebra()->nvars(); ++i) out.push_back(D.xi(1, i));
    return out;
}

bool derivation_check(const PresentedAlgebra& A, const std::vector<Polynomial>& xi) {
    if (xi.size() != A.nvars()) throw input_error("derivation vector has wrong arity");
    for (const Polynomial& f : A.ideal().generators()) {
        Polynomial acc = Polynomial::zero(A.ring(), A.order());
        for (std::size_t j = 0; j < xi.size(); ++j)
            acc = acc + f.derivative(j) * xi[j];
        if (!A.is_zero(acc)) return false;
    }
    return true;
}

}  // namespace hs
