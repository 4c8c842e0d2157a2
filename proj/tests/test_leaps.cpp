#include <doctest.h>

#include "helpers.hpp"
#include "hs/leaps.hpp"

using namespace hs;
using namespace hstest;

namespace {

// Enumerate every length-m table over an artinian algebra and keep the
// valid ones: the independent oracle for is_m_integrable.
std::vector<HSDerivation> all_valid_tables(const AlgebraPtr& A,
                                           const std::vector<Monomial>& staircase,
                                           std::size_t m) {
    const std::uint32_t p = A->ring()->field().characteristic();
    const std::size_t n = A->nvars();
    const std::size_t dim = staircase.size();
    const std::size_t cells = m * n * dim;

    std::vector<HSDerivation> valid;
    std::vector<std::uint32_t> c(cells, 0);
    for (;;) {
        std::vector<std::vector<Polynomial>> table(m);
        std::size_t idx = 0;
        for (std::size_t mu = 0; mu < m; ++mu) {
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Term> terms;
                for (std::size_t b = 0; b < dim; ++b, ++idx)
                    if (c[idx])
                        terms.push_back({staircase[b], A->ring()->field().from_int(c[idx])});
                table[mu].push_back(
                    Polynomial::from_terms(A->ring(), std::move(terms), A->order()));
            }
        }
        HSDerivation cand(A, m, table, false);
        if (validate(cand).ok) valid.emplace_back(A, m, table, true);
        std::size_t k = 0;
        while (k < cells) {
            if (++c[k] < p) break;
            c[k] = 0;
            ++k;
        }
        if (k == cells) break;
    }
    return valid;
}

}  // namespace

TEST_CASE("artinian model detection") {
    auto r = ring_p(2, {"x", "y"});
    ArtinianModel M = artinian_model(make_algebra(r, PV(r, {"x^2", "y^2"})));
    CHECK(M.dimension == 4);
    CHECK(M.local);

    // F2 x F2: artinian but not local.
    auto r1 = ring_p(2, {"x"});
    ArtinianModel M2 = artinian_model(make_algebra(r1, PV(r1, {"x^2 + x"})));
    CHECK(M2.dimension == 2);
    CHECK(!M2.local);

    CHECK_THROWS_AS(artinian_model(make_free_algebra(r1)), input_error);
    auto rq = ring_q(std::vector<std::string>{"x"});
    CHECK_THROWS_AS(artinian_model(make_algebra(rq, PV(rq, {"x^2"}))), input_error);
}

TEST_CASE("derivation basis examples") {
    auto r = ring_p(2, {"x"});
    // F2[x]/<x^2>: kernel of the zero Jacobian is all of A, dimension 2.
    ArtinianModel M = artinian_model(make_algebra(r, PV(r, {"x^2"})));
    CHECK(derivation_basis(M).size() == 2);

    // F2[x]/<x> = F2 has no nonzero derivations.
    ArtinianModel M1 = artinian_model(make_algebra(r, PV(r, {"x"})));
    CHECK(derivation_basis(M1).empty());

    // F3[x]/<x^3>: d(x^3) = 0, kernel is all of A.
    auto r3 = ring_p(3, {"x"});
    ArtinianModel M3 = artinian_model(make_algebra(r3, PV(r3, {"x^3"})));
    CHECK(derivation_basis(M3).size() == 3);
}

TEST_CASE("is_m_integrable examples on F2[x]/<x^2>") {
    auto r = ring_p(2, {"x"});
    auto A = make_algebra(r, PV(r, {"x^2"}));
    std::vector<Polynomial> ddx = PV(r, {"1"});
    std::vector<Polynomial> xddx = PV(r, {"x"});

    IntegrabilityResult r1 =
        is_m_integrable(A, ddx, 1, IntegrabilityMode::ExactArtinian);
    CHECK(r1.answer == IntegrabilityResult::Answer::Yes);

    IntegrabilityResult r2 =
        is_m_integrable(A, ddx, 2, IntegrabilityMode::ExactArtinian);
    CHECK(r2.answer == IntegrabilityResult::Answer::No);

    IntegrabilityResult r8 =
        is_m_integrable(A, xddx, 8, IntegrabilityMode::ExactArtinian);
    CHECK(r8.answer == IntegrabilityResult::Answer::Yes);
    CHECK(validate(*r8.witness).ok);
    CHECK(r8.witness->xi(1, 0) == P(r, "x"));
}

TEST_CASE("exact search agrees with full table enumeration") {
    // Oracle equivalence on F2[x]/<x^2> for m <= 4 here (the acceptance
    // suite pushes this to m <= 6).
    auto r = ring_p(2, {"x"});
    auto A = make_algebra(r, PV(r, {"x^2"}));
    ArtinianModel M = artinian_model(A);
    std::vector<std::vector<Polynomial>> ders = {
        PV(r, {"0"}), PV(r, {"1"}), PV(r, {"x"}), PV(r, {"1 + x"})};
    for (std::size_t m = 1; m <= 4; ++m) {
        std::vector<HSDerivation> valid = all_valid_tables(A, M.staircase, m);
        for (const auto& delta : ders) {
            bool oracle = false;
            for (const HSDerivation& D : valid)
                if (first_component(D) == std::vector<Polynomial>{A->reduce(delta[0])})
                    oracle = true;
            IntegrabilityResult res =
                is_m_integrable(A, delta, m, IntegrabilityMode::ExactArtinian);
            CHECK((res.answer == IntegrabilityResult::Answer::Yes) == oracle);
        }
    }
}

TEST_CASE("monotonicity: a yes at m truncates to a yes at every smaller order") {
    auto r = ring_p(2, {"x", "y"});
    auto A = make_algebra(r, PV(r, {"x^2", "x*y", "y^2"}));
    std::vector<Polynomial> delta = PV(r, {"x", "y"});
    IntegrabilityResult res =
        is_m_integrable(A, delta, 6, IntegrabilityMode::ExactArtinian);
    REQUIRE(res.answer == IntegrabilityResult::Answer::Yes);
    for (std::size_t mm = 1; mm < 6; ++mm) {
        HSDerivation t = truncate(*res.witness, mm);
        CHECK(validate(t).ok);
        IntegrabilityResult sub =
            is_m_integrable(A, delta, mm, IntegrabilityMode::ExactArtinian);
        CHECK(sub.answer == IntegrabilityResult::Answer::Yes);
    }
}

TEST_CASE("leap scan on the motivating examples") {
    auto r = ring_p(2, {"x"});
    ArtinianModel M2 = artinian_model(make_algebra(r, PV(r, {"x^2"})));
    LeapReport rep2 = leap_scan(M2, 8);
    CHECK(rep2.complete);
    REQUIRE(rep2.leaps.size() == 1);
    CHECK(rep2.leaps[0].order == 2);
    CHECK(rep2.all_leaps_powers_of_p());
    CHECK(validate(*rep2.leaps[0].witness_integral).ok);

    ArtinianModel M4 = artinian_model(make_algebra(r, PV(r, {"x^4"})));
    LeapReport rep4 = leap_scan(M4, 8);
    CHECK(rep4.complete);
    REQUIRE(rep4.leaps.size() == 1);
    CHECK(rep4.leaps[0].order == 4);

    auto r3 = ring_p(3, {"x"});
    ArtinianModel M3 = artinian_model(make_algebra(r3, PV(r3, {"x^3"})));
    LeapReport rep3 = leap_scan(M3, 9);
    CHECK(rep3.complete);
    REQUIRE(rep3.leaps.size() == 1);
    CHECK(rep3.leaps[0].order == 3);
}

TEST_CASE("degree-bounded scan of a smooth line finds no leaps") {
    auto r = ring_p(2, {"x"});
    auto A = make_free_algebra(r);
    LeapReport rep = leap_scan_degree_bounded(A, std::nullopt, 8, 2);
    CHECK(rep.leaps.empty());
    CHECK(rep.complete);
    CHECK(!rep.exact);
}

TEST_CASE("degree-bounded search never answers no") {
    auto r = ring_p(2, {"x"});
    auto A = make_algebra(r, PV(r, {"x^2"}));
    IntegrabilityResult res =
        is_m_integrable(A, PV(r, {"1"}), 2, IntegrabilityMode::DegreeBounded, 3);
    CHECK(res.answer == IntegrabilityResult::Answer::Unknown);
}

TEST_CASE("leap bound examples") {
    auto r = ring_p(2, {"x"});
    ArtinianModel M2 = artinian_model(make_algebra(r, PV(r, {"x^2"})));
    CHECK(leap_bound(M2, 1) == 1);

    ArtinianModel M4 = artinian_model(make_algebra(r, PV(r, {"x^4"})));
    CHECK(leap_bound(M4, 1) == 1);

    ArtinianModel Mf = artinian_model(make_algebra(r, PV(r, {"x"})));
    CHECK(leap_bound(Mf, 1) == 0);

    // Not local: rejected.
    ArtinianModel Mnl = artinian_model(make_algebra(r, PV(r, {"x^2 + x"})));
    CHECK_THROWS_AS(leap_bound(Mnl, 1), input_error);
}

TEST_CASE("leap count is bounded by the dimension bound") {
    // When m^M Der lies in the B-integrable module, the leap count up
    // to B obeys the derivation-module dimension bound.
    auto r = ring_p(2, {"x"});
    for (std::string gen : {"x^2", "x^4"}) {
        ArtinianModel M = artinian_model(make_algebra(r, PV(r, {gen})));
        const std::size_t B = 8;
        LeapReport rep = leap_scan(M, B);
        REQUIRE(rep.complete);
        std::vector<std::vector<Polynomial>> basis = derivation_basis(M);
        // Find the smallest power with every m^M Der basis vector B-integrable.
        std::optional<std::size_t> certified;
        for (std::size_t power = 1; power <= 3 && !certified; ++power) {
            bool all = true;
            for (const auto& eta : basis) {
                std::vector<Polynomial> scaled;
                for (const Polynomial& c : eta)
                    scaled.push_back(M.algebra->reduce(P(r, "x").pow(power) * c));
                IntegrabilityResult res = is_m_integrable(
                    M.algebra, scaled, B, IntegrabilityMode::ExactArtinian);
                if (res.answer != IntegrabilityResult::Answer::Yes) all = false;
            }
            if (all) certified = power;
        }
        REQUIRE(certified.has_value());
        CHECK(rep.leaps.size() <= leap_bound(M, *certified));
    }
}

TEST_CASE("min power in ideal examples") {
    auto r = ring_q(std::vector<std::string>{"x", "y"});
    auto m1 = Ideal(r, PV(r, {"x"}));
    CHECK(min_power_in_ideal(m1, Ideal(r, PV(r, {"x^2"})), 10) == 2);
    auto mxy = Ideal(r, PV(r, {"x", "y"}));
    CHECK(min_power_in_ideal(mxy, mxy, 10) == 1);
    CHECK(min_power_in_ideal(mxy, Ideal(r, PV(r, {"x^2", "x*y", "y^2"})), 10) == 2);
    CHECK(!min_power_in_ideal(mxy, Ideal(r, PV(r, {"x^3"})), 6).has_value());
    CHECK_THROWS_AS(min_power_in_ideal(mxy, Ideal::zero(r), 5), input_error);
}

TEST_CASE("exact mode rejects non-artinian algebras") {
    auto r = ring_p(2, {"x"});
    auto A = make_free_algebra(r);
    CHECK_THROWS_AS(is_m_integrable(A, PV(r, {"1"}), 3, IntegrabilityMode::ExactArtinian),
                    input_error);
}

TEST_CASE("a derivation space too large to enumerate flags the report") {
    auto r = ring_p(2, {"x", "y"});
    ArtinianModel M = artinian_model(make_algebra(r, PV(r, {"x^4", "y^4"})));
    LeapReport rep = leap_scan(M, 4);
    CHECK(!rep.complete);
    CHECK(rep.leaps.empty());
    CHECK(rep.note.find("too large") != std::string::npos);
}
