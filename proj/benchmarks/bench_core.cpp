#include <benchmark/benchmark.h>

#include "hs/integrate.hpp"
#include "hs/leaps.hpp"

using namespace hs;

namespace {

RingPtr twisted_ring() { return make_ring(Field::rationals(), {"x", "y", "z"}); }

std::vector<Polynomial> twisted_gens(const RingPtr& r) {
    return {parse_polynomial(r, "x*z - y^2"), parse_polynomial(r, "x^3 - z^2"),
            parse_polynomial(r, "x*y - z")};
}

void BM_buchberger(benchmark::State& state) {
    RingPtr r = twisted_ring();
    Ideal I(r, twisted_gens(r));
    for (auto _ : state) {
        GroebnerBasis gb = buchberger(I);
        benchmark::DoNotOptimize(gb.elements().size());
    }
}
BENCHMARK(BM_buchberger);

void BM_normal_form(benchmark::State& state) {
    RingPtr r = twisted_ring();
    GroebnerBasis gb = buchberger(Ideal(r, twisted_gens(r)));
    Polynomial f = parse_polynomial(r, "(x + y + z)^5");
    for (auto _ : state) {
        DivisionCertificate cert = normal_form(f, gb);
        benchmark::DoNotOptimize(cert.remainder.nterms());
    }
}
BENCHMARK(BM_normal_form);

void BM_ideal_intersection(benchmark::State& state) {
    RingPtr r = twisted_ring();
    Ideal I(r, {parse_polynomial(r, "x"), parse_polynomial(r, "y")});
    Ideal J(r, {parse_polynomial(r, "z")});
    for (auto _ : state) {
        Ideal W = ideal_intersection(I, J);
        benchmark::DoNotOptimize(W.generators().size());
    }
}
BENCHMARK(BM_ideal_intersection);

void BM_integrate_cusp(benchmark::State& state) {
    RingPtr r = make_ring(Field::prime(2), {"x", "y"});
    AlgebraPtr A = make_algebra(r, {parse_polynomial(r, "y^2 + x^3")});
    std::vector<Polynomial> delta = {Polynomial::zero(r), parse_polynomial(r, "x^2")};
    const std::size_t order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        ExtensionResult res = integrate_ci(A, delta, order);
        benchmark::DoNotOptimize(res.reached_order);
    }
}
BENCHMARK(BM_integrate_cusp)->Arg(4)->Arg(8)->Arg(16);

void BM_leap_scan(benchmark::State& state) {
    RingPtr r = make_ring(Field::prime(2), {"x"});
    ArtinianModel M = artinian_model(make_algebra(r, {parse_polynomial(r, "x^4")}));
    for (auto _ : state) {
        LeapReport rep = leap_scan(M, 8);
        benchmark::DoNotOptimize(rep.leaps.size());
    }
}
BENCHMARK(BM_leap_scan);

void BM_truncated_substitution(benchmark::State& state) {
    RingPtr r = make_ring(Field::prime(2), {"x", "y"});
    AlgebraPtr A = make_algebra(r, {parse_polynomial(r, "y^2 + x^3")});
    const std::size_t m = 16;
    std::vector<Polynomial> rows;
    for (std::size_t mu = 1; mu <= m; ++mu)
        rows.push_back(parse_polynomial(r, "x^2"));
    std::vector<TruncatedSeries> images = {
        TruncatedSeries::generator_series(A, m, 0, rows),
        TruncatedSeries::generator_series(A, m, 1, rows)};
    Polynomial f = parse_polynomial(r, "y^2 + x^3");
    for (auto _ : state) {
        TruncatedSeries s = truncated_substitution(f, images, m);
        benchmark::DoNotOptimize(s.coefficient(m).nterms());
    }
}
BENCHMARK(BM_truncated_substitution);

}  // namespace

BENCHMARK_MAIN();
