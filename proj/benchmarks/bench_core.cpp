#include "klein/klein.hpp"
#include "klein/verify.hpp"

#include <benchmark/benchmark.h>

using namespace klein;

static void BM_Resultant(benchmark::State& state) {
    MultiPoly p = MultiPoly::parse("Z*(4*x-1)^3 - 27*x");
    MultiPoly q = MultiPoly::parse("X*(2*x+1)^3 - x*(x+2)^3");
    for (auto _ : state) benchmark::DoNotOptimize(resultant(p, q, Var::x));
}
BENCHMARK(BM_Resultant);

static void BM_PolyGcd(benchmark::State& state) {
    MultiPoly a = MultiPoly::parse("(x^2 + 3*x*xi - 7)^3*(x - xi + 2)^2");
    MultiPoly b = MultiPoly::parse("(x^2 + 3*x*xi - 7)*(x + 5*xi - 1)^4");
    for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a, b));
}
BENCHMARK(BM_PolyGcd);

static void BM_Series2F1(benchmark::State& state) {
    HGParams p{Rational(1, 4), Rational(-1, 12), Rational(2, 3)};
    RatSeries g = series_of(RatFunc::parse("x*(x+4)^3/(4*(2*x-1)^3)"), Var::x, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(series_2f1_at(p, g));
}
BENCHMARK(BM_Series2F1)->Arg(20)->Arg(60);

static void BM_ContiguousExpress(benchmark::State& state) {
    HGParams base{Rational(1, 4), Rational(-1, 12), Rational(2, 3)};
    HGParams target{Rational(9, 4), Rational(-25, 12), Rational(8, 3)};
    for (auto _ : state) benchmark::DoNotOptimize(contiguous_express(target, base));
}
BENCHMARK(BM_ContiguousExpress);

static void BM_CheckDatabase(benchmark::State& state) {
    database();
    for (auto _ : state) benchmark::DoNotOptimize(check_database(20));
}
BENCHMARK(BM_CheckDatabase)->Unit(benchmark::kMillisecond);

static void BM_Covering(benchmark::State& state, const char* exps) {
    ExponentTriple e = ExponentTriple::parse(exps);
    database();
    for (auto _ : state) benchmark::DoNotOptimize(compute_covering(e));
}
BENCHMARK_CAPTURE(BM_Covering, tetra_deg3, "1/2,1/3,2/3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Covering, tetra_deg14, "2/3,4/3,4/3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Covering, icosa_deg11, "1/2,2/3,1/5")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Covering, icosa_genus1_deg18, "1/5,1/5,6/5")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
