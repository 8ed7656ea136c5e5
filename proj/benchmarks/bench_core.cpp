#include "blowup/evolution/evolve.hpp"
#include "blowup/spectral/delta7.hpp"
#include "blowup/spectral/recurrence.hpp"
#include "blowup/spectral/shooting.hpp"

#include <benchmark/benchmark.h>

namespace ev = blowup::evolution;
namespace sp = blowup::spectral;

static void BM_Recurrence(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sp::recurrence(sp::cplx(0.5, 3.0), N));
    state.SetComplexityN(N);
}
BENCHMARK(BM_Recurrence)->Range(256, 8192)->Complexity();

static void BM_RecurrenceExact(benchmark::State& state) {
    const blowup::exact::ComplexRational lam(blowup::exact::Rational(1, 2), blowup::exact::Rational(1, 3));
    for (auto _ : state) benchmark::DoNotOptimize(sp::recurrence_exact(lam, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RecurrenceExact)->Arg(20)->Arg(40);

static void BM_Delta7Certificate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sp::delta7_exact_certificate());
}
BENCHMARK(BM_Delta7Certificate)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_ConnectionDeterminant(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(sp::connection_determinant(sp::ShootingProblem::eigen, sp::cplx(-0.98, 3.76)));
}
BENCHMARK(BM_ConnectionDeterminant)->Unit(benchmark::kMillisecond);

static void BM_FullStep(benchmark::State& state) {
    const ev::Grid g = ev::make_grid(static_cast<int>(state.range(0)));
    ev::FieldState s = ev::symmetry_mode(g);
    s.phi1 *= 1e-3;
    s.phi2 *= 1e-3;
    ev::IntegrateOptions o;
    o.output_every = 0;
    const double dt = 0.25 / (double(g.n) * g.n);
    o.dt = dt;
    for (auto _ : state) benchmark::DoNotOptimize(ev::integrate(g, s, 10 * dt, ev::Mode::full, o));
    state.SetItemsProcessed(state.iterations() * 10);
}
BENCHMARK(BM_FullStep)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

static void BM_Rhs(benchmark::State& state) {
    const ev::Grid g = ev::make_grid(static_cast<int>(state.range(0)));
    const ev::FieldState s = ev::symmetry_mode(g);
    for (auto _ : state) benchmark::DoNotOptimize(ev::rhs(g, s, ev::Mode::full));
}
BENCHMARK(BM_Rhs)->Arg(32)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
