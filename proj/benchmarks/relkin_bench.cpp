#include <benchmark/benchmark.h>

#include "relkin/dynamics.hpp"
#include "relkin/gamma_algebra.hpp"
#include "relkin/halfplane.hpp"
#include "relkin/kinematics.hpp"
#include "relkin/qdeform.hpp"

namespace {

void BM_CounterRapidityMomenta(benchmark::State& state) {
    double chi = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(relkin::momenta_from_counter_rapidity(1.3, chi));
        chi = chi > 4.0 ? 0.1 : chi + 1e-3;
    }
}
BENCHMARK(BM_CounterRapidityMomenta);

void BM_HalfPlaneDistance(benchmark::State& state) {
    const relkin::HalfPlanePoint z(0.3, 0.7), w(-1.2, 2.5);
    for (auto _ : state) benchmark::DoNotOptimize(relkin::distance(z, w));
}
BENCHMARK(BM_HalfPlaneDistance);

void BM_MomentumDistanceIntegral(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(relkin::momentum_distance_integral(1.2, 3.7, 2.5, 4.0));
}
BENCHMARK(BM_MomentumDistanceIntegral);

void BM_MassEquation(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(relkin::solve_mass_equation(1.1, 1.0));
}
BENCHMARK(BM_MassEquation);

void BM_LorentzIntegrator(benchmark::State& state) {
    const auto start = relkin::ParticleState::on_shell(1.0, 1.0, relkin::Vec3(1, 0, 0), relkin::Vec3(0, 0.8, 0));
    const auto field = relkin::FieldConfig::coulomb(-0.1);
    const double tau_end = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(relkin::integrate_lorentz(start, field, tau_end, 1e-3));
    state.SetItemsProcessed(state.iterations() * state.range(0) * 1000);
}
BENCHMARK(BM_LorentzIntegrator)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_CommutatorSuite(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(relkin::commutator_suite(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CommutatorSuite)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
