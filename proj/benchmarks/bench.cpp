#include <benchmark/benchmark.h>

#include "lietor/verify.hpp"

using namespace lietor;

namespace {

DecPtr a2_twisted() {
  static DecPtr dec = [] {
    auto g = std::make_shared<ChevalleyAlgebra>(build_root_system('A', 2));
    return eigenspace_decompose(g, {make_diagram_aut(g, {1, 0})}, {2});
  }();
  return dec;
}

void BM_cyc_mul(benchmark::State& state) {
  Cyc a = Cyc(rat_of(3, 7)) + Cyc(rat_of(2, 5)) * Cyc::root_of_unity(12, 5);
  Cyc b = Cyc(rat_of(-1, 3)) + Cyc::root_of_unity(12, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_cyc_mul);

void BM_cyc_inverse(benchmark::State& state) {
  Cyc a = Cyc(rat_of(3, 7)) + Cyc(rat_of(2, 5)) * Cyc::root_of_unity(12, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.inverse());
  }
}
BENCHMARK(BM_cyc_inverse);

void BM_build_chevalley(benchmark::State& state) {
  for (auto _ : state) {
    ChevalleyAlgebra g = build_simple('D', 4);
    benchmark::DoNotOptimize(g.dim());
  }
}
BENCHMARK(BM_build_chevalley);

void BM_eigenspace_decompose(benchmark::State& state) {
  auto g = std::make_shared<ChevalleyAlgebra>(build_root_system('A', 3));
  FiniteOrderAut flip = make_diagram_aut(g, {2, 1, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigenspace_decompose(g, {flip}, {2}));
  }
}
BENCHMARK(BM_eigenspace_decompose);

void BM_toroidal_bracket(benchmark::State& state) {
  ToroidalAlgebra tor(a2_twisted(), Cyc(1), Cyc(1));
  DegreeWindow w{2, 1};
  auto basis = tor.window_basis(w);
  size_t i = 0;
  for (auto _ : state) {
    const auto& a = basis[i % basis.size()];
    const auto& b = basis[(i * 7 + 3) % basis.size()];
    benchmark::DoNotOptimize(tor.bracket(a.elem, b.elem));
    ++i;
  }
}
BENCHMARK(BM_toroidal_bracket);

void BM_jacobi_sweep_w2(benchmark::State& state) {
  ToroidalAlgebra tor(a2_twisted(), Cyc(1), Cyc(0));
  SweepConfig cfg;
  cfg.window = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_jacobi(tor, cfg).pass());
  }
}
BENCHMARK(BM_jacobi_sweep_w2);

void BM_build_realized(benchmark::State& state) {
  for (auto _ : state) {
    RealizedModule m =
        build_realized(a2_twisted(), {}, Cyc(1), {1, 1}, {Cyc(0)}, DegreeWindow{2, 1});
    benchmark::DoNotOptimize(m.v2().dim);
  }
}
BENCHMARK(BM_build_realized);

}  // namespace

BENCHMARK_MAIN();
