#include <benchmark/benchmark.h>

#include "compalg/cohomology.hpp"
#include "compalg/fixtures.hpp"
#include "compalg/gerstenhaber.hpp"
#include "compalg/homology.hpp"
#include "compalg/matrix.hpp"

using namespace compalg;

namespace {

Matrix dense_test_matrix(int n) {
    // Deterministic full-rank-ish matrix with mixed denominators so the
    // elimination has to do real rational arithmetic.
    Matrix m(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            long num = (r * 7 + c * 3) % 11 - 5;
            long den = 1 + (r + 2 * c) % 4;
            m(r, c) = Rational(num, den);
        }
    }
    return m;
}

void bm_rref(benchmark::State& state) {
    Matrix m = dense_test_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rref(m));
    }
}

void bm_delta_c_matrix(benchmark::State& state) {
    CompatibleAlgebra a = fixture("F2");
    CompatibleBimodule adj = adjoint_bimodule(a);
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta_c_matrix(a, adj, n));
    }
}

void bm_compat_bracket(benchmark::State& state) {
    CompatibleAlgebra a = fixture("F4");
    CompatCochain theta = pair_cochain(a);
    CompatCochain f = CompatCochain::zero(2, a.dim, a.dim);
    int idx = 0;
    for (int i = 0; i < 2; ++i) {
        Vec coords = f.comp(i).coords();
        for (Rational& x : coords) x = Rational(++idx % 3 - 1);
        f.comp(i) = Cochain::from_coords(2, a.dim, a.dim, coords);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(compat_bracket(theta, f));
    }
}

void bm_cohomology(benchmark::State& state) {
    CompatibleAlgebra a = fixture("F2");
    CompatibleBimodule adj = adjoint_bimodule(a);
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cohomology(a, adj, n));
    }
}

void bm_homology(benchmark::State& state) {
    CompatibleAlgebra a = fixture("F2");
    CompatibleBimodule adj = adjoint_bimodule(a);
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(homology(a, adj, n));
    }
}

}  // namespace

BENCHMARK(bm_rref)->Arg(20)->Arg(60);
BENCHMARK(bm_delta_c_matrix)->Arg(2)->Arg(3);
BENCHMARK(bm_compat_bracket);
BENCHMARK(bm_cohomology)->Arg(2)->Arg(3);
BENCHMARK(bm_homology)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
