#include <benchmark/benchmark.h>

#include "hilbfrob/fock.hpp"
#include "hilbfrob/hilbert_algebra.hpp"
#include "hilbfrob/kummer.hpp"
#include "hilbfrob/models.hpp"
#include "hilbfrob/series.hpp"

using namespace hilbfrob;

namespace {

void BM_HeisenbergSweep(benchmark::State& state) {
    const Presentation& H = models::model("abelian").pres;
    FockSpace fs(H);
    CommutatorCheckOptions opt;
    opt.max_weight = static_cast<int>(state.range(0));
    opt.max_level = 2;
    for (auto _ : state) {
        auto reports = commutator_check(fs, "heisenberg", opt);
        benchmark::DoNotOptimize(reports);
        if (!reports[0].pass) state.SkipWithError("relation failed");
    }
}
BENCHMARK(BM_HeisenbergSweep)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_HilbertProductTable(benchmark::State& state) {
    const Presentation& H = models::model("enriques-z2").pres;
    for (auto _ : state) {
        HilbertAlgebra A = HilbertAlgebra::build(H, 2);
        for (int i = 0; i < A.dim(); ++i)
            for (int j = 0; j < A.dim(); ++j) benchmark::DoNotOptimize(A.product_invariant(i, j));
    }
}
BENCHMARK(BM_HilbertProductTable)->Unit(benchmark::kMillisecond);

void BM_HilbertBuild(benchmark::State& state) {
    const Presentation& H = models::model("k3").pres;
    for (auto _ : state) {
        HilbertAlgebra A = HilbertAlgebra::build(H, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(A.dim());
    }
}
BENCHMARK(BM_HilbertBuild)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_KummerBuild(benchmark::State& state) {
    Presentation H = models::abelian_with_torsion_weights(2);
    for (auto _ : state) {
        KummerAlgebra K = kummer_build(H, 2);
        benchmark::DoNotOptimize(K.dim());
    }
}
BENCHMARK(BM_KummerBuild)->Unit(benchmark::kMillisecond);

void BM_HilbertSeries(benchmark::State& state) {
    const Presentation& H = models::model("k3").pres;
    const int N = static_cast<int>(state.range(0));
    LevelData levels = levels_for_twist(H, H.group.zero(), N);
    for (auto _ : state) {
        HodgeSeries s = hilbert_series(levels, N);
        benchmark::DoNotOptimize(s.coeff.back());
    }
}
BENCHMARK(BM_HilbertSeries)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_BoundaryOperator(benchmark::State& state) {
    Presentation vt = models::variant_toy();
    FockSpace fs(vt);
    Element k = scale(Rational(2), vt.element_of("t"));
    auto span = fs.monomials_up_to(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        BoundaryOperator boundary(fs, k);
        FockVector acc;
        for (const auto& m : span) {
            FockVector v;
            v.terms.push_back({m, Rational(1)});
            acc.axpy(boundary.apply(v), Rational(1));
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_BoundaryOperator)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
