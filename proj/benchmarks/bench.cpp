#include <benchmark/benchmark.h>

#include <cubictorsion/classification.hpp>
#include <cubictorsion/dataset.hpp>
#include <cubictorsion/elliptic.hpp>
#include <cubictorsion/factor.hpp>
#include <cubictorsion/numberfield.hpp>

using namespace ct;

namespace {

Curve curve_11a1() {
    return Curve::from_long(Int(0), Int(-1), Int(1), Int(-10), Int(-20), "11a1");
}

Curve curve_162b2() {
    return Curve::from_long(Int(1), Int(-1), Int(1), Int(25), Int(1), "162b2");
}

void BM_DivisionPolys(benchmark::State& state) {
    Curve E = curve_11a1();
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        DivisionPolys dp(E);
        benchmark::DoNotOptimize(dp.primitive(n).degree());
    }
}
BENCHMARK(BM_DivisionPolys)->Arg(7)->Arg(9)->Arg(13);

void BM_SmallFactorsDeg36(benchmark::State& state) {
    Curve E = curve_162b2();
    DivisionPolys dp(E);
    UniPoly p = dp.primitive(9);
    for (auto _ : state) benchmark::DoNotOptimize(small_factors(p, 3).factors.size());
}
BENCHMARK(BM_SmallFactorsDeg36);

void BM_FieldDisc(benchmark::State& state) {
    for (auto _ : state) {
        CubicField K(UniPoly{Rat(8), Rat(-10), Rat(-1), Rat(1)});
        benchmark::DoNotOptimize(K.field_disc().get_si());
    }
}
BENCHMARK(BM_FieldDisc);

void BM_TorsionOverQ(benchmark::State& state) {
    Curve E = curve_11a1();
    for (auto _ : state) benchmark::DoNotOptimize(torsion_over_Q(E).structure.n);
}
BENCHMARK(BM_TorsionOverQ);

void BM_TorsionOverK(benchmark::State& state) {
    Curve E = curve_11a1();
    CubicField K(UniPoly{Rat(1), Rat(1), Rat(-1), Rat(1)});
    for (auto _ : state) benchmark::DoNotOptimize(torsion_over_K(E, K).structure.n);
}
BENCHMARK(BM_TorsionOverK);

void BM_GrowthFields(benchmark::State& state) {
    Curve E = curve_162b2();
    for (auto _ : state) benchmark::DoNotOptimize(growth_fields(E).entries.size());
}
BENCHMARK(BM_GrowthFields);

}  // namespace

BENCHMARK_MAIN();
