#include <benchmark/benchmark.h>

#include <trigonal/abelian.hpp>
#include <trigonal/kleinian.hpp>
#include <trigonal/pack.hpp>
#include <trigonal/schur.hpp>

using namespace trigonal;

namespace
{

const curve_model &curve(int s)
{
    static const auto c7 = load_curve(TRIGONAL_BENCH_DATA_DIR, {3, 7});
    static const auto c8 = load_curve(TRIGONAL_BENCH_DATA_DIR, {3, 8});
    return s == 7 ? c7 : c8;
}

void bm_poly_multiply(benchmark::State &state)
{
    const auto &c = curve(7);
    sparse_poly p = sparse_poly::constant(c.reg, 1);
    for (int i = 1; i <= c.genus; ++i) {
        p += sparse_poly::var(c.reg, make_u(i)) * rational(i, i + 1);
    }
    const auto q = p.pow(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(q * q);
    }
    state.counters["terms"] = static_cast<double>(q.size());
}
BENCHMARK(bm_poly_multiply)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void bm_schur_weierstrass(benchmark::State &state)
{
    const auto c = make_curve({3, static_cast<int>(state.range(0))});
    for (auto _ : state) {
        benchmark::DoNotOptimize(schur_weierstrass(c));
    }
}
BENCHMARK(bm_schur_weierstrass)->Arg(7)->Arg(8)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);

void bm_generate_rho(benchmark::State &state)
{
    const auto &c = curve(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_rho(c, 9));
    }
}
BENCHMARK(bm_generate_rho)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void bm_resultant(benchmark::State &state)
{
    const auto &c = curve(7);
    const auto r = generate_rho(c, 9);
    const auto i = static_cast<std::size_t>(state.range(0) - 1), j = static_cast<std::size_t>(state.range(1) - 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eliminate_w(c, r.rho[i], r.rho[j]));
    }
}
BENCHMARK(bm_resultant)->Args({1, 2})->Args({2, 9})->Args({5, 9})->Unit(benchmark::kMillisecond);

void bm_q_values(benchmark::State &state)
{
    const auto &c = curve(7);
    point_sampler s(c, 1);
    for (auto _ : state) {
        const auto pt = s.next();
        benchmark::DoNotOptimize(pt.q({5, 5, 6, 6, 6, 6}));
    }
}
BENCHMARK(bm_q_values)->Unit(benchmark::kMillisecond);

void bm_inversion(benchmark::State &state)
{
    const auto &c = curve(7);
    const auto pack = load_pack(TRIGONAL_BENCH_DATA_DIR, c);
    const auto &g = pack.group("rho");
    point_sampler s(c, 1);
    const auto pt = s.next();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            jacobi_invert_numeric(c, g.at("rho12").value, g.at("rho1").value, pt, static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(bm_inversion)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void bm_rational_sum(benchmark::State &state)
{
    for (auto _ : state) {
        rational acc = 0;
        for (int k = 1; k <= state.range(0); ++k) {
            acc += rational(1, k);
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(bm_rational_sum)->Arg(100)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
