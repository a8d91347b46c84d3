#include <benchmark/benchmark.h>

#include "pv/ideal.hpp"
#include "pv/parser.hpp"
#include "pv/prolong.hpp"
#include "pv/random_gen.hpp"
#include "pv/structure.hpp"

using namespace pv;

namespace {

Matrix fixed_matrix(const OperatorSpec& spec, unsigned m, unsigned deg) {
    Rng rng(99);
    return random_invertible_matrix(rng, spec, m, deg);
}

void BM_ratfunc_arith(benchmark::State& state) {
    Rng rng(1);
    auto spec = OperatorSpec::shift();
    Scalar a = random_ratfunc(rng, spec, 4);
    Scalar b = random_ratfunc(rng, spec, 4);
    for (auto _ : state) {
        Scalar c = a * b + a / b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ratfunc_arith);

void BM_sigma_delta(benchmark::State& state) {
    Rng rng(2);
    auto spec = OperatorSpec::q_dilation();
    Scalar f = random_ratfunc(rng, spec, 4);
    for (auto _ : state) {
        Scalar g = spec.sigma(spec.delta(f));
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_sigma_delta);

void BM_prolong(benchmark::State& state) {
    auto spec = OperatorSpec::shift();
    Matrix a = fixed_matrix(spec, 2, 2);
    unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto sys = prolong_system(spec, a, n);
        benchmark::DoNotOptimize(sys);
    }
}
BENCHMARK(BM_prolong)->Arg(1)->Arg(2)->Arg(3);

void BM_verify_fundamental(benchmark::State& state) {
    auto spec = OperatorSpec::shift();
    Matrix a = fixed_matrix(spec, 2, 1);
    unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_fundamental(spec, a, n));
}
BENCHMARK(BM_verify_fundamental)->Arg(1)->Arg(2);

void BM_groebner(benchmark::State& state) {
    auto spec = OperatorSpec::shift();
    VarSpace vs{0, 2};
    std::vector<MPoly> gens = {parse_jetpoly(spec, vs, "Y0_11*Y0_22 - Y0_12*Y0_21 - 1"),
                               parse_jetpoly(spec, vs, "Y0_11^2 - Y0_22"),
                               parse_jetpoly(spec, vs, "Y0_12 + Y0_21")};
    for (auto _ : state) {
        auto basis = groebner_basis(vs, gens);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_groebner);

void BM_exact_sequence(benchmark::State& state) {
    MonomialModel model({static_cast<unsigned>(state.range(0))});
    for (auto _ : state) {
        auto rep = exact_sequence_check(model);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_exact_sequence)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
