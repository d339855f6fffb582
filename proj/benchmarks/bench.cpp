#include <benchmark/benchmark.h>

#include "eqcount/charsum.hpp"
#include "eqcount/counter.hpp"
#include "eqcount/tables.hpp"

namespace {

using namespace eqcount;

EquationSpec spec_for_row(const TableRow& row) {
  const FieldTable& F = field_cache(row.p, row.s);
  EquationSpec spec;
  spec.field = &F;
  spec.n = row.n;
  spec.a = row.a;
  spec.m = row.m;
  spec.kj = row.kj;
  spec.k = row.k;
  spec.b = smallest_of_power_class(F, row.k0, row.table == 2);
  return spec;
}

const TableRow& row_by_q(int table, long long q) {
  for (const TableRow& row : reference_tables())
    if (row.table == table && row.q == q) return row;
  throw std::logic_error("row not found");
}

void BM_FieldBuild(benchmark::State& state) {
  const long long p = state.range(0);
  const int s = static_cast<int>(state.range(1));
  for (auto _ : state) {
    FieldTable F = FieldTable::build(p, s);
    benchmark::DoNotOptimize(F.exp_table.data());
  }
}
BENCHMARK(BM_FieldBuild)->Args({97, 1})->Args({2, 10})->Args({3, 7})->Args({5, 5});

void BM_WBuild(benchmark::State& state) {
  EquationSpec spec = spec_for_row(row_by_q(2, state.range(0)));
  for (auto _ : state) {
    WTable W = WTable::build(spec);
    benchmark::DoNotOptimize(&W);
  }
}
BENCHMARK(BM_WBuild)->Arg(37)->Arg(47)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_DiagOracle(benchmark::State& state) {
  EquationSpec spec = spec_for_row(row_by_q(2, state.range(0)));
  for (auto _ : state) {
    DiagonalCounts c = diag_oracle(spec);
    benchmark::DoNotOptimize(&c);
  }
}
BENCHMARK(BM_DiagOracle)->Arg(37)->Arg(81)->Arg(97);

void BM_TSum(benchmark::State& state) {
  EquationSpec spec = spec_for_row(row_by_q(2, 61));
  const FieldTable& F = *spec.field;
  DerivedParams dp = derive_params(spec);
  WTable W = WTable::build(spec);
  Character psi = make_character(F, (F.q - 1) / dp.d);
  for (auto _ : state) {
    CyclotomicInt T = t_sum(spec, W, psi);
    benchmark::DoNotOptimize(&T);
  }
}
BENCHMARK(BM_TSum);

void BM_ClosedFormDispatch(benchmark::State& state) {
  EquationSpec spec = spec_for_row(row_by_q(1, state.range(0)));
  for (auto _ : state) {
    CountReport report = dispatch(spec, /*run_oracle=*/false);
    benchmark::DoNotOptimize(&report);
  }
}
BENCHMARK(BM_ClosedFormDispatch)->Arg(16)->Arg(81);

void BM_FullRow(benchmark::State& state) {
  EquationSpec spec = spec_for_row(row_by_q(2, state.range(0)));
  for (auto _ : state) {
    CountReport report = dispatch(spec, /*run_oracle=*/true);
    benchmark::DoNotOptimize(&report);
  }
}
BENCHMARK(BM_FullRow)->Arg(37)->Arg(97)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
