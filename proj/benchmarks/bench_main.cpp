#include <benchmark/benchmark.h>

#include <offsetdeg/formulas.hpp>
#include <offsetdeg/gcd.hpp>
#include <offsetdeg/parser.hpp>
#include <offsetdeg/resultant.hpp>

using namespace offsetdeg;

namespace {

ImplicitCurve curve(const std::string& src) {
  VarTable vt;
  return validate_implicit(parse_polynomial(src, vt, {"y1", "y2"}));
}

const char* kCurves[] = {
    "y1^2+y2^2-25",
    "y2-y1^2",
    "y1^3-y2^2",
    "y1^3+y2^3-3*y1*y2",
    "(y1^2+4*y2+y2^2)^2-16*y1^2-16*y2^2",
};

void BM_ResultantPRS(benchmark::State& state) {
  ImplicitCurve c = curve(kCurves[state.range(0)]);
  Polynomial S = build_auxiliary_S(c);
  for (auto _ : state)
    benchmark::DoNotOptimize(resultant(c.F, S, kY3, ResultantAlgo::prs));
}
BENCHMARK(BM_ResultantPRS)->DenseRange(0, 3);

void BM_ResultantBareiss(benchmark::State& state) {
  ImplicitCurve c = curve(kCurves[state.range(0)]);
  Polynomial S = build_auxiliary_S(c);
  for (auto _ : state)
    benchmark::DoNotOptimize(resultant(c.F, S, kY3, ResultantAlgo::bareiss));
}
BENCHMARK(BM_ResultantBareiss)->DenseRange(0, 3);

void BM_Gcd(benchmark::State& state) {
  // shared factor with content, the shape the elimination pipeline hits
  Polynomial cross = Polynomial::var(kX2) * Polynomial::var(kY1) -
                     Polynomial::var(kX1) * Polynomial::var(kY2);
  Polynomial circ = Polynomial::var(kY1, 2) + Polynomial::var(kY2, 2);
  Polynomial p = (cross * cross * circ).scaled(4);
  Polynomial q = (cross * circ * circ).scaled(6);
  for (auto _ : state) benchmark::DoNotOptimize(gcd_z(p, q));
}
BENCHMARK(BM_Gcd);

void BM_SquarefreePart(benchmark::State& state) {
  Polynomial p = pow(Polynomial::var(kY1) + Polynomial::var(kY2), 3) *
                 (Polynomial::var(kY1) - Polynomial(2)) *
                 pow(Polynomial::var(kY2) + Polynomial(1), 2);
  for (auto _ : state) benchmark::DoNotOptimize(squarefree_part(p));
}
BENCHMARK(BM_SquarefreePart);

void BM_DegreeReport(benchmark::State& state) {
  ImplicitCurve c = curve(kCurves[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(degree_report(c));
}
BENCHMARK(BM_DegreeReport)->DenseRange(0, 4);

}  // namespace

BENCHMARK_MAIN();
