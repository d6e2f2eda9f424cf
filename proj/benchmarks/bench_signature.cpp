#include <benchmark/benchmark.h>

#include <string>

#include "knotsig/bounds.hpp"
#include "knotsig/congruence.hpp"
#include "knotsig/knot_table.hpp"

using namespace knotsig;

namespace {

const std::vector<KnotRecord>& fixtures() {
  static const std::vector<KnotRecord> records = load_table(KNOTSIG_FIXTURES).records;
  return records;
}

const KnotRecord& fixture(const std::string& name) {
  for (const auto& r : fixtures())
    if (r.name == name) return r;
  throw std::out_of_range(name);
}

void BM_SignatureFunction(benchmark::State& state, const std::string& name) {
  const SeifertMatrix& v = fixture(name).seifert;
  for (auto _ : state) benchmark::DoNotOptimize(signature_function(v));
}
BENCHMARK_CAPTURE(BM_SignatureFunction, k5_2, std::string("5_2"));
BENCHMARK_CAPTURE(BM_SignatureFunction, k8_20, std::string("8_20"));
BENCHMARK_CAPTURE(BM_SignatureFunction, k12n670, std::string("12n670"));
BENCHMARK_CAPTURE(BM_SignatureFunction, k12a979, std::string("12a979"));

void BM_ConnectedSumPower(benchmark::State& state) {
  const SeifertMatrix& v = fixture("8_20").seifert;
  SeifertMatrix sum = connected_sum_power(v, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bounds_report(sum));
}
BENCHMARK(BM_ConnectedSumPower)->DenseRange(1, 4);

void BM_CircleRoots(benchmark::State& state) {
  const SeifertMatrix& v = fixture("12n670").seifert;
  for (auto _ : state) benchmark::DoNotOptimize(circle_roots(v));
}
BENCHMARK(BM_CircleRoots);

void BM_IsolateChebyshev(benchmark::State& state) {
  // T_n(x/2)-style polynomial with n distinct roots in (-2, 2).
  IntPolynomial prev{Integer(2)}, cur{Integer(0), Integer(1)};
  for (int k = 1; k < state.range(0); ++k) {
    IntPolynomial next = IntPolynomial{Integer(0), Integer(1)} * cur - prev;
    prev = cur;
    cur = next;
  }
  IntPolynomial p = cur + IntPolynomial{Integer(1)};
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(p, Rational(-3), Rational(3)));
}
BENCHMARK(BM_IsolateChebyshev)->RangeMultiplier(2)->Range(4, 32);

void BM_CongruenceRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = Rational(static_cast<long>((i * 7 + j * 13) % 11) - 5, 1 + (i + j) % 3);
  for (auto _ : state) benchmark::DoNotOptimize(congruence_diagonalize(m));
}
BENCHMARK(BM_CongruenceRational)->RangeMultiplier(2)->Range(4, 32);

void BM_Scan(benchmark::State& state, const char* path) {
  auto records = load_table(path).records;
  for (auto _ : state) benchmark::DoNotOptimize(scan(records, ScanCriteria{12u, true, 1u}, 1));
}
BENCHMARK_CAPTURE(BM_Scan, fixture_table, KNOTSIG_FIXTURES)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scan, slice_table, KNOTSIG_SLICE_TABLE)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
