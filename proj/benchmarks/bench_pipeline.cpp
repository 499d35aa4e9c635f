#include <benchmark/benchmark.h>

#include <singwf/analysis.hpp>
#include <singwf/dataset.hpp>
#include <singwf/parser.hpp>
#include <singwf/verify.hpp>
#include <singwf/weights.hpp>
#include <singwf/wellform.hpp>

using namespace singwf;

namespace {

constexpr const char* kExample = "t^3+z^2x+x^4+xy^5";
constexpr const char* kWide = "t^2x+z^3x+zx^2y+tz^2y+z^2y^3+xy^4";

void BM_Parse(benchmark::State& state) {
    const auto vars = guess_vars(kWide);
    for (auto _ : state) benchmark::DoNotOptimize(parse_polynomial(kWide, vars));
}
BENCHMARK(BM_Parse);

void BM_InferWeights(benchmark::State& state) {
    const auto poly = parse_polynomial(kExample, guess_vars(kExample));
    for (auto _ : state) benchmark::DoNotOptimize(infer_weights(poly));
}
BENCHMARK(BM_InferWeights);

void BM_WellForm(benchmark::State& state) {
    const auto poly = parse_polynomial(kExample, guess_vars(kExample));
    const auto w = infer_weights(poly);
    for (auto _ : state) benchmark::DoNotOptimize(well_form(poly, w));
}
BENCHMARK(BM_WellForm);

void BM_Analyze(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(analyze_text(kExample));
}
BENCHMARK(BM_Analyze);

void BM_VerifyCorpus(benchmark::State& state) {
    const auto recs = load_records(std::filesystem::path(SINGWF_BENCH_TABLES_DIR));
    const auto jobs = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_all(recs, jobs));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * recs.size()));
}
BENCHMARK(BM_VerifyCorpus)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
