#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

#include "bellgram/index.hpp"
#include "bellgram/scan.hpp"
#include "bellgram/search.hpp"
#include "bellgram/synthetic.hpp"

namespace {

const bellgram::Corpus& bench_corpus() {
  static const bellgram::Corpus corpus = [] {
    const std::vector<bellgram::synthetic::Planted> planted = {
        {"the horse whinnies", 800},
        {"the bear growls", 500},
        {"the cat meows", 700},
    };
    bellgram::synthetic::GeneratorOptions options;
    options.seed = 7;
    options.distractor_docs = 4000;
    options.distractor_tokens = 120;
    return bellgram::synthetic::planted_corpus(planted, options);
  }();
  return corpus;
}

const bellgram::PositionalIndex& bench_index() {
  static const bellgram::PositionalIndex index = bellgram::build_index(bench_corpus());
  return index;
}

void BM_BuildIndexThreads(benchmark::State& state) {
  const bellgram::Corpus& corpus = bench_corpus();
  for (auto _ : state) {
    bellgram::PositionalIndex index = bellgram::build_index(corpus, false, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(index);
  }
}
BENCHMARK(BM_BuildIndexThreads)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);  // 0 = OpenMP default

void BM_PhraseCountScan(benchmark::State& state) {
  const bellgram::Corpus& corpus = bench_corpus();
  const std::vector<std::string> terms = {"horse", "whinnies"};
  for (auto _ : state) {
    benchmark::DoNotOptimize(bellgram::scan::phrase_count(corpus, terms));
  }
}
BENCHMARK(BM_PhraseCountScan)->Unit(benchmark::kMillisecond);

void BM_PhraseCountIndexed(benchmark::State& state) {
  const bellgram::PositionalIndex& index = bench_index();
  const bellgram::PhraseQuery query = bellgram::make_phrase_query({"horse", "whinnies"}, index.config());
  for (auto _ : state) {
    benchmark::DoNotOptimize(bellgram::phrase_count(index, query));
  }
}
BENCHMARK(BM_PhraseCountIndexed);

void BM_CollocateCountScan(benchmark::State& state) {
  const bellgram::Corpus& corpus = bench_corpus();
  for (auto _ : state) {
    benchmark::DoNotOptimize(bellgram::scan::collocate_count(corpus, "horse", "whinnies", 9));
  }
}
BENCHMARK(BM_CollocateCountScan)->Unit(benchmark::kMillisecond);

void BM_CollocateCountIndexed(benchmark::State& state) {
  const bellgram::PositionalIndex& index = bench_index();
  const bellgram::CollocateQuery query =
      bellgram::make_collocate_query("horse", "whinnies", 9, index.config());
  for (auto _ : state) {
    benchmark::DoNotOptimize(bellgram::collocate_count(index, query));
  }
}
BENCHMARK(BM_CollocateCountIndexed);

}  // namespace

BENCHMARK_MAIN();
