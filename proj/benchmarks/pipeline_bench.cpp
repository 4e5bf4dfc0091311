#include <benchmark/benchmark.h>

#include "ontoforge/pipeline.hpp"

using namespace ontoforge;

namespace {

const std::filesystem::path kData = ONTOFORGE_BENCH_DATA_DIR;

const ingest::Corpus& corpus() {
  static const ingest::Corpus c = ingest::load_corpus(kData / "corpus-insurance");
  return c;
}

const pipeline::Resources& resources() {
  static const pipeline::Resources r = [] {
    config::PipelineConfig cfg;
    cfg.wordnet_dir = kData / "wordnet-mini";
    return pipeline::load_resources(cfg);
  }();
  return r;
}

void BM_TagCorpus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pipeline::tag_corpus(corpus(), resources().tagger));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * corpus().total_chars()));
}
BENCHMARK(BM_TagCorpus)->Unit(benchmark::kMillisecond);

void BM_ExtractRelations(benchmark::State& state) {
  const auto tagged = pipeline::tag_corpus(corpus(), resources().tagger);
  for (auto _ : state) benchmark::DoNotOptimize(relations::extract(tagged, resources().rules));
}
BENCHMARK(BM_ExtractRelations)->Unit(benchmark::kMillisecond);

void BM_Learn(benchmark::State& state) {
  config::PipelineConfig cfg;
  cfg.work_dir = std::filesystem::temp_directory_path() / "ontoforge-bench-none";
  pipeline::LearnOptions opt;
  opt.reduce = state.range(0) != 0;
  opt.carry_overrides = false;
  opt.repository_feedback = false;
  for (auto _ : state) benchmark::DoNotOptimize(pipeline::learn(cfg, resources(), corpus(), opt));
}
BENCHMARK(BM_Learn)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TurtleRoundTrip(benchmark::State& state) {
  config::PipelineConfig cfg;
  const auto onto = pipeline::learn(cfg, resources(), corpus(), {false, std::nullopt, false, false}).onto;
  for (auto _ : state) benchmark::DoNotOptimize(ontology::from_graph(rdf::parse_turtle(ontology::to_turtle(onto))));
}
BENCHMARK(BM_TurtleRoundTrip)->Unit(benchmark::kMicrosecond);

}  // namespace
