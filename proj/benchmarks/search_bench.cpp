#include <benchmark/benchmark.h>

#include "ontoforge/pipeline.hpp"

using namespace ontoforge;

namespace {

const std::filesystem::path kData = ONTOFORGE_BENCH_DATA_DIR;

struct World {
  pipeline::Resources res;
  ontology::Ontology onto;
  search::IndexedMetadata idx;
};

const World& world() {
  static const World w = [] {
    config::PipelineConfig cfg;
    cfg.wordnet_dir = kData / "wordnet-mini";
    cfg.corpus_dir = kData / "corpus-insurance";
    cfg.repo_dir = kData / "repository-insurance";
    World out{pipeline::load_resources(cfg), {}, {}};
    out.onto = pipeline::learn(cfg, out.res, {false, std::nullopt, false, false}).onto;
    out.idx = pipeline::build_index(cfg, out.res, out.onto);
    return out;
  }();
  return w;
}

void BM_ExpandQuery(benchmark::State& state) {
  const auto& w = world();
  const search::ConceptMatcher matcher(w.onto, w.res.db);
  const search::ExpandOptions opt{static_cast<std::size_t>(state.range(0)), 0.5, search::QueryMode::expand};
  const auto terms = search::query_terms("idv motor insurance premium claim");
  for (auto _ : state) benchmark::DoNotOptimize(search::expand_query(terms, w.onto, matcher, w.res.db, opt));
}
BENCHMARK(BM_ExpandQuery)->Arg(0)->Arg(1)->Arg(2)->Arg(4);

void BM_ExecuteQuery(benchmark::State& state) {
  const auto& w = world();
  const auto q = search::expand_query(search::query_terms("idv premium claim canteen"), w.onto, w.res.db);
  const search::UserProfile profile{"bench", {{"premium", 2.0}}};
  for (auto _ : state) benchmark::DoNotOptimize(search::execute_query(q, w.idx, profile));
}
BENCHMARK(BM_ExecuteQuery);

void BM_IndexRepository(benchmark::State& state) {
  const auto& w = world();
  const auto docs = search::load_repository(kData / "repository-insurance");
  for (auto _ : state) benchmark::DoNotOptimize(search::index_repository(docs, w.onto, w.res.db, w.res.tagger));
}
BENCHMARK(BM_IndexRepository)->Unit(benchmark::kMicrosecond);

}  // namespace
