#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "scq/dehn.hpp"
#include "scq/pieces.hpp"
#include "scq/treegeom.hpp"
#include "scq/word.hpp"

namespace {

using namespace scq;

std::vector<int> random_letters(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> letter(0, 3);
  std::vector<int> raw;
  raw.reserve(n);
  for (int i = 0; i < n; ++i) {
    int x = letter(rng);
    raw.push_back(x < 2 ? x + 1 : -(x - 1));
  }
  return raw;
}

void BM_reduce(benchmark::State& state) {
  auto raw = random_letters(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(2, raw));
}
BENCHMARK(BM_reduce)->Range(64, 4096);

void BM_enumerate_classes(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_primitive_classes(2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_enumerate_classes)->DenseRange(3, 6);

void BM_cylinder_delta(benchmark::State& state) {
  auto classes = enumerate_primitive_classes(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cylinder_delta(classes));
}
BENCHMARK(BM_cylinder_delta)->DenseRange(2, 5);

void BM_piece_index(benchmark::State& state) {
  Word w = reduce(2, random_letters(static_cast<int>(state.range(0)), 7));
  for (auto _ : state) {
    PieceIndex idx(w);
    benchmark::DoNotOptimize(idx.longest_common_factor(w));
  }
}
BENCHMARK(BM_piece_index)->Range(64, 4096);

void BM_dehn_reduce(benchmark::State& state) {
  auto p = symmetrize(4, {parse_word(4, "abABcdCD")});
  Word w;
  w.rank = 4;
  std::mt19937 rng(9);
  std::uniform_int_distribution<std::size_t> shift(0, p.closure.size() - 1);
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i)
    w = mul(w, p.closure[shift(rng)]);
  for (auto _ : state) benchmark::DoNotOptimize(dehn_reduce(w, p));
}
BENCHMARK(BM_dehn_reduce)->Range(2, 32);

void BM_axis_overlap(benchmark::State& state) {
  PeriodicLine l1 = axis(parse_word(2, "abab" "aab"));
  PeriodicLine l2 = axis(parse_word(2, "ab"));
  for (auto _ : state) benchmark::DoNotOptimize(axis_overlap(l1, l2));
}
BENCHMARK(BM_axis_overlap);

}  // namespace

BENCHMARK_MAIN();
