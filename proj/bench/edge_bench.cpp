// Serial reference vs OpenMP edge kernel.
//   closet_bench --benchmark_filter=Edge

#include <benchmark/benchmark.h>

#include <random>

#include "closet/fixtures.hpp"
#include "closet/image.hpp"

namespace {

using namespace closet;

image::GrayImage noisy_image(int rows, int cols) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  image::GrayImage img(rows, cols);
  for (double& v : img.data()) v = u(rng);
  return img;
}

const fuzzy::MamdaniFis& photo_fis() {
  static const auto fis = image::build_edge_fis(image::EdgeFisConfig{kPhotoSigma});
  return fis;
}

void BM_EdgeReference_Noise(benchmark::State& state) {
  const auto img = noisy_image(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(image::edge_response_reference(img, photo_fis()));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_EdgeParallel_Noise(benchmark::State& state) {
  const auto img = noisy_image(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(image::edge_response(img, photo_fis()));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_EdgeReference_Fixture(benchmark::State& state) {
  const auto fx = fixtures::generate(Label::Dress, 1);
  for (auto _ : state) benchmark::DoNotOptimize(image::edge_response_reference(fx.image, photo_fis()));
  state.SetItemsProcessed(state.iterations() * kCanonicalRows * kCanonicalCols);
}

void BM_EdgeParallel_Fixture(benchmark::State& state) {
  const auto fx = fixtures::generate(Label::Dress, 1);
  for (auto _ : state) benchmark::DoNotOptimize(image::edge_response(fx.image, photo_fis()));
  state.SetItemsProcessed(state.iterations() * kCanonicalRows * kCanonicalCols);
}

}  // namespace

BENCHMARK(BM_EdgeReference_Noise)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EdgeParallel_Noise)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EdgeReference_Fixture)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_EdgeParallel_Fixture)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
