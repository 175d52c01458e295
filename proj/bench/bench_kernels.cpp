// Serial reference kernels against their OpenMP counterparts.

#include <map>

#include <benchmark/benchmark.h>

#include "digitopo/kernels.hpp"
#include "digitopo/shapes.hpp"

namespace {

using namespace digitopo;

const Volume3D& sponge(int side) {
    static std::map<int, Volume3D> cache;
    auto it = cache.find(side);
    if (it == cache.end()) it = cache.emplace(side, gen_sponge_3d(side)).first;
    return it->second;
}

const Image2D& scene(int side) {
    static std::map<int, Image2D> cache;
    auto it = cache.find(side);
    if (it == cache.end()) it = cache.emplace(side, gen_scene_2d(7, side, side, 20)).first;
    return it->second;
}

template <auto Kernel>
void volume_kernel(benchmark::State& state) {
    const Volume3D& vol = sponge(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(vol));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(vol.size()));
}

template <auto Kernel>
void image_kernel(benchmark::State& state) {
    const Image2D& img = scene(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(img));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.size()));
}

} // namespace

#define VOLUME_PAIR(name)                                                                    \
    BENCHMARK(volume_kernel<&serial::name>)->Name("serial/" #name)->Arg(64)->Arg(160);     \
    BENCHMARK(volume_kernel<&parallel::name>)->Name("parallel/" #name)->Arg(64)->Arg(160)

#define IMAGE_PAIR(name)                                                                     \
    BENCHMARK(image_kernel<&serial::name>)->Name("serial/" #name)->Arg(512)->Arg(2048);    \
    BENCHMARK(image_kernel<&parallel::name>)->Name("parallel/" #name)->Arg(512)->Arg(2048)

VOLUME_PAIR(surface_histogram);
VOLUME_PAIR(surface_points);
VOLUME_PAIR(boundary_voxels);
VOLUME_PAIR(pathologies_3d);
IMAGE_PAIR(corner_histogram);
IMAGE_PAIR(pathologies_2d);

BENCHMARK_MAIN();
