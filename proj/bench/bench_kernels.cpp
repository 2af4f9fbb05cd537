// Serial reference kernels against their OpenMP counterparts on the (3,2)
// instance: 1210 blocks on 121 points.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>

#include "tgg/kernels.hpp"
#include "tgg/reference.hpp"

using namespace tgg;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-26s %10.4f %10.4f %8.2fx\n", name, serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  auto F = Field::create(3, 1);
  auto h = Subspace::standard_hyperplane(F, 5);
  Polarity sigma(h);
  auto jt = jt_design(F, 2, sigma);
  auto twisted = twisted_grassmann(F, 2, h);
  auto bg = block_graph(jt, 4);
  auto cert = f_certificate(twisted, jt, sigma);
  std::vector<SemilinearMap> maps;
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) maps.push_back(random_stabilizer_element(F, 2, rng));
  auto perm = lift(maps.front(), sigma, *jt.points());

  std::printf("threads=%d reps=%d\n", kernels::thread_count(), reps);
  std::printf("%-26s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");
  row("block_graph", seconds([&] { reference::block_graph(jt, 4); }, reps),
      seconds([&] { block_graph(jt, 4); }, reps));
  row("intersection_spectrum", seconds([&] { reference::intersection_spectrum(jt); }, reps),
      seconds([&] { intersection_spectrum(jt); }, reps));
  row("intersection_array", seconds([&] { reference::intersection_array(twisted); }, reps),
      seconds([&] { intersection_array(twisted); }, reps));
  row("check_isomorphism", seconds([&] { reference::check_isomorphism(twisted, bg, cert); }, reps),
      seconds([&] { check_isomorphism(twisted, bg, cert); }, reps));
  row("lift x50", seconds([&] { for (const auto& m : maps) reference::lift(m, sigma, *jt.points()); }, reps),
      seconds([&] { for (const auto& m : maps) lift(m, sigma, *jt.points()); }, reps));
  row("is_design_automorphism", seconds([&] { reference::is_design_automorphism(jt, perm); }, reps),
      seconds([&] { is_design_automorphism(jt, perm); }, reps));
  return 0;
}
