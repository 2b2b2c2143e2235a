// Serial reference vs OpenMP kernels.  Usage: gaussoid_bench [workers]
#include <chrono>
#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "gaussoid/enumerate.hpp"
#include "gaussoid/qgraph.hpp"

using namespace gaussoid;

namespace {

template <typename F>
double time_it(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::cout << name << "  serial " << serial << " s  parallel " << parallel << " s  speedup " << serial / parallel
            << (same ? "" : "  MISMATCH") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const int workers = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  std::cout << "workers: " << workers << '\n';

  for (auto [n, letters] : {std::pair{6, "LUBF"}, std::pair{5, "ELUB"}}) {
    const ClassSpec spec = ClassSpec::parse(letters);
    CountResult s, p;
    const double ts = time_it([&] { s = count_class_serial(n, spec); });
    SearchOptions opts;
    opts.workers = workers;
    const double tp = time_it([&] { p = count_class(n, spec, opts); });
    row("count_class(" + std::to_string(n) + "," + letters + ") = " + s.count.get_str(), ts, tp, s.count == p.count);
  }

  for (int n : {7, 8}) {
    const auto params = QGraphParams::make(n, 3, 3, 2);
    std::vector<std::uint64_t> s, p;
    const double ts = time_it([&] { s = brute_force_degrees_serial(params); });
    const double tp = time_it([&] { p = brute_force_degrees(params, workers); });
    row("brute_force_degrees(Q(" + std::to_string(n) + ",3,3,2))", ts, tp, s == p);
  }

  {
    std::uint64_t s = 0, p = 0;
    const double ts = time_it([&] { s = brute_force_count(4, ClassSpec::all(), 1); });
    const double tp = time_it([&] { p = brute_force_count(4, ClassSpec::all(), workers); });
    row("brute_force_count(4,ELUBF) = " + std::to_string(s), ts, tp, s == p);
  }
}
