// Compares the serial reference paths against the OpenMP kernels: Monte
// Carlo batches and the level-parallel board-scan evaluation. Also asserts
// the outputs agree, since speed with different answers would be worthless.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "randomplay/analysis.hpp"
#include "randomplay/exact_engine.hpp"
#include "randomplay/montecarlo.hpp"

using namespace randomplay;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::int64_t games = argc > 1 ? std::atoll(argv[1]) : 500000;
  const std::int64_t scan_cells = argc > 2 ? std::atoll(argv[2]) : 20;

  SimConfig config;
  config.board = ChompBoard({8, 8, 8});
  config.num_games = games;
  config.seed = 42;

  std::printf("monte carlo: chomp %s, %lld games\n", config.board.to_string().c_str(),
              static_cast<long long>(games));
  auto start = std::chrono::steady_clock::now();
  const SimReport serial = run_simulation_serial(config);
  const double serial_time = seconds_since(start);
  std::printf("  serial reference   %8.3fs  (%.0f games/s)\n", serial_time,
              games / serial_time);

  for (int threads : {1, 2, 4, 8}) {
    start = std::chrono::steady_clock::now();
    const SimReport parallel = run_simulation(config, threads);
    const double elapsed = seconds_since(start);
    const bool same = report_to_json(parallel).dump() == report_to_json(serial).dump();
    std::printf("  openmp %d thread%s   %8.3fs  (%.0f games/s)  %s\n", threads,
                threads == 1 ? " " : "s", elapsed, games / elapsed,
                same ? "bytes match serial" : "MISMATCH");
    if (!same) return 1;
  }

  std::printf("board scan: exact win probabilities, all boards <= %lld cells\n",
              static_cast<long long>(scan_cells));
  start = std::chrono::steady_clock::now();
  EvalCache serial_cache;
  for (std::int64_t n = 0; n <= scan_cells; ++n)
    for (const ChompBoard& board : enumerate_boards(n)) evaluate(board, serial_cache);
  const double scan_serial = seconds_since(start);
  std::printf("  serial work-stack  %8.3fs  (%zu positions)\n", scan_serial,
              serial_cache.size());

  for (int threads : {1, 2, 4, 8}) {
    start = std::chrono::steady_clock::now();
    EvalCache cache;
    warm_cache_levelwise(cache, scan_cells, threads);
    const double elapsed = seconds_since(start);
    bool same = cache.size() == serial_cache.size();
    for (std::int64_t n = 0; same && n <= scan_cells; ++n)
      for (const ChompBoard& board : enumerate_boards(n))
        same = same && cache.find(board)->win_prob == serial_cache.find(board)->win_prob;
    std::printf("  openmp %d thread%s   %8.3fs  %s\n", threads,
                threads == 1 ? " " : "s", elapsed,
                same ? "values match serial" : "MISMATCH");
    if (!same) return 1;
  }
  return 0;
}
