// Regenerates data/c_ceiling_v1.json: for every degree pair up to --max-degree,
// ten times the largest ||R|| delta^2 / max(1, ||A||, ||B||) over a seeded
// ensemble of unit-disk coefficient pairs.
#include <algorithm>
#include <atomic>
#include <iostream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bezout/backends.hpp"
#include "bezout/harness.hpp"
#include "bezout/json_io.hpp"
#include "bezout/roots.hpp"
#include "bezout/separation.hpp"
#include "bezout/sylvester.hpp"

using namespace bezout;

int main(int argc, char** argv) {
  CLI::App app{"Generate the empirical certification ceiling table"};
  int size = 10000;
  int max_degree = 8;
  std::uint64_t seed = 20240601;
  double multiplier = 10.0;
  double delta_floor = 1e-6;
  std::string out = "c_ceiling_v1.json";
  app.add_option("--size", size, "Instances per degree pair");
  app.add_option("--max-degree", max_degree);
  app.add_option("--seed", seed);
  app.add_option("--multiplier", multiplier);
  app.add_option("--delta-floor", delta_floor, "Skip numerically degenerate pairs");
  app.add_option("--out", out);
  CLI11_PARSE(app, argc, argv);

  struct Cell {
    int N, K;
    double max_ratio = 0.0;
    int used = 0;
  };
  std::vector<Cell> cells;
  for (int N = 1; N <= max_degree; ++N)
    for (int K = 1; K <= max_degree; ++K) cells.push_back({N, K});

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t c = next++; c < cells.size(); c = next++) {
      Cell& cell = cells[c];
      for (int i = 0; i < size; ++i) {
        // Degrees are pinned, so the pair index folds in the cell.
        const std::uint64_t index = (static_cast<std::uint64_t>(cell.N) << 40) |
                                    (static_cast<std::uint64_t>(cell.K) << 32) | static_cast<std::uint64_t>(i);
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(index >> 32),
                          static_cast<std::uint32_t>(index)};
        std::mt19937_64 rng(seq);
        const Polynomial A = random_polynomial(rng, cell.N);
        const Polynomial B = random_polynomial(rng, cell.K);
        try {
          const double d = delta_value(A, B, find_roots(A), find_roots(B)).value;
          if (!(d >= delta_floor)) continue;
          const BezoutSolution s = solve_rhs(build_sylvester(A, B), Polynomial{1.0});
          const MainBoundCertificate m = certify_main_bound(A, B, s, d, 1.0);
          cell.max_ratio = std::max({cell.max_ratio, m.ratio_R, m.ratio_S});
          ++cell.used;
        } catch (const std::exception&) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  nlohmann::json entries = nlohmann::json::array();
  for (const auto& c : cells)
    entries.push_back({{"N", c.N}, {"K", c.K}, {"instances", c.used}, {"max_ratio", c.max_ratio},
                       {"ceiling", multiplier * c.max_ratio}});
  const nlohmann::json table = {
      {"version", "c_ceiling_v1"},
      {"note", "empirical: multiplier x max over a seeded ensemble of ||R|| delta^2 / max(1, ||A||, ||B||); "
               "not a proven constant"},
      {"generator", "bezout_ceiling_table"},
      {"seed", seed},
      {"instances_per_pair", size},
      {"delta_floor", delta_floor},
      {"multiplier", multiplier},
      {"entries", entries},
  };
  save_json(table, out);
  std::cout << "wrote " << out << " (" << cells.size() << " degree pairs)\n";
  return 0;
}
