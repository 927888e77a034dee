#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ppr/graph.hpp"

namespace ppr {

enum class Algorithm { localpush, edgepush, edgepush_scan, power, montecarlo, fora };
enum class ErrorMode { l1, additive };

Algorithm parse_algorithm(const std::string& name);
const char* algorithm_name(Algorithm a);

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::localpush;
  ErrorMode error_mode = ErrorMode::l1;
  double alpha = 0.2;
  std::vector<double> grid;          // ε / r_max / L / δ, one row group each
  std::size_t query_count = 10;
  SourceMode source_mode = SourceMode::degree_proportional;
  std::vector<NodeId> explicit_sources;  // overrides sampling when nonempty
  std::size_t k = 50;
  std::uint64_t seed = 0;
  double fora_push_theta = 1e-4;
  double eps_r = 0.5;                // walk-budget sizing for montecarlo/fora
  double scan_fraction = 0.125;      // edgepush-scan switch point
  int truth_iterations = 100;
  std::uint64_t truth_cap_edges = 200000000;  // beyond this: bound-only rows
  unsigned threads = 1;
};

extern const char* const kCsvHeader;

// Runs the full grid × query matrix, emitting one CSV row per query and one
// averaged row per grid value. Ground truth is computed once per source.
// Wall time covers the solver call only.
void run_experiment(const WeightedGraph& g, const ExperimentConfig& cfg,
                    std::ostream& out);

// Locale-independent shortest round-trip formatting used for all CSV fields.
std::string format_double(double x);

}  // namespace ppr
