#ifndef FILIFORM_CONJUGACY_EXPERIMENT_HPP
#define FILIFORM_CONJUGACY_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "filiform/conjugacy/solver.hpp"
#include "filiform/metric/ball.hpp"

namespace filiform {

enum class ExperimentMode {
  // (a_{d-1}, a_{d-1} a_d^{n^d}): every conjugator has t-exponent n^d, so
  // t^{n^d} is a minimal conjugator.
  WitnessFamily,
  // u a random word of length n, v = c^{-1} u c for a random word c of
  // length n; the solver's witness is measured.
  RandomPairs,
};

std::string_view to_string(ExperimentMode mode);
ExperimentMode parse_experiment_mode(std::string_view text);

struct ExperimentOptions {
  std::uint64_t seed = 1;
  std::size_t samples_per_n = 100;
  // Witness family input sizes are exact word lengths up to this radius,
  // otherwise the synthesized word length (an upper bound).
  std::uint32_t max_exact_radius = 12;
  unsigned threads = 1;
  BallOptions ball;
};

struct ExperimentRecord {
  std::size_t dim = 1;
  std::uint64_t n = 0;
  ExperimentMode mode = ExperimentMode::WitnessFamily;
  GroupElement u{1};
  GroupElement v{1};
  GroupElement witness{1};
  std::size_t witness_length = 0;
  std::size_t input_size = 0;
  bool input_size_exact = false;
  double ratio = 0.0;  // witness_length / n^dim
};

// Records appear in input order (n_values, then sample index) regardless of
// the thread count; random pairs depend only on the seed.
std::vector<ExperimentRecord> cl_experiment(std::size_t dim, std::span<const std::uint64_t> n_values,
                                            ExperimentMode mode,
                                            const ExperimentOptions& options = {});

// Columns: dim,n,mode,u,v,witness,witness_len,input_size,ratio
void write_experiment_csv(std::ostream& out, std::span<const ExperimentRecord> records);
nlohmann::json experiment_to_json(std::span<const ExperimentRecord> records);

// {u, v, conjugator, word, stage_log[]}
nlohmann::json witness_to_json(const GroupElement& u, const GroupElement& v,
                               const ConjugacyWitness& witness);

// Least-squares slope of log(y) against log(x). Requires positive values.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace filiform

#endif  // FILIFORM_CONJUGACY_EXPERIMENT_HPP
