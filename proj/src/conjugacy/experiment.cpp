#include "filiform/conjugacy/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "filiform/core/errors.hpp"
#include "filiform/core/random.hpp"
#include "filiform/core/text.hpp"
#include "filiform/metric/distance.hpp"
#include "filiform/metric/synthesis.hpp"

namespace filiform {

std::string_view to_string(ExperimentMode mode) {
  return mode == ExperimentMode::WitnessFamily ? "witness" : "random";
}

ExperimentMode parse_experiment_mode(std::string_view text) {
  if (text == "witness" || text == "witness-family") {
    return ExperimentMode::WitnessFamily;
  }
  if (text == "random" || text == "random-pairs") {
    return ExperimentMode::RandomPairs;
  }
  throw PreconditionViolation("unknown experiment mode: " + std::string(text));
}

namespace {

double nominal_ratio(std::size_t length, std::uint64_t n, std::size_t dim) {
  if (n == 0) {
    return 0.0;
  }
  return static_cast<double>(length) / std::pow(static_cast<double>(n), static_cast<double>(dim));
}

std::vector<ExperimentRecord> witness_family(std::size_t dim, std::span<const std::uint64_t> n_values,
                                             const ExperimentOptions& options) {
  std::vector<ExperimentRecord> out;
  DistanceOracle oracle(dim, options.ball);
  for (std::uint64_t n : n_values) {
    ExperimentRecord rec;
    rec.dim = dim;
    rec.n = n;
    rec.mode = ExperimentMode::WitnessFamily;
    if (dim == 1) {
      rec.u = GroupElement::a_power(1, 1, from_uint64(n));
      rec.v = rec.u;
    } else {
      BigInt central = ipow(from_uint64(n), static_cast<unsigned>(dim));
      rec.u = GroupElement::a_power(dim, dim - 1, 1);
      rec.v = multiply(rec.u, GroupElement::a_power(dim, dim, central));
    }
    auto witness = solve_conjugacy(rec.u, rec.v);
    if (!witness) {
      throw InternalError("witness family pair reported not conjugate");
    }
    rec.witness = witness->conjugator;
    rec.witness_length = witness->word_length;
    DistanceResult d = oracle.exact_distance(rec.v, options.max_exact_radius);
    if (d.found()) {
      rec.input_size = d.value();
      rec.input_size_exact = true;
    } else {
      rec.input_size = short_word(rec.v).length();
    }
    rec.ratio = nominal_ratio(rec.witness_length, n, dim);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<ExperimentRecord> random_pairs(std::size_t dim, std::span<const std::uint64_t> n_values,
                                           const ExperimentOptions& options) {
  Rng rng(options.seed);
  std::vector<ExperimentRecord> out;
  for (std::uint64_t n : n_values) {
    for (std::size_t s = 0; s < options.samples_per_n; ++s) {
      ExperimentRecord rec;
      rec.dim = dim;
      rec.n = n;
      rec.mode = ExperimentMode::RandomPairs;
      rec.u = eval_word(random_word(dim, n, rng));
      GroupElement c = eval_word(random_word(dim, n, rng));
      rec.v = conjugate(rec.u, c);
      out.push_back(std::move(rec));
    }
  }

  auto solve_range = [&out](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      ExperimentRecord& rec = out[i];
      auto witness = solve_conjugacy(rec.u, rec.v);
      if (!witness) {
        throw InternalError("constructed conjugate pair reported not conjugate");
      }
      rec.witness = witness->conjugator;
      rec.witness_length = witness->word_length;
      rec.input_size = witness->input_size;
      rec.ratio = nominal_ratio(rec.witness_length, rec.n, rec.dim);
    }
  };

  unsigned workers = std::max(1u, options.threads);
  if (workers == 1 || out.size() < 2) {
    solve_range(0, out.size());
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  std::size_t chunk = (out.size() + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = std::min(out.size(), w * chunk);
    std::size_t end = std::min(out.size(), begin + chunk);
    pool.emplace_back([&, begin, end, w] {
      try {
        solve_range(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  for (auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return out;
}

std::string format_ratio(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

}  // namespace

std::vector<ExperimentRecord> cl_experiment(std::size_t dim, std::span<const std::uint64_t> n_values,
                                            ExperimentMode mode, const ExperimentOptions& options) {
  if (dim == 0) {
    throw PreconditionViolation("cl_experiment: dimension must be at least 1");
  }
  return mode == ExperimentMode::WitnessFamily ? witness_family(dim, n_values, options)
                                               : random_pairs(dim, n_values, options);
}

void write_experiment_csv(std::ostream& out, std::span<const ExperimentRecord> records) {
  out << "dim,n,mode,u,v,witness,witness_len,input_size,ratio\n";
  for (const auto& r : records) {
    out << r.dim << ',' << r.n << ',' << to_string(r.mode) << ",\"" << format_element(r.u)
        << "\",\"" << format_element(r.v) << "\",\"" << format_element(r.witness) << "\","
        << r.witness_length << ',' << r.input_size << ',' << format_ratio(r.ratio) << '\n';
  }
}

nlohmann::json experiment_to_json(std::span<const ExperimentRecord> records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    arr.push_back({{"dim", r.dim},
                   {"n", r.n},
                   {"mode", std::string(to_string(r.mode))},
                   {"u", format_element(r.u)},
                   {"v", format_element(r.v)},
                   {"witness", format_element(r.witness)},
                   {"witness_len", r.witness_length},
                   {"input_size", r.input_size},
                   {"input_size_exact", r.input_size_exact},
                   {"ratio", r.ratio}});
  }
  return arr;
}

nlohmann::json witness_to_json(const GroupElement& u, const GroupElement& v,
                               const ConjugacyWitness& witness) {
  nlohmann::json log = nlohmann::json::array();
  for (const auto& s : witness.stage_log) {
    log.push_back({{"level", s.level},
                   {"kind", std::string(to_string(s.kind))},
                   {"t_power", to_string(s.t_power)},
                   {"ell", to_string(s.ell)},
                   {"M", to_string(s.M)},
                   {"rho", to_string(s.rho)},
                   {"lambda", to_string(s.lambda)},
                   {"mu", to_string(s.mu)}});
  }
  return {{"u", format_element(u)},
          {"v", format_element(v)},
          {"conjugator", format_element(witness.conjugator)},
          {"word", format_word(witness.word)},
          {"word_length", witness.word_length},
          {"input_size", witness.input_size},
          {"stage_log", log}};
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw PreconditionViolation("loglog_slope: need at least two paired samples");
  }
  double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) {
      throw PreconditionViolation("loglog_slope: values must be positive");
    }
    double lx = std::log(x[i]);
    double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0) {
    throw PreconditionViolation("loglog_slope: x values are all equal");
  }
  return (n * sxy - sx * sy) / denom;
}

}  // namespace filiform
