#include "filiform/cli/app.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "filiform/conjugacy/experiment.hpp"
#include "filiform/conjugacy/solver.hpp"
#include "filiform/core/errors.hpp"
#include "filiform/core/text.hpp"
#include "filiform/metric/ball_io.hpp"
#include "filiform/metric/distance.hpp"
#include "filiform/metric/synthesis.hpp"
#include "filiform/structure/centralizer.hpp"
#include "filiform/structure/roots.hpp"
#include "filiform/structure/zeta.hpp"

namespace filiform::cli {

std::size_t parse_memory_size(const std::string& text) {
  if (text.empty()) {
    throw PreconditionViolation("empty memory size");
  }
  std::size_t pos = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  if (pos == 0) {
    throw PreconditionViolation("memory size must start with digits: " + text);
  }
  std::size_t value = std::stoull(text.substr(0, pos));
  std::string suffix = text.substr(pos);
  std::transform(suffix.begin(), suffix.end(), suffix.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  std::size_t scale = 1;
  if (suffix.empty() || suffix == "B") {
    scale = 1;
  } else if (suffix == "K" || suffix == "KIB") {
    scale = std::size_t{1} << 10;
  } else if (suffix == "M" || suffix == "MIB") {
    scale = std::size_t{1} << 20;
  } else if (suffix == "G" || suffix == "GIB") {
    scale = std::size_t{1} << 30;
  } else {
    throw PreconditionViolation("unknown memory size suffix: " + suffix);
  }
  if (value == 0) {
    throw PreconditionViolation("memory cap must be positive");
  }
  return value * scale;
}

namespace {

struct Outcome {
  int code = kExitOk;
};

GroupElement read_element(const std::string& text, const Config& cfg) {
  GroupElement g = parse_element(text);
  if (cfg.dim != 0 && g.dim() != cfg.dim) {
    throw DimensionMismatch(cfg.dim, g.dim());
  }
  return g;
}

BallOptions ball_options(const Config& cfg) {
  return BallOptions{cfg.memory_cap_bytes, std::max(1u, cfg.threads)};
}

std::string bigint_text(const BigInt& x) { return to_string(x); }

int cmd_nf(const Config& cfg, const std::string& word_text, std::ostream& out) {
  if (cfg.dim == 0) {
    throw PreconditionViolation("nf needs -d/--dim");
  }
  GroupElement g = eval_word(parse_word(word_text, cfg.dim));
  if (cfg.format == OutputFormat::Json) {
    out << nlohmann::json{{"element", format_element(g)}}.dump() << '\n';
  } else {
    out << format_element(g) << '\n';
  }
  return kExitOk;
}

int cmd_dist(const Config& cfg, const std::string& element_text, std::ostream& out) {
  GroupElement g = read_element(element_text, cfg);
  std::filesystem::path cached = ball_cache_path(cfg.cache_dir, g.dim(), cfg.max_radius);
  std::optional<DistanceOracle> oracle;
  if (std::filesystem::exists(cached)) {
    oracle.emplace(load_ball(cached), ball_options(cfg));
  } else {
    oracle.emplace(g.dim(), ball_options(cfg));
  }
  DistanceResult d = oracle->exact_distance(g, cfg.max_radius);
  if (d.found()) {
    if (cfg.format == OutputFormat::Json) {
      out << nlohmann::json{{"exact", d.value()}}.dump() << '\n';
    } else {
      out << d.value() << '\n';
    }
    return kExitOk;
  }
  BigInt lower = std::max(size_lower_bound(g), BigInt(static_cast<unsigned long>(d.lower_bound())));
  std::size_t upper = short_word(g).length();
  if (cfg.format == OutputFormat::Json) {
    out << nlohmann::json{{"lower", bigint_text(lower)}, {"upper", upper}}.dump() << '\n';
  } else {
    out << "bounds " << bigint_text(lower) << ' ' << upper << '\n';
  }
  return kExitNegative;
}

int cmd_conj(const Config& cfg, const std::string& u_text, const std::string& v_text,
             std::ostream& out) {
  GroupElement u = read_element(u_text, cfg);
  GroupElement v = read_element(v_text, cfg);
  if (u.dim() != v.dim()) {
    throw DimensionMismatch(u.dim(), v.dim());
  }
  auto witness = solve_conjugacy(u, v);
  if (cfg.format == OutputFormat::Json) {
    nlohmann::json j{{"verdict", witness ? "CONJUGATE" : "NOT_CONJUGATE"}};
    if (witness) {
      j["witness"] = witness_to_json(u, v, *witness);
    }
    out << j.dump() << '\n';
  } else {
    out << (witness ? "CONJUGATE" : "NOT_CONJUGATE") << '\n';
    if (witness) {
      out << witness_to_json(u, v, *witness).dump() << '\n';
    }
  }
  return witness ? kExitOk : kExitNegative;
}

int cmd_root(const Config& cfg, const std::string& element_text, std::uint64_t p,
             std::ostream& out) {
  GroupElement g = read_element(element_text, cfg);
  if (p == 0) {
    throw PreconditionViolation("root exponent must be positive");
  }
  auto h = root_exact(g, from_uint64(p));
  if (cfg.format == OutputFormat::Json) {
    nlohmann::json j{{"root", h ? nlohmann::json(format_element(*h)) : nlohmann::json(nullptr)}};
    out << j.dump() << '\n';
  } else {
    out << (h ? format_element(*h) : std::string("NO_ROOT")) << '\n';
  }
  return h ? kExitOk : kExitNegative;
}

int cmd_cent(const Config& cfg, const std::string& element_text, std::ostream& out) {
  GroupElement g = read_element(element_text, cfg);
  CentralizerDescription c = centralizer(g);
  std::optional<RootDecomposition> dec;
  if (!g.in_lattice()) {
    dec = max_root_mod_center(g);
  }
  if (cfg.format == OutputFormat::Json) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& x : c.generators) {
      gens.push_back(format_element(x));
    }
    nlohmann::json j{{"kind", std::string(to_string(c.kind))}, {"generators", gens}};
    if (dec) {
      j["root_exponent"] = bigint_text(dec->exponent);
      j["central_offset"] = bigint_text(dec->central_offset);
    }
    out << j.dump() << '\n';
  } else {
    out << to_string(c.kind) << '\n';
    for (const auto& x : c.generators) {
      out << format_element(x) << '\n';
    }
  }
  return kExitOk;
}

int cmd_zeta(const Config& cfg, const std::string& g_text, const std::string& x_text,
             std::ostream& out) {
  GroupElement g = read_element(g_text, cfg);
  GroupElement x = read_element(x_text, cfg);
  BigInt m = zeta(g, x);
  if (cfg.format == OutputFormat::Json) {
    nlohmann::json j{{"zeta", bigint_text(m)}};
    if (!g.in_lattice()) {
      ZetaData z = zeta_image(g);
      j["p"] = bigint_text(z.p);
      j["q"] = bigint_text(z.q);
      j["r"] = bigint_text(z.r);
      j["e"] = bigint_text(z.e);
      j["image_generator"] = bigint_text(z.image_generator);
    }
    out << j.dump() << '\n';
  } else {
    out << bigint_text(m) << '\n';
  }
  return kExitOk;
}

int cmd_ball(const Config& cfg, const std::string& csv_path, std::ostream& out) {
  if (cfg.dim == 0) {
    throw PreconditionViolation("ball needs -d/--dim");
  }
  std::filesystem::path path = ball_cache_path(cfg.cache_dir, cfg.dim, cfg.max_radius);
  BallCache ball = std::filesystem::exists(path)
                       ? load_ball(path)
                       : enumerate_ball(cfg.dim, cfg.max_radius, ball_options(cfg));
  if (!std::filesystem::exists(path)) {
    save_ball(ball, path);
  }
  if (!csv_path.empty()) {
    if (csv_path == "-") {
      export_ball_csv(ball, out);
      return kExitOk;
    }
    std::ofstream csv(csv_path);
    if (!csv) {
      throw Error("cannot open " + csv_path + " for writing");
    }
    export_ball_csv(ball, csv);
  }
  if (cfg.format == OutputFormat::Json) {
    out << nlohmann::json{{"dim", ball.dim()},
                          {"radius", ball.radius()},
                          {"size", ball.size()},
                          {"path", path.string()}}
               .dump()
        << '\n';
  } else {
    out << "dim " << ball.dim() << " radius " << ball.radius() << " size " << ball.size()
        << " file " << path.string() << '\n';
  }
  return kExitOk;
}

int cmd_clx(const Config& cfg, const std::string& family, const std::vector<std::uint64_t>& ns,
            std::size_t samples, std::ostream& out) {
  if (cfg.dim == 0) {
    throw PreconditionViolation("clx needs -d/--dim");
  }
  ExperimentOptions opts;
  opts.seed = cfg.seed;
  opts.samples_per_n = samples;
  opts.max_exact_radius = cfg.max_radius;
  opts.threads = std::max(1u, cfg.threads);
  opts.ball = ball_options(cfg);
  auto records = cl_experiment(cfg.dim, ns, parse_experiment_mode(family), opts);
  if (cfg.format == OutputFormat::Json) {
    out << experiment_to_json(records).dump() << '\n';
  } else {
    write_experiment_csv(out, records);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic, word metric and conjugacy in the model filiform groups", "filiform"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string memory_cap = "2G";
  std::string format = "plain";
  app.add_option("-d,--dim", cfg.dim, "Group dimension d of G_d")->envname("FILIFORM_DIM");
  app.add_option("--max-radius", cfg.max_radius, "Ball / search radius")
      ->envname("FILIFORM_MAX_RADIUS");
  app.add_option("--memory-cap", memory_cap, "Ball memory cap, e.g. 512M or 2G")
      ->envname("FILIFORM_MEMORY_CAP");
  app.add_option("--cache-dir", cfg.cache_dir, "Ball cache directory")
      ->envname("FILIFORM_CACHE_DIR");
  app.add_option("--seed", cfg.seed, "Random seed")->envname("FILIFORM_SEED");
  app.add_option("--format", format, "plain, csv or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->envname("FILIFORM_FORMAT");
  app.add_option("--threads", cfg.threads, "Worker threads")->envname("FILIFORM_THREADS");

  std::string word_text;
  auto* nf = app.add_subcommand("nf", "Normal form of a word");
  nf->add_option("word", word_text, "Letters t T a1 A1 ...")->required();

  std::string element_text;
  auto* dist = app.add_subcommand("dist", "Exact word length, or certified bounds");
  dist->add_option("element", element_text, "Element \"d; r; p1,...,pd\"")->required();

  std::string u_text;
  std::string v_text;
  auto* conj = app.add_subcommand("conj", "Decide conjugacy and print a witness");
  conj->add_option("u", u_text)->required();
  conj->add_option("v", v_text)->required();

  std::uint64_t root_p = 0;
  auto* root = app.add_subcommand("root", "p-th root");
  root->add_option("element", element_text)->required();
  root->add_option("-p", root_p, "Root exponent")->required();

  auto* cent = app.add_subcommand("cent", "Centralizer description");
  cent->add_option("element", element_text)->required();

  std::string g_text;
  std::string x_text;
  auto* zeta_cmd = app.add_subcommand("zeta", "zeta_g(x) for commuting g, x in G_d");
  zeta_cmd->add_option("--g", g_text)->required();
  zeta_cmd->add_option("--x", x_text)->required();

  std::string csv_path;
  auto* ball = app.add_subcommand("ball", "Enumerate (or load) and cache a ball");
  ball->add_option("--export-csv", csv_path, "Write r,p_1..p_d,dist CSV ('-' for stdout)");

  std::string family = "witness";
  std::vector<std::uint64_t> ns;
  std::size_t samples = 100;
  auto* clx = app.add_subcommand("clx", "Conjugator length experiment (CSV)");
  clx->add_option("--family", family, "witness or random")->required();
  clx->add_option("--n", ns, "Comma-separated n values")->delimiter(',')->required();
  clx->add_option("--samples", samples, "Random pairs per n");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) {
    reversed.pop_back();  // program name
  }
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    cfg.memory_cap_bytes = parse_memory_size(memory_cap);
    cfg.format = format == "json" ? OutputFormat::Json
                                  : (format == "csv" ? OutputFormat::Csv : OutputFormat::Plain);
    if (nf->parsed()) {
      return cmd_nf(cfg, word_text, out);
    }
    if (dist->parsed()) {
      return cmd_dist(cfg, element_text, out);
    }
    if (conj->parsed()) {
      return cmd_conj(cfg, u_text, v_text, out);
    }
    if (root->parsed()) {
      return cmd_root(cfg, element_text, root_p, out);
    }
    if (cent->parsed()) {
      return cmd_cent(cfg, element_text, out);
    }
    if (zeta_cmd->parsed()) {
      return cmd_zeta(cfg, g_text, x_text, out);
    }
    if (ball->parsed()) {
      return cmd_ball(cfg, csv_path, out);
    }
    if (clx->parsed()) {
      return cmd_clx(cfg, family, ns, samples, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, out, err);
}

}  // namespace filiform::cli
