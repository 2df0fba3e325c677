// Command-line front end: counting, sampling, enumeration, tuning and
// distribution queries over Git feature-branch graphs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gitgraph/counting.hpp"
#include "gitgraph/graph.hpp"
#include "gitgraph/io.hpp"
#include "gitgraph/oracle.hpp"
#include "gitgraph/sampling.hpp"
#include "gitgraph/tuning.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

// Keep the Stirling triangle within a few hundred MB; larger k uses the
// table-free exact path.
constexpr std::int64_t kStirlingCliLimit = 1200;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_graph(const gitgraph::GitGraph& g, const std::string& format) {
  if (format == "json") return gitgraph::serialize_json(g) + "\n";
  if (format == "dot") return gitgraph::serialize_dot(g);
  if (format == "edges") return gitgraph::serialize_edges(g);
  if (format == "gitscript") return gitgraph::emit_git_script(g);
  throw UsageError("unknown format: " + format);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file: " + path);
  out << text;
}

std::uint64_t resolve_seed(std::uint64_t cli_seed, bool seed_given) {
  if (seed_given) return cli_seed;
  if (const char* env = std::getenv("GITGRAPH_SEED")) {
    const std::uint64_t seed = std::strtoull(env, nullptr, 10);
    std::cerr << "seed taken from GITGRAPH_SEED: " << seed << "\n";
    return seed;
  }
  return cli_seed;
}

// Decimal string -> exact rational, e.g. "0.25" -> 1/4.
gitgraph::big_rat parse_rational(const std::string& text) {
  const auto dot = text.find('.');
  try {
    if (dot == std::string::npos) return gitgraph::big_rat(gitgraph::big_int(text));
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    gitgraph::big_int denom = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) denom *= 10;
    return gitgraph::big_rat(gitgraph::big_int(digits), denom);
  } catch (const std::exception&) {
    throw UsageError("cannot parse number: " + text);
  }
}

int run_count(std::int64_t n, std::optional<std::int64_t> k, bool closed, bool recurrence,
              bool both) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  if (static_cast<int>(closed) + static_cast<int>(recurrence) + static_cast<int>(both) > 1)
    throw UsageError("choose at most one of --closed/--recurrence/--both");
  const bool want_rec = recurrence || both || (!closed && !both);
  const bool want_closed = closed || both;

  std::optional<gitgraph::big_int> rec_value, closed_value;
  if (want_rec) {
    const auto row = gitgraph::count_row(n);
    if (k) {
      rec_value = (*k >= 0 && *k <= n) ? row[static_cast<std::size_t>(*k)] : 0;
    } else {
      gitgraph::big_int total = 0;
      for (const auto& v : row) total += v;
      rec_value = total;
    }
  }
  if (want_closed) {
    gitgraph::StirlingTable stirling(n);
    if (k) {
      closed_value = (*k >= 0 && *k <= n)
                         ? gitgraph::count_closed_form(n, *k, stirling)
                         : gitgraph::big_int(0);
    } else {
      gitgraph::big_int total = 0;
      for (std::int64_t kk = 0; kk <= n; ++kk)
        total += gitgraph::count_closed_form(n, kk, stirling);
      closed_value = total;
    }
  }
  if (rec_value) std::cout << *rec_value << "\n";
  if (closed_value) std::cout << *closed_value << "\n";
  if (both && *rec_value != *closed_value) {
    std::cerr << "counting routes disagree at n=" << n << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

int run_sample(const std::string& method, std::optional<std::int64_t> n,
               std::optional<std::int64_t> k, std::optional<std::int64_t> f, double alpha,
               double target_size, std::uint64_t seed, std::int64_t count,
               const std::string& format, const std::string& output,
               std::optional<std::int64_t> min_size, std::optional<std::int64_t> max_size) {
  if (count < 1) throw UsageError("--count must be at least 1");
  if ((min_size || max_size) && method != "boltzmann")
    throw UsageError("size window applies only to --method boltzmann");

  gitgraph::RandomSource rng(seed);
  std::ostringstream out;

  if (method == "rejection" || method == "exact") {
    if (!n) throw UsageError("--n is required for " + method + " sampling");
    if (method == "rejection" && !k) throw UsageError("--k is required for rejection sampling");
    if (f && method != "exact") throw UsageError("--f applies only to exact sampling");
    if (method == "rejection" && !gitgraph::rejection_regime_ok(*n, *k))
      std::cerr << "warning: k > 3*sqrt(n); the rejection sampler may need many trials\n";

    std::optional<gitgraph::StirlingTable> stirling;
    std::optional<gitgraph::CountTable> counts;
    if (method == "exact") {
      if (!k) {
        // Size-only sampling needs the counting row to draw k.
        counts.emplace(*n);
        stirling.emplace(std::min(*n, kStirlingCliLimit));
      } else if (*k <= kStirlingCliLimit || f) {
        stirling.emplace(*k);
      } else {
        stirling.emplace(0);  // forces the table-free path
      }
    }
    for (std::int64_t i = 0; i < count; ++i) {
      gitgraph::GitGraph g;
      if (method == "rejection")
        g = gitgraph::sample_rejection(*n, *k, rng).graph;
      else if (k)
        g = gitgraph::sample_exact(*n, *k, f, rng, *stirling);
      else
        g = gitgraph::sample_exact_size_only(*n, *counts, *stirling, rng);
      out << format_graph(g, format);
    }
  } else if (method == "boltzmann") {
    gitgraph::BoltzmannParams params;
    if (alpha > 0.0 && target_size > 0.0) {
      params.u = gitgraph::u_of_alpha(alpha);
      params.z = gitgraph::solve_z(target_size, params.u);
    } else {
      throw UsageError("boltzmann sampling needs --alpha and --size");
    }
    std::cerr << "boltzmann parameters: z=" << params.z << " u=" << params.u << "\n";
    for (std::int64_t i = 0; i < count; ++i) {
      gitgraph::GitGraph g;
      for (;;) {
        g = gitgraph::sample_boltzmann(params, rng);
        const std::int64_t size = g.size();
        if (min_size && size < *min_size) continue;
        if (max_size && size > *max_size) continue;
        break;
      }
      out << format_graph(g, format);
    }
  } else {
    throw UsageError("unknown method: " + method);
  }
  write_output(out.str(), output);
  return kExitOk;
}

int run_enumerate(std::int64_t n, std::int64_t k, const std::string& format,
                  const std::string& output) {
  auto graphs = gitgraph::enumerate_git_graphs_full(n, k);
  std::ostringstream out;
  for (const auto& g : graphs) out << format_graph(g, format);
  write_output(out.str(), output);
  std::cerr << "enumerated " << graphs.size() << " graphs\n";
  return kExitOk;
}

int run_tune(double alpha, double target_size) {
  const double u = gitgraph::u_of_alpha(alpha);
  const double rho = gitgraph::rho_of_u(u);
  const double z = gitgraph::solve_z(target_size, u);
  std::cout << "u " << u << "\n";
  std::cout << "rho " << rho << "\n";
  std::cout << "z " << z << "\n";
  std::cout << "expected_size " << gitgraph::expected_size(z, u) << "\n";
  std::cout << "expected_black " << gitgraph::expected_black(z, u) << "\n";
  return kExitOk;
}

int run_stats(const std::string& dist, std::int64_t n, std::optional<std::int64_t> k,
              const std::string& u_text, const std::string& output) {
  std::ostringstream out;
  out.precision(17);
  if (dist == "k") {
    const auto row = gitgraph::count_row(n);
    const auto d = u_text.empty()
                       ? gitgraph::k_distribution_uniform(row)
                       : gitgraph::k_distribution_labeled(row, parse_rational(u_text));
    out << "k,probability\n";
    for (std::size_t kk = 0; kk < d.prob.size(); ++kk)
      out << kk << "," << d.prob[kk].convert_to<double>() << "\n";
    out << "# mean " << d.mean.convert_to<double>() << "\n";
    out << "# variance " << d.variance.convert_to<double>() << "\n";
  } else if (dist == "f") {
    if (!k) throw UsageError("--k is required for the f distribution");
    gitgraph::StirlingTable stirling(*k);
    const auto weights = gitgraph::free_vertex_weights(n, *k, stirling);
    gitgraph::big_int total = 0;
    for (const auto& [f, w] : weights) total += w;
    out << "f,weight,probability\n";
    for (const auto& [f, w] : weights)
      out << f << "," << w << ","
          << gitgraph::big_rat(w, total).convert_to<double>() << "\n";
  } else {
    throw UsageError("--dist must be k or f");
  }
  write_output(out.str(), output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting and random generation of Git feature-branch graphs"};
  app.require_subcommand(1);

  // count
  auto* count_cmd = app.add_subcommand("count", "count Git graphs");
  std::int64_t count_n = 0;
  std::optional<std::int64_t> count_k;
  bool closed = false, recurrence = false, both = false;
  count_cmd->add_option("--n", count_n, "size")->required();
  count_cmd->add_option("--k", count_k, "black vertices (row sum when omitted)");
  count_cmd->add_flag("--closed", closed, "closed form only");
  count_cmd->add_flag("--recurrence", recurrence, "recurrence only (default)");
  count_cmd->add_flag("--both", both, "both routes; exit nonzero on mismatch");

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "draw random Git graphs");
  std::string method, format = "json", output;
  std::optional<std::int64_t> sample_n, sample_k, sample_f, min_size, max_size;
  double alpha = 0.0, target_size = 0.0;
  std::uint64_t seed = 1;
  std::int64_t sample_count = 1;
  sample_cmd->add_option("--method", method, "rejection | exact | boltzmann")->required();
  sample_cmd->add_option("--n", sample_n, "size");
  sample_cmd->add_option("--k", sample_k, "black vertices");
  sample_cmd->add_option("--f", sample_f, "free vertices (exact method)");
  sample_cmd->add_option("--alpha", alpha, "target black ratio (boltzmann)");
  sample_cmd->add_option("--size", target_size, "target expected size (boltzmann)");
  auto* seed_opt = sample_cmd->add_option("--seed", seed, "random seed (default 1)");
  sample_cmd->add_option("--count", sample_count, "number of samples");
  sample_cmd->add_option("--format", format, "json | dot | edges | gitscript");
  sample_cmd->add_option("--output", output, "output file (stdout when omitted)");
  sample_cmd->add_option("--min-size", min_size, "resample below this size (boltzmann)");
  sample_cmd->add_option("--max-size", max_size, "resample above this size (boltzmann)");

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "list all graphs with (n, k)");
  std::int64_t enum_n = 0, enum_k = 0;
  std::string enum_format = "json", enum_output;
  enum_cmd->add_option("--n", enum_n, "size")->required();
  enum_cmd->add_option("--k", enum_k, "black vertices")->required();
  enum_cmd->add_option("--format", enum_format, "json | dot | edges | gitscript");
  enum_cmd->add_option("--output", enum_output, "output file");

  // tune
  auto* tune_cmd = app.add_subcommand("tune", "Boltzmann parameters for a target");
  double tune_alpha = 0.0, tune_size = 0.0;
  tune_cmd->add_option("--alpha", tune_alpha, "target black ratio in (0, 1/2)")->required();
  tune_cmd->add_option("--size", tune_size, "target expected size")->required();

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "exact distributions as CSV");
  std::string stats_dist, stats_u, stats_output;
  std::int64_t stats_n = 0;
  std::optional<std::int64_t> stats_k;
  stats_cmd->add_option("--dist", stats_dist, "k | f")->required();
  stats_cmd->add_option("--n", stats_n, "size")->required();
  stats_cmd->add_option("--k", stats_k, "black vertices (f distribution)");
  stats_cmd->add_option("--u", stats_u, "labeled-main weight (k distribution)");
  stats_cmd->add_option("--output", stats_output, "output file");

  try {
    app.parse(argc, argv);
    if (count_cmd->parsed()) return run_count(count_n, count_k, closed, recurrence, both);
    if (sample_cmd->parsed())
      return run_sample(method, sample_n, sample_k, sample_f, alpha, target_size,
                        resolve_seed(seed, seed_opt->count() > 0), sample_count, format,
                        output, min_size, max_size);
    if (enum_cmd->parsed()) return run_enumerate(enum_n, enum_k, enum_format, enum_output);
    if (tune_cmd->parsed()) return run_tune(tune_alpha, tune_size);
    if (stats_cmd->parsed())
      return run_stats(stats_dist, stats_n, stats_k, stats_u, stats_output);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
