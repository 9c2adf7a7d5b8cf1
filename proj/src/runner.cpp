#include "qle/runner.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include "qle/election.hpp"
#include "qle/verification.hpp"

namespace qle::cli {

void RunSpec::validate() const {
  if (trials < 1) throw qsim::ContractError("trials must be >= 1");
  if (n < 1) throw qsim::ContractError(fmt::format("n must be >= 1, got {}", n));
  if (algorithm == Algorithm::Tournament && n < 2) {
    throw qsim::ContractError("a tournament needs n >= 2");
  }
  if (algorithm == Algorithm::Classical && max_rounds < 1) {
    throw qsim::ContractError("max_rounds must be >= 1");
  }
  if (n > capacity_limit(algorithm)) {
    throw qsim::CapacityError(fmt::format("{} supports n <= {}, got {}",
                                          to_string(algorithm),
                                          capacity_limit(algorithm), n));
  }
}

int capacity_limit(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::WState: return election::kMaxWStateProcessors;
    case Algorithm::Tani2: return election::kMaxTaniProcessors;
    case Algorithm::Tournament: return election::kMaxTournamentProcessors;
    case Algorithm::Classical: return 1 << 20;
  }
  return 0;
}

ElectionTranscript run_single(Algorithm algorithm, int n, Rng& rng, int max_rounds) {
  switch (algorithm) {
    case Algorithm::WState: return election::run_w_state_election(n, rng);
    case Algorithm::Tani2: return election::run_tani_election(n, rng);
    case Algorithm::Classical: return baseline::run_classical_election(n, rng, max_rounds);
    case Algorithm::Tournament: return election::run_tournament(n, rng);
  }
  throw qsim::ContractError("unknown algorithm");
}

std::vector<ElectionTranscript> run_trials(const RunSpec& spec) {
  spec.validate();
  std::vector<ElectionTranscript> transcripts;
  transcripts.reserve(spec.trials);
  for (std::size_t i = 0; i < spec.trials; ++i) {
    Rng rng(derive_trial_seed(spec.seed, i));
    transcripts.push_back(run_single(spec.algorithm, spec.n, rng, spec.max_rounds));
  }
  return transcripts;
}

std::string format_trace_line(std::size_t trial, const RoundRecord& round) {
  nlohmann::ordered_json line;
  line["trial"] = trial;
  line["round"] = round.round_index;
  line["k"] = round.k_before;
  line["branch"] = to_string(round.branch);
  line["s_bit"] = round.s_bit ? nlohmann::ordered_json(*round.s_bit) : nlohmann::ordered_json();
  line["values"] = round.measured_values;
  line["k_after"] = round.k_after;
  if (round.branch == Branch::Tournament) line["byes"] = round.byes;
  return line.dump();
}

std::string format_trace(std::span<const ElectionTranscript> transcripts) {
  std::string out;
  for (std::size_t trial = 0; trial < transcripts.size(); ++trial) {
    for (const auto& round : transcripts[trial].rounds) {
      out += format_trace_line(trial, round);
      out += '\n';
    }
  }
  return out;
}

std::string format_summary_csv(const metrics::TrialStats& stats) {
  return fmt::format(
      "algorithm,n,trials,mean_rounds,max_rounds,chi_square,budget_exhausted\n"
      "{},{},{},{:.6f},{},{:.6f},{}\n",
      to_string(stats.algorithm), stats.n, stats.trials, stats.mean_rounds,
      stats.max_rounds, stats.chi_square, stats.budget_exhausted_count);
}

std::string format_stats(const metrics::TrialStats& stats) {
  std::string histogram;
  for (std::size_t i = 0; i < stats.winner_histogram.size(); ++i) {
    if (i) histogram += ' ';
    histogram += std::to_string(stats.winner_histogram[i]);
  }
  return fmt::format(
      "algorithm: {}\nn: {}\ntrials: {}\nmean_rounds: {:.6f}\nmax_rounds: {}\n"
      "chi_square: {:.6f}\nbudget_exhausted: {}\nwinner_histogram: {}\n",
      to_string(stats.algorithm), stats.n, stats.trials, stats.mean_rounds,
      stats.max_rounds, stats.chi_square, stats.budget_exhausted_count, histogram);
}

namespace {

bool write_file(const std::filesystem::path& path, const std::string& contents,
                std::ostream& err) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (file) file << contents;
  if (!file) {
    err << "error: cannot write " << path.string() << '\n';
    return false;
  }
  return true;
}

int execute_run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  std::vector<ElectionTranscript> transcripts;
  try {
    transcripts = run_trials(spec);
  } catch (const qsim::CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const qsim::ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  const auto stats = metrics::summarize_trials(transcripts);
  if (spec.trace_path && !write_file(*spec.trace_path, format_trace(transcripts), err)) {
    return kIo;
  }
  if (spec.summary_path &&
      !write_file(*spec.summary_path, format_summary_csv(stats), err)) {
    return kIo;
  }
  out << format_stats(stats);
  return kSuccess;
}

int execute_verify(const std::optional<std::string>& range_text, bool inject_sign_flip,
                   std::ostream& out, std::ostream& err) {
  std::optional<std::pair<int, int>> range;
  if (range_text) {
    range = verification::parse_k_range(*range_text);
    if (!range) {
      err << "error: malformed --k-range '" << *range_text << "' (expected lo..hi)\n";
      return kUsage;
    }
  }
  verification::KSelection ks;
  try {
    ks = verification::select_k(range);
  } catch (const qsim::CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const qsim::ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  const auto source = inject_sign_flip ? verification::BreakerSource::with_even_sign_flip()
                                       : verification::BreakerSource::standard();
  const auto report = verification::verify_identities(ks, source);
  for (const auto& r : report.results) {
    out << fmt::format("{} {} deviation={:.3e} tol={:.0e}\n", r.passed ? "PASS" : "FAIL",
                       r.name, r.deviation, r.tolerance);
  }
  if (!report.all_passed()) {
    for (const auto& name : report.failures()) err << "identity failed: " << name << '\n';
    return kVerificationFailure;
  }
  return kSuccess;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum leader election simulator"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run a batch of seeded elections");
  std::string algorithm_name;
  RunSpec spec;
  std::string trace_path;
  std::string summary_path;
  run->add_option("--algorithm", algorithm_name, "w-state | tani2 | classical | tournament")
      ->required();
  run->add_option("--n", spec.n, "Number of processors")->required();
  run->add_option("--trials", spec.trials, "Independent trials")->capture_default_str();
  run->add_option("--seed", spec.seed, "Batch seed")->capture_default_str();
  run->add_option("--trace", trace_path, "JSONL trace output path");
  run->add_option("--summary", summary_path, "CSV summary output path");
  run->add_option("--max-rounds", spec.max_rounds, "Round budget (classical only)")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check the symmetry-breaking identities");
  std::string k_range;
  bool inject_sign_flip = false;
  verify->add_option("--k-range", k_range, "lo..hi (default: even 2..12, odd 3..9)");
  verify->add_flag("--inject-sign-flip", inject_sign_flip,
                   "Negative control: corrupt the even breaker");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
  }

  if (*run) {
    const auto algorithm = parse_algorithm(algorithm_name);
    if (!algorithm) {
      err << "error: unknown algorithm '" << algorithm_name << "'\n";
      return kUsage;
    }
    spec.algorithm = *algorithm;
    if (!trace_path.empty()) spec.trace_path = trace_path;
    if (!summary_path.empty()) spec.summary_path = summary_path;
    return execute_run(spec, out, err);
  }
  return execute_verify(k_range.empty() ? std::nullopt : std::optional<std::string>(k_range),
                        inject_sign_flip, out, err);
}

}  // namespace qle::cli
