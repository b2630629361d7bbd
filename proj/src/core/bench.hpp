#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "linalg.hpp"
#include "reduce.hpp"

namespace codered {

enum class Algorithm { Lll, Bkz, Slide, FullBackward, Selective, OneBlock, ApproxGriesmer };

std::string algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

struct AlgorithmSpec {
  Algorithm algorithm = Algorithm::Lll;
  std::size_t beta = 2;
  std::optional<std::size_t> tau;  // full backward; default min(k, 3 * ceil(log_q n))
  bool then_lll = false;           // run LLL on the output afterwards
  ShortestOracle::Kind oracle = ShortestOracle::Kind::Exhaustive;
  unsigned lb_p = 2;
  std::size_t lb_iterations = 0;  // 0 = 50 * block dimension
  std::size_t skip_threshold = 0;
  std::optional<std::uint64_t> max_iterations;
};

// ceil(log_q n) computed exactly on integers.
std::size_t ceil_log(std::uint32_t q, std::size_t n);

struct RandomCode {
  CodeBasis basis;        // systematized
  std::size_t attempts;   // samples drawn until one had full rank
};

// Uniform k x n matrix resampled until full rank, then systematized.
RandomCode sample_random_code(std::uint32_t q, std::size_t k, std::size_t n, std::uint64_t seed);
Matrix sample_uniform_matrix(const Field& f, std::size_t k, std::size_t n, std::mt19937_64& rng);

struct RunOutcome {
  CodeBasis basis;
  ReductionStats stats;
  std::size_t oracle_calls = 0;
  std::optional<Word> word;  // one-block output
  double seconds = 0;
};

// Runs one algorithm on a proper basis. Selective reduction works on the
// basis rows as a raw matrix.
RunOutcome run_algorithm(const Matrix& input, const AlgorithmSpec& spec, std::uint64_t seed);

nlohmann::json algorithm_json(const AlgorithmSpec& spec);
nlohmann::json reduction_report(const RunOutcome& out, const AlgorithmSpec& spec, std::uint64_t seed);

struct ExperimentConfig {
  std::uint32_t q = 2;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0 = hardware concurrency
  std::size_t max_resamples = 100;
  AlgorithmSpec algorithm;
  std::string json_path;
  std::string csv_path;
};

ExperimentConfig load_experiment_config(const std::string& toml_path);
ExperimentConfig parse_experiment_config(const std::string& toml_text);
// Sets one field by its flat key ("q", "alg", "beta", "json", ...).
void set_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value);

struct TrialResult {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string failure;
  std::size_t resamples = 0;
  std::vector<std::size_t> profile;         // as produced
  std::vector<std::size_t> sorted_profile;  // descending
  std::size_t k1 = 0;       // #{i : l_i > 1}
  std::size_t k1_star = 0;  // largest 1-based i with l_i > 1
  ReductionStats stats;
  double seconds = 0;
  bool checks_passed = false;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialResult> trials;
  std::vector<double> mean_sorted_profile;
  std::vector<double> two_sigma;  // twice the sample standard deviation
  double l1_mean = 0, l1_two_sigma = 0;
  double k1_mean = 0, k1_two_sigma = 0;
  double k1_star_mean = 0, k1_star_two_sigma = 0;
  double seconds_mean = 0;
  std::size_t failures = 0;
};

// Trial t uses seed config.seed + t; results do not depend on thread count.
ExperimentReport run_experiment(const ExperimentConfig& cfg);
nlohmann::json experiment_json(const ExperimentReport& r);
std::string profile_csv(const ExperimentReport& r);
// Writes JSON and CSV outputs named in the config, if any.
void write_experiment_outputs(const ExperimentReport& r);

// Invariants re-verified on every trial output: properness, unchanged row
// space, and algorithm-specific guarantees.
bool verify_output(const Matrix& input, const RunOutcome& out, const AlgorithmSpec& spec);

}  // namespace codered
