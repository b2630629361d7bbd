#include "bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#define TOML_EXCEPTIONS 1
#include <toml.hpp>

#include "backward.hpp"
#include "bounds.hpp"
#include "error.hpp"
#include "rng.hpp"

namespace codered {
namespace {

struct NamedAlgorithm {
  Algorithm alg;
  const char* name;
};

constexpr NamedAlgorithm kAlgorithms[] = {
    {Algorithm::Lll, "lll"},
    {Algorithm::Bkz, "bkz"},
    {Algorithm::Slide, "slide"},
    {Algorithm::FullBackward, "fullbackward"},
    {Algorithm::Selective, "selective"},
    {Algorithm::OneBlock, "oneblock"},
    {Algorithm::ApproxGriesmer, "approxgriesmer"},
};

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (!value.empty() && value[0] == '-') throw std::invalid_argument("negative");
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw UsageError("'" + key + "' needs a nonnegative integer, got '" + value + "'");
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw UsageError("'" + key + "' needs true or false, got '" + value + "'");
}

std::uint64_t mix_seed(std::uint64_t s) {
  // SplitMix64 finalizer: decorrelates the oracle stream from the sampler.
  s += 0x9E3779B97F4A7C15ull;
  s = (s ^ (s >> 30)) * 0xBF58476D1CE4E5B9ull;
  s = (s ^ (s >> 27)) * 0x94D049BB133111EBull;
  return s ^ (s >> 31);
}

ShortestOracle make_oracle(const AlgorithmSpec& spec, std::uint64_t seed) {
  if (spec.oracle == ShortestOracle::Kind::LeeBrickell) {
    return ShortestOracle::lee_brickell(spec.lb_p, spec.lb_iterations, mix_seed(seed));
  }
  return ShortestOracle::exhaustive();
}

void accumulate(ReductionStats& into, const ReductionStats& s) {
  into.loop_iterations += s.loop_iterations;
  into.insertions += s.insertions;
  into.backward_steps += s.backward_steps;
}

void mean_and_two_sigma(const std::vector<double>& xs, double& mean, double& two_sigma) {
  mean = two_sigma = 0;
  if (xs.empty()) return;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  if (xs.size() < 2) return;
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  two_sigma = 2 * std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

std::string toml_scalar(const toml::node& node, const std::string& key) {
  if (auto v = node.as_integer()) return std::to_string(v->get());
  if (auto v = node.as_boolean()) return v->get() ? "true" : "false";
  if (auto v = node.as_string()) return v->get();
  throw UsageError("config key '" + key + "' must be an integer, boolean or string");
}

}  // namespace

std::string algorithm_name(Algorithm a) {
  for (const auto& e : kAlgorithms)
    if (e.alg == a) return e.name;
  return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
  for (const auto& e : kAlgorithms)
    if (name == e.name) return e.alg;
  throw UsageError("unknown algorithm '" + name + "'");
}

std::size_t ceil_log(std::uint32_t q, std::size_t n) {
  std::size_t e = 0;
  for (unsigned __int128 p = 1; p < n; p *= q) ++e;
  return e;
}

Matrix sample_uniform_matrix(const Field& f, std::size_t k, std::size_t n, std::mt19937_64& rng) {
  Matrix m(f, k, n);
  for (std::size_t r = 0; r < k; ++r) {
    if (f.is_binary()) {
      auto bits = m.row(r).bits();
      for (auto& w : bits) w = rng();
      if (n % 64) bits.back() &= (std::uint64_t{1} << (n % 64)) - 1;
    } else {
      for (std::size_t j = 0; j < n; ++j) m.set(r, j, static_cast<Elem>(uniform_below(rng, f.q())));
    }
  }
  return m;
}

RandomCode sample_random_code(std::uint32_t q, std::size_t k, std::size_t n, std::uint64_t seed) {
  const Field& f = Field::get(q);
  if (k < 1 || k > n) throw UsageError("need 1 <= k <= n");
  std::mt19937_64 rng(seed);
  for (std::size_t attempts = 1;; ++attempts) {
    RowEchelon e = row_echelon(sample_uniform_matrix(f, k, n, rng), false);
    if (e.rank() == k) return {CodeBasis::trusted(std::move(e.rows)), attempts};
  }
}

RunOutcome run_algorithm(const Matrix& input, const AlgorithmSpec& spec, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  ShortestOracle oracle = make_oracle(spec, seed);
  std::optional<CodeBasis> basis;
  std::optional<Word> word;
  ReductionStats stats;

  if (spec.algorithm == Algorithm::Selective) {
    basis = selective_backward_reduce(input, spec.beta);
  } else {
    basis.emplace(input);
    switch (spec.algorithm) {
      case Algorithm::Lll:
        stats = lll_reduce(*basis);
        break;
      case Algorithm::Bkz:
        stats = bkz_reduce(*basis, spec.beta, oracle, spec.max_iterations);
        break;
      case Algorithm::Slide:
        stats = slide_reduce(*basis, spec.beta, oracle, spec.max_iterations);
        break;
      case Algorithm::FullBackward:
        if (!basis->is_proper()) throw UsageError("full backward reduction needs a proper basis");
        full_backward_reduce(*basis, spec.tau.value_or(
            std::min(input.num_rows(), 3 * ceil_log(input.field().q(), input.num_cols()))));
        break;
      case Algorithm::OneBlock:
        word = one_block_reduce(*basis, spec.beta, oracle);
        break;
      case Algorithm::ApproxGriesmer:
        stats = approx_griesmer_reduce(*basis, oracle, spec.skip_threshold);
        break;
      case Algorithm::Selective:
        break;
    }
  }
  if (spec.then_lll) accumulate(stats, lll_reduce(*basis));

  RunOutcome out{std::move(*basis), stats, oracle.calls(), std::move(word), 0};
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

nlohmann::json algorithm_json(const AlgorithmSpec& spec) {
  nlohmann::json j;
  j["name"] = algorithm_name(spec.algorithm);
  j["beta"] = spec.beta;
  if (spec.tau) j["tau"] = *spec.tau;
  j["then_lll"] = spec.then_lll;
  j["oracle"] = spec.oracle == ShortestOracle::Kind::Exhaustive ? "exhaustive" : "lee-brickell";
  if (spec.oracle == ShortestOracle::Kind::LeeBrickell) {
    j["lb_p"] = spec.lb_p;
    j["lb_iterations"] = spec.lb_iterations;
  }
  j["skip_threshold"] = spec.skip_threshold;
  if (spec.max_iterations) j["max_iterations"] = *spec.max_iterations;
  return j;
}

nlohmann::json reduction_report(const RunOutcome& out, const AlgorithmSpec& spec, std::uint64_t seed) {
  nlohmann::json j;
  j["algorithm"] = algorithm_json(spec);
  j["seed"] = seed;
  j["field"] = nlohmann::json::parse(out.basis.field().spec_json());
  j["n"] = out.basis.n();
  j["k"] = out.basis.k();
  j["profile"] = out.basis.profile();
  j["b1_weight"] = out.basis.row(0).weight();
  if (out.word) {
    j["word"] = out.word->values();
    j["word_weight"] = out.word->weight();
  }
  j["loop_iterations"] = out.stats.loop_iterations;
  j["insertions"] = out.stats.insertions;
  j["backward_steps"] = out.stats.backward_steps;
  j["oracle_calls"] = out.oracle_calls;
  j["wall_time_seconds"] = out.seconds;
  return j;
}

void set_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  AlgorithmSpec& a = cfg.algorithm;
  if (key == "q") {
    cfg.q = static_cast<std::uint32_t>(parse_uint(key, value));
    Field::get(cfg.q);
  } else if (key == "n") {
    cfg.n = parse_uint(key, value);
  } else if (key == "k") {
    cfg.k = parse_uint(key, value);
  } else if (key == "trials") {
    cfg.trials = parse_uint(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_uint(key, value);
  } else if (key == "threads") {
    cfg.threads = static_cast<unsigned>(parse_uint(key, value));
  } else if (key == "max_resamples") {
    cfg.max_resamples = parse_uint(key, value);
  } else if (key == "alg" || key == "name") {
    a.algorithm = parse_algorithm(value);
  } else if (key == "beta") {
    a.beta = parse_uint(key, value);
  } else if (key == "tau") {
    a.tau = parse_uint(key, value);
  } else if (key == "then_lll") {
    a.then_lll = parse_bool(key, value);
  } else if (key == "oracle") {
    if (value == "exhaustive") {
      a.oracle = ShortestOracle::Kind::Exhaustive;
    } else if (value == "lee-brickell") {
      a.oracle = ShortestOracle::Kind::LeeBrickell;
    } else {
      throw UsageError("oracle must be 'exhaustive' or 'lee-brickell'");
    }
  } else if (key == "lb_p") {
    a.lb_p = static_cast<unsigned>(parse_uint(key, value));
  } else if (key == "lb_iterations") {
    a.lb_iterations = parse_uint(key, value);
  } else if (key == "skip_threshold") {
    a.skip_threshold = parse_uint(key, value);
  } else if (key == "max_iterations") {
    a.max_iterations = parse_uint(key, value);
  } else if (key == "json") {
    cfg.json_path = value;
  } else if (key == "csv") {
    cfg.csv_path = value;
  } else {
    throw UsageError("unknown config key '" + key + "'");
  }
}

ExperimentConfig parse_experiment_config(const std::string& toml_text) {
  toml::table table;
  try {
    table = toml::parse(toml_text);
  } catch (const toml::parse_error& e) {
    throw UsageError(std::string("invalid TOML: ") + e.what());
  }
  ExperimentConfig cfg;
  for (const auto& [key, node] : table) {
    const std::string k(key.str());
    if (k == "algorithm" || k == "output") {
      const auto* sub = node.as_table();
      if (!sub) throw UsageError("'" + k + "' must be a table");
      for (const auto& [inner, value] : *sub) {
        const std::string name(inner.str());
        set_config_value(cfg, name, toml_scalar(value, name));
      }
    } else {
      set_config_value(cfg, k, toml_scalar(node, k));
    }
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& toml_path) {
  std::ifstream in(toml_path);
  if (!in) throw IoError("cannot open " + toml_path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_experiment_config(ss.str());
}

bool verify_output(const Matrix& input, const RunOutcome& out, const AlgorithmSpec& spec) {
  const CodeBasis& b = out.basis;
  if (!b.is_proper()) return false;
  std::vector<Word> stacked = input.rows();
  stacked.insert(stacked.end(), b.matrix().rows().begin(), b.matrix().rows().end());
  if (Matrix(std::move(stacked)).rank() != b.k()) return false;

  const std::uint32_t q = b.field().q();
  const auto profile = b.profile();
  const bool lll_like = spec.then_lll || spec.algorithm == Algorithm::Lll ||
                        (spec.algorithm == Algorithm::Bkz && spec.beta == 2);
  if (lll_like) {
    for (std::size_t i = 0; i + 1 < profile.size(); ++i)
      if (profile[i + 1] < (profile[i] + q - 1) / q) return false;
    if (!lll_griesmer_check(profile, q, b.n())) return false;
  }
  if (spec.then_lll) return true;
  if (spec.algorithm == Algorithm::Slide) {
    if (!twin_reduction_check(profile, spec.beta, GriesmerProxy(q))) return false;
  }
  if (spec.algorithm == Algorithm::Bkz && spec.oracle == ShortestOracle::Kind::Exhaustive) {
    ShortestOracle exact = ShortestOracle::exhaustive();
    for (std::size_t i = 0; i + 1 < b.k(); ++i)
      if (!is_forward_reduced(b, i, i + spec.beta - 1, exact)) return false;
  }
  return true;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  Field::get(cfg.q);
  if (cfg.k < 1 || cfg.k > cfg.n) throw UsageError("need 1 <= k <= n");
  if (cfg.trials < 1) throw UsageError("need at least one trial");

  ExperimentReport report;
  report.config = cfg;
  report.trials.resize(cfg.trials);

  auto run_trial = [&](std::size_t t) {
    TrialResult& r = report.trials[t];
    r.index = t;
    r.seed = cfg.seed + t;
    try {
      std::optional<Matrix> input;
      std::optional<RunOutcome> out;
      if (cfg.algorithm.algorithm == Algorithm::Selective) {
        std::mt19937_64 rng(r.seed);
        const Field& f = Field::get(cfg.q);
        while (!out) {
          input = sample_uniform_matrix(f, cfg.k, cfg.n, rng);
          try {
            out = run_algorithm(*input, cfg.algorithm, r.seed);
          } catch (const RetryableError&) {
            if (++r.resamples > cfg.max_resamples) throw;
          }
        }
      } else {
        RandomCode code = sample_random_code(cfg.q, cfg.k, cfg.n, r.seed);
        r.resamples = code.attempts - 1;
        input = code.basis.matrix();
        out = run_algorithm(*input, cfg.algorithm, r.seed);
      }
      r.profile = out->basis.profile();
      r.sorted_profile = r.profile;
      std::sort(r.sorted_profile.begin(), r.sorted_profile.end(), std::greater<>());
      for (std::size_t i = 0; i < r.profile.size(); ++i) {
        if (r.profile[i] > 1) {
          ++r.k1;
          r.k1_star = i + 1;
        }
      }
      r.stats = out->stats;
      r.seconds = out->seconds;
      r.checks_passed = verify_output(*input, *out, cfg.algorithm);
      r.ok = true;
    } catch (const std::exception& e) {
      r.ok = false;
      r.failure = e.what();
    }
  };

  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cfg.trials));
  if (threads <= 1) {
    for (std::size_t t = 0; t < cfg.trials; ++t) run_trial(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < cfg.trials; t = next++) run_trial(t);
      });
    }
    for (auto& th : pool) th.join();
  }

  // Aggregation folds in trial order so it is independent of scheduling.
  std::vector<const TrialResult*> good;
  for (const auto& r : report.trials) {
    if (r.ok) {
      good.push_back(&r);
    } else {
      ++report.failures;
    }
  }
  if (good.empty()) return report;
  const std::size_t k = cfg.k;
  report.mean_sorted_profile.assign(k, 0);
  report.two_sigma.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double> xs;
    for (auto* r : good) xs.push_back(static_cast<double>(r->sorted_profile[i]));
    mean_and_two_sigma(xs, report.mean_sorted_profile[i], report.two_sigma[i]);
  }
  report.l1_mean = report.mean_sorted_profile[0];
  report.l1_two_sigma = report.two_sigma[0];
  std::vector<double> k1s, stars, secs;
  for (auto* r : good) {
    k1s.push_back(static_cast<double>(r->k1));
    stars.push_back(static_cast<double>(r->k1_star));
    secs.push_back(r->seconds);
  }
  double unused = 0;
  mean_and_two_sigma(k1s, report.k1_mean, report.k1_two_sigma);
  mean_and_two_sigma(stars, report.k1_star_mean, report.k1_star_two_sigma);
  mean_and_two_sigma(secs, report.seconds_mean, unused);
  return report;
}

nlohmann::json experiment_json(const ExperimentReport& r) {
  const ExperimentConfig& c = r.config;
  nlohmann::json j;
  j["config"] = {{"q", c.q}, {"n", c.n}, {"k", c.k}, {"trials", c.trials}, {"seed", c.seed},
                 {"algorithm", algorithm_json(c.algorithm)}};
  j["field"] = nlohmann::json::parse(Field::get(c.q).spec_json());
  nlohmann::json trials = nlohmann::json::array();
  for (const auto& t : r.trials) {
    nlohmann::json e;
    e["index"] = t.index;
    e["seed"] = t.seed;
    e["ok"] = t.ok;
    if (!t.ok) e["failure"] = t.failure;
    e["resamples"] = t.resamples;
    if (t.ok) {
      e["profile"] = t.profile;
      e["sorted_profile"] = t.sorted_profile;
      e["l1"] = t.sorted_profile.front();
      e["b1_epipodal"] = t.profile.front();
      e["k1"] = t.k1;
      e["k1_star"] = t.k1_star;
      e["loop_iterations"] = t.stats.loop_iterations;
      e["insertions"] = t.stats.insertions;
      e["backward_steps"] = t.stats.backward_steps;
      e["checks_passed"] = t.checks_passed;
      e["wall_time_seconds"] = t.seconds;
    }
    trials.push_back(std::move(e));
  }
  j["trials"] = std::move(trials);
  // Standard error of the mean, doubled.
  const std::size_t good = r.trials.size() - r.failures;
  const double root = good > 0 ? std::sqrt(static_cast<double>(good)) : 1.0;
  std::vector<double> two_se;
  for (double s : r.two_sigma) two_se.push_back(s / root);
  j["summary"] = {{"mean_sorted_profile", r.mean_sorted_profile},
                  {"two_sigma", r.two_sigma},
                  {"two_se", two_se},
                  {"l1_mean", r.l1_mean},
                  {"l1_two_sigma", r.l1_two_sigma},
                  {"k1_mean", r.k1_mean},
                  {"k1_two_sigma", r.k1_two_sigma},
                  {"k1_star_mean", r.k1_star_mean},
                  {"k1_star_two_sigma", r.k1_star_two_sigma},
                  {"wall_time_seconds_mean", r.seconds_mean},
                  {"failures", r.failures}};
  return j;
}

std::string profile_csv(const ExperimentReport& r) {
  std::ostringstream out;
  out << "index,mean,two_sigma\n";
  for (std::size_t i = 0; i < r.mean_sorted_profile.size(); ++i) {
    out << i + 1 << ',' << r.mean_sorted_profile[i] << ',' << r.two_sigma[i] << '\n';
  }
  return out.str();
}

void write_experiment_outputs(const ExperimentReport& r) {
  if (!r.config.json_path.empty()) {
    std::ofstream out(r.config.json_path);
    if (!out) throw IoError("cannot write " + r.config.json_path);
    out << experiment_json(r).dump(2) << '\n';
  }
  if (!r.config.csv_path.empty()) {
    std::ofstream out(r.config.csv_path);
    if (!out) throw IoError("cannot write " + r.config.csv_path);
    out << profile_csv(r);
  }
}

}  // namespace codered
