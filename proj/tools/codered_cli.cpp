// Command-line front end. Talks to the library only through codered.h.
#include <codered/codered.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

int report_failure(codered_status s) {
  std::cerr << "error: " << codered_last_error() << '\n';
  return static_cast<int>(s);
}

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << '\n';
    return false;
  }
  out << text;
  return static_cast<bool>(out);
}

std::vector<size_t> parse_profile(const std::string& text) {
  std::vector<size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    unsigned long long v = std::stoull(item, &used);
    if (used != item.size()) throw CLI::ValidationError("--profile", "expected comma-separated integers");
    out.push_back(static_cast<size_t>(v));
  }
  if (out.empty()) throw CLI::ValidationError("--profile", "profile is empty");
  return out;
}

const std::map<std::string, codered_algorithm> kAlgorithms = {
    {"lll", CODERED_ALG_LLL},
    {"bkz", CODERED_ALG_BKZ},
    {"slide", CODERED_ALG_SLIDE},
    {"fullbackward", CODERED_ALG_FULL_BACKWARD},
    {"selective", CODERED_ALG_SELECTIVE},
    {"oneblock", CODERED_ALG_ONE_BLOCK},
    {"approxgriesmer", CODERED_ALG_APPROX_GRIESMER},
};

struct ReduceArgs {
  std::string alg = "lll";
  size_t beta = 2;
  size_t tau = 0;
  uint64_t seed = 1;
  uint32_t q = 2;
  size_t n = 0, k = 0;
  std::string in, out, report;
  bool then_lll = false;
  std::string oracle = "exhaustive";
  unsigned lb_p = 2;
  size_t lb_iterations = 0;
  size_t skip_threshold = 0;
  uint64_t max_iterations = 0;
};

int run_reduce(const ReduceArgs& a) {
  codered_basis* basis = nullptr;
  codered_status s;
  if (!a.in.empty()) {
    s = codered_basis_read_file(a.in.c_str(), &basis);
  } else if (a.n == 0 || a.k == 0) {
    std::cerr << "error: give --in FILE or --q/--n/--k for a random code\n";
    return CODERED_ERR_USAGE;
  } else if (a.alg == "selective") {
    // Selective reduction picks its own information set from a raw matrix.
    s = codered_basis_random_matrix(a.q, a.k, a.n, a.seed, &basis);
  } else {
    s = codered_basis_random(a.q, a.k, a.n, a.seed, &basis);
  }
  if (s != CODERED_OK) return report_failure(s);

  codered_reduce_params p;
  codered_reduce_params_init(&p);
  p.algorithm = kAlgorithms.at(a.alg);
  p.beta = a.beta;
  p.tau = a.tau;
  p.seed = a.seed;
  p.then_lll = a.then_lll;
  p.oracle = a.oracle == "lee-brickell" ? CODERED_ORACLE_LEE_BRICKELL : CODERED_ORACLE_EXHAUSTIVE;
  p.lb_p = a.lb_p;
  p.lb_iterations = a.lb_iterations;
  p.skip_threshold = a.skip_threshold;
  p.max_iterations = a.max_iterations;

  char* report = nullptr;
  const codered_status rs = codered_reduce(basis, &p, &report);
  int code = 0;
  if (rs != CODERED_OK) code = report_failure(rs);
  if (report) {
    if (!a.report.empty()) {
      if (!write_text(a.report, std::string(report) + "\n") && code == 0) code = CODERED_ERR_IO;
    } else {
      std::cout << report << '\n';
    }
    codered_string_free(report);
  }
  if (!a.out.empty() && (rs == CODERED_OK || rs == CODERED_ERR_CAP_EXHAUSTED)) {
    const codered_status ws = codered_basis_write_file(basis, a.out.c_str());
    if (ws != CODERED_OK && code == 0) code = report_failure(ws);
  }
  codered_basis_free(basis);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Basis reduction for linear codes over finite fields"};
  app.require_subcommand(1);

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "Reduce a generator matrix");
  reduce->add_option("--alg", ra.alg, "Algorithm")
      ->check(CLI::IsMember({"lll", "bkz", "slide", "fullbackward", "selective", "oneblock", "approxgriesmer"}));
  reduce->add_option("--beta", ra.beta, "Block size");
  reduce->add_option("--tau", ra.tau, "Full backward depth (default min(k, 3*ceil(log_q n)))");
  reduce->add_option("--seed", ra.seed, "Seed for sampling and randomized oracles");
  reduce->add_option("--q", ra.q, "Field order for a random code");
  reduce->add_option("--n", ra.n, "Length for a random code");
  reduce->add_option("--k", ra.k, "Dimension for a random code");
  reduce->add_option("--in", ra.in, "Input matrix file");
  reduce->add_option("--out", ra.out, "Output matrix file");
  reduce->add_option("--report", ra.report, "JSON report file (default stdout)");
  reduce->add_flag("--then-lll", ra.then_lll, "Run LLL on the result");
  reduce->add_option("--oracle", ra.oracle, "Shortest-word oracle")->check(CLI::IsMember({"exhaustive", "lee-brickell"}));
  reduce->add_option("--lb-p", ra.lb_p, "Lee-Brickell combination size");
  reduce->add_option("--lb-iterations", ra.lb_iterations, "Lee-Brickell information sets per call");
  reduce->add_option("--skip-threshold", ra.skip_threshold, "Approximate Griesmer skip threshold");
  reduce->add_option("--max-iterations", ra.max_iterations, "Loop iteration cap");

  uint32_t wq = 2;
  std::string wprofile, wout;
  size_t wn = 0;
  auto* wdist = app.add_subcommand("wdist", "Fundamental-domain weight distribution");
  wdist->add_option("--q", wq, "Field order (at most 16)")->required()->check(CLI::Range(2u, 16u));
  wdist->add_option("--profile", wprofile, "Epipodal lengths l1,l2,...")->required();
  wdist->add_option("--n", wn, "Ambient length (default: profile sum)");
  wdist->add_option("--out", wout, "Output JSON file (default stdout)");

  std::string balg = "lll";
  uint32_t bq = 2;
  size_t bn = 0, bk = 0, bbeta = 2;
  auto* bound = app.add_subcommand("bound", "Upper bound on |b1| for reduced bases");
  bound->add_option("--alg", balg, "Algorithm")->check(CLI::IsMember({"lll", "bkz", "slide"}));
  bound->add_option("--q", bq, "Field order")->required();
  bound->add_option("--n", bn, "Code length")->required();
  bound->add_option("--k", bk, "Code dimension")->required();
  bound->add_option("--beta", bbeta, "Block size");

  auto* bench = app.add_subcommand("bench", "Benchmark harness");
  bench->require_subcommand(1);
  auto* brun = bench->add_subcommand("run", "Run an experiment");
  std::string config_path, bench_out;
  std::map<std::string, std::string> overrides;
  brun->add_option("--config", config_path, "TOML experiment config");
  brun->add_option("--report", bench_out, "Write the JSON report here as well");
  for (const char* key : {"q", "n", "k", "trials", "seed", "threads", "max_resamples", "alg", "beta", "tau", "then_lll",
                          "oracle", "lb_p", "lb_iterations", "skip_threshold", "max_iterations", "json", "csv"}) {
    std::string flag = std::string("--") + key;
    for (auto& ch : flag)
      if (ch == '_') ch = '-';
    brun->add_option_function<std::string>(flag, [&overrides, key](const std::string& v) { overrides[key] = v; },
                                           std::string("Override config key ") + key);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*reduce) return run_reduce(ra);

    if (*wdist) {
      const std::vector<size_t> profile = parse_profile(wprofile);
      char* json = nullptr;
      const codered_status s = codered_weight_distribution(wq, profile.data(), profile.size(), wn, &json);
      if (s != CODERED_OK) return report_failure(s);
      std::string text = std::string(json) + "\n";
      codered_string_free(json);
      if (wout.empty()) {
        std::cout << text;
      } else if (!write_text(wout, text)) {
        return CODERED_ERR_IO;
      }
      return 0;
    }

    if (*bound) {
      uint64_t value = 0;
      const codered_status s = codered_output_bound(kAlgorithms.at(balg), bq, bn, bk, bbeta, &value);
      if (s != CODERED_OK) return report_failure(s);
      std::cout << value << '\n';
      return 0;
    }

    if (*brun) {
      codered_bench_config* cfg = nullptr;
      codered_status s = codered_bench_config_new(&cfg);
      if (s == CODERED_OK && !config_path.empty()) s = codered_bench_config_load(cfg, config_path.c_str());
      for (const auto& [key, value] : overrides) {
        if (s != CODERED_OK) break;
        s = codered_bench_config_set(cfg, key.c_str(), value.c_str());
      }
      char* json = nullptr;
      if (s == CODERED_OK) s = codered_bench_run(cfg, &json);
      codered_bench_config_free(cfg);
      if (s != CODERED_OK) return report_failure(s);
      std::string text = std::string(json) + "\n";
      codered_string_free(json);
      if (!bench_out.empty()) {
        if (!write_text(bench_out, text)) return CODERED_ERR_IO;
      } else {
        std::cout << text;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return CODERED_ERR_USAGE;
  }
  return 0;
}
