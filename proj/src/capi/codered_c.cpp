#include "codered/codered.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "../core/bench.hpp"
#include "../core/bounds.hpp"
#include "../core/domain.hpp"
#include "../core/error.hpp"
#include "../core/linalg.hpp"
#include "../core/reduce.hpp"

struct codered_basis {
  codered::Matrix rows;
};

struct codered_bench_config {
  codered::ExperimentConfig cfg;
};

namespace {

thread_local std::string g_last_error;

codered_status fail(codered_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <typename F>
codered_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const codered::UsageError& e) {
    return fail(CODERED_ERR_USAGE, e.what());
  } catch (const codered::DomainError& e) {
    return fail(CODERED_ERR_DOMAIN, e.what());
  } catch (const codered::RetryableError& e) {
    return fail(CODERED_ERR_RETRYABLE, e.what());
  } catch (const codered::CapExhaustedError& e) {
    return fail(CODERED_ERR_CAP_EXHAUSTED, e.what());
  } catch (const codered::IoError& e) {
    return fail(CODERED_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(CODERED_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CODERED_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define CODERED_REQUIRE(cond, what) \
  if (!(cond)) return fail(CODERED_ERR_USAGE, what)

codered::AlgorithmSpec to_spec(const codered_reduce_params& p) {
  using codered::Algorithm;
  codered::AlgorithmSpec s;
  switch (p.algorithm) {
    case CODERED_ALG_LLL: s.algorithm = Algorithm::Lll; break;
    case CODERED_ALG_BKZ: s.algorithm = Algorithm::Bkz; break;
    case CODERED_ALG_SLIDE: s.algorithm = Algorithm::Slide; break;
    case CODERED_ALG_FULL_BACKWARD: s.algorithm = Algorithm::FullBackward; break;
    case CODERED_ALG_SELECTIVE: s.algorithm = Algorithm::Selective; break;
    case CODERED_ALG_ONE_BLOCK: s.algorithm = Algorithm::OneBlock; break;
    case CODERED_ALG_APPROX_GRIESMER: s.algorithm = Algorithm::ApproxGriesmer; break;
    default: throw codered::UsageError("unknown algorithm");
  }
  s.beta = p.beta;
  if (p.tau) s.tau = p.tau;
  s.then_lll = p.then_lll != 0;
  if (p.oracle == CODERED_ORACLE_EXHAUSTIVE) {
    s.oracle = codered::ShortestOracle::Kind::Exhaustive;
  } else if (p.oracle == CODERED_ORACLE_LEE_BRICKELL) {
    s.oracle = codered::ShortestOracle::Kind::LeeBrickell;
  } else {
    throw codered::UsageError("unknown oracle");
  }
  s.lb_p = p.lb_p;
  s.lb_iterations = p.lb_iterations;
  s.skip_threshold = p.skip_threshold;
  if (p.max_iterations) s.max_iterations = p.max_iterations;
  return s;
}

}  // namespace

extern "C" {

const char* codered_last_error(void) { return g_last_error.c_str(); }

void codered_string_free(char* s) { std::free(s); }

const char* codered_version(void) { return "0.1.0"; }

void codered_reduce_params_init(codered_reduce_params* p) {
  if (!p) return;
  *p = codered_reduce_params{};
  p->algorithm = CODERED_ALG_LLL;
  p->beta = 2;
  p->oracle = CODERED_ORACLE_EXHAUSTIVE;
  p->lb_p = 2;
}

codered_status codered_basis_read_file(const char* path, codered_basis** out) {
  CODERED_REQUIRE(path && out, "null argument");
  return guarded([&] {
    *out = new codered_basis{codered::read_matrix_file(path)};
    return CODERED_OK;
  });
}

codered_status codered_basis_parse(const char* text, codered_basis** out) {
  CODERED_REQUIRE(text && out, "null argument");
  return guarded([&] {
    std::istringstream in(text);
    *out = new codered_basis{codered::read_matrix(in)};
    return CODERED_OK;
  });
}

codered_status codered_basis_from_entries(uint32_t q, size_t k, size_t n, const uint32_t* entries,
                                          codered_basis** out) {
  CODERED_REQUIRE(entries && out, "null argument");
  CODERED_REQUIRE(k > 0 && n > 0, "dimensions must be positive");
  return guarded([&] {
    codered::Matrix m(codered::Field::get(q), k, n);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < n; ++j) m.set(i, j, entries[i * n + j]);
    *out = new codered_basis{std::move(m)};
    return CODERED_OK;
  });
}

codered_status codered_basis_random(uint32_t q, size_t k, size_t n, uint64_t seed, codered_basis** out) {
  CODERED_REQUIRE(out, "null argument");
  return guarded([&] {
    *out = new codered_basis{codered::sample_random_code(q, k, n, seed).basis.matrix()};
    return CODERED_OK;
  });
}

codered_status codered_basis_random_matrix(uint32_t q, size_t k, size_t n, uint64_t seed, codered_basis** out) {
  CODERED_REQUIRE(out, "null argument");
  CODERED_REQUIRE(k > 0 && n > 0, "dimensions must be positive");
  return guarded([&] {
    std::mt19937_64 rng(seed);
    *out = new codered_basis{codered::sample_uniform_matrix(codered::Field::get(q), k, n, rng)};
    return CODERED_OK;
  });
}

void codered_basis_free(codered_basis* b) { delete b; }

codered_status codered_basis_dims(const codered_basis* b, uint32_t* q, size_t* k, size_t* n) {
  CODERED_REQUIRE(b, "null basis");
  if (q) *q = b->rows.field().q();
  if (k) *k = b->rows.num_rows();
  if (n) *n = b->rows.num_cols();
  return CODERED_OK;
}

codered_status codered_basis_entries(const codered_basis* b, uint32_t* out, size_t capacity) {
  CODERED_REQUIRE(b && out, "null argument");
  const size_t k = b->rows.num_rows(), n = b->rows.num_cols();
  CODERED_REQUIRE(capacity >= k * n, "output buffer too small");
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < n; ++j) out[i * n + j] = b->rows.at(i, j);
  return CODERED_OK;
}

codered_status codered_basis_profile(const codered_basis* b, size_t* out, size_t capacity) {
  CODERED_REQUIRE(b && out, "null argument");
  CODERED_REQUIRE(capacity >= b->rows.num_rows(), "output buffer too small");
  return guarded([&] {
    const auto profile = codered::CodeBasis(b->rows).profile();
    std::copy(profile.begin(), profile.end(), out);
    return CODERED_OK;
  });
}

codered_status codered_basis_write_file(const codered_basis* b, const char* path) {
  CODERED_REQUIRE(b && path, "null argument");
  return guarded([&] {
    codered::write_matrix_file(path, b->rows);
    return CODERED_OK;
  });
}

codered_status codered_basis_to_text(const codered_basis* b, char** out) {
  CODERED_REQUIRE(b && out, "null argument");
  return guarded([&] {
    std::ostringstream s;
    codered::write_matrix(s, b->rows);
    *out = dup_string(s.str());
    return CODERED_OK;
  });
}

codered_status codered_reduce(codered_basis* b, const codered_reduce_params* params, char** report_json) {
  CODERED_REQUIRE(b && params, "null argument");
  return guarded([&] {
    const codered::AlgorithmSpec spec = to_spec(*params);
    try {
      codered::RunOutcome out = codered::run_algorithm(b->rows, spec, params->seed);
      if (report_json) *report_json = dup_string(codered::reduction_report(out, spec, params->seed).dump(2));
      b->rows = out.basis.matrix();
    } catch (const codered::CapExhaustedError& e) {
      b->rows = e.partial().matrix();
      if (report_json) {
        codered::RunOutcome partial{e.partial(), e.stats(), 0, std::nullopt, 0};
        auto j = codered::reduction_report(partial, spec, params->seed);
        j["cap_exhausted"] = true;
        *report_json = dup_string(j.dump(2));
      }
      throw;
    }
    return CODERED_OK;
  });
}

codered_status codered_weight_distribution(uint32_t q, const size_t* profile, size_t len, size_t n, char** json) {
  CODERED_REQUIRE(profile && json && len > 0, "null or empty argument");
  return guarded([&] {
    std::optional<std::size_t> length;
    if (n) length = n;
    const auto w = codered::fundamental_weight_distribution(std::span<const size_t>(profile, len), q, length);
    nlohmann::json j;
    j["weights"] = nlohmann::json::array();
    for (const auto& v : w) j["weights"].push_back(v.str());
    *json = dup_string(j.dump());
    return CODERED_OK;
  });
}

codered_status codered_output_bound(codered_algorithm algorithm, uint32_t q, size_t n, size_t k, size_t beta,
                                    uint64_t* out) {
  CODERED_REQUIRE(out, "null argument");
  return guarded([&] {
    const codered::GriesmerProxy proxy(q);
    switch (algorithm) {
      case CODERED_ALG_LLL: *out = codered::bkz_output_bound(q, n, k, 2, proxy); break;
      case CODERED_ALG_BKZ: *out = codered::bkz_prefix_output_bound(q, n, k, beta, proxy); break;
      case CODERED_ALG_SLIDE: *out = codered::slide_output_bound(q, n, k, beta, proxy); break;
      default: throw codered::UsageError("bounds exist for lll, bkz and slide only");
    }
    return CODERED_OK;
  });
}

codered_status codered_bench_config_new(codered_bench_config** out) {
  CODERED_REQUIRE(out, "null argument");
  return guarded([&] {
    *out = new codered_bench_config{};
    return CODERED_OK;
  });
}

codered_status codered_bench_config_load(codered_bench_config* cfg, const char* toml_path) {
  CODERED_REQUIRE(cfg && toml_path, "null argument");
  return guarded([&] {
    cfg->cfg = codered::load_experiment_config(toml_path);
    return CODERED_OK;
  });
}

codered_status codered_bench_config_set(codered_bench_config* cfg, const char* key, const char* value) {
  CODERED_REQUIRE(cfg && key && value, "null argument");
  return guarded([&] {
    codered::set_config_value(cfg->cfg, key, value);
    return CODERED_OK;
  });
}

void codered_bench_config_free(codered_bench_config* cfg) { delete cfg; }

codered_status codered_bench_run(const codered_bench_config* cfg, char** report_json) {
  CODERED_REQUIRE(cfg, "null argument");
  return guarded([&] {
    const auto report = codered::run_experiment(cfg->cfg);
    codered::write_experiment_outputs(report);
    if (report_json) *report_json = dup_string(codered::experiment_json(report).dump(2));
    return CODERED_OK;
  });
}

}  // extern "C"
