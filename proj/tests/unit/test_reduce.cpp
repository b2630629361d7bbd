#include <doctest.h>

#include <random>

#include "backward.hpp"
#include "bounds.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "reduce.hpp"

using codered::CodeBasis;
using codered::Elem;
using codered::Field;
using codered::Matrix;
using codered::ShortestOracle;
using codered::Word;
using fixtures::matrix;
using fixtures::word;

namespace {

CodeBasis random_proper(const Field& f, std::size_t k, std::size_t n, std::mt19937_64& rng) {
  return codered::systematize(CodeBasis(oracle::random_full_rank(f, k, n, rng)));
}

bool in_code(const Matrix& m, const Word& w) { return codered::solve_coefficients(m, w).has_value(); }

}  // namespace

TEST_CASE("exhaustive oracle examples") {
  auto o = ShortestOracle::exhaustive();
  CHECK(o.shortest(matrix(2, {{1, 1, 1, 0}, {0, 0, 1, 1}})) == word(2, {0, 0, 1, 1}));
  CHECK(o.shortest(matrix(3, {{1, 1, 0}, {0, 1, 1}})).weight() == 2);
  CHECK(o.shortest(matrix(5, {{0, 3, 4}})).weight() == 2);
  CHECK(codered::default_exhaustive_cutoff(2) == 20);
  CHECK(codered::default_exhaustive_cutoff(4) == 10);
  CHECK(codered::default_exhaustive_cutoff(256) == 2);
  auto tiny = ShortestOracle::exhaustive(2);
  CHECK_THROWS_AS(tiny.shortest(matrix(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), codered::UsageError);
}

TEST_CASE("exhaustive oracle returns a minimum-weight codeword") {
  std::mt19937_64 rng(61);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field& f = Field::get(q);
    auto o = ShortestOracle::exhaustive();
    for (int t = 0; t < 50; ++t) {
      const std::size_t k = 1 + rng() % 5, n = k + rng() % 10;
      const Matrix m = oracle::random_full_rank(f, k, n, rng);
      const Word w = o.shortest(m);
      CHECK(in_code(m, w));
      CHECK(w.weight() == oracle::min_distance(m));
    }
  }
}

TEST_CASE("Lee-Brickell oracle returns valid codewords no heavier than the lightest row") {
  std::mt19937_64 rng(67);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field& f = Field::get(q);
    for (unsigned p : {1u, 2u}) {
      auto o = ShortestOracle::lee_brickell(p, 0, 99);
      for (int t = 0; t < 30; ++t) {
        const std::size_t k = 1 + rng() % 6, n = k + rng() % 20;
        const Matrix m = oracle::random_full_rank(f, k, n, rng);
        const Word w = o.shortest(m);
        CHECK_FALSE(w.is_zero());
        CHECK(in_code(m, w));
        std::size_t lightest = SIZE_MAX;
        for (std::size_t r = 0; r < k; ++r) lightest = std::min(lightest, m.row(r).weight());
        CHECK(w.weight() <= lightest);
        CHECK(w.weight() >= oracle::min_distance(m));
      }
    }
  }
  // Deterministic for a fixed seed.
  const Matrix m = oracle::random_full_rank(Field::get(2), 8, 30, rng);
  auto a = ShortestOracle::lee_brickell(2, 5, 123);
  auto b = ShortestOracle::lee_brickell(2, 5, 123);
  CHECK(a.shortest(m) == b.shortest(m));
  CHECK_THROWS_AS(ShortestOracle::lee_brickell(3), codered::UsageError);
}

TEST_CASE("two-row shortest word matches enumeration over all coefficients") {
  std::mt19937_64 rng(71);
  for (std::uint32_t q : {2u, 3u, 4u, 8u, 9u, 16u, 27u, 64u}) {
    const Field& f = Field::get(q);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 2 + rng() % 30;
      const Matrix m = oracle::random_full_rank(f, 2, n, rng);
      // x2 must be a proper second row: force a coordinate outside Supp(x1).
      Matrix x = m;
      const std::size_t spot = rng() % n;
      x.set(0, spot, 0);
      x.set(1, spot, 1);
      if (x.row(0).is_zero()) continue;
      const auto [a1, a2] = codered::shortest_pair_coefficients(x.row(0), x.row(1));
      Word w = x.row(1);
      w.scale(a2);
      w.add_scaled(x.row(0), a1);
      REQUIRE_FALSE(w.is_zero());
      REQUIRE(w.weight() == oracle::min_distance(x));
    }
  }
}

TEST_CASE("a single row is already LLL reduced") {
  CodeBasis b(matrix(3, {{1, 2, 0, 1}}));
  CHECK(codered::lll_reduce(b).loop_iterations == 0);
  CHECK(b.matrix() == matrix(3, {{1, 2, 0, 1}}));
}

TEST_CASE("LLL examples and guarantees") {
  CodeBasis b(matrix(2, {{1, 1, 1, 0}, {0, 0, 1, 1}}));
  const auto stats = codered::lll_reduce(b);
  CHECK(b.profile() == std::vector<std::size_t>{2, 2});
  CHECK(b.row(0).weight() == 2);
  CHECK(stats.loop_iterations <= 2 * 4 * 2 + 2);

  std::mt19937_64 rng(73);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field& f = Field::get(q);
    for (int t = 0; t < 30; ++t) {
      const std::size_t k = 2 + rng() % 10, n = k + rng() % 30;
      const CodeBasis input = random_proper(f, k, n, rng);
      CodeBasis out = input;
      const auto s = codered::lll_reduce(out);
      CHECK(s.loop_iterations <= 2 * n * k + k);
      CHECK(out.is_proper());
      CHECK(Matrix(out.matrix()).rank() == k);
      std::vector<Word> stacked = input.matrix().rows();
      for (const auto& r : out.matrix().rows()) stacked.push_back(r);
      CHECK(Matrix(std::move(stacked)).rank() == k);
      const auto prof = out.profile();
      for (std::size_t i = 0; i + 1 < k; ++i) CHECK(prof[i + 1] >= (prof[i] + q - 1) / q);
      CHECK(n >= oracle::griesmer_sum(q, prof[0], k));
      for (std::size_t i = 0; i + 1 < k; ++i)
        CHECK(out.epipodal_length(i) == oracle::projected_min_weight(out.matrix(), i, i + 1));
    }
  }

  // Reducing a reduced basis is a no-op that scans each block once.
  CodeBasis again = b;
  const auto idle = codered::lll_reduce(again);
  CHECK(again.matrix() == b.matrix());
  CHECK(idle.loop_iterations == 1);
}

TEST_CASE("BKZ blocks are forward reduced and obey the approximation factor") {
  std::mt19937_64 rng(79);
  const Field& f = Field::get(2);
  for (int t = 0; t < 25; ++t) {
    const std::size_t k = 3 + rng() % 6, n = k + 2 + rng() % 12;
    const std::size_t beta = 2 + rng() % 3;
    if (beta > k) continue;
    CodeBasis b = random_proper(f, k, n, rng);
    const Matrix input = b.matrix();
    auto o = ShortestOracle::exhaustive();
    codered::bkz_reduce(b, beta, o);
    CHECK(b.is_proper());
    CHECK(oracle::span(b.matrix()) == oracle::span(input));
    for (std::size_t i = 0; i + 1 < k; ++i) {
      const std::size_t last = std::min(i + beta - 1, k - 1);
      CHECK(b.epipodal_length(i) == oracle::projected_min_weight(b.matrix(), i, last));
    }
    CHECK(codered::bkz_approx_factor_check(b.epipodal_length(0), 2, k, beta, oracle::min_distance(input)));
  }
  CodeBasis b = random_proper(f, 4, 10, rng);
  auto o = ShortestOracle::exhaustive();
  CHECK_THROWS_AS(codered::bkz_reduce(b, 5, o), codered::UsageError);
  CHECK_THROWS_AS(codered::bkz_reduce(b, 1, o), codered::UsageError);
}

TEST_CASE("iteration caps surface the partial basis") {
  std::mt19937_64 rng(83);
  CodeBasis b = random_proper(Field::get(2), 20, 60, rng);
  const Matrix input = b.matrix();
  auto o = ShortestOracle::exhaustive();
  try {
    codered::bkz_reduce(b, 4, o, 3);
    FAIL("expected the cap to trigger");
  } catch (const codered::CapExhaustedError& e) {
    CHECK(e.stats().loop_iterations == 3);
    CHECK(e.partial().is_proper());
    std::vector<Word> stacked = input.rows();
    for (const auto& r : e.partial().matrix().rows()) stacked.push_back(r);
    CHECK(Matrix(std::move(stacked)).rank() == 20);
  }
  CHECK(codered::bkz_iteration_bound(1280, 640, 8) == UINT64_MAX);
  CHECK(codered::bkz_iteration_bound(4, 2, 2) == 2 * 4 * 4 - 1 + 2);
}

TEST_CASE("slide reduction designated blocks") {
  std::mt19937_64 rng(89);
  for (std::uint32_t q : {2u, 3u}) {
    const Field& f = Field::get(q);
    for (int t = 0; t < 20; ++t) {
      const std::size_t beta = 2 + rng() % 2, blocks = 1 + rng() % 3, k = beta * blocks;
      const std::size_t n = k + 2 + rng() % 14;
      CodeBasis b = random_proper(f, k, n, rng);
      const Matrix input = b.matrix();
      auto o = ShortestOracle::exhaustive();
      const auto s = codered::slide_reduce(b, beta, o);
      CHECK(s.loop_iterations <= 4 * k * n / beta);
      CHECK(b.is_proper());
      CHECK(oracle::span(b.matrix()) == oracle::span(input));
      for (std::size_t i = 0; i < blocks; ++i) {
        CHECK(b.epipodal_length(i * beta) == oracle::projected_min_weight(b.matrix(), i * beta, (i + 1) * beta - 1));
        if (i + 2 <= blocks) {
          const Matrix blk = b.block_rows(i * beta + 1, (i + 1) * beta);
          CHECK(oracle::naive_profile(blk).back() == oracle::naive_eta(blk));
        }
      }
      CHECK(codered::twin_reduction_check(b.profile(), beta, codered::GriesmerProxy(q)));
    }
  }
  std::mt19937_64 r2(1);
  CodeBasis single = random_proper(Field::get(2), 4, 12, r2);
  const std::size_t d = oracle::min_distance(single.matrix());
  auto o = ShortestOracle::exhaustive();
  codered::slide_reduce(single, 4, o);
  CHECK(single.row(0).weight() == d);
  CHECK_THROWS_AS(codered::slide_reduce(single, 3, o), codered::UsageError);
}

TEST_CASE("one-block reduction") {
  std::mt19937_64 rng(97);
  const Field& f = Field::get(2);
  for (int t = 0; t < 20; ++t) {
    const CodeBasis b = random_proper(f, 6, 14, rng);
    auto o = ShortestOracle::exhaustive();
    const Word whole = codered::one_block_reduce(b, 6, o);
    CHECK(whole.weight() == oracle::min_distance(b.matrix()));
    const Word part = codered::one_block_reduce(b, 3, o);
    CHECK(in_code(b.matrix(), part));
  }
  for (int t = 0; t < 20; ++t) {
    const CodeBasis b = random_proper(f, 8, 16, rng);
    auto o = ShortestOracle::exhaustive();
    const Word c = codered::one_block_reduce(b, 4, o);
    // Any [12, 4] binary code has minimum distance at most 6.
    CHECK(c.weight() <= 6);
  }
}

TEST_CASE("approximate Griesmer reduction with an exact oracle") {
  std::mt19937_64 rng(101);
  const Field& f = Field::get(2);
  for (int t = 0; t < 10; ++t) {
    CodeBasis b = random_proper(f, 5, 12, rng);
    const Matrix input = b.matrix();
    auto o = ShortestOracle::exhaustive();
    codered::approx_griesmer_reduce(b, o, 0);
    CHECK(b.is_proper());
    CHECK(oracle::span(b.matrix()) == oracle::span(input));
    for (std::size_t i = 0; i < 5; ++i)
      CHECK(b.epipodal_length(i) == oracle::projected_min_weight(b.matrix(), i, 4));
  }
  CodeBasis one(matrix(2, {{1, 0, 1}}));
  auto o = ShortestOracle::exhaustive();
  codered::approx_griesmer_reduce(one, o, 0);
  CHECK(one.matrix() == matrix(2, {{1, 0, 1}}));

  // Lee-Brickell words are trimmed to primitive ones before insertion.
  CodeBasis big = random_proper(f, 30, 70, rng);
  const Matrix before = big.matrix();
  auto lb = ShortestOracle::lee_brickell(2, 3, 5);
  codered::approx_griesmer_reduce(big, lb, 4);
  CHECK(big.is_proper());
  std::vector<Word> stacked = before.rows();
  for (const auto& r : big.matrix().rows()) stacked.push_back(r);
  CHECK(Matrix(std::move(stacked)).rank() == 30);
}
