#include <doctest.h>

#include <random>

#include "bounds.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "reduce.hpp"

using codered::GriesmerProxy;

TEST_CASE("Griesmer sums") {
  CHECK(codered::griesmer_length(2, 4, 3) == 7);
  CHECK(codered::griesmer_length(2, 3, 4) == 7);
  CHECK(codered::griesmer_length(3, 3, 2) == 4);
  CHECK(codered::griesmer_length(2, 1, 640) == 640);
  CHECK(codered::griesmer_length(2, 300, 640) == oracle::griesmer_sum(2, 300, 640));
  for (std::uint32_t q : {2u, 3u, 4u, 5u})
    for (std::uint64_t d = 1; d < 200; ++d)
      for (std::size_t k = 1; k < 20; ++k) REQUIRE(codered::griesmer_length(q, d, k) == oracle::griesmer_sum(q, d, k));
}

TEST_CASE("the [7,4] Hamming code meets the Griesmer bound") {
  const auto m = fixtures::matrix(2, {{1, 0, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 0, 1, 1},
                                      {0, 0, 0, 1, 1, 1, 1}});
  CHECK(oracle::min_distance(m) == 3);
  CHECK(codered::griesmer_length(2, 3, 4) == 7);
}

TEST_CASE("proxy is monotone and satisfies the shortening relation") {
  for (std::uint32_t q : {2u, 3u}) {
    const GriesmerProxy s(q);
    for (std::size_t k = 1; k <= 64; k += 3)
      for (std::uint64_t d = 2; d <= 512; ++d) {
        REQUIRE(s(d, k) >= s(d - 1, k));
        for (std::uint64_t x = 1; x < d; x += 7) REQUIRE(s(d, k) >= s(d - x, k) + x);
      }
  }
}

TEST_CASE("LLL check") {
  const std::vector<std::size_t> ones = {1, 1, 1, 1};
  CHECK(codered::lll_griesmer_check(ones, 2, 4));
  const std::vector<std::size_t> ham = {3, 2, 1, 1};
  CHECK(codered::lll_griesmer_check(ham, 2, 7));
  CHECK_FALSE(codered::lll_griesmer_check(ham, 2, 6));
}

TEST_CASE("block-size-two bound equals the Griesmer inversion") {
  for (std::uint32_t q : {2u, 3u}) {
    const GriesmerProxy s(q);
    for (std::size_t k = 1; k <= 24; ++k)
      for (std::size_t n = k; n <= 96; ++n) {
        std::uint64_t scan = 0;
        for (std::uint64_t d = 1; d <= n; ++d)
          if (oracle::griesmer_sum(q, d, k) <= n) scan = d;
        REQUIRE(codered::bkz_output_bound(q, n, k, 2, s) == scan);
      }
  }
  CHECK(codered::bkz_output_bound(2, 24, 9, 2, GriesmerProxy(2)) == 9);
}

TEST_CASE("BKZ and slide bounds") {
  const GriesmerProxy s2(2);
  CHECK_THROWS_AS(codered::bkz_output_bound(2, 1280, 640, 8, s2), codered::UsageError);
  const std::uint64_t bkz8 = codered::bkz_prefix_output_bound(2, 1280, 640, 8, s2);
  CHECK(bkz8 == codered::bkz_output_bound(2, 1280, 638, 8, s2));
  CHECK(bkz8 >= 275);
  CHECK(codered::slide_output_bound(2, 1280, 640, 8, s2) >= 281);
  CHECK_THROWS_AS(codered::slide_output_bound(2, 100, 10, 4, s2), codered::UsageError);
  CHECK_THROWS_AS(codered::bkz_output_bound(3, 100, 10, 2, s2), codered::UsageError);

  // One slide block: the largest d with s(d, beta) <= n.
  for (std::size_t n = 4; n < 60; ++n) {
    std::uint64_t scan = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (s2(d, 4) <= n) scan = d;
    CHECK(codered::slide_output_bound(2, n, 4, 4, s2) == scan);
  }

  // The required length is nondecreasing in l1, which the binary search relies on.
  for (std::size_t k : {9u, 17u, 33u})
    for (std::uint64_t d = 2; d < 400; ++d) {
      REQUIRE(codered::bkz_required_length(d, k, 5, s2) >= codered::bkz_required_length(d - 1, k, 5, s2));
      REQUIRE(codered::slide_required_length(d, k - 1, 4, s2) >= codered::slide_required_length(d - 1, k - 1, 4, s2));
    }
}

TEST_CASE("approximation factor check") {
  CHECK(codered::bkz_approx_factor_check(3, 2, 4, 4, 3));
  CHECK_FALSE(codered::bkz_approx_factor_check(4, 2, 4, 4, 3));
  CHECK(codered::bkz_approx_factor_check(12, 2, 4, 2, 3));
  CHECK_FALSE(codered::bkz_approx_factor_check(13, 2, 4, 2, 3));
  CHECK(codered::bkz_approx_factor_check(1000, 2, 200, 2, 1));
}

TEST_CASE("twin reduction check") {
  const GriesmerProxy s2(2);
  // beta = 2, q = 2: next block head needs ceil((s(a, 2) - a) / 2).
  const std::vector<std::size_t> ok = {6, 1, 2, 1};
  CHECK(codered::twin_reduction_check(ok, 2, s2));
  const std::vector<std::size_t> bad = {6, 1, 1, 1};
  CHECK_FALSE(codered::twin_reduction_check(bad, 2, s2));
}
