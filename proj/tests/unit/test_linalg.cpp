#include <doctest.h>

#include <random>
#include <sstream>

#include "error.hpp"
#include "fixtures.hpp"
#include "linalg.hpp"
#include "oracles.hpp"

using codered::CodeBasis;
using codered::Elem;
using codered::Field;
using codered::Mask;
using codered::Matrix;
using codered::Word;
using fixtures::matrix;
using fixtures::values;
using fixtures::word;

TEST_CASE("word arithmetic matches coordinatewise field operations") {
  std::mt19937_64 rng(7);
  for (std::uint32_t q : {2u, 3u, 4u, 7u, 16u, 251u}) {
    const Field& f = Field::get(q);
    for (std::size_t n : {1u, 63u, 64u, 65u, 200u}) {
      const Matrix m = oracle::random_matrix(f, 2, n, rng);
      Word a = m.row(0);
      const Word b = m.row(1);
      const Elem c = static_cast<Elem>(rng() % q);
      Word sum = a;
      sum.add_scaled(b, c);
      std::size_t w = 0;
      for (std::size_t j = 0; j < n; ++j) {
        REQUIRE(sum[j] == f.add(a[j], f.mul(c, b[j])));
        if (a[j]) ++w;
      }
      CHECK(a.weight() == w);
      CHECK(a.support().size() == w);
      CHECK(a.support_mask().count() == w);
      Word scaled = a;
      scaled.scale(c);
      for (std::size_t j = 0; j < n; ++j) REQUIRE(scaled[j] == f.mul(c, a[j]));
    }
  }
}

TEST_CASE("projections zero the chosen coordinates") {
  const Word x = word(3, {1, 1, 0});
  const Word y = word(3, {2, 1, 2});
  CHECK(values(y.projected_off(x.support_mask())) == std::vector<Elem>{0, 0, 2});
  CHECK(y.projected_off(Mask(3)) == y);
  CHECK(values(word(2, {1, 1, 1}).projected_on(word(2, {1, 0, 1}).support_mask())) == std::vector<Elem>{1, 0, 1});

  // Linear, idempotent and weight non-increasing.
  std::mt19937_64 rng(11);
  const Field& f = Field::get(5);
  for (int t = 0; t < 50; ++t) {
    const Matrix m = oracle::random_matrix(f, 3, 30, rng);
    const Mask s = m.row(2).support_mask();
    Word sum = m.row(0);
    sum.add_scaled(m.row(1), 3);
    Word parts = m.row(0).projected_off(s);
    parts.add_scaled(m.row(1).projected_off(s), 3);
    CHECK(sum.projected_off(s) == parts);
    CHECK(m.row(0).projected_off(s).projected_off(s) == m.row(0).projected_off(s));
    CHECK(m.row(0).projected_off(s).weight() <= m.row(0).weight());
    CHECK(m.row(0).weight_off(s) + m.row(0).weight_on(s) == m.row(0).weight());
  }
}

TEST_CASE("words reject mismatched operands") {
  Word a = word(2, {1, 0, 1});
  CHECK_THROWS_AS(a.add_scaled(word(3, {1, 0, 1}), 1), codered::UsageError);
  CHECK_THROWS_AS(a.add_scaled(word(2, {1, 0}), 1), codered::UsageError);
  CHECK_THROWS_AS(a.set(3, 1), codered::UsageError);
  CHECK_THROWS_AS(a.set(0, 2), codered::UsageError);
}

TEST_CASE("epipodal profile of small bases") {
  CHECK(CodeBasis(matrix(2, {{1, 1, 0}, {0, 1, 1}})).profile() == std::vector<std::size_t>{2, 1});
  CHECK(values(CodeBasis(matrix(2, {{1, 1, 0}, {0, 1, 1}})).epipodal(1)) == std::vector<Elem>{0, 0, 1});
  CHECK(CodeBasis(matrix(2, {{1, 1, 1, 0}, {0, 0, 1, 1}})).profile() == std::vector<std::size_t>{3, 1});
  CHECK(CodeBasis(matrix(3, {{2, 0, 1, 1}})).profile() == std::vector<std::size_t>{3});
  CHECK_THROWS_AS(CodeBasis(matrix(2, {{1, 1, 0}, {1, 1, 0}})), codered::DomainError);
}

TEST_CASE("block transforms keep prefixes in sync with a fresh computation") {
  std::mt19937_64 rng(3);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field& f = Field::get(q);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t k = 2 + rng() % 5, n = k + rng() % 12;
      CodeBasis b(oracle::random_full_rank(f, k, n, rng));
      const std::size_t support = b.support().count();
      for (int step = 0; step < 20; ++step) {
        const std::size_t i = rng() % k, j = i + rng() % (k - i);
        if (rng() % 2) {
          const std::size_t s = j - i + 1;
          Matrix a = oracle::random_full_rank(f, s, s, rng);
          const auto before = b.profile();
          std::size_t sum_before = 0, sum_after = 0;
          for (std::size_t t = i; t <= j; ++t) sum_before += before[t];
          b.apply_block_transform(i, j, a);
          const auto after = b.profile();
          for (std::size_t t = i; t <= j; ++t) sum_after += after[t];
          CHECK(sum_before == sum_after);
          for (std::size_t t = 0; t < k; ++t)
            if (t < i || t > j) CHECK(before[t] == after[t]);
        } else if (i < j) {
          const auto before = b.profile();
          b.add_row_multiple(i, j, static_cast<Elem>(rng() % q));
          CHECK(b.profile() == before);
        }
        REQUIRE(b.profile() == oracle::naive_profile(b.matrix()));
        const CodeBasis fresh(b.matrix());
        for (std::size_t t = 0; t <= k; ++t) REQUIRE(fresh.prefix_support(t) == b.prefix_support(t));
        CHECK(support == b.support().count());
      }
    }
  }
}

TEST_CASE("block transform examples and preconditions") {
  CodeBasis b(matrix(2, {{1, 1, 0}, {0, 1, 1}}));
  b.apply_block_transform(1, 1, matrix(2, {{1}}));
  CHECK(b.matrix() == matrix(2, {{1, 1, 0}, {0, 1, 1}}));
  b.apply_block_transform(0, 1, matrix(2, {{0, 1}, {1, 0}}));
  CHECK(b.matrix() == matrix(2, {{0, 1, 1}, {1, 1, 0}}));
  CHECK(b.profile() == std::vector<std::size_t>{2, 1});
  CHECK_THROWS_AS(b.apply_block_transform(0, 1, matrix(2, {{1, 1}, {1, 1}})), codered::UsageError);
  CHECK_THROWS_AS(b.add_row_multiple(1, 0, 1), codered::UsageError);

  CodeBasis c(matrix(2, {{1, 1, 0}, {0, 1, 1}}));
  c.add_row_multiple(0, 1, 1);
  CHECK(c.matrix() == matrix(2, {{1, 1, 0}, {1, 0, 1}}));
  CHECK(c.profile() == std::vector<std::size_t>{2, 1});
  CodeBasis d(matrix(3, {{1, 2, 0}, {0, 1, 1}}));
  d.add_row_multiple(0, 1, 2);
  CHECK(d.profile() == std::vector<std::size_t>{2, 1});
}

TEST_CASE("profile sums to the code support") {
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {2u, 3u, 5u, 8u}) {
    const Field& f = Field::get(q);
    for (int t = 0; t < 30; ++t) {
      const std::size_t k = 1 + rng() % 4, n = k + rng() % 6;
      Matrix m = oracle::random_full_rank(f, k, n, rng);
      if (rng() % 2) {
        // Force an all-zero column.
        for (std::size_t i = 0; i < k; ++i) m.set(i, n - 1, 0);
        if (m.rank() != k) continue;
      }
      const CodeBasis b(m);
      std::size_t sum = 0;
      for (auto l : b.profile()) sum += l;
      std::size_t support = 0;
      std::vector<bool> seen(n, false);
      for (const auto& c : oracle::all_codewords(m))
        for (std::size_t j = 0; j < n; ++j)
          if (c[j]) seen[j] = true;
      for (bool s : seen) support += s;
      CHECK(sum == support);
    }
  }
}

TEST_CASE("systematization with and without a given information set") {
  const CodeBasis b(matrix(3, {{2, 1, 0}, {1, 1, 1}}));
  const std::vector<std::size_t> s = {0, 1};
  CHECK(codered::systematize(b, s).matrix() == matrix(3, {{1, 0, 2}, {0, 1, 2}}));
  CHECK(codered::systematize(CodeBasis(matrix(2, {{1, 1}, {1, 0}})), s).matrix() == matrix(2, {{1, 0}, {0, 1}}));
  const std::vector<std::size_t> bad = {0, 2};
  CHECK_THROWS_AS(codered::systematize(CodeBasis(matrix(2, {{1, 1, 1}, {0, 1, 0}})), bad), codered::DomainError);

  std::mt19937_64 rng(9);
  for (std::uint32_t q : {2u, 3u, 4u, 7u}) {
    const Field& f = Field::get(q);
    for (int t = 0; t < 30; ++t) {
      const std::size_t k = 1 + rng() % 4, n = k + rng() % 5;
      const Matrix m = oracle::random_full_rank(f, k, n, rng);
      const CodeBasis sys = codered::systematize(CodeBasis(m));
      CHECK(sys.is_proper());
      CHECK(oracle::span(sys.matrix()) == oracle::span(m));
      const auto info = codered::first_information_set(m);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r = 0; r < k; ++r) CHECK(sys.matrix().at(r, info[i]) == (r == i ? 1u : 0u));
      // Lexicographically first: every earlier column choice is dependent.
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t lo = i ? info[i - 1] + 1 : 0;
        for (std::size_t c = lo; c < info[i]; ++c) {
          std::vector<Word> cols;
          for (std::size_t t2 = 0; t2 <= i; ++t2) {
            Word col(f, k);
            const std::size_t src = t2 < i ? info[t2] : c;
            for (std::size_t r = 0; r < k; ++r) col.set(r, m.at(r, src));
            cols.push_back(col);
          }
          CHECK(Matrix(std::move(cols)).rank() <= i);
        }
      }
    }
  }
}

TEST_CASE("rank and coefficients agree with brute force") {
  std::mt19937_64 rng(13);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field& f = Field::get(q);
    for (int t = 0; t < 40; ++t) {
      const std::size_t k = 1 + rng() % 4, n = 1 + rng() % 6;
      const Matrix m = oracle::random_matrix(f, k, n, rng);
      CHECK(m.rank() == oracle::rank_by_counting(m));
    }
    for (int t = 0; t < 20; ++t) {
      const std::size_t k = 1 + rng() % 3, n = k + 2;
      const Matrix m = oracle::random_full_rank(f, k, n, rng);
      std::vector<Elem> coeffs(k);
      for (auto& c : coeffs) c = static_cast<Elem>(rng() % q);
      const Word w = Word::from_values(f, oracle::combine(f, m, coeffs));
      const auto solved = codered::solve_coefficients(m, w);
      REQUIRE(solved);
      CHECK(*solved == coeffs);
    }
  }
  CHECK_FALSE(codered::solve_coefficients(matrix(2, {{1, 1, 0}}), word(2, {1, 0, 0})));
}

TEST_CASE("row echelon tracks its transform") {
  std::mt19937_64 rng(17);
  const Field& f = Field::get(9);
  for (int t = 0; t < 20; ++t) {
    const Matrix m = oracle::random_matrix(f, 4, 7, rng);
    const auto e = codered::row_echelon(m, true);
    REQUIRE(e.transform);
    CHECK(*e.transform * m == e.rows);
    CHECK(e.rank() == m.rank());
  }
}

TEST_CASE("blocks are projected codes") {
  const CodeBasis b(matrix(2, {{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}}));
  const CodeBasis blk = b.block(1, 2);
  CHECK(blk.k() == 2);
  CHECK(blk.matrix() == matrix(2, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(b.block_rows(2, 10).num_rows() == 1);
  CHECK_THROWS_AS(b.block_rows(3, 3), codered::UsageError);
}

TEST_CASE("matrix text format round trips") {
  const Matrix m = matrix(5, {{0, 1, 2, 3}, {4, 0, 0, 1}});
  std::stringstream s;
  codered::write_matrix(s, m);
  CHECK(codered::read_matrix(s) == m);
  std::istringstream bad_entry("2 1 2\n1 2\n");
  CHECK_THROWS_AS(codered::read_matrix(bad_entry), codered::UsageError);
  std::istringstream truncated("3 2 2\n1 2\n1\n");
  CHECK_THROWS_AS(codered::read_matrix(truncated), codered::UsageError);
  std::istringstream bad_q("6 1 1\n1\n");
  CHECK_THROWS(codered::read_matrix(bad_q));
  CHECK_THROWS_AS(codered::read_matrix_file("/nonexistent/matrix.txt"), codered::IoError);
}
