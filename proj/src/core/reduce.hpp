#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "error.hpp"
#include "linalg.hpp"

namespace codered {

// Finds a short nonzero codeword of a small code given by a basis matrix.
//
// Exhaustive mode enumerates projective coefficient vectors in lexicographic
// order and returns the first word of minimum weight; it refuses dimensions
// above the cutoff. Lee-Brickell mode samples random information sets and
// combines at most p rows of each systematic form; it never returns a word
// heavier than the lightest input row.
class ShortestOracle {
 public:
  enum class Kind { Exhaustive, LeeBrickell };

  static ShortestOracle exhaustive(std::size_t cutoff = 0);
  // iterations = 0 selects 50 * dimension.
  static ShortestOracle lee_brickell(unsigned p = 2, std::size_t iterations = 0, std::uint64_t seed = 0);

  Kind kind() const { return kind_; }
  std::size_t cutoff_for(const Field& f) const;
  std::size_t calls() const { return calls_; }

  Word shortest(const Matrix& rows);

 private:
  Word exhaustive_search(const Matrix& rows) const;
  Word lee_brickell_search(const Matrix& rows);

  Kind kind_ = Kind::Exhaustive;
  std::size_t cutoff_ = 0;
  unsigned p_ = 2;
  std::size_t iterations_ = 0;
  std::mt19937_64 rng_;
  std::size_t calls_ = 0;
};

// Default exhaustive dimension limit: 20 for q = 2, scaled down by log2 q.
std::size_t default_exhaustive_cutoff(std::uint32_t q);

// Shortest word of the code spanned by two rows: x1 + a x2 with the
// size-reduction coefficient a if strictly lighter than x2, otherwise x2.
// Coefficients are returned as (a1, a2).
std::pair<Elem, Elem> shortest_pair_coefficients(const Word& x1, const Word& x2);

struct ReductionStats {
  std::size_t loop_iterations = 0;
  std::size_t insertions = 0;
  std::size_t backward_steps = 0;
};

// Raised when an iteration cap is hit; carries the basis reached so far.
class CapExhaustedError : public Error {
 public:
  CapExhaustedError(const std::string& what, CodeBasis partial, ReductionStats stats)
      : Error(what), partial_(std::move(partial)), stats_(stats) {}
  const CodeBasis& partial() const { return partial_; }
  const ReductionStats& stats() const { return stats_; }

 private:
  CodeBasis partial_;
  ReductionStats stats_;
};

// Upper bound on BKZ loop iterations from the potential argument; saturates.
std::uint64_t bkz_iteration_bound(std::size_t n, std::size_t k, std::size_t beta);

// In-place BKZ. Block size 2 uses the two-row routine and is capped at
// 2nk + k iterations; larger blocks default to a cap of 10^4 nk.
ReductionStats bkz_reduce(CodeBasis& b, std::size_t beta, ShortestOracle& oracle,
                          std::optional<std::uint64_t> max_iterations = std::nullopt);
ReductionStats lll_reduce(CodeBasis& b);

// In-place slide reduction; beta must divide k. Capped at 4kn/beta iterations.
ReductionStats slide_reduce(CodeBasis& b, std::size_t beta, ShortestOracle& oracle,
                            std::optional<std::uint64_t> max_iterations = std::nullopt);

// Shortest word among the first beta rows of the systematized basis.
Word one_block_reduce(const CodeBasis& b, std::size_t beta, ShortestOracle& oracle);

// For each i < k-1 with l_i >= skip_threshold, inserts a short primitive
// word of the projected tail block at position i.
ReductionStats approx_griesmer_reduce(CodeBasis& b, ShortestOracle& oracle, std::size_t skip_threshold = 0);

// Block forward/backward predicates used by the reduction loops.
bool is_forward_reduced(const CodeBasis& b, std::size_t first, std::size_t last, ShortestOracle& oracle);

}  // namespace codered
