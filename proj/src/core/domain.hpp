#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "linalg.hpp"

namespace codered {

using BigInt = boost::multiprecision::cpp_int;

// Tie-break value numerator / q in [0, 1). With j the first coordinate of
// Supp(p), numerator = enc(y_j / p_j).
struct TieBreak {
  std::uint32_t numerator = 0;
  std::uint32_t q = 2;
  double value() const { return static_cast<double>(numerator) / q; }
};

TieBreak tie_break(const Word& p, const Word& y);

// Scalar a minimizing |pi_{b_plus}(e + a b)| + TB_{b_plus}(e + a b). The
// comparison is exact: weight * q + tie-break numerator.
Elem size_reduce_coefficient(const Word& e, const Word& b, const Word& b_plus);

// Reduces y against rows k-1, ..., 0 of a proper basis.
Word size_reduce(const CodeBasis& b, const Word& y);

// Strict fundamental-domain membership of y for a proper basis.
bool in_fundamental_domain(const CodeBasis& b, const Word& y);

// Number of words in {1..q}^n in which every symbol occurs at most m times.
BigInt count_bounded_occupancy(std::size_t n, std::uint32_t q, std::size_t m);

// Weight distribution of the fundamental domain of one epipodal block of
// length ell; entry w counts words of weight w.
std::vector<BigInt> block_weight_distribution(std::size_t ell, std::uint32_t q);

// Weight distribution of the fundamental domain of a basis with the given
// epipodal profile. Coordinates of an ambient length n beyond the profile
// support are unconstrained. The result sums to q^(n-k).
std::vector<BigInt> fundamental_weight_distribution(std::span<const std::size_t> profile, std::uint32_t q,
                                                    std::optional<std::size_t> n = std::nullopt);

}  // namespace codered
