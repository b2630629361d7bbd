#pragma once

#include <cstdint>
#include <span>

namespace codered {

// s(d, k): a length that any [n, k]_q code with minimum distance d must
// reach. Implementations must be nondecreasing in d with s(d,k) - d also
// nondecreasing.
class SqProxy {
 public:
  virtual ~SqProxy() = default;
  virtual std::uint64_t operator()(std::uint64_t d, std::size_t k) const = 0;
  virtual std::uint32_t q() const = 0;
};

// Griesmer bound: sum_{i<k} ceil(d / q^i).
class GriesmerProxy final : public SqProxy {
 public:
  explicit GriesmerProxy(std::uint32_t q);
  std::uint64_t operator()(std::uint64_t d, std::size_t k) const override;
  std::uint32_t q() const override { return q_; }

 private:
  std::uint32_t q_;
};

std::uint64_t griesmer_length(std::uint32_t q, std::uint64_t d, std::size_t k);

// n >= g_q(l_1, k).
bool lll_griesmer_check(std::span<const std::size_t> profile, std::uint32_t q, std::size_t n);

// Largest l_1 such that a beta-BKZ-reduced basis of an [n, k]_q code can have
// |b_1| = l_1 under the proxy. Requires (beta - 1) | (k - 1).
std::uint64_t bkz_output_bound(std::uint32_t q, std::size_t n, std::size_t k, std::size_t beta,
                               const SqProxy& proxy);
// Bound for any k: the first 1 + (beta - 1) * floor((k - 1) / (beta - 1)) rows
// of a BKZ-reduced basis are themselves BKZ reduced and span a code of length
// at most n, so the strict bound for that prefix applies.
std::uint64_t bkz_prefix_output_bound(std::uint32_t q, std::size_t n, std::size_t k, std::size_t beta,
                                      const SqProxy& proxy);

// Same for beta-slide-reduced bases. Requires beta | k.
std::uint64_t slide_output_bound(std::uint32_t q, std::size_t n, std::size_t k, std::size_t beta,
                                 const SqProxy& proxy);

// Minimal total length consumed by a reduced basis whose first epipodal
// length is l1; the bounds are the largest l1 keeping this within n.
std::uint64_t bkz_required_length(std::uint64_t l1, std::size_t k, std::size_t beta, const SqProxy& proxy);
std::uint64_t slide_required_length(std::uint64_t l1, std::size_t k, std::size_t beta, const SqProxy& proxy);

// l_1 <= q^(k - beta) * d_min.
bool bkz_approx_factor_check(std::size_t l1, std::uint32_t q, std::size_t k, std::size_t beta, std::size_t dmin);

// Consecutive slide blocks: a_{i+1} >= ceil((q-1) (s(a_i, beta) - a_i) / (q^beta - q))
// where a_i is the first epipodal length of block i.
bool twin_reduction_check(std::span<const std::size_t> profile, std::size_t beta, const SqProxy& proxy);

}  // namespace codered
