#include "bounds.hpp"

#include "error.hpp"
#include "gf.hpp"

namespace codered {
namespace {

using u128 = unsigned __int128;

// q^e capped at 2^100, far above any numerator formed here.
u128 capped_power(std::uint32_t q, std::size_t e) {
  const u128 cap = u128{1} << 100;
  u128 r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    r *= q;
    if (r >= cap) return cap;
  }
  return r;
}

std::uint64_t ceil_ratio(u128 num, u128 den) { return static_cast<std::uint64_t>((num + den - 1) / den); }

void check_field(std::uint32_t q) { Field::get(q); }

}  // namespace

GriesmerProxy::GriesmerProxy(std::uint32_t q) : q_(q) { check_field(q); }

std::uint64_t GriesmerProxy::operator()(std::uint64_t d, std::size_t k) const { return griesmer_length(q_, d, k); }

std::uint64_t griesmer_length(std::uint32_t q, std::uint64_t d, std::size_t k) {
  std::uint64_t total = 0;
  u128 qi = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (qi >= d) return total + (d == 0 ? 0 : k - i);
    total += ceil_ratio(d, qi);
    qi *= q;
  }
  return total;
}

bool lll_griesmer_check(std::span<const std::size_t> profile, std::uint32_t q, std::size_t n) {
  if (profile.empty()) throw UsageError("profile must be nonempty");
  return n >= griesmer_length(q, profile.front(), profile.size());
}

std::uint64_t bkz_required_length(std::uint64_t l1, std::size_t k, std::size_t beta, const SqProxy& s) {
  if (beta < 2 || (k - 1) % (beta - 1) != 0) throw UsageError("BKZ bound needs (beta - 1) | (k - 1)");
  const std::size_t p = (k - 1) / (beta - 1);
  if (p == 0) return l1;
  const u128 den = capped_power(s.q(), beta) - 1;
  std::uint64_t total = 0;
  std::uint64_t w = s(l1, beta);
  for (std::size_t i = 1; i < p; ++i) {
    const std::uint64_t c = ceil_ratio(u128{s.q() - 1} * w, den);
    total += w - c;
    w = s(c, beta);
  }
  return total + w;
}

std::uint64_t slide_required_length(std::uint64_t l1, std::size_t k, std::size_t beta, const SqProxy& s) {
  if (beta < 2 || k % beta != 0) throw UsageError("slide bound needs beta >= 2 dividing k");
  const std::size_t p = k / beta;
  const u128 den = capped_power(s.q(), beta) - s.q();
  std::uint64_t total = 0, c = l1;
  for (std::size_t i = 0; i < p; ++i) {
    const std::uint64_t w = s(c, beta);
    total += w;
    c = ceil_ratio(u128{s.q() - 1} * (w - c), den);
  }
  return total;
}

namespace {

template <typename Required>
std::uint64_t largest_feasible(std::size_t n, Required required) {
  if (required(1) > n) return 0;
  std::uint64_t lo = 1, hi = n;  // required(lo) <= n
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (required(mid) <= n) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace

std::uint64_t bkz_output_bound(std::uint32_t q, std::size_t n, std::size_t k, std::size_t beta,
                               const SqProxy& proxy) {
  if (proxy.q() != q) throw UsageError("proxy field does not match q");
  if (k < 1 || k > n) throw UsageError("need 1 <= k <= n");
  bkz_required_length(1, k, beta, proxy);
  return largest_feasible(n, [&](std::uint64_t d) { return bkz_required_length(d, k, beta, proxy); });
}

std::uint64_t bkz_prefix_output_bound(std::uint32_t q, std::size_t n, std::size_t k, std::size_t beta,
                                      const SqProxy& proxy) {
  if (beta < 2) throw UsageError("block size must be at least 2");
  if (k < 1 || k > n) throw UsageError("need 1 <= k <= n");
  const std::size_t prefix = 1 + (beta - 1) * ((k - 1) / (beta - 1));
  return bkz_output_bound(q, n, prefix, beta, proxy);
}

std::uint64_t slide_output_bound(std::uint32_t q, std::size_t n, std::size_t k, std::size_t beta,
                                 const SqProxy& proxy) {
  if (proxy.q() != q) throw UsageError("proxy field does not match q");
  if (k < 1 || k > n) throw UsageError("need 1 <= k <= n");
  slide_required_length(1, k, beta, proxy);
  return largest_feasible(n, [&](std::uint64_t d) { return slide_required_length(d, k, beta, proxy); });
}

bool bkz_approx_factor_check(std::size_t l1, std::uint32_t q, std::size_t k, std::size_t beta, std::size_t dmin) {
  if (beta > k) throw UsageError("block size exceeds dimension");
  return u128{l1} <= capped_power(q, k - beta) * dmin;
}

bool twin_reduction_check(std::span<const std::size_t> profile, std::size_t beta, const SqProxy& s) {
  if (beta < 2 || profile.size() % beta != 0) throw UsageError("twin check needs beta >= 2 dividing k");
  const u128 den = capped_power(s.q(), beta) - s.q();
  for (std::size_t i = 0; i + beta < profile.size(); i += beta) {
    const std::uint64_t a = profile[i];
    const std::uint64_t need = ceil_ratio(u128{s.q() - 1} * (s(a, beta) - a), den);
    if (profile[i + beta] < need) return false;
  }
  return true;
}

}  // namespace codered
