#pragma once

#include <cstdint>

#include "linalg.hpp"

namespace codered {

// Largest set of coordinates on which every codeword is determined by its
// value at one base coordinate: c_j = scalars[t] * c_base for j = coords[t].
struct RedundantSet {
  std::vector<std::size_t> coords;  // ascending, coords.front() == base
  std::size_t base = 0;
  std::vector<Elem> scalars;
};

RedundantSet max_redundant_set(const Matrix& m);
inline RedundantSet max_redundant_set(const CodeBasis& b) { return max_redundant_set(b.matrix()); }

// Averaging lower bound ceil((q-1) |Supp| / (q^k - 1)) on the redundant-set size.
std::size_t eta_lower_bound(std::uint32_t q, std::size_t k, std::size_t support);

bool is_backward_reduced(const CodeBasis& b);

// Transform A making A*B backward reduced. B must be proper.
Matrix backward_reduce(const CodeBasis& b);

// Backward reduces the prefixes [0, i) for i = tau, tau-1, ..., 1 in place;
// tau must lie in [1, k].
void full_backward_reduce(CodeBasis& b, std::size_t tau);

// Systematizes the k x n matrix on its first k independent columns and
// backward reduces growing column windows. Throws RetryableError when those
// columns do not all lie among the first k + beta.
CodeBasis selective_backward_reduce(const Matrix& m, std::size_t beta);

}  // namespace codered
