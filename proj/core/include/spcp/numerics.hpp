#pragma once

#include <cstddef>
#include <span>

#include "spcp/matrix.hpp"

namespace spcp {

// Dense kernels with a fixed left-to-right summation order so every result
// is reproducible run to run. No BLAS, no reordering.

// out[i] = sum_j m(i,j) * v[j], summed in ascending j.
Vec matvec(const Matrix& m, std::span<const double> v);

// Textbook product, inner sum in ascending index order.
Matrix matmul(const Matrix& a, const Matrix& b);

// out(i,j) = w(i,j) * h[i]; h broadcast across columns.
Matrix hadamard_broadcast(const Matrix& w, std::span<const double> h);

// log(sum_k exp(v[k])) with max-shift; finite for any finite input.
double logsumexp(std::span<const double> v);

// softmax with max-shift; sums to 1 for finite input.
Vec softmax(std::span<const double> v);

// Index of the largest entry, lowest index wins ties.
std::size_t argmax(std::span<const double> v);

// Nearest-rank-from-the-top selection: sort the values descending and return
// the one at rank ceil(rho/100 * n), clamped to [1, n]. rho in (0, 100].
// Selection runs in O(n) but matches the full-sort rule exactly.
double top_percentile(std::span<const double> values, double rho);

double top_percentile(const Matrix& values, double rho);

double l2_norm(std::span<const double> v);

}  // namespace spcp
