#include "spcp/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "spcp/error.hpp"

namespace spcp {

Vec matvec(const Matrix& m, std::span<const double> v) {
    require(m.cols() == v.size(), "matvec: matrix has " + std::to_string(m.cols()) +
                                      " cols but vector has " + std::to_string(v.size()));
    Vec out(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "matmul: inner dimensions " + std::to_string(a.cols()) +
                                      " and " + std::to_string(b.rows()) + " do not agree");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    return out;
}

Matrix hadamard_broadcast(const Matrix& w, std::span<const double> h) {
    require(w.rows() == h.size(), "hadamard_broadcast: matrix has " + std::to_string(w.rows()) +
                                      " rows but vector has " + std::to_string(h.size()));
    Matrix out(w.rows(), w.cols());
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j) out(i, j) = w(i, j) * h[i];
    return out;
}

double logsumexp(std::span<const double> v) {
    require(!v.empty(), "logsumexp: empty input");
    double m = v[0];
    for (double x : v) m = std::max(m, x);
    double acc = 0.0;
    for (double x : v) acc += std::exp(x - m);
    return m + std::log(acc);
}

Vec softmax(std::span<const double> v) {
    require(!v.empty(), "softmax: empty input");
    double m = v[0];
    for (double x : v) m = std::max(m, x);
    Vec out(v.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        out[k] = std::exp(v[k] - m);
        acc += out[k];
    }
    for (double& x : out) x /= acc;
    return out;
}

std::size_t argmax(std::span<const double> v) {
    require(!v.empty(), "argmax: empty input");
    std::size_t best = 0;
    for (std::size_t k = 1; k < v.size(); ++k)
        if (v[k] > v[best]) best = k;
    return best;
}

double top_percentile(std::span<const double> values, double rho) {
    require(!values.empty(), "top_percentile: empty input");
    require(rho > 0.0 && rho <= 100.0, "top_percentile: rho must lie in (0, 100]");
    const std::size_t n = values.size();
    // Guard against the product landing one ulp above an exact integer.
    auto rank = static_cast<long long>(std::ceil(rho / 100.0 * static_cast<double>(n) - 1e-9));
    rank = std::clamp(rank, 1LL, static_cast<long long>(n));
    std::vector<double> work(values.begin(), values.end());
    auto nth = work.begin() + (rank - 1);
    std::nth_element(work.begin(), nth, work.end(), std::greater<double>());
    return *nth;
}

double top_percentile(const Matrix& values, double rho) {
    return top_percentile(std::span<const double>(values.data()), rho);
}

double l2_norm(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

}  // namespace spcp
