#include "iblab/kernels.hpp"

#include <cmath>

// Scalar reference kernels. These define the semantics; the AVX2 variants in
// kernels_avx2.cpp must agree with them up to reduction roundoff.

namespace iblab::simd::detail {

double sum_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy_scalar(double* y, double a, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double* y, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] *= a;
}

void fma_accumulate_scalar(double* acc, double c, const double* a, const double* b,
                           std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += c * a[i] * b[i];
}

} // namespace iblab::simd::detail
