#pragma once

#include <cstddef>
#include <string>

// Batched double-precision kernels backing the Monte-Carlo estimators and the
// SEM sampler. Every kernel has a scalar reference implementation and, on
// x86-64, an AVX2+FMA variant; the active variant is picked once at startup
// from CPU capabilities and can be overridden for equivalence testing.
//
// SIMD variants reassociate reductions, so results may differ from the scalar
// reference by normal floating-point roundoff; tests bound the difference.

namespace iblab::simd {

enum class Backend { Scalar, Avx2 };

/// Backend currently routing the kernels.
Backend active_backend();

/// Name of the active backend ("scalar" or "avx2").
const char* backend_name();

/// True if the requested backend can run on this machine.
bool backend_available(Backend b);

/// Force a specific backend (used by the equivalence tests). Throws
/// std::runtime_error if the backend is not available on this CPU.
void force_backend(Backend b);

/// Reset to the auto-detected backend.
void reset_backend();

/// sum_i x[i]
double sum(const double* x, std::size_t n);

/// sum_i x[i] * y[i]
double dot(const double* x, const double* y, std::size_t n);

/// y[i] += a * x[i]
void axpy(double* y, double a, const double* x, std::size_t n);

/// y[i] *= a
void scale(double* y, double a, std::size_t n);

/// acc[i] += c * a[i] * b[i]  (quadratic-form accumulation across a sample batch)
void fma_accumulate(double* acc, double c, const double* a, const double* b, std::size_t n);

/// Mean and unbiased standard error of the mean over x[0..n).
struct MeanStdErr {
    double mean;
    double std_err;
};
MeanStdErr mean_std_err(const double* x, std::size_t n);

} // namespace iblab::simd
