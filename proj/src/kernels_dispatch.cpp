#include "iblab/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace iblab::simd {

namespace detail {

double sum_scalar(const double*, std::size_t);
double dot_scalar(const double*, const double*, std::size_t);
void axpy_scalar(double*, double, const double*, std::size_t);
void scale_scalar(double*, double, std::size_t);
void fma_accumulate_scalar(double*, double, const double*, const double*, std::size_t);

#if IBLAB_HAVE_AVX2_KERNELS
double sum_avx2(const double*, std::size_t);
double dot_avx2(const double*, const double*, std::size_t);
void axpy_avx2(double*, double, const double*, std::size_t);
void scale_avx2(double*, double, std::size_t);
void fma_accumulate_avx2(double*, double, const double*, const double*, std::size_t);
#endif

} // namespace detail

namespace {

struct Vtable {
    double (*sum)(const double*, std::size_t);
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double*, double, const double*, std::size_t);
    void (*scale)(double*, double, std::size_t);
    void (*fma_accumulate)(double*, double, const double*, const double*, std::size_t);
};

constexpr Vtable kScalar{
    detail::sum_scalar, detail::dot_scalar, detail::axpy_scalar,
    detail::scale_scalar, detail::fma_accumulate_scalar};

#if IBLAB_HAVE_AVX2_KERNELS
constexpr Vtable kAvx2{
    detail::sum_avx2, detail::dot_avx2, detail::axpy_avx2,
    detail::scale_avx2, detail::fma_accumulate_avx2};
#endif

bool cpu_has_avx2() {
#if IBLAB_HAVE_AVX2_KERNELS
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend detect() {
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

Backend g_backend = detect();

const Vtable& table() {
#if IBLAB_HAVE_AVX2_KERNELS
    if (g_backend == Backend::Avx2) return kAvx2;
#endif
    return kScalar;
}

} // namespace

Backend active_backend() { return g_backend; }

const char* backend_name() {
    return g_backend == Backend::Avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend b) {
    return b == Backend::Scalar || cpu_has_avx2();
}

void force_backend(Backend b) {
    if (!backend_available(b)) throw std::runtime_error("requested SIMD backend not available");
    g_backend = b;
}

void reset_backend() { g_backend = detect(); }

double sum(const double* x, std::size_t n) { return table().sum(x, n); }

double dot(const double* x, const double* y, std::size_t n) { return table().dot(x, y, n); }

void axpy(double* y, double a, const double* x, std::size_t n) { table().axpy(y, a, x, n); }

void scale(double* y, double a, std::size_t n) { table().scale(y, a, n); }

void fma_accumulate(double* acc, double c, const double* a, const double* b, std::size_t n) {
    table().fma_accumulate(acc, c, a, b, n);
}

MeanStdErr mean_std_err(const double* x, std::size_t n) {
    if (n == 0) return {0.0, 0.0};
    const double s = sum(x, n);
    const double mean = s / static_cast<double>(n);
    if (n == 1) return {mean, 0.0};
    // var = (sum x^2 - n*mean^2) / (n-1), guarded against cancellation below 0
    const double ss = dot(x, x, n);
    double var = (ss - static_cast<double>(n) * mean * mean) / static_cast<double>(n - 1);
    if (var < 0.0) var = 0.0;
    return {mean, std::sqrt(var / static_cast<double>(n))};
}

} // namespace iblab::simd
