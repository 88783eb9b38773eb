// Runtime dispatch between the scalar reference kernels and the SIMD
// variants. Selection happens once; tests may force a specific ISA.

#include "ac4x/kernels.hpp"

#include <atomic>

#include "kernels_impl.hpp"

namespace ac4x::kernels {

namespace {

Isa detect() {
#if defined(AC4X_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
    return Isa::scalar;
}

std::atomic<Isa> g_isa{detect()};

}  // namespace

Isa active_isa() { return g_isa.load(std::memory_order_relaxed); }

Isa best_supported_isa() { return detect(); }

void force_isa(Isa isa) {
    if (isa == Isa::avx2 && detect() != Isa::avx2) isa = Isa::scalar;
    g_isa.store(isa, std::memory_order_relaxed);
}

#if defined(AC4X_HAVE_AVX2)
#define AC4X_DISPATCH(call) \
    (active_isa() == Isa::avx2 ? avx2::call : scalar::call)
#else
#define AC4X_DISPATCH(call) (scalar::call)
#endif

void axpby(double a, const double* x, double b, double* y, std::size_t n) {
    AC4X_DISPATCH(axpby(a, x, b, y, n));
}

void pw_mul(const double* a, const double* b, double* out, std::size_t n) {
    AC4X_DISPATCH(pw_mul(a, b, out, n));
}

double dot(const double* x, const double* y, std::size_t n) {
    return AC4X_DISPATCH(dot(x, y, n));
}

double max_abs(const double* x, std::size_t n) {
    return AC4X_DISPATCH(max_abs(x, n));
}

void star6(const double* const in[6], double* const out[6], std::size_t n) {
    AC4X_DISPATCH(star6(in, out, n));
}

void inner6(const double* const a[6], const double* const b[6], double* out,
            std::size_t n) {
    AC4X_DISPATCH(inner6(a, b, out, n));
}

void lincomb6(const double* const a[6], const double coeff[6], double* out,
              std::size_t n) {
    AC4X_DISPATCH(lincomb6(a, coeff, out, n));
}

void jconj6(const double* const a[6], const double* const w[6],
            double* const out[6], std::size_t n) {
    AC4X_DISPATCH(jconj6(a, w, out, n));
}

void q_required6(const double* vol, const double* asd_nsq,
                 const double* const wt[6], const double* const wb[6],
                 double* const out[6], std::size_t n) {
    AC4X_DISPATCH(q_required6(vol, asd_nsq, wt, wb, out, n));
}

#undef AC4X_DISPATCH

}  // namespace ac4x::kernels
