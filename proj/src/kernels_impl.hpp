#pragma once

// Internal declarations for the per-ISA kernel variants. Not installed.

#include <cstddef>

namespace ac4x::kernels {

#define AC4X_KERNEL_DECLS                                                        \
    void axpby(double a, const double* x, double b, double* y, std::size_t n);   \
    void pw_mul(const double* a, const double* b, double* out, std::size_t n);   \
    double dot(const double* x, const double* y, std::size_t n);                 \
    double max_abs(const double* x, std::size_t n);                              \
    void star6(const double* const in[6], double* const out[6], std::size_t n);  \
    void inner6(const double* const a[6], const double* const b[6], double* out, \
                std::size_t n);                                                  \
    void lincomb6(const double* const a[6], const double coeff[6], double* out,  \
                  std::size_t n);                                                \
    void jconj6(const double* const a[6], const double* const w[6],              \
                double* const out[6], std::size_t n);                            \
    void q_required6(const double* vol, const double* asd_nsq,                   \
                     const double* const wt[6], const double* const wb[6],       \
                     double* const out[6], std::size_t n);

namespace scalar {
AC4X_KERNEL_DECLS
}

#if defined(AC4X_HAVE_AVX2)
namespace avx2 {
AC4X_KERNEL_DECLS
}
#endif

#undef AC4X_KERNEL_DECLS

}  // namespace ac4x::kernels
