// Scalar reference kernels. These define the semantics; the SIMD variants
// are equivalence-tested against them.

#include <cmath>

#include "kernels_impl.hpp"

namespace ac4x::kernels::scalar {

void axpby(double a, const double* x, double b, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

void pw_mul(const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

double dot(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

double max_abs(const double* x, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i]));
    return m;
}

void star6(const double* const in[6], double* const out[6], std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[0][i] = in[5][i];
        out[1][i] = -in[4][i];
        out[2][i] = in[3][i];
        out[3][i] = in[2][i];
        out[4][i] = -in[1][i];
        out[5][i] = in[0][i];
    }
}

void inner6(const double* const a[6], const double* const b[6], double* out,
            std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a[0][i] * b[0][i] + a[1][i] * b[1][i] + a[2][i] * b[2][i] +
                 a[3][i] * b[3][i] + a[4][i] * b[4][i] + a[5][i] * b[5][i];
    }
}

void lincomb6(const double* const a[6], const double coeff[6], double* out,
              std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = coeff[0] * a[0][i] + coeff[1] * a[1][i] + coeff[2] * a[2][i] +
                 coeff[3] * a[3][i] + coeff[4] * a[4][i] + coeff[5] * a[5][i];
    }
}

void jconj6(const double* const a[6], const double* const w[6],
            double* const out[6], std::size_t n) {
    // conj(a) = a - 2 p, with p = a^+ - (<a^+, w>/2) w the part of the
    // self-dual component orthogonal to w. Star signs are inlined.
    for (std::size_t i = 0; i < n; ++i) {
        const double p0 = 0.5 * (a[0][i] + a[5][i]);
        const double p1 = 0.5 * (a[1][i] - a[4][i]);
        const double p2 = 0.5 * (a[2][i] + a[3][i]);
        // <a^+, w> over the sd coordinates; each sd coordinate appears twice.
        const double s = p0 * (w[0][i] + w[5][i]) + p1 * (w[1][i] - w[4][i]) +
                         p2 * (w[2][i] + w[3][i]);
        const double q0 = p0 - 0.5 * s * w[0][i];
        const double q1 = p1 - 0.5 * s * w[1][i];
        const double q2 = p2 - 0.5 * s * w[2][i];
        const double q3 = p2 - 0.5 * s * w[3][i];
        const double q4 = -p1 - 0.5 * s * w[4][i];
        const double q5 = p0 - 0.5 * s * w[5][i];
        out[0][i] = a[0][i] - 2.0 * q0;
        out[1][i] = a[1][i] - 2.0 * q1;
        out[2][i] = a[2][i] - 2.0 * q2;
        out[3][i] = a[3][i] - 2.0 * q3;
        out[4][i] = a[4][i] - 2.0 * q4;
        out[5][i] = a[5][i] - 2.0 * q5;
    }
}

void q_required6(const double* vol, const double* asd_nsq,
                 const double* const wt[6], const double* const wb[6],
                 double* const out[6], std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double lam = std::sqrt(vol[i] + 0.5 * asd_nsq[i]);
        out[0][i] = lam * wt[0][i] - wb[0][i];
        out[1][i] = lam * wt[1][i] - wb[1][i];
        out[2][i] = lam * wt[2][i] - wb[2][i];
        out[3][i] = lam * wt[3][i] - wb[3][i];
        out[4][i] = lam * wt[4][i] - wb[4][i];
        out[5][i] = lam * wt[5][i] - wb[5][i];
    }
}

}  // namespace ac4x::kernels::scalar
