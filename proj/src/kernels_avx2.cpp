// AVX2 variants of the pointwise field kernels (4 doubles per vector).
// Unaligned loads throughout; tails fall back to the scalar reference.

#include "kernels_impl.hpp"

#if defined(AC4X_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>

namespace ac4x::kernels::avx2 {

namespace {
inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_max_sd(lo, sh));
}

const __m256d kAbsMask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
}  // namespace

void axpby(double a, const double* x, double b, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vx = _mm256_loadu_pd(x + i);
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_add_pd(_mm256_mul_pd(va, vx), _mm256_mul_pd(vb, vy));
        _mm256_storeu_pd(y + i, vy);
    }
    if (i < n) scalar::axpby(a, x + i, b, y + i, n - i);
}

void pw_mul(const double* a, const double* b, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i),
                                                _mm256_loadu_pd(b + i)));
    }
    if (i < n) scalar::pw_mul(a + i, b + i, out + i, n - i);
}

double dot(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i),
                                               _mm256_loadu_pd(y + i)));
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

double max_abs(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_max_pd(acc, _mm256_and_pd(kAbsMask, _mm256_loadu_pd(x + i)));
    }
    double m = hmax(acc);
    for (; i < n; ++i) m = std::max(m, std::abs(x[i]));
    return m;
}

void star6(const double* const in[6], double* const out[6], std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out[0] + i, _mm256_loadu_pd(in[5] + i));
        _mm256_storeu_pd(out[1] + i, _mm256_sub_pd(zero, _mm256_loadu_pd(in[4] + i)));
        _mm256_storeu_pd(out[2] + i, _mm256_loadu_pd(in[3] + i));
        _mm256_storeu_pd(out[3] + i, _mm256_loadu_pd(in[2] + i));
        _mm256_storeu_pd(out[4] + i, _mm256_sub_pd(zero, _mm256_loadu_pd(in[1] + i)));
        _mm256_storeu_pd(out[5] + i, _mm256_loadu_pd(in[0] + i));
    }
    if (i < n) {
        const double* tin[6];
        double* tout[6];
        for (int c = 0; c < 6; ++c) {
            tin[c] = in[c] + i;
            tout[c] = out[c] + i;
        }
        scalar::star6(tin, tout, n - i);
    }
}

void inner6(const double* const a[6], const double* const b[6], double* out,
            std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d s = _mm256_mul_pd(_mm256_loadu_pd(a[0] + i), _mm256_loadu_pd(b[0] + i));
        for (int c = 1; c < 6; ++c) {
            s = _mm256_add_pd(s, _mm256_mul_pd(_mm256_loadu_pd(a[c] + i),
                                               _mm256_loadu_pd(b[c] + i)));
        }
        _mm256_storeu_pd(out + i, s);
    }
    if (i < n) {
        const double* ta[6];
        const double* tb[6];
        for (int c = 0; c < 6; ++c) {
            ta[c] = a[c] + i;
            tb[c] = b[c] + i;
        }
        scalar::inner6(ta, tb, out + i, n - i);
    }
}

void lincomb6(const double* const a[6], const double coeff[6], double* out,
              std::size_t n) {
    __m256d vc[6];
    for (int c = 0; c < 6; ++c) vc[c] = _mm256_set1_pd(coeff[c]);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d s = _mm256_mul_pd(vc[0], _mm256_loadu_pd(a[0] + i));
        for (int c = 1; c < 6; ++c) {
            s = _mm256_add_pd(s, _mm256_mul_pd(vc[c], _mm256_loadu_pd(a[c] + i)));
        }
        _mm256_storeu_pd(out + i, s);
    }
    if (i < n) {
        const double* ta[6];
        for (int c = 0; c < 6; ++c) ta[c] = a[c] + i;
        scalar::lincomb6(ta, coeff, out + i, n - i);
    }
}

void jconj6(const double* const a[6], const double* const w[6],
            double* const out[6], std::size_t n) {
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d a0 = _mm256_loadu_pd(a[0] + i), a1 = _mm256_loadu_pd(a[1] + i);
        __m256d a2 = _mm256_loadu_pd(a[2] + i), a3 = _mm256_loadu_pd(a[3] + i);
        __m256d a4 = _mm256_loadu_pd(a[4] + i), a5 = _mm256_loadu_pd(a[5] + i);
        __m256d w0 = _mm256_loadu_pd(w[0] + i), w1 = _mm256_loadu_pd(w[1] + i);
        __m256d w2 = _mm256_loadu_pd(w[2] + i), w3 = _mm256_loadu_pd(w[3] + i);
        __m256d w4 = _mm256_loadu_pd(w[4] + i), w5 = _mm256_loadu_pd(w[5] + i);

        __m256d p0 = _mm256_mul_pd(half, _mm256_add_pd(a0, a5));
        __m256d p1 = _mm256_mul_pd(half, _mm256_sub_pd(a1, a4));
        __m256d p2 = _mm256_mul_pd(half, _mm256_add_pd(a2, a3));

        __m256d s = _mm256_mul_pd(p0, _mm256_add_pd(w0, w5));
        s = _mm256_add_pd(s, _mm256_mul_pd(p1, _mm256_sub_pd(w1, w4)));
        s = _mm256_add_pd(s, _mm256_mul_pd(p2, _mm256_add_pd(w2, w3)));
        const __m256d hs = _mm256_mul_pd(half, s);

        __m256d q0 = _mm256_sub_pd(p0, _mm256_mul_pd(hs, w0));
        __m256d q1 = _mm256_sub_pd(p1, _mm256_mul_pd(hs, w1));
        __m256d q2 = _mm256_sub_pd(p2, _mm256_mul_pd(hs, w2));
        __m256d q3 = _mm256_sub_pd(p2, _mm256_mul_pd(hs, w3));
        __m256d q4 = _mm256_sub_pd(_mm256_sub_pd(_mm256_setzero_pd(), p1),
                                   _mm256_mul_pd(hs, w4));
        __m256d q5 = _mm256_sub_pd(p0, _mm256_mul_pd(hs, w5));

        _mm256_storeu_pd(out[0] + i, _mm256_sub_pd(a0, _mm256_mul_pd(two, q0)));
        _mm256_storeu_pd(out[1] + i, _mm256_sub_pd(a1, _mm256_mul_pd(two, q1)));
        _mm256_storeu_pd(out[2] + i, _mm256_sub_pd(a2, _mm256_mul_pd(two, q2)));
        _mm256_storeu_pd(out[3] + i, _mm256_sub_pd(a3, _mm256_mul_pd(two, q3)));
        _mm256_storeu_pd(out[4] + i, _mm256_sub_pd(a4, _mm256_mul_pd(two, q4)));
        _mm256_storeu_pd(out[5] + i, _mm256_sub_pd(a5, _mm256_mul_pd(two, q5)));
    }
    if (i < n) {
        const double* ta[6];
        const double* tw[6];
        double* tout[6];
        for (int c = 0; c < 6; ++c) {
            ta[c] = a[c] + i;
            tw[c] = w[c] + i;
            tout[c] = out[c] + i;
        }
        scalar::jconj6(ta, tw, tout, n - i);
    }
}

void q_required6(const double* vol, const double* asd_nsq,
                 const double* const wt[6], const double* const wb[6],
                 double* const out[6], std::size_t n) {
    const __m256d half = _mm256_set1_pd(0.5);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d lam = _mm256_sqrt_pd(
            _mm256_add_pd(_mm256_loadu_pd(vol + i),
                          _mm256_mul_pd(half, _mm256_loadu_pd(asd_nsq + i))));
        for (int c = 0; c < 6; ++c) {
            __m256d v = _mm256_sub_pd(_mm256_mul_pd(lam, _mm256_loadu_pd(wt[c] + i)),
                                      _mm256_loadu_pd(wb[c] + i));
            _mm256_storeu_pd(out[c] + i, v);
        }
    }
    if (i < n) {
        const double* twt[6];
        const double* twb[6];
        double* tout[6];
        for (int c = 0; c < 6; ++c) {
            twt[c] = wt[c] + i;
            twb[c] = wb[c] + i;
            tout[c] = out[c] + i;
        }
        scalar::q_required6(vol + i, asd_nsq + i, twt, twb, tout, n - i);
    }
}

}  // namespace ac4x::kernels::avx2

#endif  // AC4X_HAVE_AVX2
