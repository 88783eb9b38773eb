#pragma once

//==============================================================================
// kernels.hpp
// Batched pointwise kernels for fields of 2-forms stored component-major
// (six contiguous planes of npoints doubles). Every kernel has a scalar
// reference implementation and, on x86-64, an AVX2 variant; the active
// variant is selected once at startup from CPU features and can be forced
// for equivalence testing. Scalar and SIMD paths are required to agree to
// a few ulps (reductions re-associate) and are tested against each other.
//==============================================================================

#include <cstddef>

namespace ac4x::kernels {

enum class Isa { scalar, avx2 };

/// Variant currently dispatched to.
Isa active_isa();

/// Highest variant the CPU supports.
Isa best_supported_isa();

/// Force a variant (tests); Isa::avx2 on unsupported hardware falls back to
/// scalar.
void force_isa(Isa isa);

/// y[i] = a*x[i] + b*y[i]
void axpby(double a, const double* x, double b, double* y, std::size_t n);

/// out[i] = a[i] * b[i]
void pw_mul(const double* a, const double* b, double* out, std::size_t n);

/// sum_i x[i] * y[i]
double dot(const double* x, const double* y, std::size_t n);

/// max_i |x[i]|
double max_abs(const double* x, std::size_t n);

/// Pointwise Hodge star on six planes: out = (a5, -a4, a3, a2, -a1, a0).
/// In-place operation (out == in) is not supported.
void star6(const double* const in[6], double* const out[6], std::size_t n);

/// out[i] = <a(i), b(i)> (pointwise fiber inner product of two 2-form fields)
void inner6(const double* const a[6], const double* const b[6], double* out,
            std::size_t n);

/// out[i] = sum_c coeff[c] * a_c[i] (pairing against a constant 2-form)
void lincomb6(const double* const a[6], const double coeff[6], double* out,
              std::size_t n);

/// Pointwise conjugation a(J., J.) for the structure with unit self-dual
/// fundamental form w:  conj(a) = a - 2*asd_perp, where asd_perp is the
/// component of the self-dual part of a orthogonal to w. Planes must not
/// alias.
void jconj6(const double* const a[6], const double* const w[6],
            double* const out[6], std::size_t n);

/// Pointwise Calabi-Yau required-self-dual-part map:
///   out(i) = sqrt(vol[i] + 0.5*asd_nsq[i]) * wt(i) - wb(i)
/// with vol = e^F precomputed. Planes must not alias.
void q_required6(const double* vol, const double* asd_nsq,
                 const double* const wt[6], const double* const wb[6],
                 double* const out[6], std::size_t n);

}  // namespace ac4x::kernels
