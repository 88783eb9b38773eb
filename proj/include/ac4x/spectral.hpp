#pragma once

//==============================================================================
// spectral.hpp
// Fourier exterior calculus on the flat unit 4-torus: exterior derivative and
// codifferential as Fourier multipliers, pointwise Hodge star on any degree,
// periodic quadrature, and cup products. Exact on trigonometric polynomials
// resolved by the grid; d∘d and delta∘delta vanish to rounding.
//==============================================================================

#include <complex>
#include <mutex>
#include <vector>

#include "ac4x/form_field.hpp"

namespace ac4x {

/// FFT workspace for one torus grid size. Access through get(); the methods
/// serialize internally, so concurrent calls are safe (and sequential).
class Spectral {
  public:
    static Spectral& get(int n);

    /// Analysis: hat = FFT(f)/N with synthesis convention f = sum hat e^{+2pi i k.x}.
    void forward(const double* f, std::complex<double>* hat);
    /// Synthesis (real part).
    void inverse(const std::complex<double>* hat, double* f);

    /// Frequency value along an axis at a grid index (Nyquist zeroed).
    double freq(int index) const;
    int n() const { return n_; }
    std::size_t npoints() const { return npts_; }
    /// Per-axis frequency of the flat point/mode index.
    double freq_at(int axis, std::size_t p) const { return kval_[axis][p]; }

    Spectral(const Spectral&) = delete;
    Spectral& operator=(const Spectral&) = delete;
    ~Spectral();

  private:
    explicit Spectral(int n);
    int n_;
    std::size_t npts_;
    void* plan_fwd_;
    void* plan_inv_;
    void* buf_in_;
    void* buf_out_;
    std::mutex mutex_;  // guards the shared transform buffers
    std::vector<std::vector<double>> kval_;  // [axis][point]
};

/// Exterior derivative (degree <= 3, torus model). Throws DegreeOutOfRange.
FormField d_spectral(const FormField& a);

/// Codifferential -star d star (degree >= 1, torus model).
FormField delta_spectral(const FormField& a);

/// Pointwise Hodge star, degree k -> 4-k (any model, sign tables only).
FormField star_field(const FormField& a);

/// Inverse Hodge-deRham Laplacian with the zero mode removed.
FormField inv_laplacian_zero_mean(const FormField& a);

/// Integral of a degree-4 form over the unit-volume model.
double integrate(const FormField& a);

/// Pointwise wedge of two fields (degrees summing to <= 4).
FormField wedge_fields(const FormField& a, const FormField& b);

/// Cup product of closed 2-form fields. Closedness is checked (sup residual
/// <= 1e-8): spectrally on the torus; on kt only constant-coefficient fields
/// are accepted and checked against the invariant complex. Throws NotClosed.
double cup(const FormField& a, const FormField& b);

/// Sup norm of the spectral d-residual (torus) or the invariant-complex
/// d-residual of a constant field (kt).
double closedness_residual(const FormField& a);

/// Solve d^*a = rhs0, (da)^+ = rhsp for the unique 1-form a with no harmonic
/// part, in the gauge d^*a = rhs0 (per-frequency 4x4 solves). Both right-hand
/// sides must have no zero-frequency content (throws SingularFrequency).
FormField invert_dstar_dplus(const FormField& rhs0, const FormField& rhsp);

}  // namespace ac4x
