#pragma once

//==============================================================================
// cy.hpp
// Donaldson's symplectic Calabi-Yau system on the flat 4-torus:
//     d^* a = 0,   d^+ a = Q(da + h) - h^+,
// solved by Picard iteration on the required-self-dual-part map. Given a
// normalized log-volume F and a target structure J', each sweep computes
// eta = da + h, the required self-dual part sqrt(e^F + |eta^-|^2/2) omega' -
// omega, sends its harmonic (constant) part to h and inverts d^* ⊕ d^+ for
// the remainder. Solutions are re-verified by independent code paths:
// closedness, pointwise volume, pointwise invariance, positivity.
//==============================================================================

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ac4x/acs.hpp"
#include "ac4x/form_field.hpp"

namespace ac4x {

struct SolverConfig {
    double tol = 1e-10;        // sup-norm of the iterate update
    int max_iter = 200;
    double tol_vol = 1e-8;     // pointwise volume residual
    double tol_inv = 1e-8;     // pointwise anti-invariant residual
    double delta_max = 0.5;    // allowed sup distance of omega' from omega
    double damping = 1.0;      // falls back to 0.5 on residual increase
};

/// F normalized so that ∫ e^F omega^2 = ∫ omega^2 at quadrature precision.
FormField normalize_F(const FormField& F);

struct CyProblem {
    FormField F;      // normalized at construction
    AcsField target;  // defaults to the base structure
    FormField omega_base;
    SolverConfig config;

    CyProblem(FormField F_raw, AcsField target_acs, SolverConfig cfg = {});
};

struct CySolution {
    FormField a;                // 1-form in the gauge d^* a = 0
    std::array<double, 3> h{};  // constant SD part over (omega1, omega2, omega3)
    FormField omega_tilde;      // omega + da + h
    double residual_volume = 0.0;
    double residual_closed = 0.0;
    double residual_invariance = 0.0;
    double residual_dstar = 0.0;
    double period_drift = 0.0;  // periods of omega~ - omega - h over 2-tori
    int iterations = 0;
    bool converged = false;
    std::vector<double> update_log;
};

/// Solve the CY system. Throws NonConvergence / PositivityLoss.
CySolution solve_cy(const CyProblem& p);

struct ContinuationResult {
    std::vector<CySolution> solutions;  // for t = 0, 1/steps, ..., last good
    std::optional<double> breakdown_t;
    std::string breakdown_reason;
};

/// Warm-started continuation along a path of target structures; path(0) must
/// be the base structure. Stops at the first failure and reports it.
ContinuationResult continuation(const std::function<AcsField(double)>& path,
                                int steps, const CyProblem& base);

}  // namespace ac4x
