#include "ac4x/cy.hpp"

#include <cmath>

#include "ac4x/kernels.hpp"
#include "ac4x/spectral.hpp"

namespace ac4x {

FormField normalize_F(const FormField& F) {
    if (F.degree() != 0) throw DegreeOutOfRange("normalize_F: scalar field required");
    // ∫ e^F omega^2 / ∫ omega^2 = mean(e^F) since omega^2 = 2 vol everywhere.
    double mean = 0.0;
    const double* p = F.comp(0);
    for (std::size_t i = 0; i < F.npoints(); ++i) mean += std::exp(p[i]);
    mean /= static_cast<double>(F.npoints());
    FormField out = F;
    double* q = out.comp(0);
    const double shift = std::log(mean);
    for (std::size_t i = 0; i < F.npoints(); ++i) q[i] -= shift;
    return out;
}

CyProblem::CyProblem(FormField F_raw, AcsField target_acs, SolverConfig cfg)
    : F(normalize_F(F_raw)),
      target(std::move(target_acs)),
      omega_base(FormField::constant2(Model::torus, F.n(), kOmega1)),
      config(cfg) {
    if (F.model() != Model::torus || target.model() != Model::torus) {
        throw DegreeOutOfRange("CyProblem: torus model required");
    }
}

namespace {

// zero-frequency SD coefficients over (omega1, omega2, omega3)
std::array<double, 3> harmonic_sd_coeffs(const FormField& r) {
    const auto means = component_means(r);
    return {0.5 * (means[0] + means[5]), 0.5 * (means[1] - means[4]),
            0.5 * (means[2] + means[3])};
}

Form2Fiber sd_const(const std::array<double, 3>& h) { return from_sd_coords(h); }

// periods of a 2-form field over the six coordinate 2-tori through the
// origin: mean of component (i,j) over the (x_i, x_j) plane with the other
// coordinates frozen at zero.
double max_period(const FormField& w) {
    const int n = w.n();
    const auto nn = static_cast<std::size_t>(n);
    double worst = 0.0;
    for (int c = 0; c < 6; ++c) {
        static const int axes[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        const int ai = axes[c][0];
        const int aj = axes[c][1];
        double mean = 0.0;
        for (std::size_t xi = 0; xi < nn; ++xi) {
            for (std::size_t xj = 0; xj < nn; ++xj) {
                std::size_t idx[4] = {0, 0, 0, 0};
                idx[ai] = xi;
                idx[aj] = xj;
                const std::size_t flat =
                    idx[0] + nn * (idx[1] + nn * (idx[2] + nn * idx[3]));
                mean += w.at(c, flat);
            }
        }
        mean /= static_cast<double>(nn * nn);
        worst = std::max(worst, std::abs(mean));
    }
    return worst;
}

struct CyState {
    FormField a;
    std::array<double, 3> h{};
};

CySolution solve_cy_impl(const CyProblem& p, const CyState* warm) {
    const int n = p.F.n();
    const std::size_t N = p.F.npoints();
    const SolverConfig& cfg = p.config;

    // target proximity gate (sup-norm distance of fundamental forms)
    {
        FormField diff = p.target.omega();
        diff -= p.omega_base;
        const double dist = sup_norm(diff);
        if (dist > cfg.delta_max) {
            throw std::invalid_argument("solve_cy: target structure is " +
                                        std::to_string(dist) +
                                        " from the base (delta_max " +
                                        std::to_string(cfg.delta_max) + ")");
        }
    }

    FormField expF(Model::torus, 0, n);
    {
        const double* pf = p.F.comp(0);
        double* pe = expF.comp(0);
        for (std::size_t i = 0; i < N; ++i) pe[i] = std::exp(pf[i]);
    }

    CyState st;
    st.a = warm ? warm->a : FormField(Model::torus, 1, n);
    st.h = warm ? warm->h : std::array<double, 3>{0.0, 0.0, 0.0};

    CySolution sol;
    sol.a = st.a;
    double damping = cfg.damping;
    double prev_update = -1.0;
    bool converged = false;
    int iters = 0;

    const double* wt[6];
    const double* wb[6];
    p.target.omega().comp_ptrs(wt);
    p.omega_base.comp_ptrs(wb);

    FormField required(Model::torus, 2, n);
    for (; iters < cfg.max_iter; ++iters) {
        // eta = da + h; only the ASD part of da enters the Q-map
        FormField da = d_spectral(st.a);
        FormField eta_minus = asd_part(da);
        FormField asd_nsq = pointwise_normsq2(eta_minus);

        double* req[6];
        required.comp_ptrs(req);
        kernels::q_required6(expF.comp(0), asd_nsq.comp(0), wt, wb, req, N);

        // harmonic (constant SD) part -> h, remainder -> the elliptic solve
        const std::array<double, 3> h_new_raw = harmonic_sd_coeffs(required);
        FormField r0 = required;
        {
            const Form2Fiber hc = sd_const(h_new_raw);
            FormField hfield = FormField::constant2(Model::torus, n, hc);
            r0 -= hfield;
        }
        const FormField zero_rhs(Model::torus, 0, n);
        FormField a_new_raw = invert_dstar_dplus(zero_rhs, r0);

        // damped update
        FormField a_new = st.a;
        a_new *= (1.0 - damping);
        field_axpy(damping, a_new_raw, a_new);
        std::array<double, 3> h_new;
        for (int m = 0; m < 3; ++m) {
            h_new[m] = (1.0 - damping) * st.h[m] + damping * h_new_raw[m];
        }

        FormField da_diff = a_new;
        da_diff -= st.a;
        double update = sup_norm(da_diff);
        for (int m = 0; m < 3; ++m) update = std::max(update, std::abs(h_new[m] - st.h[m]));
        sol.update_log.push_back(update);

        st.a = std::move(a_new);
        st.h = h_new;

        // positivity guard on the running iterate
        {
            FormField omega_t = p.omega_base;
            field_axpy(1.0, d_spectral(st.a), omega_t);
            FormField hfield = FormField::constant2(Model::torus, n, sd_const(st.h));
            omega_t += hfield;
            const FormField pos = pointwise_inner2(omega_t, p.target.omega());
            const double* pp = pos.comp(0);
            for (std::size_t i = 0; i < N; ++i) {
                if (!(pp[i] > 0.0)) {
                    throw PositivityLoss(i, "solve_cy: <omega~, omega'> <= 0 at grid point " +
                                                std::to_string(i));
                }
            }
        }

        if (update <= cfg.tol) {
            converged = true;
            ++iters;
            break;
        }
        if (prev_update >= 0.0 && update > prev_update) damping = 0.5;
        prev_update = update;
    }

    sol.a = st.a;
    sol.h = st.h;
    sol.iterations = iters;
    sol.converged = converged;

    sol.omega_tilde = p.omega_base;
    FormField da = d_spectral(sol.a);
    sol.omega_tilde += da;
    FormField hfield = FormField::constant2(Model::torus, n, sd_const(sol.h));
    sol.omega_tilde += hfield;

    // independent verification paths
    sol.residual_closed = sup_norm(d_spectral(sol.omega_tilde));
    sol.residual_dstar = sup_norm(delta_spectral(sol.a));
    {
        // pointwise wedge against the prescribed volume 2 e^F
        FormField w4 = wedge_fields(sol.omega_tilde, sol.omega_tilde);
        const double* pw = w4.comp(0);
        const double* pe = expF.comp(0);
        double worst = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            worst = std::max(worst, std::abs(pw[i] - 2.0 * pe[i]));
        }
        sol.residual_volume = worst;
    }
    {
        // anti-invariant residual with respect to the target
        const FormField wplus = sd_part(sol.omega_tilde);
        const FormField proj = pointwise_inner2(wplus, p.target.omega());
        FormField anti = wplus;
        const double* pp = proj.comp(0);
        for (int c = 0; c < 6; ++c) {
            double* dst = anti.comp(c);
            const double* pw = p.target.omega().comp(c);
            for (std::size_t i = 0; i < N; ++i) dst[i] -= 0.5 * pp[i] * pw[i];
        }
        sol.residual_invariance = sup_norm(anti);
    }
    {
        FormField drift = sol.omega_tilde;
        drift -= p.omega_base;
        drift -= hfield;
        sol.period_drift = max_period(drift);
    }

    if (!converged) {
        throw NonConvergence(iters, sol.update_log.empty() ? 0.0 : sol.update_log.back(),
                             "solve_cy: no convergence within max_iter");
    }
    return sol;
}

}  // namespace

CySolution solve_cy(const CyProblem& p) { return solve_cy_impl(p, nullptr); }

ContinuationResult continuation(const std::function<AcsField(double)>& path,
                                int steps, const CyProblem& base) {
    ContinuationResult out;
    CyState warm;
    warm.a = FormField(Model::torus, 1, base.F.n());
    warm.h = {0.0, 0.0, 0.0};
    bool have_warm = false;
    for (int k = 0; k <= steps; ++k) {
        const double t = steps == 0 ? 0.0 : static_cast<double>(k) / steps;
        try {
            CyProblem p(base.F, path(t), base.config);
            CySolution s = solve_cy_impl(p, have_warm ? &warm : nullptr);
            warm.a = s.a;
            warm.h = s.h;
            have_warm = true;
            out.solutions.push_back(std::move(s));
        } catch (const std::exception& e) {
            out.breakdown_t = t;
            out.breakdown_reason = e.what();
            break;
        }
    }
    return out;
}

}  // namespace ac4x
