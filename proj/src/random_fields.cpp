#include "ac4x/random_fields.hpp"

#include <cmath>
#include <numbers>

namespace ac4x {

FormField scalar_from_terms(Model model, int n, const std::vector<TrigTerm>& terms) {
    FormField f(model, 0, n);
    const int dim = f.grid_dim();
    const double two_pi = 2.0 * std::numbers::pi;
    double* p = f.comp(0);
    for (std::size_t i = 0; i < f.npoints(); ++i) {
        const auto x = grid_coords(f, i);
        double v = 0.0;
        for (const auto& t : terms) {
            double phase = 0.0;
            for (int d = 0; d < dim; ++d) {
                phase += t.k[static_cast<std::size_t>(d)] *
                         (static_cast<double>(x[static_cast<std::size_t>(d)]) / n);
            }
            phase *= two_pi;
            v += t.amp_cos * std::cos(phase) + t.amp_sin * std::sin(phase);
        }
        p[i] = v;
    }
    return f;
}

FormField random_scalar(Model model, int n, Rng& rng, int max_freq, double amp,
                        int nterms) {
    std::uniform_int_distribution<int> kdist(-max_freq, max_freq);
    std::uniform_real_distribution<double> adist(-1.0, 1.0);
    std::vector<TrigTerm> terms;
    const int dim = model == Model::torus ? 4 : 3;
    for (int t = 0; t < nterms; ++t) {
        TrigTerm term;
        bool zero = true;
        for (int d = 0; d < dim; ++d) {
            term.k[static_cast<std::size_t>(d)] = kdist(rng);
            if (term.k[static_cast<std::size_t>(d)] != 0) zero = false;
        }
        term.amp_cos = amp * adist(rng) / nterms;
        term.amp_sin = zero ? 0.0 : amp * adist(rng) / nterms;
        terms.push_back(term);
    }
    return scalar_from_terms(model, n, terms);
}

FormField random_form(int degree, int n, Rng& rng, int max_freq, double amp,
                      int nterms) {
    FormField out(Model::torus, degree, n);
    for (int c = 0; c < out.ncomp(); ++c) {
        const FormField comp = random_scalar(Model::torus, n, rng, max_freq, amp, nterms);
        const double* src = comp.comp(0);
        double* dst = out.comp(c);
        for (std::size_t i = 0; i < out.npoints(); ++i) dst[i] = src[i];
    }
    return out;
}

FormField random_standard_anti(Model model, int n, Rng& rng, int max_freq, double amp) {
    const FormField p = random_scalar(model, n, rng, max_freq, amp);
    const FormField q = random_scalar(model, n, rng, max_freq, amp);
    FormField out(model, 2, n);
    for (int c = 0; c < 6; ++c) {
        double* dst = out.comp(c);
        const double* pp = p.comp(0);
        const double* pq = q.comp(0);
        for (std::size_t i = 0; i < out.npoints(); ++i) {
            dst[i] = pp[i] * kOmega2[c] + pq[i] * kOmega3[c];
        }
    }
    return out;
}

FormField random_sd_form(int n, Rng& rng, int max_freq, double amp) {
    FormField out(Model::torus, 2, n);
    for (int m = 0; m < 3; ++m) {
        static const Form2Fiber basis[3] = {kOmega1, kOmega2, kOmega3};
        const FormField f = random_scalar(Model::torus, n, rng, max_freq, amp);
        const double* src = f.comp(0);
        for (int c = 0; c < 6; ++c) {
            double* dst = out.comp(c);
            const double bc = basis[m][c];
            if (bc == 0.0) continue;
            for (std::size_t i = 0; i < out.npoints(); ++i) dst[i] += bc * src[i];
        }
    }
    return out;
}

}  // namespace ac4x
