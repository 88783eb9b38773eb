#include "ac4x/acs.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "ac4x/hodge.hpp"
#include "ac4x/kernels.hpp"
#include "ac4x/spectral.hpp"

namespace ac4x {

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::standard: return "standard";
        case Provenance::fls: return "fls";
        case Provenance::lee: return "lee";
        case Provenance::tilde_family: return "tilde";
        case Provenance::anti_preserving: return "anti_preserving";
        case Provenance::custom: return "custom";
    }
    return "custom";
}

AcsField::AcsField(FormField omega_unit_field, Provenance tag)
    : omega_(std::move(omega_unit_field)), tag_(tag) {
    if (omega_.degree() != 2) throw NotUnitSelfDual("AcsField: degree-2 field required");
    if (!omega_.all_finite()) throw NotUnitSelfDual("AcsField: non-finite values");
    const FormField nsq = pointwise_normsq2(omega_);
    double norm_defect = 0.0;
    const double* p = nsq.comp(0);
    for (std::size_t i = 0; i < nsq.npoints(); ++i) {
        norm_defect = std::max(norm_defect, std::abs(p[i] - 2.0));
    }
    const double sd_defect = sup_norm(asd_part(omega_));
    if (norm_defect > kInputTol || sd_defect > kInputTol) {
        throw NotUnitSelfDual("AcsField: field is not pointwise unit self-dual (defects " +
                              std::to_string(norm_defect) + ", " + std::to_string(sd_defect) + ")");
    }
}

AcsFiber AcsField::fiber(std::size_t p) const {
    return acs_from_unit_sd_form(omega_.fiber2(p));
}

AcsField standard_acs(Model model, int n) {
    return AcsField(FormField::constant2(model, n, kOmega1), Provenance::standard);
}

ModelFrame model_frame(Model) {
    // Both models carry the constant frame (omega1, omega2, omega3) with
    // |beta|^2 = 2 pointwise; on kt the pair (beta, J beta) is exactly the
    // harmonic self-dual basis of the invariant complex.
    return ModelFrame{kOmega1, kOmega2, kOmega3};
}

void require_standard_anti(const FormField& alpha) {
    if (alpha.degree() != 2) throw NotAntiInvariant("expected a 2-form field");
    const double scale = std::max(1.0, sup_norm(alpha));
    if (sup_norm(asd_part(alpha)) > kInputTol * scale) {
        throw NotAntiInvariant("alpha is not pointwise self-dual");
    }
    const FormField pr = pointwise_pair_const(alpha, model_frame(alpha.model()).omega);
    if (sup_norm(pr) > kInputTol * scale) {
        throw NotAntiInvariant("alpha is not pointwise orthogonal to omega");
    }
}

namespace {

constexpr double kEpsF = 1e-8;

// omega~ = f*omega + p*phi + q*psi with constant frame forms.
FormField combine_frame(const FormField& f, const Form2Fiber& omega,
                        const FormField& p, const Form2Fiber& phi,
                        const FormField& q, const Form2Fiber& psi) {
    FormField out(f.model(), 2, f.n());
    const std::size_t N = out.npoints();
    for (int c = 0; c < 6; ++c) {
        double* dst = out.comp(c);
        const double* pf = f.comp(0);
        const double* pp = p.comp(0);
        const double* pq = q.comp(0);
        for (std::size_t i = 0; i < N; ++i) {
            dst[i] = pf[i] * omega[c] + pp[i] * phi[c] + pq[i] * psi[c];
        }
    }
    return out;
}

}  // namespace

AcsField from_fls(const FormField& l, const FormField& s, int sign) {
    if (!l.same_shape(s) || l.degree() != 0) {
        throw NormViolation("from_fls: l and s must be matching scalar fields");
    }
    const ModelFrame fr = model_frame(l.model());
    const double beta_nsq = norm_sq(fr.beta);  // == 2 for the flat frame
    FormField f(l.model(), 0, l.n());
    const std::size_t N = f.npoints();
    const double* pl = l.comp(0);
    const double* ps = s.comp(0);
    double* pf = f.comp(0);
    for (std::size_t i = 0; i < N; ++i) {
        const double m = beta_nsq * (pl[i] * pl[i] + ps[i] * ps[i]);
        if (m > 2.0 - kEpsF) {
            throw NormViolation("from_fls: |beta|^2 (l^2+s^2) exceeds 2 - eps at a point");
        }
        pf[i] = sign * std::sqrt(0.5 * (2.0 - m));
    }
    return AcsField(combine_frame(f, fr.omega, l, fr.beta, s, fr.jbeta), Provenance::fls);
}

AcsField lee_jalpha(const FormField& alpha, int sign) {
    require_standard_anti(alpha);
    const ModelFrame fr = model_frame(alpha.model());
    const FormField t = pointwise_normsq2(alpha);
    FormField omega_t(alpha.model(), 2, alpha.n());
    const std::size_t N = omega_t.npoints();
    const double* pt = t.comp(0);
    for (int c = 0; c < 6; ++c) {
        double* dst = omega_t.comp(c);
        const double* pa = alpha.comp(c);
        for (std::size_t i = 0; i < N; ++i) {
            const double denom = 2.0 + pt[i];
            const double r = -4.0 / denom;
            const double f = sign * (2.0 - pt[i]) / denom;
            dst[i] = f * fr.omega[c] + r * pa[i];
        }
    }
    return AcsField(std::move(omega_t), Provenance::lee);
}

AcsField tilde_jalpha(const FormField& alpha, int sign) {
    require_standard_anti(alpha);
    const ModelFrame fr = model_frame(alpha.model());
    const FormField t = pointwise_normsq2(alpha);
    FormField omega_t(alpha.model(), 2, alpha.n());
    const std::size_t N = omega_t.npoints();
    const double* pt = t.comp(0);
    for (int c = 0; c < 6; ++c) {
        double* dst = omega_t.comp(c);
        const double* pa = alpha.comp(c);
        for (std::size_t i = 0; i < N; ++i) {
            const double scale = std::sqrt(2.0 / (2.0 + pt[i]));
            dst[i] = scale * (sign * fr.omega[c] + pa[i]);
        }
    }
    return AcsField(std::move(omega_t), Provenance::tilde_family);
}

AcsField anti_preserving(const FormField& alpha, const FormField& r) {
    require_standard_anti(alpha);
    if (r.degree() != 0 || !r.same_shape(FormField(alpha.model(), 0, alpha.n()))) {
        throw NormViolation("anti_preserving: r must be a scalar field on the same grid");
    }
    const AcsField base = standard_acs(alpha.model(), alpha.n());
    const FormField jalpha = j_on_anti_field(alpha, base);
    const ModelFrame fr = model_frame(alpha.model());
    const FormField t = pointwise_normsq2(alpha);
    FormField omega_t(alpha.model(), 2, alpha.n());
    const std::size_t N = omega_t.npoints();
    const double* pt = t.comp(0);
    const double* pr = r.comp(0);
    for (int c = 0; c < 6; ++c) {
        double* dst = omega_t.comp(c);
        const double* pj = jalpha.comp(c);
        for (std::size_t i = 0; i < N; ++i) {
            const double m = pr[i] * pr[i] * pt[i];
            if (m > 2.0 - kEpsF) {
                throw NormViolation("anti_preserving: r^2 |alpha|^2 exceeds 2 - eps at a point");
            }
            const double f = std::sqrt(1.0 - 0.5 * m);
            dst[i] = f * fr.omega[c] + pr[i] * pj[i];
        }
    }
    return AcsField(std::move(omega_t), Provenance::anti_preserving);
}

FormField j_conjugate_field(const FormField& a, const AcsField& J) {
    FormField out(a.model(), 2, a.n());
    const double* pa[6];
    const double* pw[6];
    double* po[6];
    a.comp_ptrs(pa);
    J.omega().comp_ptrs(pw);
    out.comp_ptrs(po);
    kernels::jconj6(pa, pw, po, a.npoints());
    return out;
}

FormField anti_part_field(const FormField& a, const AcsField& J) {
    FormField conj = j_conjugate_field(a, J);
    FormField out = a;
    out -= conj;
    out *= 0.5;
    return out;
}

double max_anti_residual(const FormField& a, const AcsField& J) {
    return sup_norm(anti_part_field(a, J));
}

FormField j_on_anti_field(const FormField& b, const AcsField& J) {
    const double scale = std::max(1.0, sup_norm(b));
    if (sup_norm(asd_part(b)) > 1e-8 * scale ||
        sup_norm(pointwise_inner2(b, J.omega())) > 1e-8 * scale) {
        throw NotAntiInvariant("j_on_anti_field: field is not pointwise anti-invariant");
    }
    // Cross product in self-dual coordinates: J acts on the plane orthogonal
    // to omega~ as rotation by the unit vector u of omega~.
    FormField out(b.model(), 2, b.n());
    const std::size_t N = b.npoints();
    const FormField& w = J.omega();
    for (std::size_t i = 0; i < N; ++i) {
        const double u0 = w.at(0, i), u1 = w.at(1, i), u2 = w.at(2, i);
        const double v0 = b.at(0, i), v1 = b.at(1, i), v2 = b.at(2, i);
        const double o0 = u1 * v2 - u2 * v1;
        const double o1 = u2 * v0 - u0 * v2;
        const double o2 = u0 * v1 - u1 * v0;
        out.at(0, i) = o0;
        out.at(1, i) = o1;
        out.at(2, i) = o2;
        out.at(3, i) = o2;
        out.at(4, i) = -o1;
        out.at(5, i) = o0;
    }
    return out;
}

TamingSplit tame_split(const FormField& omega_taming, const AcsField& J) {
    const FormField pairing = pointwise_inner2(omega_taming, J.omega());
    const double* pp = pairing.comp(0);
    for (std::size_t i = 0; i < pairing.npoints(); ++i) {
        if (!(pp[i] > 0.0)) {
            throw NotTaming(i, "tame_split: <omega, omega_J> <= 0 at grid point " +
                                   std::to_string(i));
        }
    }
    TamingSplit out;
    FormField conj = j_conjugate_field(omega_taming, J);
    out.omega_prime = omega_taming;
    out.omega_prime += conj;
    out.omega_prime *= 0.5;
    out.omega_dprime = omega_taming;
    out.omega_dprime -= out.omega_prime;
    out.normalized_omega_unit = out.omega_prime;
    const FormField nsq = pointwise_normsq2(out.omega_prime);
    const double* pn = nsq.comp(0);
    for (int c = 0; c < 6; ++c) {
        double* dst = out.normalized_omega_unit.comp(c);
        for (std::size_t i = 0; i < nsq.npoints(); ++i) {
            dst[i] *= std::sqrt(2.0 / pn[i]);
        }
    }
    return out;
}

CompatibleCandidate tame_to_compatible_candidate(const FormField& alpha,
                                                 const AcsField& base) {
    if (base.model() != Model::torus) {
        throw DegreeOutOfRange("tame_to_compatible_candidate: torus model required");
    }
    require_standard_anti(alpha);
    const HodgeParts h = hodge_decompose(alpha);
    const FormField exact_minus = asd_part(h.exact);

    CompatibleCandidate out{base.omega(), FormField(Model::torus, 0, base.n())};
    out.candidate += alpha;
    field_axpy(2.0, exact_minus, out.candidate);

    const FormField ansq = pointwise_normsq2(alpha);
    const FormField ensq = pointwise_normsq2(exact_minus);
    double* pm = out.margin.comp(0);
    const double* pa = ansq.comp(0);
    const double* pe = ensq.comp(0);
    for (std::size_t i = 0; i < out.margin.npoints(); ++i) {
        pm[i] = 2.0 + pa[i] - 4.0 * pe[i];
    }
    return out;
}

namespace {

// Spectral partial derivative of a scalar field along one axis.
FormField partial(const FormField& f, int axis) {
    if (f.model() != Model::torus) throw DegreeOutOfRange("partial: torus model required");
    std::vector<std::complex<double>> hat(f.npoints());
    Spectral& sp = Spectral::get(f.n());
    FormField out(Model::torus, 0, f.n());
    sp.forward(f.comp(0), hat.data());
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t p = 0; p < f.npoints(); ++p) {
        hat[p] *= std::complex<double>(0.0, two_pi * sp.freq_at(axis, p));
    }
    sp.inverse(hat.data(), out.comp(0));
    return out;
}

}  // namespace

double nijenhuis_sup(const AcsField& J) {
    if (J.model() != Model::torus) {
        throw DegreeOutOfRange("nijenhuis_sup: torus model required");
    }
    const std::size_t N = J.omega().npoints();
    // matrix entries J^a_b as 16 scalar fields
    std::array<FormField, 16> jm;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) jm[static_cast<std::size_t>(4 * a + b)] = FormField(Model::torus, 0, J.n());
    for (std::size_t p = 0; p < N; ++p) {
        const AcsFiber f = J.fiber(p);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                jm[static_cast<std::size_t>(4 * a + b)].comp(0)[p] = f.j[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    // dj[axis][a][b]
    std::array<FormField, 64> dj;
    for (int axis = 0; axis < 4; ++axis)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                dj[static_cast<std::size_t>(16 * axis + 4 * a + b)] =
                    partial(jm[static_cast<std::size_t>(4 * a + b)], axis);

    auto JM = [&](int a, int b, std::size_t p) {
        return jm[static_cast<std::size_t>(4 * a + b)].comp(0)[p];
    };
    auto DJ = [&](int axis, int a, int b, std::size_t p) {
        return dj[static_cast<std::size_t>(16 * axis + 4 * a + b)].comp(0)[p];
    };

    double sup = 0.0;
    for (std::size_t p = 0; p < N; ++p) {
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                double nsq = 0.0;
                for (int b = 0; b < 4; ++b) {
                    double v = 0.0;
                    for (int a = 0; a < 4; ++a) {
                        v += JM(a, i, p) * DJ(a, b, j, p) - JM(a, j, p) * DJ(a, b, i, p) +
                             JM(b, a, p) * (DJ(j, a, i, p) - DJ(i, a, j, p));
                    }
                    nsq += v * v;
                }
                sup = std::max(sup, std::sqrt(nsq));
            }
        }
    }
    return sup;
}

double wellbalanced_defect(const AcsField& J) {
    if (J.model() != Model::torus) {
        throw DegreeOutOfRange("wellbalanced_defect: torus model required");
    }
    const std::size_t N = J.omega().npoints();
    const FormField& w = J.omega();
    // canonical section: Gram-Schmidt of beta against the anti-invariant
    // plane, in self-dual coordinates u = (w0, w1, w2)
    std::array<FormField, 3> e;
    std::array<FormField, 3> h;
    for (int m = 0; m < 3; ++m) {
        e[static_cast<std::size_t>(m)] = FormField(Model::torus, 0, J.n());
        h[static_cast<std::size_t>(m)] = FormField(Model::torus, 0, J.n());
    }
    for (std::size_t p = 0; p < N; ++p) {
        const double u0 = w.at(0, p), u1 = w.at(1, p), u2 = w.at(2, p);
        const double proj_nsq = 1.0 - u1 * u1;
        if (proj_nsq < 1e-16) {
            throw SectionDegenerate(
                "wellbalanced_defect: base section degenerates at grid point " +
                std::to_string(p));
        }
        const double inv = 1.0 / std::sqrt(proj_nsq);
        const double e0 = -u1 * u0 * inv;
        const double e1 = (1.0 - u1 * u1) * inv;
        const double e2 = -u1 * u2 * inv;
        e[0].comp(0)[p] = e0;
        e[1].comp(0)[p] = e1;
        e[2].comp(0)[p] = e2;
        h[0].comp(0)[p] = u1 * e2 - u2 * e1;
        h[1].comp(0)[p] = u2 * e0 - u0 * e2;
        h[2].comp(0)[p] = u0 * e1 - u1 * e0;
    }
    FormField defect(Model::torus, 0, J.n());
    for (int axis = 0; axis < 4; ++axis) {
        for (int m = 0; m < 3; ++m) {
            const FormField de = partial(e[static_cast<std::size_t>(m)], axis);
            const FormField dh = partial(h[static_cast<std::size_t>(m)], axis);
            const double* pe = de.comp(0);
            const double* ph = dh.comp(0);
            double* pd = defect.comp(0);
            // |grad phi|^2 contributes 2 per unit coordinate derivative
            for (std::size_t p = 0; p < N; ++p) {
                pd[p] += 2.0 * (ph[p] * ph[p] - pe[p] * pe[p]);
            }
        }
    }
    return sup_norm(defect);
}

}  // namespace ac4x
