#include "ac4x/fiber.hpp"

#include <cmath>
#include <cstdlib>

namespace ac4x {

double inner(const Form2Fiber& a, const Form2Fiber& b) {
    double s = 0.0;
    for (int i = 0; i < 6; ++i) s += a[i] * b[i];
    return s;
}

double norm_sq(const Form2Fiber& a) { return inner(a, a); }

double wedge(const Form2Fiber& a, const Form2Fiber& b) {
    return a[0] * b[5] + a[5] * b[0] - a[1] * b[4] - a[4] * b[1] +
           a[2] * b[3] + a[3] * b[2];
}

Form2Fiber star(const Form2Fiber& a) {
    return Form2Fiber{{a[5], -a[4], a[3], a[2], -a[1], a[0]}};
}

FiberSplitG split_g(const Form2Fiber& a) {
    const Form2Fiber s = star(a);
    FiberSplitG out;
    for (int i = 0; i < 6; ++i) {
        out.sd[i] = 0.5 * (a[i] + s[i]);
        out.asd[i] = 0.5 * (a[i] - s[i]);
    }
    return out;
}

std::array<double, 3> sd_coords(const Form2Fiber& a) {
    return {a[0], a[1], a[2]};
}

Form2Fiber from_sd_coords(const std::array<double, 3>& v) {
    return Form2Fiber{{v[0], v[1], v[2], v[2], -v[1], v[0]}};
}

// Basis component <-> index-pair tables for the fixed order
// (e12, e13, e14, e23, e24, e34).
namespace {
constexpr int kRow[6] = {0, 0, 0, 1, 1, 2};
constexpr int kCol[6] = {1, 2, 3, 2, 3, 3};
}  // namespace

Mat4 matrix_of(const Form2Fiber& a) {
    Mat4 m{};
    for (int k = 0; k < 6; ++k) {
        m[kRow[k]][kCol[k]] = a[k];
        m[kCol[k]][kRow[k]] = -a[k];
    }
    return m;
}

Form2Fiber form_of_matrix(const Mat4& m) {
    Form2Fiber a;
    for (int k = 0; k < 6; ++k) a[k] = m[kRow[k]][kCol[k]];
    return a;
}

AcsFiber acs_from_unit_sd_form(const Form2Fiber& w) {
    const Form2Fiber sw = star(w);
    double sd_defect = 0.0;
    for (int i = 0; i < 6; ++i) sd_defect = std::max(sd_defect, std::abs(sw[i] - w[i]));
    const double nrm_defect = std::abs(norm_sq(w) - 2.0);
    if (sd_defect > kInputTol || nrm_defect > kInputTol) {
        throw NotUnitSelfDual("acs_from_unit_sd_form: need self-dual |w|^2 = 2 (defects " +
                              std::to_string(sd_defect) + ", " + std::to_string(nrm_defect) + ")");
    }
    AcsFiber out;
    out.omega_unit = w;
    const Mat4 m = matrix_of(w);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.j[i][j] = -m[i][j];
    return out;
}

Form2Fiber j_conjugate(const Form2Fiber& a, const AcsFiber& J) {
    // (J^T A J)_{uv} = a(Ju, Jv); columns of J are the images of frame vectors.
    const Mat4 A = matrix_of(a);
    Mat4 AJ{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += A[i][k] * J.j[k][j];
            AJ[i][j] = s;
        }
    Mat4 JtAJ{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += J.j[k][i] * AJ[k][j];
            JtAJ[i][j] = s;
        }
    return form_of_matrix(JtAJ);
}

FiberSplitJ split_j(const Form2Fiber& a, const AcsFiber& J) {
    const Form2Fiber conj = j_conjugate(a, J);
    FiberSplitJ out;
    for (int i = 0; i < 6; ++i) {
        out.invariant[i] = 0.5 * (a[i] + conj[i]);
        out.anti[i] = 0.5 * (a[i] - conj[i]);
    }
    return out;
}

Form2Fiber j_on_anti(const Form2Fiber& b, const AcsFiber& J) {
    const FiberSplitJ sp = split_j(b, J);
    double defect = 0.0;
    for (int i = 0; i < 6; ++i) defect = std::max(defect, std::abs(sp.invariant[i]));
    const double scale = std::sqrt(std::max(norm_sq(b), 1.0));
    if (defect > kInputTol * scale) {
        throw NotAntiInvariant("j_on_anti: input has invariant part of size " +
                               std::to_string(defect));
    }
    // (Jb)(u,v) = -b(Ju, v)  =>  matrix -J^T B.
    const Mat4 B = matrix_of(b);
    Mat4 out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += J.j[k][i] * B[k][j];
            out[i][j] = -s;
        }
    return form_of_matrix(out);
}

Form2Fiber q_required_sd(double eta_asd_normsq, double F,
                         const Form2Fiber& w_target,
                         const Form2Fiber& omega_background) {
    const Form2Fiber sw = star(w_target);
    double sd_defect = 0.0;
    for (int i = 0; i < 6; ++i)
        sd_defect = std::max(sd_defect, std::abs(sw[i] - w_target[i]));
    if (sd_defect > kInputTol || std::abs(norm_sq(w_target) - 2.0) > kInputTol) {
        throw NotUnitSelfDual("q_required_sd: w_target must be unit self-dual");
    }
    const double lam = std::sqrt(std::exp(F) + 0.5 * eta_asd_normsq);
    Form2Fiber out;
    for (int i = 0; i < 6; ++i) out[i] = lam * w_target[i] - omega_background[i];
    return out;
}

}  // namespace ac4x
