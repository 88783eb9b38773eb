#pragma once

//==============================================================================
// fiber.hpp
// Exact linear algebra on the 6-dimensional fiber Lambda^2(R^4) at one point.
//
// Conventions, fixed once for the whole toolkit:
//   * orthonormal coframe e^1, e^2, e^3, e^4; orientation e^1234;
//   * 2-form basis order (e^12, e^13, e^14, e^23, e^24, e^34);
//   * the coframe metric makes this basis orthonormal, so |e^12 + e^34|^2 = 2.
//
// Under these conventions the Hodge star on 2-forms is the involution
//   star(c0,...,c5) = (c5, -c4, c3, c2, -c1, c0),
// the self-dual subspace is spanned by
//   omega1 = e^12 + e^34,  omega2 = e^13 - e^24,  omega3 = e^14 + e^23,
// each of squared norm 2, and the wedge pairing against e^1234 is
//   wedge(a,b) = a0 b5 + a5 b0 - a1 b4 - a4 b1 + a2 b3 + a3 b2.
//
// An almost complex structure compatible with the flat metric is encoded by
// its fundamental 2-form w (self-dual, |w|^2 = 2) via w(u,v) = g(Ju, v); the
// 4x4 matrix is recovered as J = -W with W the antisymmetric coefficient
// matrix of w. All functions here are pure and thread-safe.
//==============================================================================

#include <array>

#include "ac4x/errors.hpp"

namespace ac4x {

using Mat4 = std::array<std::array<double, 4>, 4>;

struct Form2Fiber {
    std::array<double, 6> c{};

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    Form2Fiber& operator+=(const Form2Fiber& o) {
        for (int i = 0; i < 6; ++i) c[i] += o.c[i];
        return *this;
    }
    Form2Fiber& operator-=(const Form2Fiber& o) {
        for (int i = 0; i < 6; ++i) c[i] -= o.c[i];
        return *this;
    }
    Form2Fiber& operator*=(double s) {
        for (double& x : c) x *= s;
        return *this;
    }
    friend Form2Fiber operator+(Form2Fiber a, const Form2Fiber& b) { return a += b; }
    friend Form2Fiber operator-(Form2Fiber a, const Form2Fiber& b) { return a -= b; }
    friend Form2Fiber operator*(double s, Form2Fiber a) { return a *= s; }
    friend Form2Fiber operator-(Form2Fiber a) { return -1.0 * a; }
};

// Self-dual basis, |.|^2 = 2 each.
inline constexpr Form2Fiber kOmega1{{1, 0, 0, 0, 0, 1}};    // e12 + e34
inline constexpr Form2Fiber kOmega2{{0, 1, 0, 0, -1, 0}};   // e13 - e24
inline constexpr Form2Fiber kOmega3{{0, 0, 1, 1, 0, 0}};    // e14 + e23

// Anti-self-dual basis, |.|^2 = 2 each.
inline constexpr Form2Fiber kEps1{{1, 0, 0, 0, 0, -1}};     // e12 - e34
inline constexpr Form2Fiber kEps2{{0, 1, 0, 0, 1, 0}};      // e13 + e24
inline constexpr Form2Fiber kEps3{{0, 0, 1, -1, 0, 0}};     // e14 - e23

double inner(const Form2Fiber& a, const Form2Fiber& b);
double norm_sq(const Form2Fiber& a);

/// Coefficient of a^b against the volume form e^1234. Symmetric; equals
/// |a+|^2 - |a-|^2 on the diagonal.
double wedge(const Form2Fiber& a, const Form2Fiber& b);

/// Hodge star for the flat metric and orientation e^1234 (an involution).
Form2Fiber star(const Form2Fiber& a);

struct FiberSplitG {
    Form2Fiber sd;   // (a + star a)/2
    Form2Fiber asd;  // (a - star a)/2
};

FiberSplitG split_g(const Form2Fiber& a);

/// Coordinates of a self-dual form in the (omega1, omega2, omega3) basis.
/// For self-dual a these are simply (a0, a1, a2); the inverse embeds back.
std::array<double, 3> sd_coords(const Form2Fiber& a);
Form2Fiber from_sd_coords(const std::array<double, 3>& v);

/// Antisymmetric coefficient matrix W of a 2-form, W[i][j] = a(e_i, e_j),
/// and its inverse.
Mat4 matrix_of(const Form2Fiber& a);
Form2Fiber form_of_matrix(const Mat4& m);

//------------------------------------------------------------------------------
// Almost complex structures on the fiber
//------------------------------------------------------------------------------

struct AcsFiber {
    Form2Fiber omega_unit;  // self-dual, |.|^2 = 2
    Mat4 j;                 // J^2 = -I, orthogonal, omega(u,v) = g(Ju,v)
};

/// Build the metric-compatible almost complex structure from its unit-norm
/// self-dual fundamental form. Throws NotUnitSelfDual if |w|^2 differs from 2
/// or w is not self-dual beyond tolerance 1e-10.
AcsFiber acs_from_unit_sd_form(const Form2Fiber& w);

/// a(J., J.), the involution whose eigenspaces split Lambda^2 into the
/// J-invariant and J-anti-invariant parts. Implemented as J^T A J on the
/// coefficient matrix.
Form2Fiber j_conjugate(const Form2Fiber& a, const AcsFiber& J);

struct FiberSplitJ {
    Form2Fiber invariant;  // (a + a(J.,J.))/2, lies in span(omega) + ASD
    Form2Fiber anti;       // (a - a(J.,J.))/2, self-dual and orthogonal to omega
};

FiberSplitJ split_j(const Form2Fiber& a, const AcsFiber& J);

/// The complex structure of the anti-invariant plane: (Jb)(X,Y) = -b(JX, Y).
/// Requires b J-anti-invariant within 1e-10 (throws NotAntiInvariant).
/// Applying twice gives -b; the result is orthogonal to b with equal norm.
Form2Fiber j_on_anti(const Form2Fiber& b, const AcsFiber& J);

/// Pointwise kernel of the Calabi-Yau fixed-point map: the self-dual part a
/// 2-form eta must acquire so that omega_background + eta is compatible with
/// the structure of w_target and has squared volume factor e^F, given the
/// squared norm of the anti-self-dual part of eta:
///     (sqrt(e^F + |eta^-|^2 / 2)) * w_target - omega_background.
/// w_target must be unit self-dual (1e-10, throws NotUnitSelfDual).
Form2Fiber q_required_sd(double eta_asd_normsq, double F,
                         const Form2Fiber& w_target,
                         const Form2Fiber& omega_background);

// Tolerances used by the fiber layer.
inline constexpr double kStructTol = 1e-12;  // structural identities
inline constexpr double kInputTol = 1e-10;   // input validation

}  // namespace ac4x
