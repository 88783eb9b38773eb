#pragma once

//==============================================================================
// acs.hpp
// Metric-compatible almost complex structure fields on the model manifolds
// and the constructions that produce them: the (f,l,s) family over the
// hyperKahler basis, Lee's J_alpha, the conformally normalized tilde family,
// the anti-invariant-preserving family, taming splits, the tame-to-compatible
// candidate, and the integrability / well-balanced diagnostics.
//
// Every structure is stored through its fundamental 2-form field, pointwise
// self-dual with |.|^2 = 2 (validated to 1e-10 at construction).
//==============================================================================

#include <string>

#include "ac4x/fiber.hpp"
#include "ac4x/form_field.hpp"

namespace ac4x {

enum class Provenance { standard, fls, lee, tilde_family, anti_preserving, custom };

std::string provenance_name(Provenance p);

class AcsField {
  public:
    AcsField(FormField omega_unit_field, Provenance tag);

    const FormField& omega() const { return omega_; }
    Provenance provenance() const { return tag_; }
    Model model() const { return omega_.model(); }
    int n() const { return omega_.n(); }

    /// Fiber structure (fundamental form + 4x4 matrix) at one grid point.
    AcsFiber fiber(std::size_t p) const;

  private:
    FormField omega_;
    Provenance tag_;
};

/// The constant standard structure (omega = e^12 + e^34).
AcsField standard_acs(Model model, int n);

/// Frame of reference 2-forms of the model: the fundamental form omega and
/// the anti-invariant pair (beta, J beta), each |.|^2 = 2. On both models
/// these are the constant forms (omega1, omega2, omega3); on kt the last two
/// are the harmonic self-dual basis.
struct ModelFrame {
    Form2Fiber omega, beta, jbeta;
};
ModelFrame model_frame(Model model);

//------------------------------------------------------------------------------
// Constructions
//------------------------------------------------------------------------------

/// omega~ = f omega + l beta + s J beta with f = sign*sqrt((2-|beta|^2(l^2+s^2))/2).
/// l, s are scalar fields on the model; throws NormViolation when the
/// radicand drops below eps_f = 1e-8.
AcsField from_fls(const FormField& l, const FormField& s, int sign);

/// Lee's structures: omega~ = f omega + r alpha with r = -4/(2+|alpha|^2),
/// f = sign*(2-|alpha|^2)/(2+|alpha|^2). alpha must be pointwise
/// anti-invariant for the standard structure.
AcsField lee_jalpha(const FormField& alpha, int sign);

/// Conformal normalization of sign*omega + alpha to |.|^2 = 2.
AcsField tilde_jalpha(const FormField& alpha, int sign);

/// omega~ = f omega + r J alpha with 2 f^2 + r^2 |alpha|^2 = 2; keeps alpha
/// anti-invariant for the new structure. Throws NormViolation.
AcsField anti_preserving(const FormField& alpha, const FormField& r);

struct TamingSplit {
    FormField omega_prime;            // J-invariant part
    FormField omega_dprime;           // J-anti-invariant part
    FormField normalized_omega_unit;  // sqrt(2) * omega' / |omega'|
};

/// Split a closed taming form against J. Taming is checked pointwise as
/// <omega, omega_J> > 0; throws NotTaming with the first failing point.
TamingSplit tame_split(const FormField& omega_taming, const AcsField& J);

struct CompatibleCandidate {
    FormField candidate;  // omega + alpha + 2 (alpha^exact)^-
    FormField margin;     // 2 + |alpha|^2 - 4 |(alpha^exact)^-|^2, pointwise
};

/// Candidate symplectic form compatible with the tilde structure of alpha
/// over an almost Kahler base (torus model). A positive margin everywhere
/// certifies compatibility; a negative margin is reported, not an error.
CompatibleCandidate tame_to_compatible_candidate(const FormField& alpha,
                                                 const AcsField& base);

/// Sup over the grid, over the six frame pairs, of |N(e_i, e_j)| for the
/// Nijenhuis tensor of J (spectral derivatives of the matrix field; torus).
double nijenhuis_sup(const AcsField& J);

/// Sup of | |grad(J phi)|^2 - |grad phi|^2 | for the canonical unit
/// anti-invariant section phi (base beta projected into the anti-invariant
/// plane and normalized; flat connection). Throws SectionDegenerate when the
/// projection drops below 1e-8 somewhere.
double wellbalanced_defect(const AcsField& J);

//------------------------------------------------------------------------------
// Pointwise helpers
//------------------------------------------------------------------------------

/// a(J., J.) applied pointwise over the field.
FormField j_conjugate_field(const FormField& a, const AcsField& J);

/// Anti-invariant part of a 2-form field with respect to J.
FormField anti_part_field(const FormField& a, const AcsField& J);

/// The complex structure of the anti-invariant plane applied to a pointwise
/// anti-invariant field (cross product in self-dual coordinates).
FormField j_on_anti_field(const FormField& b, const AcsField& J);

/// Sup-norm of the anti-invariant part (diagnostic for J-invariance).
double max_anti_residual(const FormField& a, const AcsField& J);

/// Validate that alpha is pointwise anti-invariant for the standard
/// structure (self-dual and orthogonal to omega); throws NotAntiInvariant.
void require_standard_anti(const FormField& alpha);

}  // namespace ac4x
