#pragma once

//==============================================================================
// hodge.hpp
// Hodge decomposition and its dimension-4 consequences on the flat torus.
// The harmonic part of any field is its zero-frequency mode; potentials are
// gauge-fixed (delta theta = 0) through the spectral Green operator.
//==============================================================================

#include "ac4x/form_field.hpp"
#include "ac4x/spectral.hpp"

namespace ac4x {

class AcsField;

struct HodgeParts {
    FormField harmonic;  // constant field (zero-frequency mode)
    FormField exact;     // d theta
    FormField coexact;   // delta Psi
    FormField theta;     // degree-1 potential with delta theta = 0
};

/// Hodge decomposition of a 2-form field on the torus. The three parts
/// reconstruct the input to 1e-10 and are pairwise L^2-orthogonal.
HodgeParts hodge_decompose(const FormField& a);

/// For self-dual input (checked, 1e-10): the sup-norm defects
///   ((d theta)^+ - (delta Psi)^+,  (d theta)^- + (delta Psi)^-),
/// both of which vanish for exact fields. Throws NotSelfDual.
std::pair<double, double> verify_dim4_lemma(const FormField& a);

/// The closed J-invariant representative f*omega_J + 2((f*omega_J)^exact)^-,
/// i.e. (f omega)_h + 2 (f omega)^exact. Closed to 1e-9 and pointwise
/// J-invariant for the structure that supplied omega_J.
FormField close_ji_form(const FormField& f, const AcsField& J);

}  // namespace ac4x
