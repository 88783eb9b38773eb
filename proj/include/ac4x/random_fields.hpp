#pragma once

//==============================================================================
// random_fields.hpp
// Band-limited trigonometric fields from explicit term lists and seeded
// generators. Function inputs everywhere in the toolkit are finite Fourier
// sums: term lists of (frequency vector, cos amplitude, sin amplitude).
//==============================================================================

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "ac4x/form_field.hpp"

namespace ac4x {

struct TrigTerm {
    std::array<int, 4> k{0, 0, 0, 0};  // kt uses the first three entries
    double amp_cos = 0.0;
    double amp_sin = 0.0;
};

/// f(x) = sum_t [amp_cos cos(2 pi k.x) + amp_sin sin(2 pi k.x)].
FormField scalar_from_terms(Model model, int n, const std::vector<TrigTerm>& terms);

using Rng = std::mt19937_64;

/// Random band-limited scalar field: nterms random frequencies with
/// |k_i| <= max_freq and amplitudes up to amp.
FormField random_scalar(Model model, int n, Rng& rng, int max_freq, double amp,
                        int nterms = 3);

/// Random band-limited degree-k form on the torus (independent components).
FormField random_form(int degree, int n, Rng& rng, int max_freq, double amp,
                      int nterms = 3);

/// Random pointwise anti-invariant field for the standard structure:
/// p(x) beta + q(x) J beta with random band-limited p, q.
FormField random_standard_anti(Model model, int n, Rng& rng, int max_freq, double amp);

/// Random pointwise self-dual band-limited field.
FormField random_sd_form(int n, Rng& rng, int max_freq, double amp);

}  // namespace ac4x
