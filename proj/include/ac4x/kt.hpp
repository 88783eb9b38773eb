#pragma once

//==============================================================================
// kt.hpp
// Chevalley-Eilenberg calculus for 4-dimensional nilpotent coframe algebras,
// specialized to the Kodaira-Thurston manifold (d e^4 = e^1 ^ e^2, the other
// generators closed) and the abelian algebra of the torus. Differentials are
// integer matrices built from the structure constants by the Leibniz rule;
// invariant cohomology is computed by rank, harmonic representatives by
// intersecting ker d with ker d^T for the invariant metric.
//==============================================================================

#include <vector>

#include "ac4x/fiber.hpp"
#include "ac4x/form_field.hpp"

namespace ac4x {

class CeComplex {
  public:
    /// Structure data: de[i] is the degree-2 coefficient vector of d e^{i+1}.
    explicit CeComplex(std::vector<std::vector<int>> d_of_generators);

    static CeComplex kodaira_thurston();
    static CeComplex abelian();

    /// Integer matrix of d: Lambda^k -> Lambda^{k+1} (row-major,
    /// rows = output components). Degree 4 maps to the empty matrix.
    const std::vector<std::vector<int>>& d_matrix(int degree) const;

    /// Apply the invariant differential to a coefficient vector.
    std::vector<double> apply_d(int degree, const std::vector<double>& coeffs) const;

    struct Cohomology {
        int betti;
        std::vector<std::vector<double>> harmonic_basis;  // orthonormal
    };
    Cohomology cohomology(int degree) const;

    /// Harmonic self-dual 2-forms scaled to |.|^2 = 2, in deterministic order
    /// (for the Kodaira-Thurston algebra: beta = e13 - e24, J beta = e14 + e23).
    std::vector<Form2Fiber> harmonic_sd_basis() const;

  private:
    std::vector<std::vector<int>> de_;                 // d of generators
    std::vector<std::vector<std::vector<int>>> mats_;  // d matrices by degree
};

}  // namespace ac4x
