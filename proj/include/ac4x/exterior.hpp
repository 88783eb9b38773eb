#pragma once

//==============================================================================
// exterior.hpp
// Combinatorics of the exterior algebra over the fixed coframe e^1..e^4:
// basis enumeration by sorted index subsets, insertion signs, Hodge star
// signs for the orientation e^1234, and wedge products of basis elements.
// Everything here is exact integer bookkeeping shared by the spectral torus
// calculus and the Chevalley-Eilenberg complex.
//==============================================================================

#include <array>
#include <vector>

namespace ac4x {

/// Sorted index subsets (0-based axes) enumerating the degree-k basis, in
/// the toolkit's fixed component order.
const std::vector<std::vector<int>>& form_basis(int degree);

/// Component index of a sorted subset within degree |subset|.
int basis_index(const std::vector<int>& subset);

/// Sign of e^axis ^ e^I brought to sorted order; 0 if axis already in I.
/// On success *out_comp is the component of the degree-(k+1) result.
int insert_sign(int degree, int comp, int axis, int* out_comp);

/// Hodge star on basis elements: star(e^I) = sign * e^{I^c}.
/// Returns the sign and stores the complementary component index.
int star_sign(int degree, int comp, int* out_comp);

/// Wedge of basis elements e^I ^ e^J (degrees k1, k2): returns the sign
/// (0 when the subsets intersect) and stores the degree-(k1+k2) component.
int wedge_sign(int k1, int c1, int k2, int c2, int* out_comp);

}  // namespace ac4x
