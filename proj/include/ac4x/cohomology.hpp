#pragma once

//==============================================================================
// cohomology.hpp
// Dimensions h_J^± of the J-(anti-)invariant cohomology subgroups, the
// direct-sum verification through cup products, the rank-formula cross-check
// for the (f,l,s) family, deformation scans, and the intersection estimate
// for pairs of metric-compatible structures.
//
// h^- is computed as b^+ minus the numerical rank of the pointwise pairing
// of the harmonic self-dual basis against the fundamental form field; h^+ is
// always b_2 - h^-, with verify_direct_sum as the independent consistency
// check of that identity.
//==============================================================================

#include <functional>
#include <vector>

#include "ac4x/acs.hpp"
#include "ac4x/form_field.hpp"

namespace ac4x {

/// Rank tolerance: singular values below 1e-8 * sigma_max count as zero.
inline constexpr double kRankTol = 1e-8;

struct RankReport {
    std::size_t rows = 0;
    int cols = 0;
    std::vector<double> singular_values;
    int rank = 0;
    double tolerance = 0.0;
    std::vector<std::vector<double>> null_basis;
};

/// Numerical rank of the span of scalar fields (columns) over grid points.
RankReport rank_of_fields(const std::vector<const FormField*>& fields);

struct CohomSummary {
    int b2 = 0, b_plus = 0, b_minus = 0;
    int h_plus = 0, h_minus = 0;
    std::vector<double> singular_values;
    std::vector<std::vector<double>> null_basis;  // over the harmonic SD basis
};

/// Harmonic self-dual basis forms of the model, |.|^2 = 2 each
/// (torus: omega1, omega2, omega3; kt: beta, J beta).
std::vector<Form2Fiber> harmonic_sd_basis(Model model);

CohomSummary h_minus(const AcsField& J);

struct DirectSumReport {
    int b2 = 0;
    int h_plus = 0, h_minus = 0;
    int gram_rank = 0;
    std::vector<std::vector<double>> gram;  // cup products of the b2 classes
    std::vector<double> gram_singular_values;
    double max_cross_normalized = 0.0;  // invariant x anti-invariant blocks
};

/// Builds b2 closed representatives (anti-invariant null combinations plus
/// closed J-invariant forms from close_ji_form and the anti-self-dual
/// constants), and checks the cup Gram matrix has full rank with
/// cup-orthogonal blocks. Torus only. Throws RankDeficient.
DirectSumReport verify_direct_sum(const AcsField& J);

/// Independent computations of h^- for J_{f,l,s} on the hyperKahler torus:
/// via the rank of span{f', l', s'} (first) and via h_minus (second).
std::pair<int, int> prop_linear_check(int f_sign, const FormField& l,
                                      const FormField& s, double u, double v);

/// h^- of Lee's J_alpha for alpha = a*beta + b*J beta constant.
int lee_hminus_check(double a, double b, int n);

struct ScanRow {
    double t;
    int h_plus;
    int h_minus;
};

/// Samples h^± along a path of structures; asserts the semicontinuity
/// directions h^+(t) >= h^+(0), h^-(t) <= h^-(0) for t <= radius.
std::vector<ScanRow> semicontinuity_scan(const std::function<AcsField(double)>& path,
                                         int samples, double radius = 1.0);

/// dim(H^-_J ∩ H^-_J~) for two structures compatible with the same flat
/// metric; throws IdenticallyPlusMinus when omega~ = ±omega everywhere, and
/// InvariantViolation if the dimension exceeds 1.
int intersection_estimate_check(const AcsField& J, const AcsField& Jt);

}  // namespace ac4x
