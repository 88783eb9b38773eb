#include "ac4x/cohomology.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "ac4x/hodge.hpp"
#include "ac4x/kt.hpp"
#include "ac4x/spectral.hpp"

namespace ac4x {

namespace {

RankReport rank_of_matrix(const Eigen::MatrixXd& A) {
    RankReport rep;
    rep.rows = static_cast<std::size_t>(A.rows());
    rep.cols = static_cast<int>(A.cols());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    rep.tolerance = kRankTol * smax;
    // absolute floor guards the all-zero matrix
    const double floor = 1e-14 * std::sqrt(static_cast<double>(A.rows()));
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        rep.singular_values.push_back(sv(i));
        if (sv(i) > rep.tolerance && sv(i) > floor) ++rep.rank;
    }
    for (Eigen::Index c = rep.rank; c < svd.matrixV().cols(); ++c) {
        Eigen::VectorXd v = svd.matrixV().col(c);
        for (Eigen::Index r = 0; r < v.size(); ++r) {
            if (std::abs(v(r)) > 1e-10) {
                if (v(r) < 0) v = -v;
                break;
            }
        }
        std::vector<double> nb(static_cast<std::size_t>(v.size()));
        for (Eigen::Index r = 0; r < v.size(); ++r) nb[static_cast<std::size_t>(r)] = v(r);
        rep.null_basis.push_back(std::move(nb));
    }
    return rep;
}

}  // namespace

RankReport rank_of_fields(const std::vector<const FormField*>& fields) {
    const std::size_t N = fields.at(0)->npoints();
    Eigen::MatrixXd A(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(fields.size()));
    for (std::size_t c = 0; c < fields.size(); ++c) {
        const double* p = fields[c]->comp(0);
        for (std::size_t i = 0; i < N; ++i) {
            A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = p[i];
        }
    }
    return rank_of_matrix(A);
}

std::vector<Form2Fiber> harmonic_sd_basis(Model model) {
    if (model == Model::torus) return {kOmega1, kOmega2, kOmega3};
    return CeComplex::kodaira_thurston().harmonic_sd_basis();
}

CohomSummary h_minus(const AcsField& J) {
    const Model model = J.model();
    CohomSummary out;
    out.b2 = model == Model::torus ? 6 : 4;
    out.b_plus = model == Model::torus ? 3 : 2;
    out.b_minus = out.b2 - out.b_plus;

    const auto basis = harmonic_sd_basis(model);
    std::vector<FormField> pairings;
    pairings.reserve(basis.size());
    for (const auto& phi : basis) {
        pairings.push_back(pointwise_pair_const(J.omega(), phi));
    }
    std::vector<const FormField*> cols;
    for (const auto& f : pairings) cols.push_back(&f);
    RankReport rep = rank_of_fields(cols);

    out.singular_values = rep.singular_values;
    out.null_basis = rep.null_basis;
    out.h_minus = out.b_plus - rep.rank;
    out.h_plus = out.b2 - out.h_minus;
    if (out.h_minus > out.b_plus || out.h_plus < out.b_minus) {
        throw InvariantViolation("h_minus: summary violates the b^± bounds");
    }
    return out;
}

DirectSumReport verify_direct_sum(const AcsField& J) {
    if (J.model() != Model::torus) {
        throw DegreeOutOfRange("verify_direct_sum: torus model required");
    }
    const CohomSummary sum = h_minus(J);
    const auto basis = harmonic_sd_basis(Model::torus);
    const int n = J.n();

    std::vector<FormField> reps;
    std::vector<bool> is_anti;

    // anti-invariant block: null combinations of the harmonic SD basis
    for (const auto& v : sum.null_basis) {
        Form2Fiber combo{};
        for (std::size_t i = 0; i < v.size(); ++i) combo += v[i] * basis[i];
        reps.push_back(FormField::constant2(Model::torus, n, combo));
        is_anti.push_back(true);
    }

    // invariant block: closed J-invariant forms for the range directions
    {
        std::vector<FormField> pairings;
        for (const auto& phi : basis) pairings.push_back(pointwise_pair_const(J.omega(), phi));
        Eigen::MatrixXd A(static_cast<Eigen::Index>(J.omega().npoints()), 3);
        for (int c = 0; c < 3; ++c) {
            const double* p = pairings[static_cast<std::size_t>(c)].comp(0);
            for (std::size_t i = 0; i < J.omega().npoints(); ++i) {
                A(static_cast<Eigen::Index>(i), c) = p[i];
            }
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinV);
        const int rank = 3 - sum.h_minus;
        for (int c = 0; c < rank; ++c) {
            const Eigen::VectorXd v = svd.matrixV().col(c);
            FormField f(Model::torus, 0, n);
            for (int i = 0; i < 3; ++i) {
                const double* p = pairings[static_cast<std::size_t>(i)].comp(0);
                double* dst = f.comp(0);
                for (std::size_t q = 0; q < f.npoints(); ++q) dst[q] += v(i) * p[q];
            }
            reps.push_back(close_ji_form(f, J));
            is_anti.push_back(false);
        }
    }

    // invariant block: the anti-self-dual constants are J-invariant and closed
    for (const Form2Fiber& eps : {kEps1, kEps2, kEps3}) {
        reps.push_back(FormField::constant2(Model::torus, n, eps));
        is_anti.push_back(false);
    }

    DirectSumReport rep;
    rep.b2 = 6;
    rep.h_plus = sum.h_plus;
    rep.h_minus = sum.h_minus;
    if (reps.size() != 6) {
        throw RankDeficient("verify_direct_sum: representative count mismatch");
    }

    Eigen::MatrixXd G(6, 6);
    rep.gram.assign(6, std::vector<double>(6, 0.0));
    for (int i = 0; i < 6; ++i) {
        for (int j = i; j < 6; ++j) {
            const double cij = cup(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]);
            G(i, j) = cij;
            G(j, i) = cij;
            rep.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cij;
            rep.gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = cij;
        }
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(G);
    const auto& sv = svd.singularValues();
    for (Eigen::Index i = 0; i < sv.size(); ++i) rep.gram_singular_values.push_back(sv(i));
    const double tol = kRankTol * (sv.size() > 0 ? sv(0) : 0.0);
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > tol) ++rep.gram_rank;
    }

    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            if (is_anti[static_cast<std::size_t>(i)] == is_anti[static_cast<std::size_t>(j)]) continue;
            const double ni = l2_norm(reps[static_cast<std::size_t>(i)]);
            const double nj = l2_norm(reps[static_cast<std::size_t>(j)]);
            const double cross = std::abs(G(i, j)) / std::max(ni * nj, 1e-300);
            rep.max_cross_normalized = std::max(rep.max_cross_normalized, cross);
        }
    }

    if (rep.gram_rank != 6) {
        throw RankDeficient("verify_direct_sum: cup Gram rank " +
                            std::to_string(rep.gram_rank) + " != 6");
    }
    return rep;
}

std::pair<int, int> prop_linear_check(int f_sign, const FormField& l,
                                      const FormField& s, double u, double v) {
    if (l.model() != Model::torus) {
        throw DegreeOutOfRange("prop_linear_check: torus model required");
    }
    const AcsField J = from_fls(l, s, f_sign);
    const int via_hminus = h_minus(J).h_minus;

    // |beta|^2 = 2 for the hyperKahler flat frame
    const double beta_nsq = norm_sq(model_frame(Model::torus).beta);
    FormField lp = l;
    lp *= beta_nsq;
    FormField sp = s;
    sp *= beta_nsq;
    // f' = 2f + u l' + v s'
    FormField fp(Model::torus, 0, l.n());
    {
        const std::size_t N = fp.npoints();
        const double* pl = l.comp(0);
        const double* ps = s.comp(0);
        double* pf = fp.comp(0);
        for (std::size_t i = 0; i < N; ++i) {
            const double m = beta_nsq * (pl[i] * pl[i] + ps[i] * ps[i]);
            const double f = f_sign * std::sqrt(0.5 * (2.0 - m));
            pf[i] = 2.0 * f + u * beta_nsq * pl[i] + v * beta_nsq * ps[i];
        }
    }
    const RankReport rep = rank_of_fields({&fp, &lp, &sp});
    const int via_rank = 3 - rep.rank;
    return {via_rank, via_hminus};
}

int lee_hminus_check(double a, double b, int n) {
    Form2Fiber alpha{};
    alpha += a * kOmega2;
    alpha += b * kOmega3;
    const FormField af = FormField::constant2(Model::torus, n, alpha);
    const AcsField J = norm_sq(alpha) == 0.0 ? standard_acs(Model::torus, n)
                                             : lee_jalpha(af, +1);
    return h_minus(J).h_minus;
}

std::vector<ScanRow> semicontinuity_scan(const std::function<AcsField(double)>& path,
                                         int samples, double radius) {
    std::vector<ScanRow> rows;
    for (int k = 0; k <= samples; ++k) {
        const double t = samples == 0 ? 0.0 : static_cast<double>(k) / samples;
        const CohomSummary s = h_minus(path(t));
        rows.push_back(ScanRow{t, s.h_plus, s.h_minus});
    }
    for (const auto& row : rows) {
        if (row.t > radius) continue;
        if (row.h_plus < rows.front().h_plus || row.h_minus > rows.front().h_minus) {
            throw InvariantViolation(
                "semicontinuity_scan: monotonicity violated at t = " + std::to_string(row.t));
        }
    }
    return rows;
}

int intersection_estimate_check(const AcsField& J, const AcsField& Jt) {
    if (J.model() != Jt.model() || J.n() != Jt.n()) {
        throw DegreeOutOfRange("intersection_estimate_check: mismatched models");
    }
    // pointwise-distinctness: omega~ must differ from ±omega somewhere
    double dev_plus = 0.0, dev_minus = 0.0;
    const std::size_t N = J.omega().npoints();
    for (int c = 0; c < 6; ++c) {
        const double* p1 = J.omega().comp(c);
        const double* p2 = Jt.omega().comp(c);
        for (std::size_t i = 0; i < N; ++i) {
            dev_plus = std::max(dev_plus, std::abs(p2[i] - p1[i]));
            dev_minus = std::max(dev_minus, std::abs(p2[i] + p1[i]));
        }
    }
    if (dev_plus <= 1e-10 || dev_minus <= 1e-10) {
        throw IdenticallyPlusMinus("intersection_estimate_check: omega~ = ±omega everywhere");
    }

    const auto basis = harmonic_sd_basis(J.model());
    std::vector<FormField> cols;
    for (const auto& phi : basis) cols.push_back(pointwise_pair_const(J.omega(), phi));
    for (const auto& phi : basis) cols.push_back(pointwise_pair_const(Jt.omega(), phi));
    // joint null space over the b^+ coefficients: stack the two systems
    Eigen::MatrixXd A(static_cast<Eigen::Index>(2 * N), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const double* pa = cols[c].comp(0);
        const double* pb = cols[c + basis.size()].comp(0);
        for (std::size_t i = 0; i < N; ++i) {
            A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = pa[i];
            A(static_cast<Eigen::Index>(N + i), static_cast<Eigen::Index>(c)) = pb[i];
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    const auto& sv = svd.singularValues();
    const double tol = kRankTol * (sv.size() > 0 ? sv(0) : 0.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > tol && sv(i) > 1e-12) ++rank;
    }
    const int dim = static_cast<int>(basis.size()) - rank;
    if (dim > 1) {
        throw InvariantViolation("intersection_estimate_check: joint anti-invariant space has dim " +
                                 std::to_string(dim));
    }
    return dim;
}

}  // namespace ac4x
