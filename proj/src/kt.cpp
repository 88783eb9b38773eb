#include "ac4x/kt.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "ac4x/exterior.hpp"

namespace ac4x {

namespace {

// d(e^{i1..ik}) = sum_t (-1)^{t-1} e^{i1} ^ .. ^ d(e^{it}) ^ .. ^ e^{ik},
// assembled through basis wedges so every sign comes from one code path.
std::vector<std::vector<int>> build_d_matrix(const std::vector<std::vector<int>>& de,
                                             int degree) {
    const auto& basis_in = form_basis(degree);
    const int nout = form_components(degree + 1);
    std::vector<std::vector<int>> mat(static_cast<std::size_t>(nout),
                                      std::vector<int>(basis_in.size(), 0));
    for (std::size_t ci = 0; ci < basis_in.size(); ++ci) {
        const auto& subset = basis_in[ci];
        for (std::size_t t = 0; t < subset.size(); ++t) {
            const int gen = subset[t];
            const int outer_sign = (t % 2 == 0) ? 1 : -1;
            // remaining factors e^{subset minus position t}, kept in order
            std::vector<int> rest;
            for (std::size_t r = 0; r < subset.size(); ++r) {
                if (r != t) rest.push_back(subset[r]);
            }
            // rest is sorted, so it is a basis element of degree k-1
            const int rest_deg = static_cast<int>(rest.size());
            const int rest_comp = rest.empty() ? 0 : basis_index(rest);
            for (int c2 = 0; c2 < 6; ++c2) {
                const int coeff = de[static_cast<std::size_t>(gen)][static_cast<std::size_t>(c2)];
                if (coeff == 0) continue;
                // de^{it} has even degree, so it moves to the front freely;
                // outer_sign carries the Leibniz signs.
                int target = -1;
                const int ws = rest.empty()
                                   ? (target = c2, 1)
                                   : wedge_sign(2, c2, rest_deg, rest_comp, &target);
                if (ws == 0) continue;
                mat[static_cast<std::size_t>(target)][ci] += outer_sign * ws * coeff;
            }
        }
    }
    return mat;
}

int rank_of(const std::vector<std::vector<int>>& m) {
    if (m.empty() || m[0].empty()) return 0;
    Eigen::MatrixXd em(static_cast<Eigen::Index>(m.size()),
                       static_cast<Eigen::Index>(m[0].size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j)
            em(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m[i][j];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(em);
    lu.setThreshold(1e-9);
    return static_cast<int>(lu.rank());
}

Eigen::MatrixXd to_eigen(const std::vector<std::vector<int>>& m, int cols_if_empty) {
    if (m.empty()) return Eigen::MatrixXd::Zero(0, cols_if_empty);
    Eigen::MatrixXd em(static_cast<Eigen::Index>(m.size()),
                       static_cast<Eigen::Index>(m[0].size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j)
            em(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m[i][j];
    return em;
}

}  // namespace

CeComplex::CeComplex(std::vector<std::vector<int>> d_of_generators)
    : de_(std::move(d_of_generators)) {
    mats_.resize(4);
    for (int k = 0; k < 4; ++k) {
        mats_[static_cast<std::size_t>(k)] = build_d_matrix(de_, k);
    }
}

CeComplex CeComplex::kodaira_thurston() {
    std::vector<std::vector<int>> de(4, std::vector<int>(6, 0));
    de[3][0] = 1;  // d e^4 = e^12
    return CeComplex(std::move(de));
}

CeComplex CeComplex::abelian() {
    return CeComplex(std::vector<std::vector<int>>(4, std::vector<int>(6, 0)));
}

const std::vector<std::vector<int>>& CeComplex::d_matrix(int degree) const {
    if (degree < 0 || degree > 3) throw DegreeOutOfRange("d_matrix: degree 0..3");
    return mats_[static_cast<std::size_t>(degree)];
}

std::vector<double> CeComplex::apply_d(int degree, const std::vector<double>& coeffs) const {
    const auto& m = d_matrix(degree);
    std::vector<double> out(m.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < coeffs.size(); ++j) out[i] += m[i][j] * coeffs[j];
    return out;
}

CeComplex::Cohomology CeComplex::cohomology(int degree) const {
    const int dim = form_components(degree);
    // ker d_k (degree 4 is all of Lambda^4)
    Eigen::MatrixXd dk = degree < 4 ? to_eigen(mats_[static_cast<std::size_t>(degree)], dim)
                                    : Eigen::MatrixXd::Zero(0, dim);
    Eigen::MatrixXd dprev_t = Eigen::MatrixXd::Zero(0, dim);
    if (degree > 0) {
        dprev_t = to_eigen(mats_[static_cast<std::size_t>(degree - 1)],
                           form_components(degree - 1))
                      .transpose();
    }
    // harmonic = ker d ∩ ker d^T (adjoint for the invariant orthonormal basis)
    Eigen::MatrixXd stacked(dk.rows() + dprev_t.rows(), dim);
    if (dk.rows() > 0) stacked.topRows(dk.rows()) = dk;
    if (dprev_t.rows() > 0) stacked.bottomRows(dprev_t.rows()) = dprev_t;

    Cohomology out;
    if (stacked.rows() == 0) {
        out.betti = dim;
        for (int i = 0; i < dim; ++i) {
            std::vector<double> v(static_cast<std::size_t>(dim), 0.0);
            v[static_cast<std::size_t>(i)] = 1.0;
            out.harmonic_basis.push_back(v);
        }
        return out;
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int rank = 0;
    const double tol = 1e-9 * (sv.size() > 0 ? sv(0) : 0.0);
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > tol && sv(i) > 1e-12) ++rank;
    }
    out.betti = dim - rank;

    // Consistency with the rank formula betti = dim ker d - rank d_{k-1}.
    const int rank_dk = degree < 4 ? rank_of(mats_[static_cast<std::size_t>(degree)]) : 0;
    const int rank_dprev =
        degree > 0 ? rank_of(mats_[static_cast<std::size_t>(degree - 1)]) : 0;
    const int betti_by_rank = dim - rank_dk - rank_dprev;
    if (betti_by_rank != out.betti) {
        throw InvariantViolation("CE cohomology: harmonic dimension disagrees with rank count");
    }

    for (Eigen::Index i = rank; i < svd.matrixV().cols(); ++i) {
        Eigen::VectorXd v = svd.matrixV().col(i);
        // deterministic orientation: first nonzero entry positive
        for (Eigen::Index r = 0; r < v.size(); ++r) {
            if (std::abs(v(r)) > 1e-10) {
                if (v(r) < 0) v = -v;
                break;
            }
        }
        std::vector<double> vec(static_cast<std::size_t>(dim));
        for (int r = 0; r < dim; ++r) vec[static_cast<std::size_t>(r)] = v(r);
        out.harmonic_basis.push_back(vec);
    }
    return out;
}

std::vector<Form2Fiber> CeComplex::harmonic_sd_basis() const {
    const Cohomology h2 = cohomology(2);
    // Solve for the self-dual vectors within the harmonic space: columns are
    // harmonic basis vectors, rows the (star - id) conditions.
    const int m = static_cast<int>(h2.harmonic_basis.size());
    Eigen::MatrixXd H(6, m);
    for (int j = 0; j < m; ++j) {
        Form2Fiber f;
        for (int c = 0; c < 6; ++c) f[c] = h2.harmonic_basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
        const Form2Fiber sf = star(f);
        for (int c = 0; c < 6; ++c) H(c, j) = sf[c] - f[c];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(H, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > 1e-10 * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0)) ++rank;
    }
    std::vector<Form2Fiber> basis;
    for (Eigen::Index i = rank; i < svd.matrixV().cols(); ++i) {
        Eigen::VectorXd v = svd.matrixV().col(i);
        Form2Fiber f{};
        for (int c = 0; c < 6; ++c) {
            double acc = 0.0;
            for (int j = 0; j < m; ++j) {
                acc += v(j) * h2.harmonic_basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
            }
            f[c] = acc;
        }
        // orient and scale to |.|^2 = 2
        for (int c = 0; c < 6; ++c) {
            if (std::abs(f[c]) > 1e-10) {
                if (f[c] < 0) f *= -1.0;
                break;
            }
        }
        f *= std::sqrt(2.0 / norm_sq(f));
        basis.push_back(f);
    }
    // deterministic order: sort by first nonzero component index
    std::sort(basis.begin(), basis.end(), [](const Form2Fiber& a, const Form2Fiber& b) {
        int ia = 6, ib = 6;
        for (int c = 0; c < 6; ++c) {
            if (ia == 6 && std::abs(a[c]) > 1e-10) ia = c;
            if (ib == 6 && std::abs(b[c]) > 1e-10) ib = c;
        }
        return ia < ib;
    });
    return basis;
}

}  // namespace ac4x
