#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ac4x/cy.hpp"
#include "ac4x/random_fields.hpp"
#include "ac4x/spectral.hpp"

using namespace ac4x;

namespace {
constexpr int kN = 16;

FormField sin_F(int n, double amp, int axis = 0) {
    TrigTerm t;
    t.k[static_cast<std::size_t>(axis)] = 1;
    t.amp_sin = amp;
    return scalar_from_terms(Model::torus, n, {t});
}
}  // namespace

TEST_CASE("normalize_F: constants normalize away, integrals re-verify") {
    FormField zero(Model::torus, 0, kN);
    CHECK(sup_norm(normalize_F(zero)) <= 1e-14);
    FormField c(Model::torus, 0, kN);
    for (std::size_t p = 0; p < c.npoints(); ++p) c.at(0, p) = 0.7;
    CHECK(sup_norm(normalize_F(c)) <= 1e-12);

    const FormField F = normalize_F(sin_F(kN, 0.3));
    double mean = 0.0;
    for (std::size_t p = 0; p < F.npoints(); ++p) mean += std::exp(F.at(0, p));
    mean /= static_cast<double>(F.npoints());
    CHECK(mean == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("trivial problem returns the exact base solution in one sweep") {
    const CyProblem p(FormField(Model::torus, 0, kN), standard_acs(Model::torus, kN));
    const CySolution s = solve_cy(p);
    CHECK(s.converged);
    CHECK(s.iterations == 1);
    CHECK(sup_norm(s.a) == 0.0);
    for (double h : s.h) CHECK(h == 0.0);
    FormField diff = s.omega_tilde;
    diff -= p.omega_base;
    CHECK(sup_norm(diff) == 0.0);
}

TEST_CASE("volume-prescribed solve at n=16 meets the residual targets") {
    const CyProblem p(sin_F(kN, 0.3), standard_acs(Model::torus, kN));
    const CySolution s = solve_cy(p);
    CHECK(s.converged);
    CHECK(s.iterations <= 200);
    CHECK(s.residual_volume <= 1e-8);
    CHECK(s.residual_closed <= 1e-9);
    CHECK(s.period_drift <= 1e-9);
    CHECK(s.residual_dstar <= 1e-10);
    CHECK(s.residual_invariance <= 1e-8);
}

TEST_CASE("residuals contract after the opening sweeps") {
    std::vector<FormField> cases;
    cases.push_back(sin_F(kN, 0.3));
    cases.push_back(sin_F(kN, 0.25, 2));
    cases.push_back(scalar_from_terms(
        Model::torus, kN,
        {TrigTerm{{1, 0, 0, 0}, 0.15, 0.0}, TrigTerm{{0, 1, 1, 0}, 0.0, 0.15}}));
    for (const auto& F : cases) {
        const CyProblem p(F, standard_acs(Model::torus, kN));
        const CySolution s = solve_cy(p);
        CHECK(s.converged);
        for (std::size_t i = 3; i + 1 < s.update_log.size(); ++i) {
            CHECK(s.update_log[i + 1] <= s.update_log[i]);
        }
    }
}

TEST_CASE("solve toward a nearby target structure realizes the compatible cone") {
    const FormField l = scalar_from_terms(Model::torus, kN, {TrigTerm{{1, 0, 0, 0}, 0.05, 0.0}});
    const FormField s0(Model::torus, 0, kN);
    const AcsField target = from_fls(l, s0, +1);
    const CyProblem p(FormField(Model::torus, 0, kN), target);
    const CySolution s = solve_cy(p);
    CHECK(s.converged);
    CHECK(s.residual_volume <= 1e-8);
    CHECK(s.residual_closed <= 1e-9);
    CHECK(s.residual_invariance <= 1e-8);
    // positivity on the target's complex lines
    const FormField pos = pointwise_inner2(s.omega_tilde, target.omega());
    const double* pp = pos.comp(0);
    for (std::size_t i = 0; i < pos.npoints(); ++i) CHECK(pp[i] > 0.0);
}

TEST_CASE("translated data yields the translated solution") {
    const int shift = kN / 4;  // shift along x1
    const CyProblem p1(sin_F(kN, 0.3), standard_acs(Model::torus, kN));
    // F2(x) = F1(x + shift)
    FormField F2(Model::torus, 0, kN);
    for (std::size_t p = 0; p < F2.npoints(); ++p) {
        auto x = grid_coords(F2, p);
        const double xs = static_cast<double>((x[0] + shift) % kN) / kN;
        F2.at(0, p) = 0.3 * std::sin(2.0 * 3.14159265358979323846 * xs);
    }
    const CyProblem p2(F2, standard_acs(Model::torus, kN));
    const CySolution s1 = solve_cy(p1);
    const CySolution s2 = solve_cy(p2);
    // compare omega~ under the index roll
    double worst = 0.0;
    const auto nn = static_cast<std::size_t>(kN);
    for (int c = 0; c < 6; ++c) {
        for (std::size_t p = 0; p < s1.omega_tilde.npoints(); ++p) {
            auto x = grid_coords(s1.omega_tilde, p);
            const std::size_t shifted =
                static_cast<std::size_t>((x[0] + shift) % kN) +
                nn * (static_cast<std::size_t>(x[1]) +
                      nn * (static_cast<std::size_t>(x[2]) + nn * static_cast<std::size_t>(x[3])));
            worst = std::max(worst, std::abs(s2.omega_tilde.at(c, p) -
                                             s1.omega_tilde.at(c, shifted)));
        }
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("solver rejects far-away targets") {
    FormField big = FormField::constant2(Model::torus, kN, kOmega2);  // distance ~ sqrt(2) omega
    const AcsField far(big, Provenance::custom);
    const CyProblem p(FormField(Model::torus, 0, kN), far);
    CHECK_THROWS_AS(solve_cy(p), std::invalid_argument);
}

TEST_CASE("continuation along a constant path repeats the base solution") {
    const CyProblem p(sin_F(kN, 0.2), standard_acs(Model::torus, kN));
    const ContinuationResult r =
        continuation([](double) { return standard_acs(Model::torus, kN); }, 3, p);
    CHECK(!r.breakdown_t.has_value());
    REQUIRE(r.solutions.size() == 4);
    for (const auto& s : r.solutions) {
        FormField diff = s.omega_tilde;
        diff -= r.solutions.front().omega_tilde;
        CHECK(sup_norm(diff) <= 1e-9);
    }
}

TEST_CASE("continuation into the family converges at every step") {
    const FormField l0 = scalar_from_terms(Model::torus, kN, {TrigTerm{{1, 0, 0, 0}, 0.1, 0.0}});
    const FormField s0(Model::torus, 0, kN);
    const CyProblem p(FormField(Model::torus, 0, kN), standard_acs(Model::torus, kN));
    auto path = [&](double t) {
        FormField lt = l0;
        lt *= t;
        return from_fls(lt, s0, +1);
    };
    const ContinuationResult r = continuation(path, 10, p);
    CHECK(!r.breakdown_t.has_value());
    CHECK(r.solutions.size() == 11);
    for (const auto& s : r.solutions) {
        CHECK(s.converged);
        CHECK(s.residual_volume <= 1e-8);
    }
}

TEST_CASE("continuation reports the breakdown point on an aggressive path") {
    // amplitude grows past the solver's target gate; the failure is caught
    // and the prior solutions are returned
    const FormField s0(Model::torus, 0, kN);
    FormField l0(Model::torus, 0, kN);
    for (std::size_t p = 0; p < l0.npoints(); ++p) l0.at(0, p) = 0.9;
    const CyProblem p(FormField(Model::torus, 0, kN), standard_acs(Model::torus, kN));
    auto path = [&](double t) {
        FormField lt = l0;
        lt *= t;
        return from_fls(lt, s0, +1);
    };
    const ContinuationResult r = continuation(path, 8, p);
    CHECK(r.breakdown_t.has_value());
    CHECK(!r.breakdown_reason.empty());
    CHECK(r.solutions.size() >= 1);
    CHECK(r.solutions.size() < 9);
}
