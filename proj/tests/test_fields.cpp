#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <vector>

#include "ac4x/acs.hpp"
#include "ac4x/exterior.hpp"
#include "ac4x/form_field.hpp"
#include "ac4x/kt.hpp"
#include "ac4x/random_fields.hpp"
#include "ac4x/serialization.hpp"
#include "ac4x/spectral.hpp"

using namespace ac4x;

namespace {

constexpr int kN = 16;
const double kTwoPi = 2.0 * std::numbers::pi;

// fraction-free integer Gaussian elimination (Bareiss) rank oracle
int integer_rank(std::vector<std::vector<long long>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    long long prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t cc = c + 1; cc < cols; ++cc) {
                m[r][cc] = (m[rank][c] * m[r][cc] - m[r][c] * m[rank][cc]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return static_cast<int>(rank);
}

std::vector<std::vector<long long>> to_ll(const std::vector<std::vector<int>>& m) {
    std::vector<std::vector<long long>> out;
    for (const auto& row : m) out.emplace_back(row.begin(), row.end());
    return out;
}

}  // namespace

TEST_CASE("d of a constant 2-form vanishes") {
    const FormField w = FormField::constant2(Model::torus, kN, kOmega1);
    CHECK(sup_norm(d_spectral(w)) <= 1e-13);
}

TEST_CASE("d of sin(2 pi x1) is the analytic derivative") {
    const FormField f = scalar_from_terms(Model::torus, kN, {TrigTerm{{1, 0, 0, 0}, 0.0, 1.0}});
    const FormField df = d_spectral(f);
    double worst = 0.0;
    for (std::size_t p = 0; p < df.npoints(); ++p) {
        const auto x = grid_coords(df, p);
        const double expect = kTwoPi * std::cos(kTwoPi * x[0] / kN);
        worst = std::max(worst, std::abs(df.at(0, p) - expect));
        for (int c = 1; c < 4; ++c) worst = std::max(worst, std::abs(df.at(c, p)));
    }
    CHECK(worst <= 1e-11);
}

TEST_CASE("d o d vanishes on random band-limited forms") {
    Rng rng(7);
    for (int degree = 0; degree <= 2; ++degree) {
        for (int trial = 0; trial < 5; ++trial) {
            const FormField a = random_form(degree, kN, rng, kN / 4, 1.0);
            CHECK(sup_norm(d_spectral(d_spectral(a))) <= 1e-12);
        }
    }
}

TEST_CASE("d rejects degree 4 and kt fields") {
    CHECK_THROWS_AS(d_spectral(FormField(Model::torus, 4, kN)), DegreeOutOfRange);
    CHECK_THROWS_AS(d_spectral(FormField(Model::kt, 1, kN)), DegreeOutOfRange);
    CHECK_THROWS_AS(delta_spectral(FormField(Model::torus, 0, kN)), DegreeOutOfRange);
}

TEST_CASE("delta of a constant 2-form vanishes") {
    const FormField w = FormField::constant2(Model::torus, kN, kOmega2);
    CHECK(sup_norm(delta_spectral(w)) <= 1e-13);
}

TEST_CASE("delta d f is the positive Laplacian on functions") {
    const FormField f = scalar_from_terms(Model::torus, kN, {TrigTerm{{1, 0, 0, 0}, 0.0, 1.0}});
    const FormField lap = delta_spectral(d_spectral(f));
    double worst = 0.0;
    for (std::size_t p = 0; p < f.npoints(); ++p) {
        worst = std::max(worst, std::abs(lap.at(0, p) - kTwoPi * kTwoPi * f.at(0, p)));
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("adjointness of d and delta under quadrature") {
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const FormField a = random_form(1, kN, rng, kN / 4, 1.0);
        const FormField b = random_form(2, kN, rng, kN / 4, 1.0);
        const double lhs = l2_inner(d_spectral(a), b);
        const double rhs = l2_inner(a, delta_spectral(b));
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
    }
    // delta o delta vanishes
    const FormField c = random_form(3, kN, rng, kN / 4, 1.0);
    CHECK(sup_norm(delta_spectral(delta_spectral(c))) <= 1e-12);
}

TEST_CASE("star_field double application signs") {
    Rng rng(13);
    for (int degree = 0; degree <= 4; ++degree) {
        const FormField a = random_form(degree, 8, rng, 2, 1.0);
        FormField ss = star_field(star_field(a));
        const double sign = (degree % 2 == 0) ? 1.0 : -1.0;
        ss *= sign;
        FormField diff = ss;
        diff -= a;
        CHECK(sup_norm(diff) <= 1e-14);
    }
}

TEST_CASE("integrate: volume, mean-zero, omega wedge omega") {
    FormField vol(Model::torus, 4, kN);
    for (std::size_t p = 0; p < vol.npoints(); ++p) vol.at(0, p) = 1.0;
    CHECK(integrate(vol) == doctest::Approx(1.0));

    const FormField f = scalar_from_terms(Model::torus, kN, {TrigTerm{{1, 0, 0, 0}, 0.0, 1.0}});
    FormField fv(Model::torus, 4, kN);
    for (std::size_t p = 0; p < fv.npoints(); ++p) fv.at(0, p) = f.at(0, p);
    CHECK(std::abs(integrate(fv)) <= 1e-14);

    const FormField w = FormField::constant2(Model::torus, kN, kOmega1);
    CHECK(integrate(wedge_fields(w, w)) == doctest::Approx(2.0));
}

TEST_CASE("cup products of the constant frame") {
    const FormField beta = FormField::constant2(Model::torus, kN, kOmega2);
    const FormField jbeta = FormField::constant2(Model::torus, kN, kOmega3);
    CHECK(cup(beta, beta) == doctest::Approx(2.0));
    CHECK(cup(beta, jbeta) == doctest::Approx(0.0));
}

TEST_CASE("cup depends only on the cohomology class") {
    Rng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        // closed field: constant plus d(random 1-form)
        FormField a = FormField::constant2(Model::torus, kN, kOmega2);
        a += d_spectral(random_form(1, kN, rng, kN / 4, 0.5));
        FormField b = a;
        b += d_spectral(random_form(1, kN, rng, kN / 4, 0.5));
        CHECK(std::abs(cup(a, a) - cup(a, b)) <= 1e-8);
        CHECK(std::abs(cup(a, a) - cup(b, b)) <= 1e-8);
    }
}

TEST_CASE("cup rejects non-closed input") {
    Rng rng(19);
    FormField bad = random_form(2, kN, rng, 2, 1.0);
    const FormField w = FormField::constant2(Model::torus, kN, kOmega1);
    CHECK_THROWS_AS(cup(bad, w), NotClosed);
}

TEST_CASE("kt structure equations") {
    const CeComplex kt = CeComplex::kodaira_thurston();
    // d e^4 = e^12
    {
        std::vector<double> e4(4, 0.0);
        e4[3] = 1.0;
        const auto de4 = kt.apply_d(1, e4);
        CHECK(de4[0] == doctest::Approx(1.0));
        for (int c = 1; c < 6; ++c) CHECK(de4[static_cast<std::size_t>(c)] == doctest::Approx(0.0));
    }
    // d e^13 = 0
    {
        std::vector<double> e13(6, 0.0);
        e13[1] = 1.0;
        for (double v : kt.apply_d(2, e13)) CHECK(v == doctest::Approx(0.0));
    }
    // d e^34 = -e^123
    {
        std::vector<double> e34(6, 0.0);
        e34[5] = 1.0;
        const auto d34 = kt.apply_d(2, e34);
        CHECK(d34[0] == doctest::Approx(-1.0));
        for (int c = 1; c < 4; ++c) CHECK(d34[static_cast<std::size_t>(c)] == doctest::Approx(0.0));
    }
}

TEST_CASE("CE complex: d o d = 0 exactly (integer matrices)") {
    for (const CeComplex& ce : {CeComplex::kodaira_thurston(), CeComplex::abelian()}) {
        for (int kdeg = 0; kdeg < 3; ++kdeg) {
            const auto& d1 = ce.d_matrix(kdeg);
            const auto& d2 = ce.d_matrix(kdeg + 1);
            for (std::size_t i = 0; i < d2.size(); ++i) {
                for (std::size_t j = 0; j < d1[0].size(); ++j) {
                    long long acc = 0;
                    for (std::size_t m = 0; m < d1.size(); ++m) {
                        acc += static_cast<long long>(d2[i][m]) * d1[m][j];
                    }
                    CHECK(acc == 0);
                }
            }
        }
    }
}

TEST_CASE("betti numbers against the integer rank oracle") {
    struct Case {
        CeComplex ce;
        std::vector<int> betti;
    };
    const Case cases[] = {
        {CeComplex::kodaira_thurston(), {1, 3, 4, 3, 1}},
        {CeComplex::abelian(), {1, 4, 6, 4, 1}},
    };
    for (const auto& c : cases) {
        for (int kdeg = 0; kdeg <= 4; ++kdeg) {
            const int dim = form_components(kdeg);
            const int rk = kdeg < 4 ? integer_rank(to_ll(c.ce.d_matrix(kdeg))) : 0;
            const int rkm1 = kdeg > 0 ? integer_rank(to_ll(c.ce.d_matrix(kdeg - 1))) : 0;
            const int betti_oracle = dim - rk - rkm1;
            CHECK(betti_oracle == c.betti[static_cast<std::size_t>(kdeg)]);
            CHECK(c.ce.cohomology(kdeg).betti == betti_oracle);
        }
    }
}

TEST_CASE("kt harmonic basis is orthonormal and closed") {
    const CeComplex kt = CeComplex::kodaira_thurston();
    const auto h2 = kt.cohomology(2);
    CHECK(h2.betti == 4);
    for (std::size_t i = 0; i < h2.harmonic_basis.size(); ++i) {
        // closed
        for (double v : kt.apply_d(2, h2.harmonic_basis[i])) {
            CHECK(std::abs(v) <= 1e-12);
        }
        for (std::size_t j = 0; j < h2.harmonic_basis.size(); ++j) {
            double dotv = 0.0;
            for (std::size_t c = 0; c < 6; ++c) {
                dotv += h2.harmonic_basis[i][c] * h2.harmonic_basis[j][c];
            }
            CHECK(std::abs(dotv - (i == j ? 1.0 : 0.0)) <= 1e-12);
        }
    }
}

TEST_CASE("kt harmonic self-dual basis is beta, J beta") {
    const auto basis = CeComplex::kodaira_thurston().harmonic_sd_basis();
    REQUIRE(basis.size() == 2);
    double d0 = 0.0, d1 = 0.0;
    for (int c = 0; c < 6; ++c) {
        d0 = std::max(d0, std::abs(basis[0][c] - kOmega2[c]));
        d1 = std::max(d1, std::abs(basis[1][c] - kOmega3[c]));
    }
    CHECK(d0 <= 1e-12);
    CHECK(d1 <= 1e-12);
}

TEST_CASE("abelian harmonic self-dual basis has dimension 3") {
    CHECK(CeComplex::abelian().harmonic_sd_basis().size() == 3);
}

TEST_CASE("formfield json round trip is bit-exact") {
    Rng rng(23);
    const FormField a = random_form(2, 4, rng, 1, 1.0);
    const std::string text = formfield_to_json(a);
    const FormField b = formfield_from_json(text);
    REQUIRE(b.same_shape(a));
    CHECK(std::memcmp(a.raw().data(), b.raw().data(), a.raw().size() * sizeof(double)) == 0);
    // header sanity
    CHECK(text.find("\"model\":\"torus\"") != std::string::npos);
    CHECK(text.find("\"ordering\":\"row-major x1-fastest\"") != std::string::npos);
    CHECK(text.find("\"components\":6") != std::string::npos);
}

TEST_CASE("kt formfield round trip") {
    FormField a(Model::kt, 0, 8);
    Rng rng(29);
    const FormField r = random_scalar(Model::kt, 8, rng, 2, 1.0);
    a = r;
    const FormField b = formfield_from_json(formfield_to_json(a));
    CHECK(b.model() == Model::kt);
    CHECK(b.npoints() == a.npoints());
    CHECK(std::memcmp(a.raw().data(), b.raw().data(), a.raw().size() * sizeof(double)) == 0);
}

TEST_CASE("acsfield json round trip keeps the provenance and the bits") {
    const FormField l = scalar_from_terms(Model::torus, 8, {TrigTerm{{1, 0, 0, 0}, 0.2, 0.0}});
    const FormField s = scalar_from_terms(Model::torus, 8, {TrigTerm{{0, 1, 0, 0}, 0.0, 0.1}});
    const AcsField J = from_fls(l, s, +1);
    const std::string text = acsfield_to_json(J);
    CHECK(text.find("\"provenance\":\"fls\"") != std::string::npos);
    const AcsField K = acsfield_from_json(text);
    CHECK(K.provenance() == Provenance::fls);
    CHECK(std::memcmp(J.omega().raw().data(), K.omega().raw().data(),
                      J.omega().raw().size() * sizeof(double)) == 0);
}

TEST_CASE("hex float encoding round trips denormals and specials") {
    for (double v : {0.0, -0.0, 1.0 / 3.0, 1e-310, -2.5e300, 6.25}) {
        const double w = hex_to_double(double_to_hex(v));
        CHECK(std::memcmp(&v, &w, sizeof(double)) == 0);
    }
}

TEST_CASE("serialization rejects malformed input") {
    CHECK_THROWS_AS(formfield_from_json("{\"model\":\"torus\"}"), std::exception);
    CHECK_THROWS_AS(load_formfield("/nonexistent/path.formfield.json"), IoFailure);
}
