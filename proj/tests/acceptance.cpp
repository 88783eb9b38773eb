//==============================================================================
// acceptance.cpp
// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the binary exits nonzero if any criterion fails.
//==============================================================================

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ac4x/cohomology.hpp"
#include "ac4x/cy.hpp"
#include "ac4x/hodge.hpp"
#include "ac4x/random_fields.hpp"
#include "ac4x/spectral.hpp"

using namespace ac4x;

namespace {

constexpr int kN = 16;
int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<std::string()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    try {
        detail = body();
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!pass) ++g_failures;
    std::printf("%s criterion %2d [%s] (%.1fs): %s\n", pass ? "PASS" : "FAIL", number,
                name.c_str(), secs, detail.c_str());
    std::fflush(stdout);
}

struct Check {
    bool ok = true;
    std::ostringstream msg;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            msg << (msg.str().empty() ? "" : "; ") << what;
        }
    }
    std::string done(const std::string& on_pass) {
        if (!ok) throw InvariantViolation(msg.str());
        return on_pass;
    }
};

// The torus corpus of criterion 1 (seed 0), reused by criteria 6 and 8.
std::vector<AcsField> torus_corpus() {
    std::vector<AcsField> out;
    Rng rng(0);
    out.push_back(standard_acs(Model::torus, kN));
    for (int i = 0; i < 5; ++i) {
        const FormField l = random_scalar(Model::torus, kN, rng, kN / 4, 0.25);
        const FormField s = random_scalar(Model::torus, kN, rng, kN / 4, 0.25);
        out.push_back(from_fls(l, s, +1));
    }
    for (int i = 0; i < 5; ++i) {
        const FormField alpha = random_standard_anti(Model::torus, kN, rng, kN / 4, 0.3);
        out.push_back(lee_jalpha(alpha, +1));
    }
    for (int i = 0; i < 5; ++i) {
        const FormField alpha = random_standard_anti(Model::torus, kN, rng, kN / 4, 0.3);
        out.push_back(tilde_jalpha(alpha, i % 2 == 0 ? +1 : -1));
    }
    std::uniform_real_distribution<double> cd(-0.7, 0.7);
    for (int i = 0; i < 4; ++i) {
        const Form2Fiber alpha_c = cd(rng) * kOmega2 + cd(rng) * kOmega3;
        if (norm_sq(alpha_c) < 1e-2) continue;
        const FormField alpha = FormField::constant2(Model::torus, kN, alpha_c);
        const FormField r = random_scalar(Model::torus, kN, rng, kN / 4, 0.35);
        out.push_back(anti_preserving(alpha, r));
    }
    return out;
}

std::vector<AcsField> kt_corpus() {
    std::vector<AcsField> out;
    Rng rng(0);
    out.push_back(standard_acs(Model::kt, kN));
    FormField zero(Model::kt, 0, kN);
    FormField half(Model::kt, 0, kN);
    for (std::size_t p = 0; p < half.npoints(); ++p) half.at(0, p) = 0.5;
    out.push_back(from_fls(zero, zero, +1));
    out.push_back(from_fls(half, zero, +1));
    out.push_back(from_fls(scalar_from_terms(Model::kt, kN, {TrigTerm{{1, 0, 0, 0}, 0.1, 0.0}}),
                           scalar_from_terms(Model::kt, kN, {TrigTerm{{0, 1, 0, 0}, 0.0, 0.1}}),
                           +1));
    out.push_back(from_fls(random_scalar(Model::kt, kN, rng, kN / 4, 0.2),
                           random_scalar(Model::kt, kN, rng, kN / 4, 0.2), +1));
    return out;
}

FormField const_scalar(Model model, int n, double v) {
    FormField f(model, 0, n);
    for (std::size_t p = 0; p < f.npoints(); ++p) f.at(0, p) = v;
    return f;
}

}  // namespace

int main() {
    criterion(1, "decomposition theorem", [] {
        const auto t0 = std::chrono::steady_clock::now();
        Check c;
        const auto torus = torus_corpus();
        c.require(torus.size() >= 20, "torus corpus too small");
        for (const auto& J : torus) {
            const CohomSummary s = h_minus(J);
            c.require(s.h_plus + s.h_minus == 6, "h+ + h- != 6 on torus");
            const DirectSumReport r = verify_direct_sum(J);
            c.require(r.gram_rank == 6, "cup Gram rank deficient");
            c.require(r.max_cross_normalized <= 1e-8, "cross-block cup product too large");
        }
        const auto kt = kt_corpus();
        c.require(kt.size() >= 5, "kt corpus too small");
        for (const auto& J : kt) {
            const CohomSummary s = h_minus(J);
            c.require(s.h_plus + s.h_minus == 4, "h+ + h- != 4 on kt");
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > 120.0) throw InvariantViolation("runtime above 2 minutes");
        std::ostringstream os;
        os << torus.size() << " torus + " << kt.size() << " kt structures, full-rank Gram";
        return c.done(os.str());
    });

    criterion(2, "integrable reference values", [] {
        Check c;
        const CohomSummary t = h_minus(standard_acs(Model::torus, kN));
        c.require(t.h_plus == 4 && t.h_minus == 2, "torus values wrong");
        const CohomSummary k = h_minus(standard_acs(Model::kt, kN));
        c.require(k.h_plus == 2 && k.h_minus == 2, "kt values wrong");
        return c.done("torus (h+,h-) = (4,2); kt (2,2)");
    });

    criterion(3, "Kodaira table", [] {
        Check c;
        for (int n : {8, 16}) {
            const FormField zero(Model::kt, 0, n);
            c.require(h_minus(from_fls(zero, zero, +1)).h_minus == 2, "rank 0 row");
            c.require(h_minus(from_fls(const_scalar(Model::kt, n, 0.5), zero, +1)).h_minus == 1,
                      "rank 1 row");
            const FormField l =
                scalar_from_terms(Model::kt, n, {TrigTerm{{1, 0, 0, 0}, 0.1, 0.0}});
            const FormField s =
                scalar_from_terms(Model::kt, n, {TrigTerm{{0, 1, 0, 0}, 0.0, 0.1}});
            c.require(h_minus(from_fls(l, s, +1)).h_minus == 0, "rank 2 row");
        }
        return c.done("h- = 2, 1, 0 at n = 8 and n = 16");
    });

    criterion(4, "rank formula cross-check", [] {
        Check c;
        Rng rng(0);
        std::uniform_real_distribution<double> ud(-1.0, 1.0);
        int agreements = 0;
        for (int trial = 0; trial < 50; ++trial) {
            const FormField l = random_scalar(Model::torus, kN, rng, kN / 4, 0.25);
            const FormField s = random_scalar(Model::torus, kN, rng, kN / 4, 0.25);
            const auto [vr, vh] =
                prop_linear_check(trial % 2 == 0 ? +1 : -1, l, s, ud(rng), ud(rng));
            c.require(vr == vh, "disagreement at trial " + std::to_string(trial));
            if (vr == vh) ++agreements;
        }
        return c.done("50/50 agreements between the rank formula and h^-");
    });

    criterion(5, "Lee example", [] {
        Check c;
        c.require(lee_hminus_check(1.0, 0.0, kN) == 2, "alpha = beta");
        c.require(lee_hminus_check(0.0, 0.0, kN) == 2, "alpha = 0");
        c.require(lee_hminus_check(0.5, 0.5, kN) == 2, "alpha = 0.5(beta + J beta)");
        c.require(lee_hminus_check(-0.3, 0.8, kN) == 2, "alpha generic constant");
        return c.done("h^-(J_alpha) = 2 for constant alpha on the hyperKahler torus");
    });

    criterion(6, "intersection estimate", [] {
        Check c;
        Rng rng(0);
        const AcsField base = standard_acs(Model::torus, kN);
        const FormField beta = FormField::constant2(Model::torus, kN, kOmega2);
        for (int trial = 0; trial < 5; ++trial) {
            const FormField r = random_scalar(Model::torus, kN, rng, kN / 4, 0.4);
            c.require(intersection_estimate_check(base, anti_preserving(beta, r)) == 1,
                      "anti-preserving intersection != 1");
        }
        const auto corpus = torus_corpus();
        int tested = 0;
        for (std::size_t gap = 1; gap <= 2 && tested < 24; ++gap) {
            for (std::size_t i = 0; i + gap < corpus.size() && tested < 24; ++i) {
                try {
                    const int dim = intersection_estimate_check(corpus[i], corpus[i + gap]);
                    c.require(dim <= 1, "intersection above 1");
                    ++tested;
                } catch (const IdenticallyPlusMinus&) {
                    // identical pair: estimate does not apply
                }
            }
        }
        c.require(tested >= 20, "not enough admissible pairs");
        return c.done("dim = 1 on anti-preserving families; <= 1 on " +
                      std::to_string(tested) + " random pairs");
    });

    criterion(7, "Hodge lemma", [] {
        Check c;
        Rng rng(0);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const FormField a = random_sd_form(kN, rng, kN / 4, 1.0);
            const auto [dp, dm] = verify_dim4_lemma(a);
            worst = std::max({worst, dp, dm});
        }
        c.require(worst <= 1e-9, "defect " + std::to_string(worst));
        std::ostringstream os;
        os << "100 fields, worst defect " << worst;
        return c.done(os.str());
    });

    criterion(8, "taming estimates", [] {
        Check c;
        const auto corpus = torus_corpus();
        const FormField omega_closed = FormField::constant2(Model::torus, kN, kOmega1);
        FormField omega_neg = omega_closed;
        omega_neg *= -1.0;
        int tamed = 0;
        for (const auto& J : corpus) {
            bool is_tamed = false;
            for (const FormField* w :
                 std::initializer_list<const FormField*>{&omega_closed, &omega_neg}) {
                try {
                    (void)tame_split(*w, J);
                    is_tamed = true;
                    break;
                } catch (const NotTaming&) {
                }
            }
            if (!is_tamed) continue;
            ++tamed;
            const CohomSummary s = h_minus(J);
            c.require(s.h_minus <= 2, "tamed structure with h^- > b^+ - 1");
            c.require(s.h_plus >= 4, "tamed structure with h^+ < b^- + 1");
        }
        c.require(tamed >= 10, "too few tamed members in the corpus");
        return c.done(std::to_string(tamed) + " tamed members all satisfy h^- <= b^+ - 1");
    });

    criterion(9, "tame-to-compatible candidate", [] {
        Check c;
        Rng rng(0);
        const AcsField base = standard_acs(Model::torus, kN);
        // closed alpha (harmonic, hence constant on the flat torus)
        for (double amp : {0.2, 0.5, 0.9}) {
            const FormField alpha = FormField::constant2(Model::torus, kN, amp * kOmega2);
            const CompatibleCandidate cc = tame_to_compatible_candidate(alpha, base);
            FormField expect = base.omega();
            expect += alpha;
            FormField diff = cc.candidate;
            diff -= expect;
            c.require(sup_norm(diff) <= 1e-12, "closed alpha: candidate != omega + alpha");
            const double* pm = cc.margin.comp(0);
            for (std::size_t i = 0; i < cc.margin.npoints(); ++i) {
                if (pm[i] < 2.0 - 1e-12) {
                    c.require(false, "closed alpha: margin below 2");
                    break;
                }
            }
        }
        // small non-closed perturbations
        for (int trial = 0; trial < 10; ++trial) {
            const FormField alpha = random_standard_anti(Model::torus, kN, rng, kN / 4, 0.25);
            const CompatibleCandidate cc = tame_to_compatible_candidate(alpha, base);
            c.require(sup_norm(d_spectral(cc.candidate)) <= 1e-9, "candidate not closed");
            const AcsField Jt = tilde_jalpha(alpha, +1);
            c.require(max_anti_residual(cc.candidate, Jt) <= 1e-8, "candidate not invariant");
            const FormField sq = wedge_fields(cc.candidate, cc.candidate);
            const double* ps = sq.comp(0);
            bool positive = true;
            for (std::size_t i = 0; i < sq.npoints(); ++i) positive = positive && ps[i] > 0.0;
            c.require(positive, "candidate not positive");
        }
        return c.done("3 closed + 10 non-closed perturbations verified");
    });

    criterion(10, "CY solver", [] {
        const auto t0 = std::chrono::steady_clock::now();
        Check c;
        {
            const CyProblem p(FormField(Model::torus, 0, kN), standard_acs(Model::torus, kN));
            const CySolution s = solve_cy(p);
            c.require(s.iterations == 1 && sup_norm(s.a) == 0.0, "trivial solve not exact");
        }
        const FormField F =
            scalar_from_terms(Model::torus, kN, {TrigTerm{{1, 0, 0, 0}, 0.0, 0.3}});
        const CyProblem p(F, standard_acs(Model::torus, kN));
        const CySolution s = solve_cy(p);
        c.require(s.converged && s.iterations <= 200, "no convergence");
        c.require(s.residual_volume <= 1e-8,
                  "volume residual " + std::to_string(s.residual_volume));
        c.require(s.residual_closed <= 1e-9, "closedness residual");
        c.require(s.period_drift <= 1e-9, "period drift");
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > 300.0) throw InvariantViolation("runtime above 5 minutes");
        std::ostringstream os;
        os << "converged in " << s.iterations << " sweeps, volume residual "
           << s.residual_volume;
        return c.done(os.str());
    });

    criterion(11, "semicontinuity", [] {
        Check c;
        const FormField l0 =
            scalar_from_terms(Model::torus, kN, {TrigTerm{{1, 0, 0, 0}, 0.05, 0.0}});
        const FormField s0 =
            scalar_from_terms(Model::torus, kN, {TrigTerm{{0, 1, 0, 0}, 0.0, 0.05}});
        auto path = [&](double t) {
            FormField lt = l0;
            lt *= t;
            FormField st = s0;
            st *= t;
            return from_fls(lt, st, +1);
        };
        const auto rows = semicontinuity_scan(path, 8);
        c.require(rows.front().h_plus == 4 && rows.front().h_minus == 2, "base values");
        c.require(rows.back().h_plus == 6 && rows.back().h_minus == 0, "endpoint values");
        for (std::size_t i = 1; i < rows.size(); ++i) {
            c.require(rows[i].h_plus >= rows[i - 1].h_plus, "h+ not non-decreasing");
            c.require(rows[i].h_minus <= rows[i - 1].h_minus, "h- not non-increasing");
        }
        const CyProblem base(FormField(Model::torus, 0, kN), standard_acs(Model::torus, kN));
        const ContinuationResult cr = continuation(path, 8, base);
        c.require(!cr.breakdown_t.has_value(), "continuation broke down");
        c.require(cr.solutions.size() == 9, "missing continuation solutions");
        for (const auto& s : cr.solutions) {
            c.require(s.converged && s.residual_invariance <= 1e-8,
                      "compatible solve failed along the path");
        }
        return c.done("h+: 4 -> 6, h-: 2 -> 0 monotonically; compatible cone nonempty at 9 samples");
    });

    criterion(12, "integrability dichotomy", [] {
        Check c;
        c.require(nijenhuis_sup(standard_acs(Model::torus, kN)) <= 1e-9,
                  "constant structure not flagged integrable");
        const FormField ac = FormField::constant2(Model::torus, kN, 0.4 * kOmega2);
        c.require(nijenhuis_sup(tilde_jalpha(ac, +1)) <= 1e-9,
                  "constant tilde structure not flagged integrable");
        const FormField l =
            scalar_from_terms(Model::torus, kN, {TrigTerm{{1, 0, 0, 0}, 0.2, 0.0}});
        const FormField s(Model::torus, 0, kN);
        const AcsField witness = from_fls(l, s, +1);
        const double nsup = nijenhuis_sup(witness);
        c.require(nsup > 1e-3, "witness not detected");
        // closed anti-invariant form whose J-image is not closed
        const FormField beta_t = FormField::constant2(Model::torus, kN, kOmega3);
        c.require(sup_norm(d_spectral(beta_t)) <= 1e-12, "witness form not closed");
        const FormField jb = j_on_anti_field(beta_t, witness);
        const double djb = sup_norm(d_spectral(jb));
        c.require(djb > 1e-3, "d(J beta~) too small");
        std::ostringstream os;
        os << "N sup = " << nsup << ", |d(J beta~)| = " << djb;
        return c.done(os.str());
    });

    if (g_failures == 0) {
        std::printf("acceptance: all 12 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}
