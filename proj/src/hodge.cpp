#include "ac4x/hodge.hpp"

#include <cmath>

#include "ac4x/acs.hpp"

namespace ac4x {

HodgeParts hodge_decompose(const FormField& a) {
    if (a.model() != Model::torus) {
        throw DegreeOutOfRange("hodge_decompose: torus model required");
    }
    if (a.degree() != 2) throw DegreeOutOfRange("hodge_decompose: 2-forms only");

    HodgeParts out;
    out.harmonic = FormField::constant(Model::torus, 2, a.n(), component_means(a));

    // theta = G delta a (zero mean), Psi = G d a; the Green operator commutes
    // with d and delta on the flat torus, so exact + coexact + harmonic = a.
    out.theta = inv_laplacian_zero_mean(delta_spectral(a));
    out.exact = d_spectral(out.theta);
    FormField psi = inv_laplacian_zero_mean(d_spectral(a));
    out.coexact = delta_spectral(psi);
    return out;
}

std::pair<double, double> verify_dim4_lemma(const FormField& a) {
    const FormField asd = asd_part(a);
    const double scale = std::max(1.0, sup_norm(a));
    if (sup_norm(asd) > 1e-10 * scale) {
        throw NotSelfDual("verify_dim4_lemma: input must be pointwise self-dual");
    }
    const HodgeParts h = hodge_decompose(a);
    FormField dplus = sd_part(h.exact);
    FormField cplus = sd_part(h.coexact);
    dplus -= cplus;
    const double defect_plus = sup_norm(dplus);
    FormField dminus = asd_part(h.exact);
    FormField cminus = asd_part(h.coexact);
    dminus += cminus;
    const double defect_minus = sup_norm(dminus);
    return {defect_plus, defect_minus};
}

FormField close_ji_form(const FormField& f, const AcsField& J) {
    if (J.model() != Model::torus) {
        throw DegreeOutOfRange("close_ji_form: torus model required");
    }
    FormField fw = scale_by_scalar_field(f, J.omega());
    const HodgeParts h = hodge_decompose(fw);
    FormField out = fw;
    field_axpy(2.0, asd_part(h.exact), out);
    return out;
}

}  // namespace ac4x
