#include "ac4x/form_field.hpp"

#include <cmath>

#include "ac4x/kernels.hpp"

namespace ac4x {

std::string model_name(Model m) { return m == Model::torus ? "torus" : "kt"; }

Model model_from_name(const std::string& name) {
    if (name == "torus") return Model::torus;
    if (name == "kt") return Model::kt;
    throw IoFailure("unknown model name: " + name);
}

int form_components(int degree) {
    static const int table[5] = {1, 4, 6, 4, 1};
    if (degree < 0 || degree > 4) throw DegreeOutOfRange("degree must be 0..4");
    return table[degree];
}

void validate_grid_size(int n) {
    if (n < 4 || (n & (n - 1)) != 0) {
        throw IoFailure("grid size must be a power of two >= 4, got " + std::to_string(n));
    }
}

TorusGrid::TorusGrid(int n_pts) : n(n_pts) { validate_grid_size(n); }

std::size_t TorusGrid::npoints() const {
    const auto nn = static_cast<std::size_t>(n);
    return nn * nn * nn * nn;
}

FormField::FormField(Model model, int degree, int n)
    : model_(model), degree_(degree), n_(n), ncomp_(form_components(degree)) {
    validate_grid_size(n);
    const auto nn = static_cast<std::size_t>(n);
    npoints_ = model == Model::torus ? nn * nn * nn * nn : nn * nn * nn;
    data_.assign(static_cast<std::size_t>(ncomp_) * npoints_, 0.0);
}

FormField FormField::constant(Model model, int degree, int n,
                              const std::vector<double>& comps) {
    FormField f(model, degree, n);
    if (comps.size() != static_cast<std::size_t>(f.ncomp_)) {
        throw IoFailure("constant: wrong number of components");
    }
    for (int c = 0; c < f.ncomp_; ++c) {
        double* p = f.comp(c);
        for (std::size_t i = 0; i < f.npoints_; ++i) p[i] = comps[static_cast<std::size_t>(c)];
    }
    return f;
}

FormField FormField::constant2(Model model, int n, const Form2Fiber& value) {
    return constant(model, 2, n, {value[0], value[1], value[2], value[3], value[4], value[5]});
}

double* FormField::comp(int c) { return data_.data() + static_cast<std::size_t>(c) * npoints_; }

const double* FormField::comp(int c) const {
    return data_.data() + static_cast<std::size_t>(c) * npoints_;
}

void FormField::comp_ptrs(const double* p[6]) const {
    for (int c = 0; c < 6; ++c) p[c] = comp(c);
}

void FormField::comp_ptrs(double* p[6]) {
    for (int c = 0; c < 6; ++c) p[c] = comp(c);
}

Form2Fiber FormField::fiber2(std::size_t p) const {
    Form2Fiber v;
    for (int c = 0; c < 6; ++c) v[c] = at(c, p);
    return v;
}

void FormField::set_fiber2(std::size_t p, const Form2Fiber& v) {
    for (int c = 0; c < 6; ++c) at(c, p) = v[c];
}

bool FormField::same_shape(const FormField& o) const {
    return model_ == o.model_ && degree_ == o.degree_ && n_ == o.n_;
}

bool FormField::all_finite() const {
    for (double x : data_) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

FormField& FormField::operator+=(const FormField& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

FormField& FormField::operator-=(const FormField& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

FormField& FormField::operator*=(double s) {
    for (double& x : data_) x *= s;
    return *this;
}

void field_axpy(double s, const FormField& x, FormField& y) {
    kernels::axpby(s, x.raw().data(), 1.0, y.raw().data(), y.raw().size());
}

FormField scale_by_scalar_field(const FormField& f, const FormField& a) {
    FormField out(a.model(), a.degree(), a.n());
    for (int c = 0; c < a.ncomp(); ++c) {
        kernels::pw_mul(f.comp(0), a.comp(c), out.comp(c), a.npoints());
    }
    return out;
}

FormField star2_field(const FormField& a) {
    FormField out(a.model(), 2, a.n());
    const double* in[6];
    double* po[6];
    a.comp_ptrs(in);
    out.comp_ptrs(po);
    kernels::star6(in, po, a.npoints());
    return out;
}

FormField sd_part(const FormField& a) {
    FormField s = star2_field(a);
    FormField out = a;
    out += s;
    out *= 0.5;
    return out;
}

FormField asd_part(const FormField& a) {
    FormField s = star2_field(a);
    FormField out = a;
    out -= s;
    out *= 0.5;
    return out;
}

FormField pointwise_inner2(const FormField& a, const FormField& b) {
    FormField out(a.model(), 0, a.n());
    const double* pa[6];
    const double* pb[6];
    a.comp_ptrs(pa);
    b.comp_ptrs(pb);
    kernels::inner6(pa, pb, out.comp(0), a.npoints());
    return out;
}

FormField pointwise_pair_const(const FormField& a, const Form2Fiber& phi) {
    FormField out(a.model(), 0, a.n());
    const double* pa[6];
    a.comp_ptrs(pa);
    kernels::lincomb6(pa, phi.c.data(), out.comp(0), a.npoints());
    return out;
}

FormField pointwise_normsq2(const FormField& a) { return pointwise_inner2(a, a); }

double sup_norm(const FormField& a) {
    return kernels::max_abs(a.raw().data(), a.raw().size());
}

double l2_inner(const FormField& a, const FormField& b) {
    const double s = kernels::dot(a.raw().data(), b.raw().data(), a.raw().size());
    return s / static_cast<double>(a.npoints());
}

double l2_norm(const FormField& a) { return std::sqrt(std::max(0.0, l2_inner(a, a))); }

std::vector<double> component_means(const FormField& a) {
    std::vector<double> means(static_cast<std::size_t>(a.ncomp()), 0.0);
    for (int c = 0; c < a.ncomp(); ++c) {
        double s = 0.0;
        const double* p = a.comp(c);
        for (std::size_t i = 0; i < a.npoints(); ++i) s += p[i];
        means[static_cast<std::size_t>(c)] = s / static_cast<double>(a.npoints());
    }
    return means;
}

std::array<int, 4> grid_coords(const FormField& f, std::size_t p) {
    std::array<int, 4> x{0, 0, 0, 0};
    const auto n = static_cast<std::size_t>(f.n());
    const int dim = f.grid_dim();
    for (int d = 0; d < dim; ++d) {
        x[static_cast<std::size_t>(d)] = static_cast<int>(p % n);
        p /= n;
    }
    return x;
}

}  // namespace ac4x
