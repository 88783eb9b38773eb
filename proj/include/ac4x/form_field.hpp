#pragma once

//==============================================================================
// form_field.hpp
// Degree-k differential forms sampled on a periodic grid, for two models:
//   * torus: the flat unit 4-torus, n^4 points, coordinates (x1,x2,x3,x4);
//   * kt:    the Kodaira-Thurston nilmanifold, invariant coframe coefficients
//            sampled on an n^3 grid in the base coordinates (x, y, t) and
//            constant along the fiber coordinate.
// Coefficients are stored component-major: ncomp contiguous planes of
// npoints doubles, each plane row-major with the first coordinate fastest.
// Component order follows the fixed coframe bases (1; e^1..e^4; e^12, e^13,
// e^14, e^23, e^24, e^34; e^123, e^124, e^134, e^234; e^1234).
//
// Fields are value types; all free operations are pure.
//==============================================================================

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ac4x/errors.hpp"
#include "ac4x/fiber.hpp"

namespace ac4x {

enum class Model { torus, kt };

std::string model_name(Model m);
Model model_from_name(const std::string& name);

/// Number of components of a degree-k form on a 4-dimensional coframe.
int form_components(int degree);

/// Grid spacing 1/n, points per axis n (power of two, n >= 4).
struct TorusGrid {
    int n;
    explicit TorusGrid(int n_pts);
    double spacing() const { return 1.0 / n; }
    std::size_t npoints() const;
};

void validate_grid_size(int n);

class FormField {
  public:
    FormField() = default;
    FormField(Model model, int degree, int n);  // zero-initialized

    /// A field with the same constant fiber value everywhere.
    static FormField constant(Model model, int degree, int n,
                              const std::vector<double>& comps);
    static FormField constant2(Model model, int n, const Form2Fiber& value);

    Model model() const { return model_; }
    int degree() const { return degree_; }
    int n() const { return n_; }
    int ncomp() const { return ncomp_; }
    std::size_t npoints() const { return npoints_; }
    int grid_dim() const { return model_ == Model::torus ? 4 : 3; }

    double* comp(int c);
    const double* comp(int c) const;
    void comp_ptrs(const double* p[6]) const;  // degree 2 only
    void comp_ptrs(double* p[6]);              // degree 2 only

    double& at(int c, std::size_t p) { return data_[static_cast<std::size_t>(c) * npoints_ + p]; }
    double at(int c, std::size_t p) const { return data_[static_cast<std::size_t>(c) * npoints_ + p]; }

    Form2Fiber fiber2(std::size_t p) const;
    void set_fiber2(std::size_t p, const Form2Fiber& v);

    bool same_shape(const FormField& o) const;
    bool all_finite() const;

    FormField& operator+=(const FormField& o);
    FormField& operator-=(const FormField& o);
    FormField& operator*=(double s);
    friend FormField operator+(FormField a, const FormField& b) { return a += b; }
    friend FormField operator-(FormField a, const FormField& b) { return a -= b; }
    friend FormField operator*(double s, FormField a) { return a *= s; }

    std::vector<double>& raw() { return data_; }
    const std::vector<double>& raw() const { return data_; }

  private:
    Model model_ = Model::torus;
    int degree_ = 0;
    int n_ = 0;
    int ncomp_ = 0;
    std::size_t npoints_ = 0;
    std::vector<double> data_;
};

//------------------------------------------------------------------------------
// Field-level helpers built on the kernel layer (degree-2 unless noted)
//------------------------------------------------------------------------------

/// y += s*x (any degree).
void field_axpy(double s, const FormField& x, FormField& y);

/// Pointwise multiplication of every component by a scalar field.
FormField scale_by_scalar_field(const FormField& f, const FormField& a);

/// Pointwise Hodge star sign action on a 2-form field.
FormField star2_field(const FormField& a);

/// Self-dual / anti-self-dual pointwise projections of a 2-form field.
FormField sd_part(const FormField& a);
FormField asd_part(const FormField& a);

/// Pointwise fiber inner product of two 2-form fields (scalar field).
FormField pointwise_inner2(const FormField& a, const FormField& b);

/// Pointwise pairing with a constant 2-form (scalar field).
FormField pointwise_pair_const(const FormField& a, const Form2Fiber& phi);

/// Pointwise squared fiber norm of a 2-form field (scalar field).
FormField pointwise_normsq2(const FormField& a);

/// Sup of |coefficients| over all components and points.
double sup_norm(const FormField& a);

/// L^2 inner product by periodic quadrature (exact for band-limited fields);
/// components are summed with unit weights, matching the orthonormal coframe.
double l2_inner(const FormField& a, const FormField& b);
double l2_norm(const FormField& a);

/// Mean value of each component (the zero-frequency mode).
std::vector<double> component_means(const FormField& a);

/// Grid coordinates of a flat point index (torus: 4 indices, kt: 3).
std::array<int, 4> grid_coords(const FormField& f, std::size_t p);

}  // namespace ac4x
