#ifndef A1DEG_DEGREE_HPP
#define A1DEG_DEGREE_HPP

#include "a1deg/forms.hpp"
#include "a1deg/matrix.hpp"
#include "a1deg/poly.hpp"

#include <optional>

namespace a1deg {

// Coefficient matrix of (f(X)g(Y) - f(Y)g(X)) / (X - Y); always symmetric.
struct bezoutian_form {
    matrix coeffs;
    field_ptr domain;
};

bezoutian_form bezoutian(const poly& f, const poly& g);
bezoutian_form bezoutian(const poly& f); // g = 1

// A closed point of the affine line: monic irreducible m together with the
// residue field L = k[x]/(m) and the class t of x. Degree-1 points keep
// L = k with t the rational root.
struct closed_point {
    poly m;
    field_ptr residue_field;
    element t;

    unsigned degree() const { return static_cast<unsigned>(m.degree()); }
};

closed_point make_closed_point(const poly& m, const std::string& sym = "r");

gw_class global_degree(const poly& f, const poly& g);
gw_class global_degree(const poly& f);

gw_class local_degree(const poly& f, const closed_point& p);

// Local degree data of f over L at a rational point t: f = u * (x - t)^d with
// u(t) != 0, the d x d upper-Hankel Gram in the basis {(x-t)^{d-1}, ..., 1}
// whose antidiagonals are the Hasse derivatives of u at t, and its class.
struct local_rational_degree {
    unsigned d = 0;
    poly u;
    element u_at_t;
    sym_form form;
    gw_class cls;
};

local_rational_degree local_degree_rational(const poly& f, const element& t);

// Multiplicity of (x - t) in f; 0 when f(t) != 0.
unsigned vanishing_order(const poly& f, const element& t);

// Bivariate coefficient-matrix utilities (entry (i, j) is the X^i Y^j
// coefficient). Reduction is columnwise mod mod_x then rowwise mod mod_y.
matrix bivariate_reduce(const matrix& coeffs, const poly& mod_x, const poly& mod_y);
// Substitute X -> X + t and Y -> Y + t.
matrix bivariate_shift(const matrix& coeffs, const element& t);

} // namespace a1deg

#endif
