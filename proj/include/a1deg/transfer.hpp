#ifndef A1DEG_TRANSFER_HPP
#define A1DEG_TRANSFER_HPP

#include "a1deg/degree.hpp"
#include "a1deg/forms.hpp"
#include "a1deg/poly.hpp"

#include <optional>

namespace a1deg {

// The k-linear functional on L = k(t) sending t^{n-1} to 1 and lower powers
// of t to 0. For a trivial extension (degree-1 point) it is the identity.
struct scharlau_functional {
    field_ptr L;
    element apply(const element& a) const;
};

// Transfer of a symmetric form over L down to k along the Scharlau form:
// the (i,j) block of the result is (s(t^{l+m} * beta_ij))_{l,m}.
sym_form geometric_transfer(const sym_form& beta, const field_ptr& L);
gw_class geometric_transfer(const gw_class& beta, const field_ptr& L);

// omega_0 = m_0(x) / (x - t^{p^i}) where m(x) = m_0(x^{p^i}), m_0 separable.
struct omega0_result {
    poly omega;        // over L
    element value_at_t; // omega_0(t), nonzero
    poly m0;           // over k
    unsigned insep_exponent; // the i with m(x) = m_0(x^{p^i})
};
omega0_result omega0(const closed_point& p);

// Geometric transfer of the form scaled by omega_0(t).
sym_form cohomological_transfer(const sym_form& beta, const closed_point& p);
gw_class cohomological_transfer(const gw_class& beta, const closed_point& p);

// Gram matrix of (x, y) -> Tr_{L/k}(a x y) in the basis {1, t, ..., t^{n-1}}.
sym_form trace_form(const field_ptr& L, const element& a);

enum class lift_kind { geometric, cohomological };

struct lift_result {
    lift_kind kind;
    poly lifted;   // over L
    element point; // t
    unsigned d;
    poly u_lifted; // over L; includes the omega_0^d factor for cohomological lifts
    std::optional<element> omega0_at_t;
};

lift_result geometric_lift(const poly& f, const closed_point& p);
lift_result cohomological_lift(const poly& f, const closed_point& p);

// a(x) = sum a_i x^i over k, from the canonical coordinates of a in L.
poly coeff_poly(const element& a);

gw_class scaled_scharlau_form(const closed_point& p, const element& a);
gw_class scaled_trace_form(const closed_point& p, const element& a);

// Bezoutian of f reduced mod (m(X)^d, m(Y)^d) and expressed in the basis
// {Hor_{n-1} m^{d-1-i}, ..., Hor_0 m^{d-1-i}}_{i=0..d-1}; block upper-left
// triangular with every main-antidiagonal block the Gram matrix of the
// transferred rank-one form <u(t)>.
matrix bezoutian_in_block_basis(const poly& f, const closed_point& p, unsigned d);

struct verify_report {
    gw_class lhs;           // local degree of f at p
    gw_class geometric;     // transfer of the geometric lift's local degree
    gw_class cohomological; // transfer of the cohomological lift's local degree
    gw_verdict verdict_geometric;
    gw_verdict verdict_cohomological;
    bool block_antidiagonal_check = false;
    gw_verdict verdict_block; // block-basis route against lhs
    unsigned n = 0, d = 0;
    unsigned rank_local = 0;       // n * d
    unsigned rank_lift = 0;        // d
    unsigned rank_base_change = 0; // multiplicity of (x - t) in f base-changed to L
    element u_at_t;                // in L
};

verify_report verify_theorem_1_1(const poly& f, const closed_point& p);

} // namespace a1deg

#endif
