#ifndef A1DEG_POLY_HPP
#define A1DEG_POLY_HPP

#include "a1deg/fields.hpp"
#include "a1deg/vecpoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace a1deg {

// Dense univariate polynomial over a field. Coefficients are stored constant
// term first with no trailing zeros; the zero polynomial has no coefficients.
class poly {
public:
    poly() = default;
    poly(field_ptr k, std::vector<element> coeffs) : k_(std::move(k)), c_(vp::normalize(std::move(coeffs))) {}

    static poly zero(const field_ptr& k) { return poly(k, {}); }
    static poly constant(const field_ptr& k, const element& c) { return poly(k, {c}); }
    static poly from_integer(const field_ptr& k, const mpz_class& n) { return poly(k, {k->from_integer(n)}); }
    static poly x(const field_ptr& k) { return poly(k, {k->zero(), k->one()}); }

    const field_ptr& domain() const { return k_; }
    const std::vector<element>& coeffs() const { return c_; }
    int degree() const { return vp::degree(c_); }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    element lead() const;
    element coeff(size_t i) const { return i < c_.size() ? c_[i] : k_->zero(); }
    element operator()(const element& x) const { return vp::eval(c_, x, k_); }

    poly operator+(const poly& g) const;
    poly operator-(const poly& g) const;
    poly operator*(const poly& g) const;
    poly operator-() const { return poly(k_, vp::negate(c_)); }
    poly operator*(const element& c) const { return poly(k_, vp::scalar_mul(c_, c)); }
    bool operator==(const poly& g) const { return same_field(k_, g.k_) && c_ == g.c_; }
    bool operator!=(const poly& g) const { return !(*this == g); }

    poly pow(unsigned e) const { return poly(k_, vp::pow(c_, e, k_)); }
    poly monic() const { return poly(k_, vp::monic(c_)); }

private:
    field_ptr k_;
    std::vector<element> c_;
};

struct divrem_result {
    poly quot, rem;
};
divrem_result poly_divrem(const poly& a, const poly& b);
poly poly_gcd(const poly& a, const poly& b); // monic (or zero)
poly poly_derivative(const poly& a);

// Hasse derivative: sum_j C(j, i) c_j x^{j-i}, binomials reduced into the field.
poly hasse_derivative(const poly& u, unsigned i);

// f = u * m^d with m irreducible not dividing u.
struct factored_at_point {
    poly u;
    unsigned d;
    poly m;
};
factored_at_point multiplicity_at(const poly& f, const poly& m);

// m(x) = m0(x^{p^i}) with m0 separable; i = 0 in characteristic zero.
struct insep_decomposition {
    poly m0;
    unsigned i;
};
insep_decomposition separability_decompose(const poly& m);

bool is_separable(const poly& m); // gcd(m, m') = 1

// Horner polynomials of a monic m, returned highest degree first:
// [Hor_{n-1}, ..., Hor_0] with Hor_0 = 1, Hor_i = x*Hor_{i-1} + a_{n-i}.
std::vector<poly> horner_basis(const poly& m);

// Coefficient-wise embedding into a simple extension of the coefficient field.
poly base_change(const poly& f, const field_ptr& L);

std::string to_string(const poly& f, const std::string& var = "x");

} // namespace a1deg

#endif
