#include "a1deg/poly.hpp"

#include "a1deg/errors.hpp"

namespace a1deg {

namespace {

void require_same(const poly& a, const poly& b) {
    if (!same_field(a.domain(), b.domain())) fail(errc::field_mismatch, "polynomials over different fields");
}

} // namespace

element poly::lead() const {
    if (c_.empty()) fail(errc::zero_polynomial, "leading coefficient of the zero polynomial");
    return c_.back();
}

poly poly::operator+(const poly& g) const {
    require_same(*this, g);
    return poly(k_, vp::add(c_, g.c_));
}

poly poly::operator-(const poly& g) const {
    require_same(*this, g);
    return poly(k_, vp::sub(c_, g.c_));
}

poly poly::operator*(const poly& g) const {
    require_same(*this, g);
    return poly(k_, vp::mul(c_, g.c_));
}

divrem_result poly_divrem(const poly& a, const poly& b) {
    require_same(a, b);
    if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    auto [q, r] = vp::divrem(a.coeffs(), b.coeffs());
    return {poly(a.domain(), std::move(q)), poly(a.domain(), std::move(r))};
}

poly poly_gcd(const poly& a, const poly& b) {
    require_same(a, b);
    return poly(a.domain(), vp::gcd(a.coeffs(), b.coeffs()));
}

poly poly_derivative(const poly& a) { return poly(a.domain(), vp::derivative(a.coeffs(), a.domain())); }

poly hasse_derivative(const poly& u, unsigned i) {
    const field_ptr& k = u.domain();
    if (u.is_zero() || static_cast<int>(i) > u.degree()) return poly::zero(k);
    std::vector<element> r;
    r.reserve(u.degree() + 1 - i);
    for (size_t j = i; j < u.coeffs().size(); ++j) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(i));
        r.push_back(u.coeffs()[j] * k->from_integer(binom));
    }
    return poly(k, std::move(r));
}

factored_at_point multiplicity_at(const poly& f, const poly& m) {
    require_same(f, m);
    if (f.is_zero()) fail(errc::zero_polynomial, "cannot take the multiplicity of the zero polynomial");
    if (!m.is_monic() || m.degree() < 1) fail(errc::not_monic, "point polynomial must be monic nonconstant");
    auto [q0, r0] = poly_divrem(f, m);
    if (!r0.is_zero()) fail(errc::not_vanishing, "polynomial does not vanish at the point");
    unsigned d = 1;
    poly u = q0;
    while (true) {
        auto [q, r] = poly_divrem(u, m);
        if (!r.is_zero()) break;
        u = q;
        ++d;
    }
    // Exactness check: u * m^d must reproduce f.
    if (u * m.pow(d) != f) fail(errc::internal, "multiplicity factorization failed to verify");
    return {std::move(u), d, m};
}

bool is_separable(const poly& m) {
    poly g = poly_gcd(m, poly_derivative(m));
    return g.degree() == 0;
}

insep_decomposition separability_decompose(const poly& m) {
    if (!m.is_monic() || m.degree() < 1) fail(errc::not_monic, "decomposition requires a monic nonconstant polynomial");
    const field_ptr& k = m.domain();
    if (k->characteristic() == 0) {
        if (!is_separable(m)) fail(errc::not_separable_residue, "polynomial is not separable");
        return {m, 0};
    }
    unsigned long p = k->characteristic().get_ui();
    // Largest i with all exponents divisible by p^i, backed off until the
    // stripped core is separable.
    std::vector<std::vector<element>> layers = {m.coeffs()};
    while (true) {
        const auto& cur = layers.back();
        bool strippable = cur.size() > 1;
        for (size_t j = 1; j < cur.size(); ++j)
            if (!cur[j].is_zero() && j % p != 0) strippable = false;
        if (!strippable) break;
        std::vector<element> next((cur.size() - 1) / p + 1, k->zero());
        for (size_t j = 0; j < cur.size(); j += p) next[j / p] = cur[j];
        layers.push_back(std::move(next));
    }
    for (size_t i = layers.size(); i-- > 0;) {
        poly m0(k, layers[i]);
        if (is_separable(m0)) return {std::move(m0), static_cast<unsigned>(i)};
    }
    fail(errc::not_separable_residue, "no separable core exists");
}

std::vector<poly> horner_basis(const poly& m) {
    if (!m.is_monic()) fail(errc::not_monic, "Horner basis requires a monic polynomial");
    int n = m.degree();
    if (n < 1) fail(errc::not_monic, "Horner basis requires degree at least 1");
    const field_ptr& k = m.domain();
    std::vector<poly> hor(n);
    poly cur = poly::constant(k, k->one()); // Hor_0
    hor[n - 1] = cur;
    for (int i = 1; i < n; ++i) {
        cur = cur * poly::x(k) + poly::constant(k, m.coeff(n - i));
        hor[n - 1 - i] = cur;
    }
    return hor; // [Hor_{n-1}, ..., Hor_0]
}

poly base_change(const poly& f, const field_ptr& L) {
    if (!L->is_extension() || !same_field(L->base(), f.domain())) {
        if (same_field(L, f.domain())) return f; // trivial extension (degree-1 point)
        fail(errc::not_an_extension, "target does not extend the coefficient field");
    }
    std::vector<element> c;
    c.reserve(f.coeffs().size());
    for (const auto& ci : f.coeffs()) c.push_back(L->embed(ci));
    return poly(L, std::move(c));
}

std::string to_string(const poly& f, const std::string& var) {
    return poly_string(f.coeffs(), var);
}

} // namespace a1deg
