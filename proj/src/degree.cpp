#include "a1deg/degree.hpp"

#include "a1deg/errors.hpp"

#include <algorithm>

namespace a1deg {

bezoutian_form bezoutian(const poly& f, const poly& g) {
    if (!same_field(f.domain(), g.domain())) fail(errc::field_mismatch, "Bezoutian of polynomials over different fields");
    if (f.is_zero() && g.is_zero()) fail(errc::zero_pair, "Bezoutian of the zero pair");
    const field_ptr& k = f.domain();
    int n = std::max(f.degree(), g.degree());
    if (n < 0) n = 0;

    // Numerator N(X, Y) = f(X)g(Y) - f(Y)g(X) as a coefficient matrix.
    std::vector<std::vector<element>> num(n + 1, std::vector<element>(n + 1, k->zero()));
    for (int i = 0; i <= f.degree(); ++i)
        for (int j = 0; j <= g.degree(); ++j) {
            element term = f.coeff(i) * g.coeff(j);
            if (term.is_zero()) continue;
            num[i][j] += term;
            num[j][i] -= term;
        }

    // Synthetic division by (X - Y): treat N as a polynomial in X whose
    // coefficients are polynomials in Y. Q_{i-1} = N_i + Y * Q_i.
    matrix bez(k, std::max(n, 1), std::max(n, 1));
    std::vector<element> carry(n + 1, k->zero()); // current Q_i as a poly in Y
    for (int i = n; i >= 1; --i) {
        // carry <- N_i + Y * carry
        for (int y = n; y >= 1; --y) carry[y] = carry[y - 1];
        carry[0] = k->zero();
        for (int y = 0; y <= n; ++y) carry[y] += num[i][y];
        for (int y = 0; y < std::max(n, 1); ++y)
            if (y <= n) bez.at(i - 1, y) = carry[y];
    }
    // Remainder N_0 + Y * Q_0 must vanish identically.
    for (int y = 0; y <= n; ++y) {
        element rem = num[0][y] + (y >= 1 ? carry[y - 1] : k->zero());
        if (!rem.is_zero()) fail(errc::internal, "Bezoutian numerator not divisible by X - Y");
    }
    if (!bez.is_symmetric()) fail(errc::internal, "Bezoutian matrix failed symmetry");
    return {std::move(bez), k};
}

bezoutian_form bezoutian(const poly& f) { return bezoutian(f, poly::constant(f.domain(), f.domain()->one())); }

closed_point make_closed_point(const poly& m, const std::string& sym) {
    if (!m.is_monic() || m.degree() < 1) fail(errc::not_monic, "a closed point needs a monic nonconstant polynomial");
    const field_ptr& k = m.domain();
    if (m.degree() == 1) {
        // Rational point: residue field is k itself.
        return {m, k, -m.coeff(0)};
    }
    field_ptr L = field::extension(k, m.coeffs(), sym);
    return {m, L, L->generator()};
}

gw_class global_degree(const poly& f, const poly& g) {
    if (!same_field(f.domain(), g.domain())) fail(errc::field_mismatch, "rational map over mismatched fields");
    const field_ptr& k = f.domain();
    if (std::max(f.degree(), g.degree()) < 1) fail(errc::zero_pair, "global degree of a constant map");
    if (g.degree() >= 1) {
        poly common = poly_gcd(f, g);
        if (common.degree() > 0) fail(errc::not_reduced, "f and g share the factor " + to_string(common));
    }
    if (g.degree() <= 0) {
        // Polynomial maps give upper-triangular Hankel forms: s_r = c * a_r.
        if (g.is_zero()) fail(errc::not_reduced, "denominator is identically zero");
        element c = g.coeff(0);
        std::vector<element> s(f.degree());
        for (int r = 1; r <= f.degree(); ++r) s[r - 1] = c * f.coeff(r);
        return upper_hankel_class(k, s);
    }
    diag_result res = diagonalize(sym_form(bezoutian(f, g).coeffs));
    if (res.radical_dim != 0)
        fail(errc::degenerate_form, "Bezoutian form of the rational map is degenerate");
    return res.cls;
}

gw_class global_degree(const poly& f) { return global_degree(f, poly::constant(f.domain(), f.domain()->one())); }

gw_class local_degree(const poly& f, const closed_point& p) {
    factored_at_point fac = multiplicity_at(f, p.m);
    // Only the class of u in k[x]/(m^d) matters; reducing keeps the auxiliary
    // rational map m^d/u of degree exactly n*d.
    poly md = p.m.pow(fac.d);
    poly u = poly_divrem(fac.u, md).rem;
    return global_degree(md, u);
}

unsigned vanishing_order(const poly& f, const element& t) {
    if (f.is_zero()) fail(errc::zero_polynomial, "vanishing order of the zero polynomial");
    const field_ptr& k = f.domain();
    poly lin(k, {-t, k->one()});
    unsigned d = 0;
    poly cur = f;
    while (true) {
        auto [q, r] = poly_divrem(cur, lin);
        if (!r.is_zero()) break;
        cur = q;
        ++d;
    }
    return d;
}

matrix bivariate_reduce(const matrix& coeffs, const poly& mod_x, const poly& mod_y) {
    const field_ptr& k = coeffs.domain();
    size_t nx = static_cast<size_t>(mod_x.degree());
    size_t ny = static_cast<size_t>(mod_y.degree());
    size_t big_r = coeffs.rows(), big_c = coeffs.cols();
    matrix xred(k, nx, big_c);
    for (size_t j = 0; j < big_c; ++j) {
        std::vector<element> col(big_r);
        for (size_t i = 0; i < big_r; ++i) col[i] = coeffs.at(i, j);
        poly rem = poly_divrem(poly(k, std::move(col)), mod_x).rem;
        for (size_t i = 0; i < nx; ++i) xred.at(i, j) = rem.coeff(i);
    }
    matrix out(k, nx, ny);
    for (size_t i = 0; i < nx; ++i) {
        std::vector<element> row(big_c);
        for (size_t j = 0; j < big_c; ++j) row[j] = xred.at(i, j);
        poly rem = poly_divrem(poly(k, std::move(row)), mod_y).rem;
        for (size_t j = 0; j < ny; ++j) out.at(i, j) = rem.coeff(j);
    }
    return out;
}

matrix bivariate_shift(const matrix& coeffs, const element& t) {
    const field_ptr& k = coeffs.domain();
    poly shift(k, {t, k->one()}); // x + t
    auto shift_cols = [&](const matrix& m) {
        matrix out(k, m.rows(), m.cols());
        for (size_t j = 0; j < m.cols(); ++j) {
            poly acc = poly::zero(k);
            for (size_t i = m.rows(); i-- > 0;) acc = acc * shift + poly::constant(k, m.at(i, j));
            for (size_t i = 0; i < m.rows(); ++i) out.at(i, j) = acc.coeff(i);
        }
        return out;
    };
    return shift_cols(shift_cols(coeffs).transpose()).transpose();
}

local_rational_degree local_degree_rational(const poly& f, const element& t) {
    const field_ptr& L = f.domain();
    if (!same_field(L, t.domain())) fail(errc::field_mismatch, "point not in the coefficient field");
    if (f.is_zero()) fail(errc::zero_polynomial, "local degree of the zero polynomial");
    poly lin(L, {-t, L->one()});
    unsigned d = 0;
    poly u = f;
    while (true) {
        auto [q, r] = poly_divrem(u, lin);
        if (!r.is_zero()) break;
        u = q;
        ++d;
    }
    if (d == 0) fail(errc::not_vanishing, "polynomial does not vanish at the point");
    element u_at_t = u(t);
    if (u_at_t.is_zero()) fail(errc::not_isolated, "cofactor vanishes at the point after factoring");

    // Antidiagonals are u^{(d-1)}(t), ..., u^{(1)}(t), u(t) in the basis
    // {(x-t)^{d-1}, ..., 1}.
    std::vector<element> s(d);
    for (unsigned r = 1; r <= d; ++r) s[r - 1] = hasse_derivative(u, d - r)(t);
    sym_form form = sym_form::from_upper_hankel(L, s);
    gw_class cls = upper_hankel_class(L, s);
    return {d, std::move(u), std::move(u_at_t), std::move(form), std::move(cls)};
}

} // namespace a1deg
