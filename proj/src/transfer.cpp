#include "a1deg/transfer.hpp"

#include "a1deg/errors.hpp"

#include <algorithm>

namespace a1deg {

element scharlau_functional::apply(const element& a) const {
    if (!same_field(a.domain(), L)) fail(errc::field_mismatch, "argument not in the extension field");
    if (!L->is_extension()) return a; // trivial extension: s is the identity
    return a.coords()[L->degree_over_base() - 1];
}

sym_form geometric_transfer(const sym_form& beta, const field_ptr& L) {
    if (!same_field(beta.domain(), L)) fail(errc::field_mismatch, "form not defined over the extension field");
    if (!L->is_extension()) return beta;
    const field_ptr& k = L->base();
    unsigned n = L->degree_over_base();
    element t = L->generator();
    scharlau_functional s{L};
    size_t r = beta.gram().rows();
    matrix out(k, r * n, r * n);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            const element& bij = beta.gram().at(i, j);
            if (bij.is_zero()) continue;
            // s(t^{l+m} * b_ij) for l, m < n; powers computed once per block.
            element cur = bij;
            std::vector<element> svals(2 * n - 1);
            svals[0] = s.apply(cur);
            for (unsigned e = 1; e <= 2 * n - 2; ++e) {
                cur *= t;
                svals[e] = s.apply(cur);
            }
            for (unsigned l = 0; l < n; ++l)
                for (unsigned m = 0; m < n; ++m) out.at(i * n + l, j * n + m) = svals[l + m];
        }
    return sym_form(std::move(out));
}

gw_class geometric_transfer(const gw_class& beta, const field_ptr& L) {
    sym_form transferred = geometric_transfer(sym_form::diagonal(L, beta.diag()), L);
    diag_result res = diagonalize(transferred);
    if (res.radical_dim != 0) fail(errc::degenerate_form, "transferred form is degenerate");
    return res.cls;
}

omega0_result omega0(const closed_point& p) {
    const field_ptr& L = p.residue_field;
    insep_decomposition dec = separability_decompose(p.m);
    poly m0_L = base_change(dec.m0, L);
    // t^{p^i} is a root of m0, so the division is exact.
    element tp = p.t;
    if (dec.i > 0) {
        mpz_class q;
        mpz_pow_ui(q.get_mpz_t(), p.m.domain()->characteristic().get_mpz_t(), dec.i);
        element acc = L->one();
        element base = p.t;
        mpz_class e = q;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) acc *= base;
            base *= base;
            e >>= 1;
        }
        tp = acc;
    }
    poly lin(L, {-tp, L->one()});
    auto [quot, rem] = poly_divrem(m0_L, lin);
    if (!rem.is_zero()) fail(errc::internal, "omega_0 division left a remainder");
    element value = quot(p.t);
    if (value.is_zero()) fail(errc::internal, "omega_0 vanishes at the point");
    return {std::move(quot), std::move(value), dec.m0, dec.i};
}

sym_form cohomological_transfer(const sym_form& beta, const closed_point& p) {
    if (!same_field(beta.domain(), p.residue_field))
        fail(errc::field_mismatch, "form not defined over the residue field");
    if (!p.residue_field->is_extension()) return beta;
    element w = omega0(p).value_at_t;
    return geometric_transfer(beta.scaled(w), p.residue_field);
}

gw_class cohomological_transfer(const gw_class& beta, const closed_point& p) {
    if (!p.residue_field->is_extension()) return beta;
    element w = omega0(p).value_at_t;
    return geometric_transfer(beta.scaled(w), p.residue_field);
}

sym_form trace_form(const field_ptr& L, const element& a) {
    if (!same_field(a.domain(), L)) fail(errc::field_mismatch, "scale not in the extension field");
    if (!L->is_extension()) {
        matrix g(L, 1, 1);
        g.at(0, 0) = a;
        return sym_form(std::move(g));
    }
    poly m(L->base(), L->modulus());
    if (!is_separable(m)) fail(errc::inseparable_extension, "trace form of an inseparable extension is degenerate");
    unsigned n = L->degree_over_base();
    element t = L->generator();
    matrix g(L->base(), n, n);
    // Powers a * t^{i+j} for i + j <= 2n - 2.
    std::vector<element> pw(2 * n - 1);
    element cur = a;
    pw[0] = field_trace(cur);
    for (unsigned e = 1; e <= 2 * n - 2; ++e) {
        cur *= t;
        pw[e] = field_trace(cur);
    }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) g.at(i, j) = pw[i + j];
    return sym_form(std::move(g));
}

lift_result geometric_lift(const poly& f, const closed_point& p) {
    factored_at_point fac = multiplicity_at(f, p.m);
    const field_ptr& L = p.residue_field;
    poly u_L = base_change(fac.u, L);
    poly lin(L, {-p.t, L->one()});
    poly lifted = u_L * lin.pow(fac.d);
    return {lift_kind::geometric, std::move(lifted), p.t, fac.d, std::move(u_L), std::nullopt};
}

lift_result cohomological_lift(const poly& f, const closed_point& p) {
    factored_at_point fac = multiplicity_at(f, p.m);
    const field_ptr& L = p.residue_field;
    omega0_result w = omega0(p);
    poly u_L = base_change(fac.u, L) * w.omega.pow(fac.d);
    poly lin(L, {-p.t, L->one()});
    poly lifted = u_L * lin.pow(fac.d);
    if (is_separable(p.m)) {
        // In the separable case the cohomological lift is the base change.
        if (lifted != base_change(f, L)) fail(errc::internal, "cohomological lift disagrees with base change");
    }
    return {lift_kind::cohomological, std::move(lifted), p.t, fac.d, std::move(u_L), w.value_at_t};
}

poly coeff_poly(const element& a) {
    const field_ptr& L = a.domain();
    if (!L->is_extension()) return poly::constant(L, a);
    return poly(L->base(), a.coords());
}

gw_class scaled_scharlau_form(const closed_point& p, const element& a) {
    if (a.is_zero()) fail(errc::zero_scale, "scaled Scharlau form requires a nonzero scale");
    if (!same_field(a.domain(), p.residue_field)) fail(errc::field_mismatch, "scale not in the residue field");
    sym_form transferred = geometric_transfer(sym_form::diagonal(p.residue_field, {a}), p.residue_field);
    diag_result res = diagonalize(transferred);
    if (res.radical_dim != 0) fail(errc::degenerate_form, "Scharlau form is degenerate");
    if (is_separable(p.m)) {
        gw_class via_degree = local_degree(coeff_poly(a) * p.m, p);
        if (gw_equal(res.cls, via_degree) == gw_verdict::not_equal)
            fail(errc::internal, "scaled Scharlau form disagrees with the local degree route");
    }
    return res.cls;
}

gw_class scaled_trace_form(const closed_point& p, const element& a) {
    if (a.is_zero()) fail(errc::zero_scale, "scaled trace form requires a nonzero scale");
    if (!same_field(a.domain(), p.residue_field)) fail(errc::field_mismatch, "scale not in the residue field");
    if (!is_separable(p.m)) fail(errc::inseparable_extension, "trace form requires a separable point");
    diag_result res = diagonalize(trace_form(p.residue_field, a));
    if (res.radical_dim != 0) fail(errc::degenerate_form, "trace form is degenerate");
    gw_class via_degree = local_degree(coeff_poly(a) * poly_derivative(p.m) * p.m, p);
    if (gw_equal(res.cls, via_degree) == gw_verdict::not_equal)
        fail(errc::internal, "scaled trace form disagrees with the local degree route");
    return res.cls;
}

// ---------------------------------------------------------------------------
// block-basis route

matrix bezoutian_in_block_basis(const poly& f, const closed_point& p, unsigned d) {
    const field_ptr& k = f.domain();
    unsigned n = p.degree();
    size_t N = size_t(n) * d;
    poly md = p.m.pow(d);

    // Reduce the Bezoutian mod (m(X)^d, m(Y)^d).
    matrix mono = bivariate_reduce(bezoutian(f).coeffs, md, md);

    // Basis polynomials in the fixed order: block i descending in Horner index.
    std::vector<poly> hor = horner_basis(p.m);
    matrix V(k, N, N);
    for (unsigned bi = 0; bi < d; ++bi) {
        poly mp = p.m.pow(d - 1 - bi);
        for (unsigned w = 0; w < n; ++w) {
            poly q = hor[w] * mp; // hor[w] = Hor_{n-1-w}
            size_t g = size_t(bi) * n + w;
            for (size_t a = 0; a < N; ++a) V.at(a, g) = q.coeff(a);
        }
    }
    matrix Vinv = V.inverse();
    return Vinv * mono * Vinv.transpose();
}

// ---------------------------------------------------------------------------
// Theorem 1.1 pipeline

verify_report verify_theorem_1_1(const poly& f, const closed_point& p) {
    const field_ptr& k = f.domain();
    if (k->characteristic() == 2) fail(errc::characteristic_two, "characteristic 2 unsupported");
    const field_ptr& L = p.residue_field;
    factored_at_point fac = multiplicity_at(f, p.m);
    unsigned n = p.degree(), d = fac.d;

    gw_class lhs = local_degree(f, p);

    lift_result geo = geometric_lift(f, p);
    local_rational_degree lr_g = local_degree_rational(geo.lifted, p.t);
    diag_result mid = diagonalize(geometric_transfer(lr_g.form, L));
    if (mid.radical_dim != 0) fail(errc::degenerate_form, "transferred geometric form is degenerate");

    lift_result coh = cohomological_lift(f, p);
    local_rational_degree lr_c = local_degree_rational(coh.lifted, p.t);
    diag_result rhs = diagonalize(cohomological_transfer(lr_c.form, p));
    if (rhs.radical_dim != 0) fail(errc::degenerate_form, "transferred cohomological form is degenerate");

    gw_verdict vg = gw_equal(lhs, mid.cls);
    gw_verdict vc = gw_equal(lhs, rhs.cls);

    // Block-basis route: the Bezoutian of f in the Horner-times-m-powers
    // basis must be block upper-left triangular with every main-antidiagonal
    // block equal to the Gram matrix of the transferred <u(t)>.
    matrix C = bezoutian_in_block_basis(f, p, d);
    element u_t = lr_g.u_at_t; // u base-changed, evaluated at t
    matrix tau_gram = geometric_transfer(sym_form::diagonal(L, {u_t}), L).gram();
    bool block_ok = true;
    size_t N = size_t(n) * d;
    for (unsigned bi = 0; bi < d && block_ok; ++bi)
        for (unsigned bj = 0; bj < d && block_ok; ++bj) {
            if (bi + bj > d - 1) {
                for (unsigned r = 0; r < n && block_ok; ++r)
                    for (unsigned c = 0; c < n; ++c)
                        if (!C.at(size_t(bi) * n + r, size_t(bj) * n + c).is_zero()) {
                            block_ok = false;
                            break;
                        }
            } else if (bi + bj == d - 1) {
                for (unsigned r = 0; r < n && block_ok; ++r)
                    for (unsigned c = 0; c < n; ++c)
                        if (C.at(size_t(bi) * n + r, size_t(bj) * n + c) != tau_gram.at(r, c)) {
                            block_ok = false;
                            break;
                        }
            }
        }
    gw_class block_cls = block_hankel_diagonalize(C, n, d);
    gw_verdict vb = gw_equal(lhs, block_cls);

    unsigned rank_bc = vanishing_order(base_change(f, L), p.t);

    verify_report rep{std::move(lhs),
                      std::move(mid.cls),
                      std::move(rhs.cls),
                      vg,
                      vc,
                      block_ok,
                      vb,
                      n,
                      d,
                      n * d,
                      d,
                      rank_bc,
                      u_t};
    if (rep.lhs.rank() != rep.rank_local) fail(errc::internal, "local degree rank law violated");
    return rep;
}

} // namespace a1deg
