#include "a1deg/errors.hpp"
#include "a1deg/gen.hpp"
#include "a1deg/io.hpp"

#include <functional>
#include <optional>
#include <sstream>

namespace a1deg {

namespace {

struct suite {
    std::ostringstream out;
    gen::rng master;
    unsigned total = 0;
    bool ok = true;

    explicit suite(uint64_t seed) : master(seed) {}

    // Runs count independent instances; fn returns a failure description.
    void prop(const std::string& name, unsigned count,
              const std::function<std::optional<std::string>(gen::rng&)>& fn) {
        unsigned failures = 0;
        std::string first_failure;
        for (unsigned i = 0; i < count; ++i) {
            gen::rng inst = master.fork();
            std::optional<std::string> res;
            try {
                res = fn(inst);
            } catch (const error& e) {
                res = std::string("unexpected error: ") + e.what();
            }
            ++total;
            if (res) {
                ++failures;
                if (first_failure.empty()) first_failure = "instance " + std::to_string(i) + ": " + *res;
            }
        }
        if (failures == 0) {
            out << "[PASS] " << name << ": " << count << " instances\n";
        } else {
            ok = false;
            out << "[FAIL] " << name << ": " << failures << "/" << count << " instances failed\n";
            out << "       " << first_failure << "\n";
        }
    }
};

field_ptr make_qi() {
    field_ptr Q = field::rationals();
    return field::extension(Q, {Q->one(), Q->zero(), Q->one()}, "i"); // Q[i]/(i^2+1)
}

field_ptr make_f49() {
    field_ptr F7 = field::prime_field(7);
    // x^2 - 3 is irreducible mod 7 (3 is a nonresidue)
    return field::extension(F7, {F7->from_integer(-3), F7->zero(), F7->one()}, "w");
}

std::string verify_command(const poly& f, const poly& m) {
    return "a1deg verify --field \"" + f.domain()->spec_string() + "\" --poly \"" + to_string(f) +
           "\" --point \"" + to_string(m) + "\"";
}

// Scharlau functional on the algebra k[x]/(m): coefficient of x^{n-1}.
element algebra_scharlau(const poly& g, const poly& m) {
    poly r = poly_divrem(g, m).rem;
    return r.coeff(m.degree() - 1);
}

std::optional<std::string> check_field_axioms(gen::rng& r, const field_ptr& k) {
    element a = gen::random_element(r, k), b = gen::random_element(r, k), c = gen::random_element(r, k);
    if ((a + b) + c != a + (b + c)) return "addition not associative";
    if ((a * b) * c != a * (b * c)) return "multiplication not associative";
    if (a * (b + c) != a * b + a * c) return "distributivity failed";
    if (a + (-a) != k->zero()) return "negation failed";
    element nz = gen::random_element(r, k, true);
    if (nz * nz.inverse() != k->one()) return "inverse failed for " + to_string(nz);
    if ((a - b) + b != a) return "subtraction failed";
    if (!nz.is_zero() && el_div(a, nz) * nz != a) return "division failed";
    return std::nullopt;
}

std::optional<std::string> check_canonical(gen::rng& r, const field_ptr& k) {
    element a = gen::random_element(r, k), b = gen::random_element(r, k, true);
    element sum = a + b, prod = a * b, quot = a / b;
    for (const element* e : {&sum, &prod, &quot}) {
        if (k->kind() == field_kind::rational_function_field) {
            const auto& fr = e->frac();
            const mpz_class& p = k->characteristic();
            if (!fpp::is_zero(fr.num) || !fpp::is_one(fr.den)) {
                if (fr.den.empty() || fr.den.back() != 1) return "denominator not monic";
                if (!fpp::is_zero(fr.num) && fpp::degree(fpp::gcd(fr.num, fr.den, p)) > 0)
                    return "fraction not reduced";
            } else if (!fpp::is_one(fr.den)) {
                return "zero not canonical";
            }
        }
        if (k->is_extension() && e->coords().size() != k->degree_over_base())
            return "coordinate vector has the wrong length";
    }
    return std::nullopt;
}

std::optional<std::string> check_square_props(gen::rng& r, const field_ptr& k) {
    element a = gen::random_element(r, k, true);
    element n = gen::random_element(r, k, true);
    try {
        if (!is_square(a * a)) return "a^2 reported as nonsquare, a = " + to_string(a);
        if (is_square(a * a * n) != is_square(n)) return "square scaling changed the verdict";
        element rep = square_class_rep(a);
        if (square_class_rep(rep) != rep) return "square_class_rep not idempotent";
        if (!is_square(a / rep)) return "a over its representative is not a square";
    } catch (const error& e) {
        if (e.code() == errc::unsupported_field) return std::nullopt; // honest partiality
        throw;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

void run_all(suite& s, unsigned scale) {
    field_ptr Q = field::rationals();
    field_ptr F5 = field::prime_field(5);
    field_ptr F3 = field::prime_field(3);
    field_ptr F5t = field::rational_function_field(5, "t");
    field_ptr F3t = field::rational_function_field(3, "t");
    field_ptr Qi = make_qi();
    field_ptr F49 = make_f49();

    const std::vector<std::pair<std::string, field_ptr>> base_fields = {
        {"Q", Q}, {"F5", F5}, {"F5(t)", F5t}, {"Q(i)", Qi}, {"F49", F49}};

    for (const auto& [name, k] : base_fields) {
        field_ptr kk = k;
        s.prop("fields.axioms." + name, 8 * scale, [kk](gen::rng& r) { return check_field_axioms(r, kk); });
    }
    for (const auto& [name, k] : {std::pair<std::string, field_ptr>{"F5(t)", F5t},
                                  std::pair<std::string, field_ptr>{"Q(i)", Qi}}) {
        field_ptr kk = k;
        s.prop("fields.canonical." + name, 6 * scale, [kk](gen::rng& r) { return check_canonical(r, kk); });
    }
    for (const auto& [name, k] : base_fields) {
        field_ptr kk = k;
        s.prop("fields.squares." + name, 6 * scale, [kk](gen::rng& r) { return check_square_props(r, kk); });
    }

    // --- poly ---------------------------------------------------------------
    s.prop("poly.divrem", 8 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? Q : F5t;
        poly a = gen::random_poly(r, k, 6);
        poly b = gen::random_poly(r, k, 3, true);
        auto [q, rem] = poly_divrem(a, b);
        if (q * b + rem != a) return "a != q*b + r";
        if (rem.degree() >= b.degree()) return "remainder degree too large";
        return std::nullopt;
    });

    s.prop("poly.taylor_hasse", 8 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? Q : field_ptr(F5);
        poly u = gen::random_poly(r, k, 5, true);
        element t = gen::random_element(r, k);
        unsigned d = 1 + static_cast<unsigned>(r.next(4));
        poly lin(k, {-t, k->one()});
        poly expansion = poly::zero(k);
        for (unsigned i = 0; i < d; ++i)
            expansion = expansion + poly::constant(k, hasse_derivative(u, i)(t)) * lin.pow(i);
        poly diff = u - expansion;
        if (!diff.is_zero() && !poly_divrem(diff, lin.pow(d)).rem.is_zero())
            return "truncated Taylor expansion failed for u = " + to_string(u);
        return std::nullopt;
    });

    s.prop("poly.hasse_char_p", 4 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        // Hasse derivative divides out factorials that vanish in char p.
        unsigned long p = 5;
        poly xp = poly::x(F5).pow(p);
        poly h = hasse_derivative(xp, p);
        if (!(h.degree() == 0 && h.coeff(0).is_one())) return "hasse(x^p, p) != 1";
        poly iter = xp;
        for (unsigned i = 0; i < p; ++i) iter = poly_derivative(iter);
        if (!iter.is_zero()) return "iterated derivative should vanish";
        (void)r;
        return std::nullopt;
    });

    s.prop("poly.multiplicity_roundtrip", 8 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? Q : field_ptr(F5);
        poly m = gen::random_irreducible_monic(r, k, 1 + static_cast<int>(r.next(3)));
        unsigned d = 1 + static_cast<unsigned>(r.next(3));
        poly u = gen::random_poly(r, k, 3, true);
        if (poly_divrem(u, m).rem.is_zero()) return std::nullopt; // resample implicitly
        poly f = u * m.pow(d);
        factored_at_point fac = multiplicity_at(f, m);
        if (fac.d != d) return "wrong multiplicity";
        if (fac.u * fac.m.pow(fac.d) != f) return "u*m^d != f";
        if (poly_divrem(fac.u, m).rem.is_zero()) return "m divides u";
        return std::nullopt;
    });

    s.prop("poly.horner_duality", 6 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? Q : field_ptr(F5);
        int n = 2 + static_cast<int>(r.next(3));
        poly m = gen::random_monic(r, k, n);
        std::vector<poly> hor = horner_basis(m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                element v = algebra_scharlau(poly::x(k).pow(i) * hor[j], m); // hor[j] = Hor_{n-1-j}
                bool want_one = (i == j);
                if (want_one != v.is_one() || (!want_one && !v.is_zero()))
                    return "s(x^i Hor_{n-1-j}) != delta at i=" + std::to_string(i) + " j=" + std::to_string(j);
            }
        return std::nullopt;
    });

    s.prop("poly.horner_expansion", 6 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? Q : field_ptr(F5);
        int n = 2 + static_cast<int>(r.next(3));
        poly m = gen::random_monic(r, k, n);
        poly g = gen::random_poly(r, k, n - 1);
        std::vector<poly> hor = horner_basis(m);
        poly expansion = poly::zero(k);
        for (int i = 0; i < n; ++i)
            expansion = expansion + poly::constant(k, algebra_scharlau(poly::x(k).pow(i) * g, m)) * hor[i]; // Hor_{n-1-i}
        if (!poly_divrem(g - expansion, m).rem.is_zero()) return "Horner expansion failed for g = " + to_string(g);
        return std::nullopt;
    });

    s.prop("poly.bezoutian_horner_identity", 6 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? Q : field_ptr(F5);
        int n = 1 + static_cast<int>(r.next(4));
        poly m = gen::random_monic(r, k, n);
        matrix bez = bezoutian(m).coeffs;
        std::vector<poly> hor = horner_basis(m);
        // row i of Bez(m) must be the coefficient vector of Hor_{n-1-i}(m, Y)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (bez.at(i, j) != hor[i].coeff(j)) return "Bez(m) row mismatch at i=" + std::to_string(i);
        return std::nullopt;
    });

    s.prop("poly.base_change_products", 4 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        // (x^2+1) factors over Q(i)
        poly f(Q, {Q->one(), Q->zero(), Q->one()});
        poly fL = base_change(f, Qi);
        element i_gen = Qi->generator();
        poly lin_minus(Qi, {-i_gen, Qi->one()}), lin_plus(Qi, {i_gen, Qi->one()});
        if (fL != lin_minus * lin_plus) return "x^2+1 != (x-i)(x+i) after base change";
        (void)r;
        return std::nullopt;
    });

    // --- forms ---------------------------------------------------------------
    s.prop("forms.diagonalize_congruence", 8 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(3) == 0 ? F5t : (r.next(2) ? Q : field_ptr(F5));
        size_t n = 1 + r.next(5);
        matrix g = gen::random_symmetric(r, k, n);
        diag_result res = diagonalize(sym_form(g));
        matrix check = res.basis.transpose() * g * res.basis;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                element expect = (i == j && i < res.cls.rank()) ? res.cls.diag()[i] : k->zero();
                if (check.at(i, j) != expect) return "P^T G P is not the reported diagonal";
            }
        if (res.cls.rank() + res.radical_dim != n) return "rank + radical != dimension";
        return std::nullopt;
    });

    s.prop("forms.upper_hankel_vs_diagonalize", 8 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? Q : field_ptr(F5);
        size_t d = 1 + r.next(6);
        std::vector<element> sv(d);
        for (auto& e : sv) e = gen::random_element(r, k);
        sv.back() = gen::random_element(r, k, true);
        gw_class cls = upper_hankel_class(k, sv); // cross-validates internally
        if (cls.rank() != d) return "rank mismatch";
        return std::nullopt;
    });

    s.prop("forms.block_hankel_vs_diagonalize", 6 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        unsigned n = 1 + static_cast<unsigned>(r.next(3));
        unsigned d = 1 + static_cast<unsigned>(r.next(4));
        for (int attempt = 0; attempt < 50; ++attempt) {
            std::vector<matrix> blocks;
            for (unsigned b = 0; b < d; ++b) {
                matrix A(Q, n, n);
                std::vector<element> anti(2 * n - 1);
                for (auto& e : anti) e = gen::random_element(r, Q);
                for (unsigned i = 0; i < n; ++i)
                    for (unsigned j = 0; j < n; ++j) A.at(i, j) = anti[i + j];
                blocks.push_back(std::move(A));
            }
            sym_form f = sym_form::from_block_hankel(blocks);
            if (f.gram().det().is_zero()) continue;
            gw_class via_blocks = block_hankel_diagonalize(f);
            diag_result via_generic = diagonalize(f);
            if (via_generic.radical_dim != 0) return "unexpected radical";
            if (gw_equal(via_blocks, via_generic.cls) != gw_verdict::equal)
                return "block route disagrees with generic diagonalization (n=" + std::to_string(n) +
                       ", d=" + std::to_string(d) + ")";
            return std::nullopt;
        }
        return std::nullopt; // could not sample a nondegenerate instance
    });

    s.prop("forms.hilbert_reciprocity", 20 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        mpq_class a(r.next_int(-9999, 9999), r.next_int(1, 9999));
        mpq_class b(r.next_int(-9999, 9999), r.next_int(1, 9999));
        a.canonicalize();
        b.canonicalize();
        if (a == 0 || b == 0) return std::nullopt;
        gw_class ca(Q, {Q->from_rational(a)});
        gw_class cb(Q, {Q->from_rational(b)});
        int prod = 1;
        for (const auto& v : relevant_places(ca, cb)) prod *= hilbert_symbol(a, b, v);
        if (prod != 1) return "product of symbols != 1 for a=" + a.get_str() + " b=" + b.get_str();
        return std::nullopt;
    });

    s.prop("forms.hilbert_symmetry_bimultiplicative", 12 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        mpq_class a(r.next_int(-99, 99), r.next_int(1, 99));
        mpq_class b(r.next_int(-99, 99), r.next_int(1, 99));
        mpq_class b2(r.next_int(-99, 99), r.next_int(1, 99));
        a.canonicalize();
        b.canonicalize();
        b2.canonicalize();
        if (a == 0 || b == 0 || b2 == 0) return std::nullopt;
        std::vector<qplace> places = {qplace_infinity(), qplace_prime(2), qplace_prime(3), qplace_prime(5),
                                      qplace_prime(7)};
        for (const auto& v : places) {
            if (hilbert_symbol(a, b, v) != hilbert_symbol(b, a, v)) return "symbol not symmetric";
            if (hilbert_symbol(a, b * b2, v) != hilbert_symbol(a, b, v) * hilbert_symbol(a, b2, v))
                return "symbol not bimultiplicative";
        }
        return std::nullopt;
    });

    s.prop("forms.fpt_reciprocity", 10 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? F5t : F3t;
        element a = gen::random_element(r, k, true);
        element b = gen::random_element(r, k, true);
        int prod = 1;
        for (const auto& v : fpt_places_for_pair(a, b)) prod *= fpt_hilbert_symbol(a, b, v);
        if (prod != 1) return "function-field reciprocity failed for a=" + to_string(a) + " b=" + to_string(b);
        return std::nullopt;
    });

    s.prop("forms.gw_equal_invariances", 8 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(3) == 0 ? F5t : (r.next(2) ? Q : field_ptr(F5));
        size_t n = 1 + r.next(4);
        std::vector<element> diag(n);
        for (auto& e : diag) e = gen::random_element(r, k, true);
        gw_class c(k, diag);
        if (gw_equal(c, c) != gw_verdict::equal) return "not reflexive";
        std::vector<element> scaled = diag;
        for (auto& e : scaled) {
            element s2 = gen::random_element(r, k, true);
            e = e * s2 * s2;
        }
        std::vector<element> perm = scaled;
        for (size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[r.next(i)]);
        gw_class cp(k, perm);
        if (gw_equal(c, cp) != gw_verdict::equal) return "not invariant under square scaling + permutation";
        if (gw_equal(cp, c) != gw_verdict::equal) return "not symmetric";
        return std::nullopt;
    });

    // --- degree --------------------------------------------------------------
    s.prop("degree.bezoutian_symmetry", 8 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? Q : F5t;
        poly f = gen::random_poly(r, k, 5, true);
        poly g = gen::random_poly(r, k, 4, true);
        matrix bez = bezoutian(f, g).coeffs;
        if (!bez.is_symmetric()) return "Bezoutian not symmetric";
        return std::nullopt;
    });

    s.prop("degree.chain_rule_reduction", 5 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? Q : field_ptr(F3);
        poly m = gen::random_irreducible_monic(r, k, 1 + static_cast<int>(r.next(3)));
        unsigned d = 1 + static_cast<unsigned>(r.next(2));
        poly u = gen::random_poly(r, k, 2, true);
        if (poly_divrem(u, m).rem.is_zero()) return std::nullopt;
        poly f = u * m.pow(d);
        poly md = m.pow(d);
        poly u_red = poly_divrem(u, md).rem;
        matrix lhs = bivariate_reduce(bezoutian(f).coeffs, md, md);
        matrix rhs = bivariate_reduce(bezoutian(md, u_red).coeffs, md, md);
        if (lhs != rhs) return "Bez(f) != Bez(m^d/u) mod (m(X)^d, m(Y)^d) for " + verify_command(f, m);
        return std::nullopt;
    });

    s.prop("degree.rank_law", 6 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? Q : field_ptr(F5);
        poly m = gen::random_irreducible_monic(r, k, 1 + static_cast<int>(r.next(3)));
        unsigned d = 1 + static_cast<unsigned>(r.next(3));
        poly u = gen::random_poly(r, k, 3, true);
        if (poly_divrem(u, m).rem.is_zero()) return std::nullopt;
        poly f = u * m.pow(d);
        closed_point p = make_closed_point(m);
        gw_class c = local_degree(f, p);
        if (c.rank() != static_cast<unsigned>(m.degree()) * d)
            return "rank(local degree) != deg(m)*d for " + verify_command(f, m);
        return std::nullopt;
    });

    s.prop("degree.local_rational_oracle", 6 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr L = r.next(2) ? Qi : F49;
        element t = gen::random_element(r, L);
        unsigned d = 1 + static_cast<unsigned>(r.next(3));
        poly u = gen::random_poly(r, L, 2, true);
        if (u(t).is_zero()) return std::nullopt;
        poly lin(L, {-t, L->one()});
        poly f = u * lin.pow(d);
        local_rational_degree lr = local_degree_rational(f, t);
        // Oracle: reduce the raw Bezoutian in the shifted basis directly.
        matrix shifted = bivariate_shift(bezoutian(f).coeffs, t);
        matrix local(L, d, d);
        for (unsigned a = 0; a < d; ++a)
            for (unsigned b = 0; b < d; ++b) local.at(a, b) = shifted.at(d - 1 - a, d - 1 - b);
        if (local != lr.form.gram()) return "shifted Bezoutian disagrees with the Hasse-derivative Hankel matrix";
        diag_result oracle = diagonalize(sym_form(local));
        if (oracle.radical_dim != 0) return "oracle form degenerate";
        if (gw_equal(oracle.cls, lr.cls) == gw_verdict::not_equal) return "oracle class disagrees";
        return std::nullopt;
    });

    s.prop("degree.global_local_consistency_Q", 4 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        // f = prod of distinct irreducible powers; global degree = sum of locals.
        std::vector<poly> ms;
        poly f = poly::constant(Q, Q->one());
        unsigned total_deg = 0;
        for (int tries = 0; tries < 20 && ms.size() < 2; ++tries) {
            poly m = gen::random_irreducible_monic(r, Q, 1 + static_cast<int>(r.next(2)));
            bool dup = false;
            for (const auto& prev : ms)
                if (prev == m) dup = true;
            if (dup) continue;
            unsigned d = 1 + static_cast<unsigned>(r.next(2));
            ms.push_back(m);
            f = f * m.pow(d);
            total_deg += d * m.degree();
        }
        if (ms.size() < 2) return std::nullopt;
        gw_class global = global_degree(f);
        gw_class sum(Q, {});
        for (const auto& m : ms) sum = sum.direct_sum(local_degree(f, make_closed_point(m)));
        if (sum.rank() != total_deg || global.rank() != total_deg) return "rank bookkeeping failed";
        if (gw_equal(global, sum) != gw_verdict::equal)
            return "global degree != orthogonal sum of local degrees for f = " + to_string(f);
        return std::nullopt;
    });

    // --- transfer ------------------------------------------------------------
    s.prop("transfer.scharlau_duality", 5 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? Q : field_ptr(F5);
        poly m = gen::random_irreducible_monic(r, k, 2 + static_cast<int>(r.next(2)));
        closed_point p = make_closed_point(m);
        scharlau_functional s_fn{p.residue_field};
        int n = m.degree();
        std::vector<poly> hor = horner_basis(m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                poly prod = poly_divrem(poly::x(k).pow(i) * hor[j], m).rem;
                element v = s_fn.apply(base_change(prod, p.residue_field)(p.t));
                bool want_one = (i == j);
                if (want_one != v.is_one() || (!want_one && !v.is_zero())) return "duality failed at the point";
            }
        return std::nullopt;
    });

    s.prop("transfer.tau_is_scharlau_pushforward", 5 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? Q : field_ptr(F5);
        poly m = gen::random_irreducible_monic(r, k, 2 + static_cast<int>(r.next(2)));
        closed_point p = make_closed_point(m);
        const field_ptr& L = p.residue_field;
        unsigned n = p.degree();
        size_t rk = 1 + r.next(2);
        matrix beta = gen::random_symmetric(r, L, rk);
        sym_form transferred = geometric_transfer(sym_form(beta), L);
        // Direct definition: s(beta(a_i t^l, a_j t^m)) elementwise.
        scharlau_functional s_fn{L};
        element t = L->generator();
        for (size_t i = 0; i < rk; ++i)
            for (size_t j = 0; j < rk; ++j)
                for (unsigned l = 0; l < n; ++l)
                    for (unsigned mm = 0; mm < n; ++mm) {
                        element tp = L->one();
                        for (unsigned e = 0; e < l + mm; ++e) tp *= t;
                        element direct = s_fn.apply(tp * beta.at(i, j));
                        if (transferred.gram().at(i * n + l, j * n + mm) != direct)
                            return "block recipe disagrees with the direct pushforward";
                    }
        if (transferred.gram().rows() != size_t(n) * rk) return "rank multiplicativity failed";
        return std::nullopt;
    });

    s.prop("transfer.theorem_1_1_Q", 3 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        poly m = gen::random_irreducible_monic(r, Q, 1 + static_cast<int>(r.next(3)));
        unsigned d = 1 + static_cast<unsigned>(r.next(3));
        poly u = gen::random_poly(r, Q, 2, true);
        if (poly_divrem(u, m).rem.is_zero()) return std::nullopt;
        poly f = u * m.pow(d);
        closed_point p = make_closed_point(m);
        verify_report rep = verify_theorem_1_1(f, p);
        if (rep.verdict_geometric != gw_verdict::equal || rep.verdict_cohomological != gw_verdict::equal ||
            !rep.block_antidiagonal_check || rep.verdict_block != gw_verdict::equal)
            return "verification failed: " + verify_command(f, m);
        return std::nullopt;
    });

    s.prop("transfer.theorem_1_1_Fp", 3 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? F5 : F3;
        poly m = gen::random_irreducible_monic(r, k, 1 + static_cast<int>(r.next(3)));
        unsigned d = 1 + static_cast<unsigned>(r.next(3));
        poly u = gen::random_poly(r, k, 2, true);
        if (poly_divrem(u, m).rem.is_zero()) return std::nullopt;
        poly f = u * m.pow(d);
        closed_point p = make_closed_point(m);
        verify_report rep = verify_theorem_1_1(f, p);
        if (rep.verdict_geometric != gw_verdict::equal || rep.verdict_cohomological != gw_verdict::equal ||
            !rep.block_antidiagonal_check || rep.verdict_block != gw_verdict::equal)
            return "verification failed: " + verify_command(f, m);
        return std::nullopt;
    });

    s.prop("transfer.theorem_1_1_inseparable", 2 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? F3t : F5t;
        unsigned long pc = k->characteristic().get_ui();
        // m = x^p - t, purely inseparable over F_p(t).
        std::vector<element> mc(pc + 1, k->zero());
        mc[0] = -k->generator();
        mc[pc] = k->one();
        poly m(k, mc);
        unsigned d = 1 + static_cast<unsigned>(r.next(2));
        poly u = gen::random_poly(r, k, 2, true);
        if (poly_divrem(u, m).rem.is_zero()) return std::nullopt;
        poly f = u * m.pow(d);
        closed_point p = make_closed_point(m);
        verify_report rep = verify_theorem_1_1(f, p);
        if (rep.verdict_geometric == gw_verdict::not_equal || rep.verdict_cohomological == gw_verdict::not_equal)
            return "inseparable verification refuted: " + verify_command(f, m);
        if (rep.rank_base_change != pc * d || rep.rank_lift != d)
            return "base-change rank bookkeeping failed: " + verify_command(f, m);
        if (rep.lhs.disc_class() != rep.geometric.disc_class() ||
            rep.lhs.disc_class() != rep.cohomological.disc_class())
            return "disc classes disagree: " + verify_command(f, m);
        return std::nullopt;
    });

    s.prop("transfer.corollary_1_2_shape", 3 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? Q : field_ptr(F5);
        poly m = gen::random_irreducible_monic(r, k, 1 + static_cast<int>(r.next(3)));
        unsigned n = m.degree();
        unsigned d = 1 + static_cast<unsigned>(r.next(3));
        poly u = gen::random_poly(r, k, 2, true);
        if (poly_divrem(u, m).rem.is_zero()) return std::nullopt;
        poly f = u * m.pow(d);
        closed_point p = make_closed_point(m);
        gw_class c = local_degree(f, p);
        reduce_result red = hyperbolic_reduce(c);
        if (d % 2 == 0) {
            if (red.hyperbolic_count != n * d / 2 || red.residue.rank() != 0)
                return "even multiplicity should be fully hyperbolic: " + verify_command(f, m);
        } else {
            unsigned base = n * (d - 1) / 2;
            if (red.hyperbolic_count < base) return "too few hyperbolic summands: " + verify_command(f, m);
            if (red.residue.rank() > n) return "residue rank exceeds [k(p):k]: " + verify_command(f, m);
            element u_t = base_change(u, p.residue_field)(p.t);
            gw_class tau = geometric_transfer(gw_class::rank_one(u_t), p.residue_field);
            gw_class padded = red.residue.direct_sum(gw_class::hyperbolic(k, red.hyperbolic_count - base));
            if (gw_equal(padded, tau) != gw_verdict::equal)
                return "residue does not match the transferred <u(t)>: " + verify_command(f, m);
        }
        return std::nullopt;
    });

    s.prop("transfer.hoyois_identity", 4 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? Q : field_ptr(F5);
        poly m = gen::random_irreducible_monic(r, k, 2 + static_cast<int>(r.next(2)));
        closed_point p = make_closed_point(m);
        const field_ptr& L = p.residue_field;
        element beta = gen::random_element(r, L, true);
        element mprime_t = base_change(poly_derivative(m), L)(p.t);
        gw_class lhs = cohomological_transfer(gw_class::rank_one(beta), p);
        gw_class rhs = geometric_transfer(gw_class::rank_one(mprime_t * beta), L);
        if (gw_equal(lhs, rhs) != gw_verdict::equal) return "Tr != tau(<m'(t)> * beta)";
        return std::nullopt;
    });

    s.prop("transfer.separable_coincidence", 4 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? Q : field_ptr(F5);
        poly m = gen::random_irreducible_monic(r, k, 2 + static_cast<int>(r.next(2)));
        closed_point p = make_closed_point(m);
        const field_ptr& L = p.residue_field;
        element a = gen::random_element(r, L, true);
        diag_result tf = diagonalize(trace_form(L, a));
        if (tf.radical_dim != 0) return "trace form degenerate on a separable extension";
        gw_class coh = cohomological_transfer(gw_class::rank_one(a), p);
        if (gw_equal(tf.cls, coh) != gw_verdict::equal) return "trace form disagrees with the cohomological transfer";
        return std::nullopt;
    });

    s.prop("transfer.lift_determinant_square", 3 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k = r.next(2) ? Q : field_ptr(F5);
        poly m = gen::random_irreducible_monic(r, k, 1 + static_cast<int>(r.next(2)));
        unsigned d = 1 + static_cast<unsigned>(r.next(2));
        poly u = gen::random_poly(r, k, 2, true);
        if (poly_divrem(u, m).rem.is_zero()) return std::nullopt;
        poly f = u * m.pow(d);
        closed_point p = make_closed_point(m);
        const field_ptr& L = p.residue_field;
        gw_class lhs = local_degree(f, p);
        lift_result geo = geometric_lift(f, p);
        local_rational_degree lr = local_degree_rational(geo.lifted, p.t);
        element det_lhs = L->is_extension() ? L->embed(lhs.disc_product()) : lhs.disc_product();
        element det_rhs = lr.cls.disc_product();
        element ratio = det_lhs;
        for (unsigned i = 0; i < p.degree(); ++i) ratio = ratio / det_rhs;
        try {
            if (!is_square(ratio)) return "det ratio is not a square: " + verify_command(f, m);
        } catch (const error& e) {
            if (e.code() != errc::unsupported_field) throw; // inconclusive square test: skip
        }
        return std::nullopt;
    });

    // --- io -------------------------------------------------------------------
    s.prop("io.print_parse_roundtrip", 8 * scale, [&](gen::rng& r) -> std::optional<std::string> {
        field_ptr k;
        switch (r.next(4)) {
        case 0: k = Q; break;
        case 1: k = F5; break;
        case 2: k = F5t; break;
        default: k = Qi; break;
        }
        poly f = gen::random_poly(r, k, 5);
        std::string printed = f.is_zero() ? "0" : to_string(f);
        poly reparsed = parse_poly(printed, k);
        if (reparsed != f) return "round trip failed: \"" + printed + "\"";
        return std::nullopt;
    });
}

} // namespace

selftest_report selftest(uint64_t seed, const std::string& size) {
    unsigned scale = 1;
    if (size == "medium") scale = 3;
    else if (size != "small") fail(errc::parse_error, "size must be small or medium");
    suite s(seed);
    s.out << "selftest seed=" << seed << " size=" << size << "\n";
    run_all(s, scale);
    s.out << "total instances: " << s.total << "\n";
    s.out << (s.ok ? "all properties passed" : "FAILURES detected") << "\n";
    return {s.out.str(), s.ok, s.total};
}

} // namespace a1deg
