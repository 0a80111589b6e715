#include "a1deg/gen.hpp"

#include "a1deg/errors.hpp"
#include "a1deg/fppoly.hpp"
#include "a1deg/integers.hpp"

namespace a1deg::gen {

element random_element(rng& r, const field_ptr& k, bool nonzero) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        element e = k->zero();
        switch (k->kind()) {
        case field_kind::rationals: {
            mpq_class q(r.next_int(-9, 9), r.next_int(1, 9));
            q.canonicalize();
            e = k->from_rational(q);
            break;
        }
        case field_kind::prime_field: e = k->from_integer(r.next_int(0, k->characteristic().get_ui() - 1)); break;
        case field_kind::rational_function_field: {
            unsigned long p = k->characteristic().get_ui();
            fpp::fp_poly num(static_cast<size_t>(r.next_int(1, 3)));
            fpp::fp_poly den(static_cast<size_t>(r.next_int(1, 3)));
            for (auto& c : num) c = r.next(p);
            for (auto& c : den) c = r.next(p);
            if (fpp::is_zero(fpp::normalize(den, k->characteristic()))) den = {1};
            e = k->make_fraction(num, den);
            break;
        }
        case field_kind::extension: {
            std::vector<element> coords(k->degree_over_base());
            for (auto& c : coords) c = random_element(r, k->base());
            e = k->from_coords(std::move(coords));
            break;
        }
        }
        if (!nonzero || !e.is_zero()) return e;
    }
    return k->one();
}

poly random_poly(rng& r, const field_ptr& k, int maxdeg, bool nonzero) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        int deg = static_cast<int>(r.next(static_cast<uint64_t>(maxdeg + 1)));
        std::vector<element> c(deg + 1);
        for (auto& ci : c) ci = random_element(r, k);
        poly p(k, std::move(c));
        if (!nonzero || !p.is_zero()) return p;
    }
    return poly::constant(k, k->one());
}

poly random_monic(rng& r, const field_ptr& k, int deg) {
    std::vector<element> c(deg + 1);
    for (int i = 0; i < deg; ++i) c[i] = random_element(r, k);
    c[deg] = k->one();
    return poly(k, std::move(c));
}

namespace {

// Irreducibility certificate for integer-coefficient monic m over Q:
// irreducible mod some small prime not dividing the leading structure.
bool certify_irreducible_over_q(const poly& m) {
    for (unsigned long p : {3UL, 5UL, 7UL, 11UL, 13UL}) {
        mpz_class pz(p);
        fpp::fp_poly red(m.degree() + 1);
        bool integral = true;
        for (int i = 0; i <= m.degree() && integral; ++i) {
            mpq_class c = m.coeff(i).rat();
            if (c.get_den() % pz == 0) integral = false;
            else red[i] = (c.get_num() * ints::mod_inverse(c.get_den() % pz, pz)) % pz;
        }
        if (!integral) continue;
        red = fpp::normalize(std::move(red), pz);
        if (fpp::degree(red) != m.degree()) continue;
        if (fpp::is_irreducible(red, pz)) return true;
    }
    return false;
}

} // namespace

poly random_irreducible_monic(rng& r, const field_ptr& k, int deg) {
    if (deg < 1) fail(errc::internal, "irreducible polynomials have degree >= 1");
    for (int attempt = 0; attempt < 4000; ++attempt) {
        poly m;
        if (k->kind() == field_kind::rationals) {
            // Integer coefficients keep the mod-p certificate applicable.
            std::vector<element> c(deg + 1);
            for (int i = 0; i < deg; ++i) c[i] = k->from_integer(r.next_int(-5, 5));
            c[deg] = k->one();
            m = poly(k, std::move(c));
        } else {
            m = random_monic(r, k, deg);
        }
        if (deg == 1) return m;
        switch (k->kind()) {
        case field_kind::prime_field: {
            fpp::fp_poly red(deg + 1);
            for (int i = 0; i <= deg; ++i) red[i] = m.coeff(i).residue();
            if (fpp::is_irreducible(red, k->characteristic())) return m;
            break;
        }
        case field_kind::rationals: {
            if (certify_irreducible_over_q(m)) return m;
            break;
        }
        default: {
            // Rely on the construction policy to refute; degree <= 3 searches
            // are complete (a factor would have degree 1).
            if (deg > 3) fail(errc::unsupported_field, "cannot certify irreducibility here");
            try {
                field::extension(k, m.coeffs(), "zz");
                return m;
            } catch (const error& e) {
                if (e.code() != errc::reducible_modulus) throw;
            }
            break;
        }
        }
    }
    fail(errc::internal, "failed to sample an irreducible polynomial");
}

matrix random_symmetric(rng& r, const field_ptr& k, size_t n) {
    matrix g(k, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            element e = random_element(r, k);
            g.at(i, j) = e;
            g.at(j, i) = e;
        }
    return g;
}

} // namespace a1deg::gen
