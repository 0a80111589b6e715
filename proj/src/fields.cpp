#include "a1deg/fields.hpp"

#include "a1deg/errors.hpp"
#include "a1deg/integers.hpp"
#include "a1deg/vecpoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace a1deg {

using fpp::fp_poly;

namespace {

mpz_class fp_reduce(const mpz_class& v, const mpz_class& p) {
    mpz_class r = v % p;
    if (r < 0) r += p;
    return r;
}

void require_same(const element& x, const element& y) {
    if (!x.valid() || !y.valid()) fail(errc::internal, "operation on invalid element");
    if (!same_field(x.domain(), y.domain())) fail(errc::field_mismatch, "elements live in different fields");
}

// Reduced fraction with monic denominator; the canonical zero is 0/1.
detail::frac_repr make_frac(fp_poly num, fp_poly den, const mpz_class& p) {
    if (fpp::is_zero(den)) fail(errc::division_by_zero, "zero denominator in F_p(t)");
    if (fpp::is_zero(num)) return {{}, fpp::constant(1, p)};
    fp_poly g = fpp::gcd(num, den, p);
    if (fpp::degree(g) > 0) {
        num = fpp::divrem(num, g, p).first;
        den = fpp::divrem(den, g, p).first;
    }
    mpz_class lead_inv = ints::mod_inverse(den.back(), p);
    num = fpp::scalar_mul(num, lead_inv, p);
    den = fpp::scalar_mul(den, lead_inv, p);
    return {std::move(num), std::move(den)};
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

} // namespace

namespace detail {
bool ext_repr::operator==(const ext_repr& other) const { return coords == other.coords; }
} // namespace detail

// ---------------------------------------------------------------------------
// element basics

bool element::is_zero() const {
    return std::visit(
        [](const auto& r) -> bool {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, detail::q_repr>) return r.v == 0;
            else if constexpr (std::is_same_v<T, detail::fp_repr>) return r.v == 0;
            else if constexpr (std::is_same_v<T, detail::frac_repr>) return fpp::is_zero(r.num);
            else {
                for (const auto& c : r.coords)
                    if (!c.is_zero()) return false;
                return true;
            }
        },
        r_);
}

bool element::is_one() const {
    return std::visit(
        [this](const auto& r) -> bool {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, detail::q_repr>) return r.v == 1;
            else if constexpr (std::is_same_v<T, detail::fp_repr>) return r.v == 1;
            else if constexpr (std::is_same_v<T, detail::frac_repr>) return fpp::is_one(r.num) && fpp::is_one(r.den);
            else {
                if (r.coords.empty() || !r.coords[0].is_one()) return false;
                for (size_t i = 1; i < r.coords.size(); ++i)
                    if (!r.coords[i].is_zero()) return false;
                return true;
            }
        },
        r_);
}

bool element::operator==(const element& y) const {
    if (!valid() && !y.valid()) return true;
    if (!valid() || !y.valid()) return false;
    if (!same_field(f_, y.f_)) return false;
    return r_ == y.r_;
}

const mpq_class& element::rat() const {
    if (const auto* r = std::get_if<detail::q_repr>(&r_)) return r->v;
    fail(errc::internal, "element is not rational");
}

const mpz_class& element::residue() const {
    if (const auto* r = std::get_if<detail::fp_repr>(&r_)) return r->v;
    fail(errc::internal, "element is not a prime-field residue");
}

const detail::frac_repr& element::frac() const {
    if (const auto* r = std::get_if<detail::frac_repr>(&r_)) return *r;
    fail(errc::internal, "element is not a rational function");
}

const std::vector<element>& element::coords() const {
    if (const auto* r = std::get_if<detail::ext_repr>(&r_)) return r->coords;
    fail(errc::internal, "element is not an extension element");
}

// ---------------------------------------------------------------------------
// arithmetic

namespace {

std::vector<element> coords_from_evec(vp::evec v, const field& L) {
    v.resize(L.degree_over_base(), L.base()->zero());
    return v;
}

vp::evec evec_from_coords(const std::vector<element>& coords) { return vp::normalize(coords); }

} // namespace

element operator+(const element& x, const element& y) {
    require_same(x, y);
    const field_ptr& k = x.domain();
    switch (k->kind()) {
    case field_kind::rationals: return k->from_rational(x.rat() + y.rat());
    case field_kind::prime_field: {
        mpz_class v = fp_reduce(x.residue() + y.residue(), k->characteristic());
        return k->from_integer(v);
    }
    case field_kind::rational_function_field: {
        const auto& a = x.frac();
        const auto& b = y.frac();
        const mpz_class& p = k->characteristic();
        fp_poly num = fpp::add(fpp::mul(a.num, b.den, p), fpp::mul(b.num, a.den, p), p);
        fp_poly den = fpp::mul(a.den, b.den, p);
        return k->make_fraction(std::move(num), std::move(den));
    }
    case field_kind::extension: {
        std::vector<element> c = x.coords();
        const auto& d = y.coords();
        for (size_t i = 0; i < c.size(); ++i) c[i] += d[i];
        return k->from_coords(std::move(c));
    }
    }
    fail(errc::internal, "unreachable");
}

element element::operator-() const {
    if (!valid()) fail(errc::internal, "negating invalid element");
    const field_ptr& k = f_;
    switch (k->kind()) {
    case field_kind::rationals: return k->from_rational(-rat());
    case field_kind::prime_field: return k->from_integer(-residue());
    case field_kind::rational_function_field: {
        const auto& a = frac();
        return k->make_fraction(fpp::scalar_mul(a.num, k->characteristic() - 1, k->characteristic()), a.den);
    }
    case field_kind::extension: {
        std::vector<element> c = coords();
        for (auto& ci : c) ci = -ci;
        return k->from_coords(std::move(c));
    }
    }
    fail(errc::internal, "unreachable");
}

element operator-(const element& x, const element& y) { return x + (-y); }

element operator*(const element& x, const element& y) {
    require_same(x, y);
    const field_ptr& k = x.domain();
    switch (k->kind()) {
    case field_kind::rationals: return k->from_rational(x.rat() * y.rat());
    case field_kind::prime_field:
        return k->from_integer(x.residue() * y.residue());
    case field_kind::rational_function_field: {
        const auto& a = x.frac();
        const auto& b = y.frac();
        const mpz_class& p = k->characteristic();
        return k->make_fraction(fpp::mul(a.num, b.num, p), fpp::mul(a.den, b.den, p));
    }
    case field_kind::extension: {
        vp::evec prod = vp::mul(evec_from_coords(x.coords()), evec_from_coords(y.coords()));
        vp::evec rem = vp::divrem(prod, k->modulus()).second;
        return k->from_coords(coords_from_evec(std::move(rem), *k));
    }
    }
    fail(errc::internal, "unreachable");
}

element element::inverse() const {
    if (!valid()) fail(errc::internal, "inverting invalid element");
    if (is_zero()) fail(errc::division_by_zero, "division by the zero element");
    const field_ptr& k = f_;
    switch (k->kind()) {
    case field_kind::rationals: return k->from_rational(1 / rat());
    case field_kind::prime_field: return k->from_integer(ints::mod_inverse(residue(), k->characteristic()));
    case field_kind::rational_function_field: {
        const auto& a = frac();
        return k->make_fraction(a.den, a.num);
    }
    case field_kind::extension: {
        auto res = vp::xgcd(evec_from_coords(coords()), k->modulus());
        if (vp::degree(res.g) != 0)
            fail(errc::irreducibility_violated,
                 "modulus shares a nonunit factor with " + to_string(*this) + "; the asserted-irreducible modulus is reducible");
        vp::evec inv = vp::scalar_mul(res.s, res.g[0].inverse());
        inv = vp::divrem(inv, k->modulus()).second;
        return k->from_coords(coords_from_evec(std::move(inv), *k));
    }
    }
    fail(errc::internal, "unreachable");
}

element operator/(const element& x, const element& y) {
    require_same(x, y);
    return x * y.inverse();
}

// ---------------------------------------------------------------------------
// field construction

field_ptr field::rationals() {
    static field_ptr instance = [] {
        auto f = std::shared_ptr<field>(new field());
        f->kind_ = field_kind::rationals;
        return field_ptr(f);
    }();
    return instance;
}

field_ptr field::prime_field(const mpz_class& p) {
    if (p == 2) fail(errc::characteristic_two, "characteristic 2 is not supported");
    if (p < 2 || !ints::is_prime(p)) fail(errc::parse_error, p.get_str() + " is not prime");
    auto f = std::shared_ptr<field>(new field());
    f->kind_ = field_kind::prime_field;
    f->p_ = p;
    return f;
}

field_ptr field::rational_function_field(const mpz_class& p, const std::string& var) {
    if (p == 2) fail(errc::characteristic_two, "characteristic 2 is not supported");
    if (p < 2 || !ints::is_prime(p)) fail(errc::parse_error, p.get_str() + " is not prime");
    if (!is_identifier(var) || var == "x") fail(errc::parse_error, "invalid function-field variable '" + var + "'");
    auto f = std::shared_ptr<field>(new field());
    f->kind_ = field_kind::rational_function_field;
    f->p_ = p;
    f->var_ = var;
    return f;
}

namespace {

std::vector<mpz_class> divisors_from_factorization(const std::vector<std::pair<mpz_class, unsigned>>& fac,
                                                   size_t cap) {
    std::vector<mpz_class> divs = {1};
    for (const auto& [prime, mult] : fac) {
        size_t old = divs.size();
        if (old * (mult + 1) > cap) return {};
        mpz_class pk = 1;
        for (unsigned e = 1; e <= mult; ++e) {
            pk *= prime;
            for (size_t i = 0; i < old; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

std::vector<fp_poly> poly_divisors(const fp_poly& a, const mpz_class& p, size_t cap) {
    auto fac = fpp::factor(a, p);
    std::vector<fp_poly> divs = {fpp::constant(1, p)};
    for (const auto& [prime, mult] : fac.factors) {
        size_t old = divs.size();
        if (old * (mult + 1) > cap) return {};
        fp_poly pk = fpp::constant(1, p);
        for (unsigned e = 1; e <= mult; ++e) {
            pk = fpp::mul(pk, prime, p);
            for (size_t i = 0; i < old; ++i) divs.push_back(fpp::mul(divs[i], pk, p));
        }
    }
    return divs;
}

// Best-effort search for a rational root of a monic polynomial over Q.
bool has_rational_root(const std::vector<element>& coeffs) {
    mpz_class L = 1;
    for (const auto& c : coeffs) L = lcm(L, c.rat().get_den());
    std::vector<mpz_class> C(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) C[i] = mpq_class(coeffs[i].rat() * L).get_num();
    if (C[0] == 0) return true; // x divides
    auto u_divs = divisors_from_factorization(ints::factor(abs(C[0])), 512);
    auto v_divs = divisors_from_factorization(ints::factor(abs(C.back())), 64);
    if (u_divs.empty() || v_divs.empty()) return false; // enumeration too large: caller-asserted
    const field_ptr Q = field::rationals();
    for (const auto& u : u_divs)
        for (const auto& v : v_divs) {
            if (gcd(u, v) != 1) continue;
            for (int sign : {1, -1}) {
                mpq_class root(sign * u, v);
                root.canonicalize();
                mpq_class val = 0;
                for (size_t i = coeffs.size(); i-- > 0;) val = val * root + coeffs[i].rat();
                if (val == 0) return true;
            }
        }
    return false;
}

// Best-effort search for a root in F_p(t) of a monic polynomial.
bool has_ratfun_root(const field_ptr& k, const std::vector<element>& coeffs) {
    const mpz_class& p = k->characteristic();
    fp_poly L = fpp::constant(1, p);
    for (const auto& c : coeffs) {
        const auto& den = c.frac().den;
        fp_poly g = fpp::gcd(L, den, p);
        L = fpp::mul(fpp::divrem(L, g, p).first, den, p);
    }
    std::vector<fp_poly> A(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        const auto& f = coeffs[i].frac();
        A[i] = fpp::mul(f.num, fpp::divrem(L, f.den, p).first, p);
    }
    if (fpp::is_zero(A[0])) return true;
    auto u_divs = poly_divisors(A[0], p, 256);
    auto v_divs = poly_divisors(A.back(), p, 64);
    if (u_divs.empty() || v_divs.empty()) return false;
    unsigned long pl = p.get_ui();
    for (const auto& u : u_divs)
        for (const auto& v : v_divs) {
            if (fpp::degree(fpp::gcd(u, v, p)) > 0) continue;
            for (unsigned long c = 1; c < pl; ++c) {
                element root = k->make_fraction(fpp::scalar_mul(u, c, p), v);
                element val = k->zero();
                for (size_t i = coeffs.size(); i-- > 0;) val = val * root + coeffs[i];
                if (val.is_zero()) return true;
            }
        }
    return false;
}

fp_poly to_fp_poly(const std::vector<element>& coeffs, const mpz_class& p) {
    fp_poly a(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) a[i] = coeffs[i].residue();
    return fpp::normalize(std::move(a), p);
}

// Irreducibility policy: exact over F_p, best-effort refutation elsewhere.
void check_modulus_policy(const field_ptr& base, const std::vector<element>& coeffs) {
    switch (base->kind()) {
    case field_kind::prime_field: {
        if (!fpp::is_irreducible(to_fp_poly(coeffs, base->characteristic()), base->characteristic()))
            fail(errc::reducible_modulus, "modulus is reducible over F_" + base->characteristic().get_str());
        return;
    }
    case field_kind::rationals: {
        vp::evec m = vp::normalize(coeffs);
        vp::evec g = vp::gcd(m, vp::derivative(m, base));
        if (vp::degree(g) > 0) fail(errc::reducible_modulus, "modulus has a repeated factor");
        if (has_rational_root(coeffs)) fail(errc::reducible_modulus, "modulus has a rational root");
        return;
    }
    case field_kind::rational_function_field: {
        // Strip maximal p-power from the exponents, then require the core to
        // be squarefree; an irreducible modulus always passes.
        const mpz_class& p = base->characteristic();
        unsigned long pl = p.get_ui();
        std::vector<element> m0 = coeffs;
        while (true) {
            bool strippable = m0.size() > 1;
            for (size_t i = 1; i < m0.size(); ++i)
                if (!m0[i].is_zero() && i % pl != 0) strippable = false;
            if (!strippable) break;
            std::vector<element> next((m0.size() - 1) / pl + 1, base->zero());
            for (size_t i = 0; i < m0.size(); i += pl) next[i / pl] = m0[i];
            m0 = std::move(next);
        }
        vp::evec core = vp::normalize(m0);
        vp::evec g = vp::gcd(core, vp::derivative(core, base));
        if (vp::degree(g) > 0) fail(errc::reducible_modulus, "modulus core has a repeated factor");
        if (has_ratfun_root(base, coeffs)) fail(errc::reducible_modulus, "modulus has a root in the base field");
        return;
    }
    default: fail(errc::internal, "unexpected base kind");
    }
}

} // namespace

field_ptr field::extension(const field_ptr& base, const std::vector<element>& modulus_coeffs,
                           const std::string& sym) {
    if (!base) fail(errc::internal, "null base field");
    if (base->is_extension())
        fail(errc::not_an_extension, "towers beyond one simple extension are not supported");
    if (!is_identifier(sym) || sym == "x" || sym == base->var())
        fail(errc::parse_error, "invalid extension symbol '" + sym + "'");
    std::vector<element> coeffs = modulus_coeffs;
    for (const auto& c : coeffs)
        if (!c.valid() || !same_field(c.domain(), base)) fail(errc::field_mismatch, "modulus coefficient not in base field");
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.size() < 3) fail(errc::parse_error, "extension modulus must have degree at least 2");
    if (!coeffs.back().is_one()) fail(errc::not_monic, "extension modulus must be monic");
    check_modulus_policy(base, coeffs);

    auto f = std::shared_ptr<field>(new field());
    f->kind_ = field_kind::extension;
    f->p_ = base->characteristic();
    f->var_ = sym;
    f->base_ = base;
    f->modulus_ = std::move(coeffs);
    return f;
}

bool field::is_finite() const {
    if (kind_ == field_kind::prime_field) return true;
    return kind_ == field_kind::extension && base_->kind() == field_kind::prime_field;
}

unsigned field::degree_over_base() const {
    if (kind_ != field_kind::extension) return 1;
    return static_cast<unsigned>(modulus_.size() - 1);
}

std::string field::spec_string() const {
    switch (kind_) {
    case field_kind::rationals: return "Q";
    case field_kind::prime_field: return "F" + p_.get_str();
    case field_kind::rational_function_field: return "F" + p_.get_str() + "(" + var_ + ")";
    case field_kind::extension: {
        std::string mod = poly_string(modulus_, var_);
        return base_->spec_string() + "[" + var_ + "]/(" + mod + ")";
    }
    }
    return "?";
}

element field::zero() const {
    auto self = shared_from_this();
    switch (kind_) {
    case field_kind::rationals: return element(self, detail::q_repr{0});
    case field_kind::prime_field: return element(self, detail::fp_repr{0});
    case field_kind::rational_function_field:
        return element(self, detail::frac_repr{{}, fpp::constant(1, p_)});
    case field_kind::extension:
        return element(self, detail::ext_repr{std::vector<element>(degree_over_base(), base_->zero())});
    }
    fail(errc::internal, "unreachable");
}

element field::one() const { return from_integer(1); }

element field::from_integer(const mpz_class& n) const {
    auto self = shared_from_this();
    switch (kind_) {
    case field_kind::rationals: return element(self, detail::q_repr{mpq_class(n)});
    case field_kind::prime_field: return element(self, detail::fp_repr{fp_reduce(n, p_)});
    case field_kind::rational_function_field:
        return element(self, detail::frac_repr{fpp::constant(n, p_), fpp::constant(1, p_)});
    case field_kind::extension: return embed(base_->from_integer(n));
    }
    fail(errc::internal, "unreachable");
}

element field::from_rational(const mpq_class& q) const {
    auto self = shared_from_this();
    switch (kind_) {
    case field_kind::rationals: {
        mpq_class v = q;
        v.canonicalize();
        return element(self, detail::q_repr{std::move(v)});
    }
    case field_kind::prime_field: {
        mpz_class den = fp_reduce(q.get_den(), p_);
        if (den == 0) fail(errc::division_by_zero, "denominator divisible by the characteristic");
        return element(self, detail::fp_repr{fp_reduce(q.get_num() * ints::mod_inverse(den, p_), p_)});
    }
    case field_kind::rational_function_field: {
        mpz_class den = fp_reduce(q.get_den(), p_);
        if (den == 0) fail(errc::division_by_zero, "denominator divisible by the characteristic");
        mpz_class v = fp_reduce(q.get_num() * ints::mod_inverse(den, p_), p_);
        return element(self, detail::frac_repr{fpp::constant(v, p_), fpp::constant(1, p_)});
    }
    case field_kind::extension: return embed(base_->from_rational(q));
    }
    fail(errc::internal, "unreachable");
}

element field::generator() const {
    auto self = shared_from_this();
    switch (kind_) {
    case field_kind::rational_function_field:
        return element(self, detail::frac_repr{fpp::monomial(1, 1, p_), fpp::constant(1, p_)});
    case field_kind::extension: {
        std::vector<element> c(degree_over_base(), base_->zero());
        c[1] = base_->one();
        return element(self, detail::ext_repr{std::move(c)});
    }
    default: fail(errc::internal, "field has no distinguished generator");
    }
}

element field::make_fraction(fp_poly num, fp_poly den) const {
    if (kind_ != field_kind::rational_function_field) fail(errc::internal, "make_fraction on a non-function-field");
    return element(shared_from_this(), make_frac(fpp::normalize(std::move(num), p_), fpp::normalize(std::move(den), p_), p_));
}

element field::from_coords(std::vector<element> coords) const {
    if (kind_ != field_kind::extension) fail(errc::internal, "from_coords on a non-extension");
    unsigned n = degree_over_base();
    if (coords.size() > n) {
        vp::evec rem = vp::divrem(vp::normalize(std::move(coords)), modulus_).second;
        coords = std::move(rem);
    }
    coords.resize(n, base_->zero());
    for (const auto& c : coords)
        if (!same_field(c.domain(), base_)) fail(errc::field_mismatch, "coordinate not in base field");
    return element(shared_from_this(), detail::ext_repr{std::move(coords)});
}

element field::embed(const element& base_elem) const {
    if (kind_ != field_kind::extension) fail(errc::internal, "embed on a non-extension");
    if (!same_field(base_elem.domain(), base_)) fail(errc::field_mismatch, "element not in the base field");
    std::vector<element> c(degree_over_base(), base_->zero());
    c[0] = base_elem;
    return element(shared_from_this(), detail::ext_repr{std::move(c)});
}

bool same_field(const field& a, const field& b) {
    if (&a == &b) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case field_kind::rationals: return true;
    case field_kind::prime_field: return a.characteristic() == b.characteristic();
    case field_kind::rational_function_field:
        return a.characteristic() == b.characteristic() && a.var() == b.var();
    case field_kind::extension:
        return a.var() == b.var() && same_field(*a.base(), *b.base()) && a.modulus() == b.modulus();
    }
    return false;
}

bool same_field(const field_ptr& a, const field_ptr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return same_field(*a, *b);
}

// ---------------------------------------------------------------------------
// spec-facing wrappers

element el_add(const element& x, const element& y) { return x + y; }
element el_sub(const element& x, const element& y) { return x - y; }
element el_mul(const element& x, const element& y) { return x * y; }
element el_div(const element& x, const element& y) {
    require_same(x, y);
    if (y.is_zero()) fail(errc::division_by_zero, "division by the zero element");
    return x / y;
}

mpz_class field_char(const field_ptr& k) { return k->characteristic(); }
unsigned degree_over_base(const field_ptr& k) { return k->degree_over_base(); }

// ---------------------------------------------------------------------------
// traces, norms, powers

namespace {

element pow_elem(const element& a, const mpz_class& e) {
    element r = a.domain()->one();
    element b = a;
    mpz_class n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

// Determinant by fraction-full Gaussian elimination; entries in a field.
element det_over_field(std::vector<std::vector<element>> m, const field_ptr& k) {
    size_t n = m.size();
    element det = k->one();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return k->zero();
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        element inv = m[col][col].inverse();
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            element f = m[r][col] * inv;
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

} // namespace

element field_trace(const element& a) {
    const field_ptr& L = a.domain();
    if (!L->is_extension()) return a;
    unsigned n = L->degree_over_base();
    element t = L->generator();
    element cur = a;
    element tr = cur.coords()[0];
    for (unsigned i = 1; i < n; ++i) {
        cur *= t;
        tr += cur.coords()[i];
    }
    return tr;
}

element field_norm(const element& a) {
    const field_ptr& L = a.domain();
    if (!L->is_extension()) return a;
    unsigned n = L->degree_over_base();
    element t = L->generator();
    std::vector<std::vector<element>> m(n, std::vector<element>(n, L->base()->zero()));
    element cur = a;
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned i = 0; i < n; ++i) m[i][j] = cur.coords()[i];
        if (j + 1 < n) cur *= t;
    }
    return det_over_field(std::move(m), L->base());
}

// ---------------------------------------------------------------------------
// square testing

namespace {

bool is_square_q(const mpq_class& a) {
    if (a == 0) return true;
    if (a < 0) return false;
    return mpz_perfect_square_p(a.get_num().get_mpz_t()) && mpz_perfect_square_p(a.get_den().get_mpz_t());
}

// Square class of a nonzero rational function: (unit in F_p) * odd-part.
std::pair<mpz_class, fp_poly> ratfun_square_data(const detail::frac_repr& a, const mpz_class& p) {
    mpz_class unit = a.num.back(); // den is monic
    fp_poly combined = fpp::mul(fpp::monic(a.num, p), a.den, p);
    fp_poly odd_part = fpp::constant(1, p);
    for (const auto& [g, e] : fpp::squarefree_decompose(combined, p))
        if (e % 2 == 1) odd_part = fpp::mul(odd_part, g, p);
    return {unit, odd_part};
}

bool quadratic_extension_square(const element& a);
std::optional<element> number_field_sqrt_search(const element& a);

} // namespace

bool is_square(const element& a) {
    if (!a.valid()) fail(errc::internal, "is_square on an invalid element");
    if (a.is_zero()) fail(errc::zero_argument, "is_square requires a nonzero argument");
    const field_ptr& k = a.domain();
    switch (k->kind()) {
    case field_kind::rationals: return is_square_q(a.rat());
    case field_kind::prime_field: return ints::jacobi(a.residue(), k->characteristic()) == 1;
    case field_kind::rational_function_field: {
        auto [unit, odd_part] = ratfun_square_data(a.frac(), k->characteristic());
        return fpp::degree(odd_part) == 0 && ints::jacobi(unit, k->characteristic()) == 1;
    }
    case field_kind::extension: {
        switch (k->base()->kind()) {
        case field_kind::prime_field: {
            mpz_class q;
            mpz_pow_ui(q.get_mpz_t(), k->characteristic().get_mpz_t(), k->degree_over_base());
            return pow_elem(a, (q - 1) / 2).is_one();
        }
        case field_kind::rationals: {
            unsigned n = k->degree_over_base();
            bool rational_coords = true;
            for (size_t i = 1; i < a.coords().size(); ++i)
                if (!a.coords()[i].is_zero()) rational_coords = false;
            if (rational_coords && n % 2 == 1) return is_square_q(a.coords()[0].rat());
            if (n == 2) return quadratic_extension_square(a);
            if (!is_square_q(field_norm(a).rat())) return false;
            if (auto root = number_field_sqrt_search(a)) return true;
            fail(errc::unsupported_field, "square test inconclusive in " + k->spec_string());
        }
        default:
            fail(errc::unsupported_field, "square testing in extensions of F_p(t) is unsupported");
        }
    }
    }
    fail(errc::internal, "unreachable");
}

element square_class_rep(const element& a) {
    if (a.is_zero()) fail(errc::zero_argument, "square_class_rep requires a nonzero argument");
    const field_ptr& k = a.domain();
    switch (k->kind()) {
    case field_kind::rationals:
        return k->from_rational(mpq_class(ints::squarefree_part(a.rat().get_num() * a.rat().get_den())));
    case field_kind::prime_field:
        return is_square(a) ? k->one() : k->from_integer(ints::least_nonresidue(k->characteristic()));
    case field_kind::rational_function_field: {
        const mpz_class& p = k->characteristic();
        auto [unit, odd_part] = ratfun_square_data(a.frac(), p);
        mpz_class u = ints::jacobi(unit, p) == 1 ? mpz_class(1) : ints::least_nonresidue(p);
        return k->make_fraction(fpp::scalar_mul(odd_part, u, p), fpp::constant(1, p));
    }
    case field_kind::extension: return a; // no canonical form; equality is via ratios
    }
    fail(errc::internal, "unreachable");
}

// ---------------------------------------------------------------------------
// finite-field square roots

std::optional<element> finite_field_sqrt(const element& a) {
    const field_ptr& k = a.domain();
    if (!k->is_finite()) fail(errc::internal, "finite_field_sqrt on an infinite field");
    if (a.is_zero()) return k->zero();
    if (k->kind() == field_kind::prime_field) {
        auto r = ints::sqrt_mod_prime(a.residue(), k->characteristic());
        if (!r) return std::nullopt;
        return k->from_integer(*r);
    }
    mpz_class q;
    mpz_pow_ui(q.get_mpz_t(), k->characteristic().get_mpz_t(), k->degree_over_base());
    element euler = pow_elem(a, (q - 1) / 2);
    if (!euler.is_one()) return std::nullopt;
    if (q % 4 == 3) return pow_elem(a, (q + 1) / 4);
    // Tonelli-Shanks; nonresidues are found by enumerating coordinate vectors.
    mpz_class Q = q - 1;
    unsigned long S = 0;
    while (mpz_even_p(Q.get_mpz_t())) {
        Q /= 2;
        ++S;
    }
    element z = k->zero();
    for (mpz_class counter = 2;; ++counter) {
        mpz_class rest = counter;
        std::vector<element> coords(k->degree_over_base(), k->base()->zero());
        for (unsigned i = 0; i < k->degree_over_base() && rest > 0; ++i) {
            coords[i] = k->base()->from_integer(rest % k->characteristic());
            rest /= k->characteristic();
        }
        element cand = k->from_coords(std::move(coords));
        if (cand.is_zero()) continue;
        if (!pow_elem(cand, (q - 1) / 2).is_one()) {
            z = cand;
            break;
        }
    }
    mpz_class M = S;
    element c = pow_elem(z, Q);
    element t = pow_elem(a, Q);
    element r = pow_elem(a, (Q + 1) / 2);
    while (!t.is_one()) {
        element t2 = t;
        mpz_class i = 0;
        while (!t2.is_one()) {
            t2 *= t2;
            ++i;
        }
        element b = c;
        for (mpz_class j = 0; j < M - i - 1; ++j) b *= b;
        M = i;
        c = b * b;
        t *= c;
        r *= b;
    }
    return r;
}

// ---------------------------------------------------------------------------
// number-field square roots (quadratic closed form + modular search)

namespace {

// Complete decision for [L:Q] = 2 via the explicit formula for
// (u + v sqrt(D))^2 after completing the square on the modulus.
bool quadratic_extension_square(const element& a) {
    const field_ptr& L = a.domain();
    mpq_class b = L->modulus()[1].rat(), c = L->modulus()[0].rat();
    mpq_class D = b * b / 4 - c;
    mpq_class alpha = a.coords()[0].rat(), beta = a.coords()[1].rat();
    // a = alpha' + beta * t' with t' = t + b/2, t'^2 = D.
    mpq_class alpha_p = alpha - beta * b / 2;
    if (D == 0) fail(errc::internal, "degenerate quadratic modulus");
    if (beta == 0) return is_square_q(alpha_p) || is_square_q(alpha_p / D);
    mpq_class N = alpha_p * alpha_p - D * beta * beta;
    if (!is_square_q(N)) return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), N.get_num().get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), N.get_den().get_mpz_t());
    mpq_class s(sn, sd);
    return is_square_q((alpha_p + s) / 2) || is_square_q((alpha_p - s) / 2);
}

// Polynomials with coefficients mod M, reduced mod a monic integer modulus.
struct zmod_ctx {
    mpz_class M;                 // q^k
    std::vector<mpz_class> mod;  // monic integer modulus, constant first
};

std::vector<mpz_class> zm_reduce(std::vector<mpz_class> a, const zmod_ctx& ctx) {
    for (auto& c : a) {
        c %= ctx.M;
        if (c < 0) c += ctx.M;
    }
    size_t n = ctx.mod.size() - 1;
    for (size_t i = a.size(); i-- > n;) {
        if (a[i] == 0) continue;
        mpz_class q = a[i];
        for (size_t j = 0; j <= n; ++j) {
            a[i - n + j] -= q * ctx.mod[j];
            a[i - n + j] %= ctx.M;
            if (a[i - n + j] < 0) a[i - n + j] += ctx.M;
        }
    }
    a.resize(n, 0);
    return a;
}

std::vector<mpz_class> zm_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                              const zmod_ctx& ctx) {
    if (a.empty() || b.empty()) return std::vector<mpz_class>(ctx.mod.size() - 1, 0);
    std::vector<mpz_class> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return zm_reduce(std::move(r), ctx);
}

std::vector<mpz_class> zm_sub(std::vector<mpz_class> a, const std::vector<mpz_class>& b, const zmod_ctx& ctx) {
    a.resize(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return zm_reduce(std::move(a), ctx);
}

std::vector<mpz_class> zm_scalar(std::vector<mpz_class> a, const mpz_class& c, const zmod_ctx& ctx) {
    for (auto& x : a) x *= c;
    return zm_reduce(std::move(a), ctx);
}

// Search for z with z^2 = a in a number field by Hensel lifting square roots
// mod small primes and rationally reconstructing the coordinates. Finding a
// root is a proof; exhausting the budget proves nothing.
std::optional<element> number_field_sqrt_search(const element& a) {
    const field_ptr& L = a.domain();
    unsigned n = L->degree_over_base();
    // Integralize the modulus: y = c*t turns m into a monic integer M(y).
    mpz_class cden = 1;
    for (const auto& mc : L->modulus()) cden = lcm(cden, mc.rat().get_den());
    std::vector<mpz_class> M(n + 1);
    mpz_class cpow = 1;
    for (size_t j = n + 1; j-- > 0;) {
        mpq_class scaled = L->modulus()[j].rat() * cpow;
        M[j] = scaled.get_num();
        cpow *= cden;
    }
    std::vector<mpq_class> beta(n); // coords of a in the y-basis
    mpq_class cinv(1);
    for (unsigned i = 0; i < n; ++i) {
        beta[i] = a.coords()[i].rat() * cinv;
        cinv /= cden;
    }

    const unsigned long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    int usable = 0;
    for (unsigned long ql : primes) {
        if (usable >= 8) break;
        mpz_class q(ql);
        bool bad = false;
        for (const auto& b : beta)
            if (b.get_den() % ql == 0) bad = true;
        if (bad) continue;
        fp_poly Mbar(M.begin(), M.end());
        Mbar = fpp::normalize(std::move(Mbar), q);
        if (fpp::degree(Mbar) != static_cast<int>(n)) continue;
        if (fpp::degree(fpp::gcd(Mbar, fpp::derivative(Mbar, q), q)) > 0) continue;
        fp_poly abar(n);
        for (unsigned i = 0; i < n; ++i)
            abar[i] = fp_reduce(beta[i].get_num() * ints::mod_inverse(fp_reduce(beta[i].get_den(), q), q), q);
        abar = fpp::normalize(std::move(abar), q);
        if (fpp::is_zero(abar) || !fpp::is_one(fpp::gcd(abar, Mbar, q))) continue;
        ++usable;

        auto fac = fpp::factor(Mbar, q);
        size_t kf = fac.factors.size();
        if (kf > 6) continue;
        // Component square roots in each residue field.
        std::vector<fp_poly> roots;
        bool component_failed = false;
        for (const auto& [mu, mult] : fac.factors) {
            fp_poly amu = fpp::mod(abar, mu, q);
            if (fpp::degree(mu) == 1) {
                auto r = ints::sqrt_mod_prime(fpp::eval(abar, fp_reduce(-mu[0], q), q), q);
                if (!r) {
                    component_failed = true;
                    break;
                }
                roots.push_back(fpp::constant(*r, q));
            } else {
                field_ptr Fq = field::prime_field(q);
                std::vector<element> mu_coeffs;
                for (const auto& mc : mu) mu_coeffs.push_back(Fq->from_integer(mc));
                field_ptr Fqd = field::extension(Fq, mu_coeffs, "w");
                std::vector<element> acoords(fpp::degree(mu), Fq->zero());
                for (int i = 0; i <= fpp::degree(amu); ++i) acoords[i] = Fq->from_integer(amu[i]);
                auto r = finite_field_sqrt(Fqd->from_coords(std::move(acoords)));
                if (!r) {
                    component_failed = true;
                    break;
                }
                fp_poly rp(fpp::degree(mu), 0);
                for (int i = 0; i < fpp::degree(mu); ++i) rp[i] = r->coords()[i].residue();
                roots.push_back(fpp::normalize(std::move(rp), q));
            }
        }
        if (component_failed) continue;

        // CRT idempotents for the factors of Mbar.
        std::vector<fp_poly> idem;
        for (const auto& [mu, mult] : fac.factors) {
            fp_poly rest = fpp::divrem(Mbar, mu, q).first;
            auto xg = fpp::xgcd(rest, mu, q);
            idem.push_back(fpp::mod(fpp::mul(rest, xg.s, q), Mbar, q));
        }

        zmod_ctx base_ctx{q, M};
        for (size_t mask = 0; mask < (size_t(1) << (kf - 1)); ++mask) {
            fp_poly z0 = {};
            for (size_t i = 0; i < kf; ++i) {
                fp_poly ri = roots[i];
                if (i > 0 && (mask >> (i - 1)) & 1) ri = fpp::scalar_mul(ri, q - 1, q);
                z0 = fpp::add(z0, fpp::mod(fpp::mul(ri, idem[i], q), Mbar, q), q);
            }
            // Inverse of 2*z0 mod (q, Mbar).
            fp_poly two_z = fpp::scalar_mul(z0, 2, q);
            auto xg = fpp::xgcd(two_z, Mbar, q);
            if (fpp::degree(xg.g) != 0) continue;
            fp_poly w0 = fpp::scalar_mul(xg.s, ints::mod_inverse(xg.g[0], q), q);

            zmod_ctx ctx{q, M};
            std::vector<mpz_class> z(z0.begin(), z0.end());
            std::vector<mpz_class> w(w0.begin(), w0.end());
            z.resize(n, 0);
            w.resize(n, 0);
            const long max_bits = 4096;
            while (mpz_sizeinbase(ctx.M.get_mpz_t(), 2) < static_cast<size_t>(max_bits)) {
                ctx.M *= ctx.M; // double the q-adic precision
                std::vector<mpz_class> acoord(n);
                for (unsigned i = 0; i < n; ++i) {
                    mpz_class den = beta[i].get_den() % ctx.M;
                    acoord[i] = beta[i].get_num() % ctx.M * ints::mod_inverse(den, ctx.M) % ctx.M;
                }
                // z <- z - (z^2 - a) * w ; w <- w * (2 - 2z*w)
                std::vector<mpz_class> z2 = zm_mul(z, z, ctx);
                std::vector<mpz_class> diff = zm_sub(z2, acoord, ctx);
                z = zm_sub(z, zm_mul(diff, w, ctx), ctx);
                std::vector<mpz_class> tzw = zm_mul(zm_scalar(z, 2, ctx), w, ctx);
                std::vector<mpz_class> two_poly(n, 0);
                two_poly[0] = 2;
                w = zm_mul(w, zm_sub(two_poly, tzw, ctx), ctx);

                // Attempt rational reconstruction of the candidate root.
                std::vector<mpq_class> cand(n);
                bool ok = true;
                for (unsigned i = 0; i < n && ok; ++i) {
                    auto rec = ints::rational_reconstruct(z[i], ctx.M);
                    if (!rec) ok = false;
                    else cand[i] = *rec;
                }
                if (!ok) continue;
                // Map back from the y-basis to the t-basis and verify.
                std::vector<element> tc(n);
                mpq_class cp = 1;
                for (unsigned i = 0; i < n; ++i) {
                    tc[i] = L->base()->from_rational(cand[i] * cp);
                    cp *= cden;
                }
                element zt = L->from_coords(std::move(tc));
                if (zt * zt == a) return zt;
            }
        }
    }
    return std::nullopt;
}

} // namespace

// ---------------------------------------------------------------------------
// printing

namespace {

bool needs_parens(const std::string& s) {
    if (s.find('+') != std::string::npos) return true;
    if (s.find(' ') != std::string::npos) return true;
    if (s.find('-', 1) != std::string::npos) return true;
    return false;
}

} // namespace

std::string poly_string(const std::vector<element>& coeffs, const std::string& var) {
    std::vector<std::pair<std::string, bool>> terms; // text, starts-negative
    for (size_t i = coeffs.size(); i-- > 0;) {
        if (!coeffs[i].valid() || coeffs[i].is_zero()) continue;
        std::string cs = to_string(coeffs[i]);
        bool neg = false;
        if (!cs.empty() && cs[0] == '-' && !needs_parens(cs)) {
            neg = true;
            cs = cs.substr(1);
        }
        std::string body;
        if (i == 0) {
            body = needs_parens(cs) ? "(" + cs + ")" : cs;
        } else {
            std::string xp = var + (i > 1 ? "^" + std::to_string(i) : "");
            if (cs == "1") body = xp;
            else body = (needs_parens(cs) ? "(" + cs + ")" : cs) + "*" + xp;
        }
        terms.emplace_back(body, neg);
    }
    if (terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) out = (terms[i].second ? "-" : "") + terms[i].first;
        else out += (terms[i].second ? " - " : " + ") + terms[i].first;
    }
    return out;
}

std::string to_string(const element& a) {
    if (!a.valid()) return "<invalid>";
    const field_ptr& k = a.domain();
    switch (k->kind()) {
    case field_kind::rationals: return a.rat().get_str();
    case field_kind::prime_field: return a.residue().get_str();
    case field_kind::rational_function_field: {
        const auto& f = a.frac();
        std::string num = fpp::to_string(f.num, k->var());
        if (fpp::is_one(f.den)) return num;
        return "(" + num + ")/(" + fpp::to_string(f.den, k->var()) + ")";
    }
    case field_kind::extension: return poly_string(a.coords(), k->var());
    }
    return "?";
}

} // namespace a1deg
