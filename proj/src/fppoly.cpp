#include "a1deg/fppoly.hpp"

#include "a1deg/errors.hpp"
#include "a1deg/integers.hpp"

#include <algorithm>
#include <random>

namespace a1deg::fpp {

namespace {

mpz_class reduce(const mpz_class& c, const mpz_class& p) {
    mpz_class r = c % p;
    if (r < 0) r += p;
    return r;
}

} // namespace

fp_poly normalize(fp_poly a, const mpz_class& p) {
    for (auto& c : a) c = reduce(c, p);
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

bool is_one(const fp_poly& a) { return a.size() == 1 && a[0] == 1; }

fp_poly constant(const mpz_class& c, const mpz_class& p) { return normalize({c}, p); }

fp_poly monomial(const mpz_class& c, unsigned k, const mpz_class& p) {
    fp_poly a(k + 1, 0);
    a[k] = c;
    return normalize(std::move(a), p);
}

fp_poly add(const fp_poly& a, const fp_poly& b, const mpz_class& p) {
    fp_poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return normalize(std::move(r), p);
}

fp_poly sub(const fp_poly& a, const fp_poly& b, const mpz_class& p) {
    fp_poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return normalize(std::move(r), p);
}

fp_poly mul(const fp_poly& a, const fp_poly& b, const mpz_class& p) {
    if (a.empty() || b.empty()) return {};
    fp_poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return normalize(std::move(r), p);
}

fp_poly scalar_mul(const fp_poly& a, const mpz_class& c, const mpz_class& p) {
    fp_poly r = a;
    for (auto& x : r) x *= c;
    return normalize(std::move(r), p);
}

std::pair<fp_poly, fp_poly> divrem(const fp_poly& a, const fp_poly& b, const mpz_class& p) {
    if (b.empty()) fail(errc::division_by_zero, "polynomial division by zero");
    fp_poly rem = a;
    if (a.size() < b.size()) return {{}, rem};
    fp_poly quot(a.size() - b.size() + 1, 0);
    mpz_class lead_inv = ints::mod_inverse(b.back(), p);
    for (size_t i = a.size(); i-- >= b.size();) {
        if (i >= rem.size() || rem[i] == 0) {
            if (i == 0) break;
            continue;
        }
        mpz_class q = reduce(rem[i] * lead_inv, p);
        quot[i - b.size() + 1] = q;
        for (size_t j = 0; j < b.size(); ++j) rem[i - b.size() + 1 + j] = reduce(rem[i - b.size() + 1 + j] - q * b[j], p);
        if (i == 0) break;
    }
    return {normalize(std::move(quot), p), normalize(std::move(rem), p)};
}

fp_poly mod(const fp_poly& a, const fp_poly& b, const mpz_class& p) { return divrem(a, b, p).second; }

fp_poly monic(const fp_poly& a, const mpz_class& p) {
    if (a.empty()) return a;
    return scalar_mul(a, ints::mod_inverse(a.back(), p), p);
}

fp_poly gcd(const fp_poly& a, const fp_poly& b, const mpz_class& p) {
    fp_poly x = normalize(a, p), y = normalize(b, p);
    while (!y.empty()) {
        fp_poly r = mod(x, y, p);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x, p);
}

xgcd_result xgcd(const fp_poly& a, const fp_poly& b, const mpz_class& p) {
    fp_poly r0 = normalize(a, p), r1 = normalize(b, p);
    fp_poly s0 = constant(1, p), s1 = {};
    fp_poly t0 = {}, t1 = constant(1, p);
    while (!r1.empty()) {
        auto [q, r2] = divrem(r0, r1, p);
        fp_poly s2 = sub(s0, mul(q, s1, p), p);
        fp_poly t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.empty() && r0.back() != 1) {
        mpz_class inv = ints::mod_inverse(r0.back(), p);
        r0 = scalar_mul(r0, inv, p);
        s0 = scalar_mul(s0, inv, p);
        t0 = scalar_mul(t0, inv, p);
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

fp_poly derivative(const fp_poly& a, const mpz_class& p) {
    if (a.size() <= 1) return {};
    fp_poly r(a.size() - 1, 0);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * mpz_class(static_cast<unsigned long>(i));
    return normalize(std::move(r), p);
}

mpz_class eval(const fp_poly& a, const mpz_class& x, const mpz_class& p) {
    mpz_class r = 0;
    for (size_t i = a.size(); i-- > 0;) r = reduce(r * x + a[i], p);
    return r;
}

fp_poly pow_mod(const fp_poly& base, const mpz_class& exp, const fp_poly& modulus, const mpz_class& p) {
    fp_poly result = constant(1, p);
    fp_poly b = mod(base, modulus, p);
    mpz_class e = exp;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = mod(mul(result, b, p), modulus, p);
        b = mod(mul(b, b, p), modulus, p);
        e >>= 1;
    }
    return result;
}

std::vector<std::pair<fp_poly, unsigned>> squarefree_decompose(const fp_poly& a, const mpz_class& p) {
    std::vector<std::pair<fp_poly, unsigned>> out;
    fp_poly f = monic(a, p);
    if (degree(f) <= 0) return out;
    fp_poly df = derivative(f, p);
    if (is_zero(df)) {
        // f = g(t^p): take p-th "root" by exponent division and recurse.
        unsigned long pl = p.get_ui();
        fp_poly g((f.size() - 1) / pl + 1, 0);
        for (size_t i = 0; i < f.size(); i += pl) g[i / pl] = f[i];
        for (auto& [factor, mult] : squarefree_decompose(g, p)) out.emplace_back(factor, mult * pl);
        return out;
    }
    // Yun's algorithm on the part with derivative information.
    fp_poly c = gcd(f, df, p);
    fp_poly w = divrem(f, c, p).first;
    unsigned i = 1;
    while (degree(w) > 0) {
        fp_poly y = gcd(w, c, p);
        fp_poly z = divrem(w, y, p).first;
        if (degree(z) > 0) out.emplace_back(z, i);
        c = divrem(c, y, p).first;
        w = std::move(y);
        ++i;
    }
    // Whatever remains of c is a p-th power, coprime to the Yun output.
    if (degree(c) > 0)
        for (auto& [factor, mult] : squarefree_decompose(c, p)) out.emplace_back(factor, mult);
    return out;
}

bool is_irreducible(const fp_poly& a, const mpz_class& p) {
    fp_poly f = monic(a, p);
    int n = degree(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    // Rabin: x^{p^n} = x mod f, and gcd(x^{p^{n/q}} - x, f) = 1 for prime q | n.
    fp_poly x = monomial(1, 1, p);
    std::vector<fp_poly> frob(n + 1); // frob[j] = x^{p^j} mod f
    frob[0] = mod(x, f, p);
    for (int j = 1; j <= n; ++j) frob[j] = pow_mod(frob[j - 1], p, f, p);
    if (frob[n] != mod(x, f, p)) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q != 0) continue;
        bool q_prime = true;
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) q_prime = false;
        if (!q_prime) continue;
        fp_poly diff = sub(frob[n / q], mod(x, f, p), p);
        if (!is_one(gcd(diff, f, p))) return false;
    }
    return true;
}

namespace {

// Equal-degree splitting of a squarefree product of degree-d irreducibles.
void equal_degree_split(const fp_poly& f, int d, const mpz_class& p, std::mt19937_64& rng,
                        std::vector<fp_poly>& out) {
    int n = degree(f);
    if (n == d) {
        out.push_back(monic(f, p));
        return;
    }
    mpz_class q;
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    mpz_class e = (q - 1) / 2;
    while (true) {
        fp_poly r(n, 0);
        for (auto& c : r) c = mpz_class(static_cast<unsigned long>(rng() % 1000000007UL)) % p;
        r = normalize(std::move(r), p);
        if (degree(r) < 1) continue;
        fp_poly g = gcd(r, f, p);
        if (degree(g) > 0 && degree(g) < n) {
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(divrem(f, g, p).first, d, p, rng, out);
            return;
        }
        fp_poly h = sub(pow_mod(r, e, f, p), constant(1, p), p);
        g = gcd(h, f, p);
        if (degree(g) > 0 && degree(g) < n) {
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(divrem(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

uint64_t poly_seed(const fp_poly& a, const mpz_class& p) {
    uint64_t h = 0x243f6a8885a308d3ULL ^ static_cast<uint64_t>(p.get_ui());
    for (const auto& c : a) h = h * 0x100000001b3ULL + static_cast<uint64_t>(c.get_ui() + 0x9e37UL);
    return h;
}

} // namespace

factorization factor(const fp_poly& a, const mpz_class& p) {
    fp_poly f = normalize(a, p);
    if (is_zero(f)) fail(errc::zero_polynomial, "cannot factor the zero polynomial");
    factorization out;
    out.unit = f.back();
    if (degree(f) == 0) return out;
    std::mt19937_64 rng(poly_seed(f, p));
    for (const auto& [sf, mult] : squarefree_decompose(f, p)) {
        // Distinct-degree on each squarefree part, then equal-degree split.
        fp_poly g = sf;
        fp_poly x = monomial(1, 1, p);
        fp_poly h = mod(x, g, p);
        int d = 0;
        while (degree(g) > 0 && degree(g) > 2 * d) {
            ++d;
            h = pow_mod(h, p, g, p);
            fp_poly gd = gcd(sub(h, mod(x, g, p), p), g, p);
            if (degree(gd) > 0) {
                std::vector<fp_poly> pieces;
                equal_degree_split(gd, d, p, rng, pieces);
                for (auto& piece : pieces) out.factors.emplace_back(std::move(piece), mult);
                g = divrem(g, gd, p).first;
                h = mod(h, g, p);
            }
        }
        if (degree(g) > 0) out.factors.emplace_back(monic(g, p), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.first.size() != rhs.first.size()) return lhs.first.size() < rhs.first.size();
        for (size_t i = lhs.first.size(); i-- > 0;)
            if (lhs.first[i] != rhs.first[i]) return lhs.first[i] < rhs.first[i];
        return lhs.second < rhs.second;
    });
    return out;
}

std::vector<mpz_class> roots_in_fp(const fp_poly& a, const mpz_class& p) {
    std::vector<mpz_class> roots;
    if (is_zero(a)) fail(errc::zero_polynomial, "roots of the zero polynomial");
    // gcd with x^p - x isolates the linear factors.
    fp_poly x = monomial(1, 1, p);
    fp_poly f = monic(a, p);
    if (degree(f) == 0) return roots;
    fp_poly xp = pow_mod(x, p, f, p);
    fp_poly lin = gcd(sub(xp, mod(x, f, p), p), f, p);
    if (degree(lin) == 0) return roots;
    for (const auto& [factor, mult] : factor(lin, p).factors)
        if (degree(factor) == 1) roots.push_back(reduce(-factor[0], p));
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string to_string(const fp_poly& a, const std::string& var) {
    if (a.empty()) return "0";
    std::string s;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += a[i].get_str();
        } else {
            if (a[i] != 1) s += a[i].get_str() + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace a1deg::fpp
