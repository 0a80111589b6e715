#include "a1deg/integers.hpp"

#include "a1deg/errors.hpp"

#include <algorithm>
#include <map>

namespace a1deg::ints {

namespace {

constexpr unsigned long kTrialBound = 100000;

mpz_class mul_mod(const mpz_class& a, const mpz_class& b, const mpz_class& n) {
    mpz_class r = a * b;
    r %= n;
    return r;
}

// Brent cycle detection; returns a nontrivial factor of composite odd n.
mpz_class pollard_brent(const mpz_class& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0x9e3779b97f4a7c15UL);
    while (true) {
        mpz_class y = rng.get_z_range(n - 3) + 2;
        mpz_class c = rng.get_z_range(n - 3) + 1;
        mpz_class g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (mpz_class i = 0; i < r; ++i) y = (mul_mod(y, y, n) + c) % n;
            mpz_class k = 0;
            const long m = 128;
            while (k < r && g == 1) {
                ys = y;
                for (long i = 0; i < m && k + i < r; ++i) {
                    y = (mul_mod(y, y, n) + c) % n;
                    mpz_class d = x - y;
                    q = mul_mod(q, abs(d), n);
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time.
            g = 1;
            while (g == 1) {
                ys = (mul_mod(ys, ys, n) + c) % n;
                mpz_class d = x - ys;
                g = gcd(abs(d), n);
            }
        }
        if (g != n) return g;
    }
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    // Perfect powers split cheaply and keep rho inputs small.
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
            mpz_class root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
                std::map<mpz_class, unsigned> sub;
                factor_into(root, sub);
                for (const auto& [prime, mult] : sub) out[prime] += mult * static_cast<unsigned>(e);
                return;
            }
        }
    }
    mpz_class d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

bool is_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::pair<mpz_class, unsigned>> factor(const mpz_class& n) {
    if (n <= 0) fail(errc::zero_argument, "factor requires a positive integer");
    std::map<mpz_class, unsigned> acc;
    mpz_class m = n;
    for (unsigned long p = 2; p <= kTrialBound && m > 1; p = (p == 2) ? 3 : p + 2) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                m /= static_cast<unsigned long>(p);
                ++e;
            }
            acc[mpz_class(p)] += e;
        }
        mpz_class bound = mpz_class(p) * mpz_class(p);
        if (bound > m) break;
    }
    if (m > 1) {
        mpz_class lim = mpz_class(kTrialBound) * kTrialBound;
        if (m <= lim || is_prime(m))
            acc[m]++;
        else
            factor_into(m, acc);
    }
    return {acc.begin(), acc.end()};
}

mpz_class squarefree_part(const mpz_class& n) {
    if (n == 0) fail(errc::zero_argument, "squarefree part of zero");
    mpz_class a = abs(n);
    mpz_class s = 1;
    for (const auto& [p, e] : factor(a))
        if (e % 2 == 1) s *= p;
    return n < 0 ? -s : s;
}

int jacobi(const mpz_class& a, const mpz_class& n) {
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

mpz_class least_nonresidue(const mpz_class& p) {
    for (mpz_class c = 2;; ++c)
        if (jacobi(c, p) == -1) return c;
}

mpz_class pow_mod(const mpz_class& base, const mpz_class& exp, const mpz_class& m) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class mod_inverse(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        fail(errc::division_by_zero, "element not invertible mod " + m.get_str());
    return r;
}

std::optional<mpz_class> sqrt_mod_prime(const mpz_class& a, const mpz_class& p) {
    mpz_class r = a % p;
    if (r < 0) r += p;
    if (r == 0) return mpz_class(0);
    if (jacobi(r, p) != 1) return std::nullopt;
    if (p % 4 == 3) return pow_mod(r, (p + 1) / 4, p);
    // Tonelli-Shanks. p - 1 = q * 2^s with q odd.
    mpz_class q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    mpz_class z = least_nonresidue(p);
    mpz_class m = s, c = pow_mod(z, q, p), t = pow_mod(r, q, p), x = pow_mod(r, (q + 1) / 2, p);
    while (t != 1) {
        mpz_class t2 = t;
        unsigned long i = 0;
        while (t2 != 1) {
            t2 = mul_mod(t2, t2, p);
            ++i;
        }
        mpz_class b = c;
        for (mpz_class j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        x = mul_mod(x, b, p);
    }
    return x;
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& c, const mpz_class& M) {
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class(M / 2).get_mpz_t());
    mpz_class r0 = M, r1 = ((c % M) + M) % M;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class quot = r0 / r1;
        mpz_class r2 = r0 - quot * r1;
        mpz_class t2 = t0 - quot * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    if (gcd(t1, M) != 1) return std::nullopt;
    mpq_class q(r1, t1);
    q.canonicalize();
    return q;
}

} // namespace a1deg::ints
