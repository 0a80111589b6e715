#ifndef A1DEG_FPPOLY_HPP
#define A1DEG_FPPOLY_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace a1deg::fpp {

// Dense polynomial over Z/p, coefficients canonical in [0, p). The zero
// polynomial is the empty vector. All functions take the (odd prime) modulus
// explicitly; callers never mix moduli.
using fp_poly = std::vector<mpz_class>;

fp_poly normalize(fp_poly a, const mpz_class& p);
inline bool is_zero(const fp_poly& a) { return a.empty(); }
inline int degree(const fp_poly& a) { return static_cast<int>(a.size()) - 1; }
bool is_one(const fp_poly& a);

fp_poly constant(const mpz_class& c, const mpz_class& p);
fp_poly monomial(const mpz_class& c, unsigned k, const mpz_class& p);

fp_poly add(const fp_poly& a, const fp_poly& b, const mpz_class& p);
fp_poly sub(const fp_poly& a, const fp_poly& b, const mpz_class& p);
fp_poly mul(const fp_poly& a, const fp_poly& b, const mpz_class& p);
fp_poly scalar_mul(const fp_poly& a, const mpz_class& c, const mpz_class& p);
std::pair<fp_poly, fp_poly> divrem(const fp_poly& a, const fp_poly& b, const mpz_class& p);
fp_poly mod(const fp_poly& a, const fp_poly& b, const mpz_class& p);

fp_poly monic(const fp_poly& a, const mpz_class& p);
fp_poly gcd(const fp_poly& a, const fp_poly& b, const mpz_class& p); // monic (or zero)
// g = gcd(a, b) monic with g = s*a + t*b.
struct xgcd_result {
    fp_poly g, s, t;
};
xgcd_result xgcd(const fp_poly& a, const fp_poly& b, const mpz_class& p);

fp_poly derivative(const fp_poly& a, const mpz_class& p);
mpz_class eval(const fp_poly& a, const mpz_class& x, const mpz_class& p);

fp_poly pow_mod(const fp_poly& base, const mpz_class& exp, const fp_poly& modulus, const mpz_class& p);

// Complete squarefree decomposition in characteristic p: returns pairwise
// coprime squarefree monic g_i with multiplicities e_i such that
// a = lead(a) * prod g_i^{e_i}. p-th power layers are expanded recursively.
std::vector<std::pair<fp_poly, unsigned>> squarefree_decompose(const fp_poly& a, const mpz_class& p);

// Rabin's test: exact irreducibility over F_p.
bool is_irreducible(const fp_poly& a, const mpz_class& p);

// Full factorization into monic irreducibles (exponents >= 1) plus the
// leading unit. Cantor-Zassenhaus with an input-derived deterministic seed.
struct factorization {
    mpz_class unit;
    std::vector<std::pair<fp_poly, unsigned>> factors;
};
factorization factor(const fp_poly& a, const mpz_class& p);

std::vector<mpz_class> roots_in_fp(const fp_poly& a, const mpz_class& p);

std::string to_string(const fp_poly& a, const std::string& var);

} // namespace a1deg::fpp

#endif
