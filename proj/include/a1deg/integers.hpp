#ifndef A1DEG_INTEGERS_HPP
#define A1DEG_INTEGERS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace a1deg::ints {

bool is_prime(const mpz_class& n);

// Prime factorization of n > 0, primes ascending. Trial division backed by
// Brent's variant of Pollard rho for the large cofactors.
std::vector<std::pair<mpz_class, unsigned>> factor(const mpz_class& n);

// Signed squarefree kernel: n = s * square with s squarefree, sign(s) = sign(n).
mpz_class squarefree_part(const mpz_class& n);

// Legendre/Jacobi symbol (a|n) for odd n > 0.
int jacobi(const mpz_class& a, const mpz_class& n);

// Smallest positive quadratic nonresidue mod an odd prime p.
mpz_class least_nonresidue(const mpz_class& p);

// Square root of a mod an odd prime p (Tonelli-Shanks), if one exists.
std::optional<mpz_class> sqrt_mod_prime(const mpz_class& a, const mpz_class& p);

// Recover u/v from c mod M with |u|, v <= sqrt(M/2), gcd(v, M) = 1.
std::optional<mpq_class> rational_reconstruct(const mpz_class& c, const mpz_class& M);

mpz_class mod_inverse(const mpz_class& a, const mpz_class& m);
mpz_class pow_mod(const mpz_class& base, const mpz_class& exp, const mpz_class& m);

} // namespace a1deg::ints

#endif
