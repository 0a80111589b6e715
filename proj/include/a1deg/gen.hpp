#ifndef A1DEG_GEN_HPP
#define A1DEG_GEN_HPP

#include "a1deg/fields.hpp"
#include "a1deg/matrix.hpp"
#include "a1deg/poly.hpp"

#include <cstdint>
#include <random>

namespace a1deg::gen {

// Deterministic source for the randomized suites. All draws go through
// next() so reports are reproducible for a fixed seed.
struct rng {
    std::mt19937_64 eng;
    explicit rng(uint64_t seed) : eng(seed) {}

    uint64_t next(uint64_t bound) { return bound == 0 ? 0 : eng() % bound; }
    long next_int(long lo, long hi) { return lo + static_cast<long>(next(static_cast<uint64_t>(hi - lo + 1))); }
    rng fork() { return rng(eng()); }
};

element random_element(rng& r, const field_ptr& k, bool nonzero = false);
poly random_poly(rng& r, const field_ptr& k, int maxdeg, bool nonzero = false);
poly random_monic(rng& r, const field_ptr& k, int deg);

// Monic irreducible of the exact degree. Over F_p the certificate is exact;
// over Q a reduction mod a small prime certifies irreducibility; over
// F_p(t) only degrees covered by the root-search policy are produced.
poly random_irreducible_monic(rng& r, const field_ptr& k, int deg);

matrix random_symmetric(rng& r, const field_ptr& k, size_t n);

} // namespace a1deg::gen

#endif
