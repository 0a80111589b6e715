#ifndef A1DEG_VECPOLY_HPP
#define A1DEG_VECPOLY_HPP

#include "a1deg/fields.hpp"

#include <utility>
#include <vector>

namespace a1deg::vp {

// Dense coefficient-vector kernels shared by extension-field arithmetic and
// the public polynomial type. Constant term first, no trailing zeros.
using evec = std::vector<element>;

evec normalize(evec a);
int degree(const evec& a); // -1 for the zero polynomial
bool is_zero(const evec& a);

evec add(const evec& a, const evec& b);
evec sub(const evec& a, const evec& b);
evec mul(const evec& a, const evec& b);
evec scalar_mul(const evec& a, const element& c);
evec negate(const evec& a);
std::pair<evec, evec> divrem(const evec& a, const evec& b);
evec gcd(const evec& a, const evec& b); // monic (or zero)

struct xgcd_result {
    evec g, s, t; // g = s*a + t*b, g monic or zero
};
xgcd_result xgcd(const evec& a, const evec& b);

evec derivative(const evec& a, const field_ptr& k);
element eval(const evec& a, const element& x, const field_ptr& k);
evec monic(const evec& a);
evec pow(const evec& a, unsigned e, const field_ptr& k);

} // namespace a1deg::vp

#endif
