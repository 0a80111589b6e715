#include "a1deg/vecpoly.hpp"

#include "a1deg/errors.hpp"

#include <algorithm>

namespace a1deg::vp {

evec normalize(evec a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

int degree(const evec& a) { return static_cast<int>(a.size()) - 1; }

bool is_zero(const evec& a) { return a.empty(); }

evec add(const evec& a, const evec& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    evec r = a.size() >= b.size() ? a : b;
    const evec& small = a.size() >= b.size() ? b : a;
    for (size_t i = 0; i < small.size(); ++i) r[i] += small[i];
    return normalize(std::move(r));
}

evec negate(const evec& a) {
    evec r = a;
    for (auto& c : r) c = -c;
    return r;
}

evec sub(const evec& a, const evec& b) { return add(a, negate(b)); }

evec mul(const evec& a, const evec& b) {
    if (a.empty() || b.empty()) return {};
    evec r(a.size() + b.size() - 1, a[0].domain()->zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return normalize(std::move(r));
}

evec scalar_mul(const evec& a, const element& c) {
    if (c.is_zero()) return {};
    evec r = a;
    for (auto& x : r) x *= c;
    return r;
}

std::pair<evec, evec> divrem(const evec& a, const evec& b) {
    if (b.empty()) fail(errc::division_by_zero, "polynomial division by zero");
    evec rem = a;
    if (a.size() < b.size()) return {{}, std::move(rem)};
    const field_ptr& k = b.back().domain();
    evec quot(a.size() - b.size() + 1, k->zero());
    element lead_inv = b.back().inverse();
    for (size_t i = a.size(); i-- >= b.size();) {
        if (!rem[i].is_zero()) {
            element q = rem[i] * lead_inv;
            quot[i - b.size() + 1] = q;
            for (size_t j = 0; j < b.size(); ++j) rem[i - b.size() + 1 + j] -= q * b[j];
        }
        if (i == 0) break;
    }
    return {normalize(std::move(quot)), normalize(std::move(rem))};
}

evec monic(const evec& a) {
    if (a.empty() || a.back().is_one()) return a;
    return scalar_mul(a, a.back().inverse());
}

evec gcd(const evec& a, const evec& b) {
    evec x = normalize(a), y = normalize(b);
    while (!y.empty()) {
        evec r = divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

xgcd_result xgcd(const evec& a, const evec& b) {
    if (a.empty() && b.empty()) return {{}, {}, {}};
    const field_ptr& k = (a.empty() ? b : a).back().domain();
    evec r0 = normalize(a), r1 = normalize(b);
    evec s0 = {k->one()}, s1 = {};
    evec t0 = {}, t1 = {k->one()};
    while (!r1.empty()) {
        auto [q, r2] = divrem(r0, r1);
        evec s2 = sub(s0, mul(q, s1));
        evec t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.empty() && !r0.back().is_one()) {
        element inv = r0.back().inverse();
        r0 = scalar_mul(r0, inv);
        s0 = scalar_mul(s0, inv);
        t0 = scalar_mul(t0, inv);
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

evec derivative(const evec& a, const field_ptr& k) {
    if (a.size() <= 1) return {};
    evec r(a.size() - 1, k->zero());
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * k->from_integer(static_cast<unsigned long>(i));
    return normalize(std::move(r));
}

element eval(const evec& a, const element& x, const field_ptr& k) {
    element r = k->zero();
    for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

evec pow(const evec& a, unsigned e, const field_ptr& k) {
    evec r = {k->one()};
    evec b = a;
    while (e > 0) {
        if (e & 1u) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

} // namespace a1deg::vp
