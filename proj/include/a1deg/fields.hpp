#ifndef A1DEG_FIELDS_HPP
#define A1DEG_FIELDS_HPP

#include "a1deg/fppoly.hpp"

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace a1deg {

class field;
using field_ptr = std::shared_ptr<const field>;
class element;

namespace detail {

struct q_repr {
    mpq_class v;
    bool operator==(const q_repr&) const = default;
};
struct fp_repr {
    mpz_class v; // canonical residue in [0, p)
    bool operator==(const fp_repr&) const = default;
};
struct frac_repr {
    // Reduced fraction in F_p(t): den monic and coprime to num; zero is 0/1.
    fpp::fp_poly num, den;
    bool operator==(const frac_repr&) const = default;
};
struct ext_repr {
    // Coordinate vector over the base field, length exactly [L:k].
    std::vector<element> coords;
    bool operator==(const ext_repr&) const;
};

using repr = std::variant<q_repr, fp_repr, frac_repr, ext_repr>;

} // namespace detail

// Exact element of one of the supported fields. Immutable value type.
class element {
public:
    element() = default; // invalid placeholder, used only inside containers

    const field_ptr& domain() const { return f_; }
    bool valid() const { return f_ != nullptr; }
    bool is_zero() const;
    bool is_one() const;

    element operator-() const;
    element inverse() const;

    friend element operator+(const element& x, const element& y);
    friend element operator-(const element& x, const element& y);
    friend element operator*(const element& x, const element& y);
    friend element operator/(const element& x, const element& y);
    element& operator+=(const element& y) { return *this = *this + y; }
    element& operator-=(const element& y) { return *this = *this - y; }
    element& operator*=(const element& y) { return *this = *this * y; }
    element& operator/=(const element& y) { return *this = *this / y; }

    bool operator==(const element& y) const;
    bool operator!=(const element& y) const { return !(*this == y); }

    const mpq_class& rat() const;
    const mpz_class& residue() const;
    const detail::frac_repr& frac() const;
    const std::vector<element>& coords() const;

private:
    friend class field;
    element(field_ptr f, detail::repr r) : f_(std::move(f)), r_(std::move(r)) {}

    field_ptr f_;
    detail::repr r_;
};

enum class field_kind { rationals, prime_field, rational_function_field, extension };

// Descriptor of a supported field: Q, F_p, F_p(t), or one simple extension
// of any of those. Characteristic two is rejected at construction.
class field : public std::enable_shared_from_this<field> {
public:
    static field_ptr rationals();
    static field_ptr prime_field(const mpz_class& p);
    static field_ptr rational_function_field(const mpz_class& p, const std::string& var);
    // modulus_coeffs: dense over base, constant first, leading 1, degree >= 2.
    static field_ptr extension(const field_ptr& base, const std::vector<element>& modulus_coeffs,
                               const std::string& sym);

    field_kind kind() const { return kind_; }
    bool is_extension() const { return kind_ == field_kind::extension; }
    bool is_finite() const;

    const mpz_class& characteristic() const { return p_; } // 0 in characteristic zero
    unsigned degree_over_base() const;
    const field_ptr& base() const { return base_; }
    const std::vector<element>& modulus() const { return modulus_; }
    const std::string& var() const { return var_; } // ratfun variable or extension symbol
    std::string spec_string() const;

    element zero() const;
    element one() const;
    element from_integer(const mpz_class& n) const;
    element from_rational(const mpq_class& q) const;
    element generator() const;
    element make_fraction(fpp::fp_poly num, fpp::fp_poly den) const;
    element from_coords(std::vector<element> coords) const;
    element embed(const element& base_elem) const;

private:
    field() = default;

    field_kind kind_ = field_kind::rationals;
    mpz_class p_ = 0;
    std::string var_;
    field_ptr base_;
    std::vector<element> modulus_;
};

bool same_field(const field& a, const field& b);
bool same_field(const field_ptr& a, const field_ptr& b);

// Spec-facing operation names.
field_ptr field_make(const std::string& spec); // defined in parse.cpp
element el_add(const element& x, const element& y);
element el_sub(const element& x, const element& y);
element el_mul(const element& x, const element& y);
element el_div(const element& x, const element& y);
mpz_class field_char(const field_ptr& k);
unsigned degree_over_base(const field_ptr& k);

// Square-class machinery. is_square decides membership in k^x2 exactly for
// Q, F_p, F_p(t), finite extensions of F_p, and quadratic extensions of Q.
// For higher-degree number fields it combines a norm obstruction with an
// exact modular root search and raises UnsupportedField when inconclusive.
// Extensions of F_p(t) are unsupported.
bool is_square(const element& a);
element square_class_rep(const element& a);

// Square root in F_p or a finite extension of F_p; nullopt for nonresidues.
std::optional<element> finite_field_sqrt(const element& a);

// Field trace and norm of the k-linear multiplication map on an extension.
element field_trace(const element& a);
element field_norm(const element& a);

std::string to_string(const element& a);

// Re-parseable rendering of a dense coefficient vector in the variable var,
// highest degree first, with composite coefficients parenthesized.
std::string poly_string(const std::vector<element>& coeffs, const std::string& var);

} // namespace a1deg

#endif
