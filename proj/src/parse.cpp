#include "a1deg/errors.hpp"
#include "a1deg/io.hpp"

#include <cctype>

namespace a1deg {

namespace {

struct cursor {
    const std::string& src;
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(errc::parse_error, std::string("expected '") + c + "' at position " + std::to_string(pos) + " in \"" + src + "\"");
    }
    [[noreturn]] void error(const std::string& what) {
        fail(errc::parse_error, what + " at position " + std::to_string(pos) + " in \"" + src + "\"");
    }

    mpz_class integer() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) error("expected an integer");
        return mpz_class(src.substr(start, pos - start));
    }
    std::string identifier() {
        skip_ws();
        size_t start = pos;
        if (pos < src.size() &&
            (std::isalpha(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        if (start == pos) error("expected an identifier");
        return src.substr(start, pos - start);
    }
};

class poly_parser {
public:
    poly_parser(cursor& c, field_ptr k, std::string var) : c_(c), k_(std::move(k)), var_(std::move(var)) {}

    poly parse() {
        poly p = expr();
        if (!c_.done()) c_.error("unexpected trailing input");
        return p;
    }

private:
    cursor& c_;
    field_ptr k_;
    std::string var_;

    poly expr() {
        poly acc = term();
        while (true) {
            if (c_.accept('+')) acc = acc + term();
            else if (c_.accept('-')) acc = acc - term();
            else break;
        }
        return acc;
    }

    poly term() {
        if (c_.accept('-')) return -term();
        return product();
    }

    bool starts_primary() {
        char c = c_.peek();
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    poly product() {
        poly acc = power();
        while (true) {
            if (c_.accept('*')) acc = acc * power();
            else if (c_.peek() == '/') {
                ++c_.pos;
                poly divisor = power();
                if (divisor.degree() > 0) c_.error("division by a non-constant polynomial");
                if (divisor.is_zero()) fail(errc::division_by_zero, "division by zero in \"" + c_.src + "\"");
                acc = acc * divisor.coeff(0).inverse();
            } else if (starts_primary()) {
                acc = acc * power(); // implicit multiplication, e.g. 3x^2
            } else break;
        }
        return acc;
    }

    poly power() {
        poly base = primary();
        if (c_.accept('^')) {
            mpz_class e = c_.integer();
            if (e < 0 || e > 4096) c_.error("unsupported exponent");
            return base.pow(e.get_ui());
        }
        return base;
    }

    poly primary() {
        char c = c_.peek();
        if (c == '(') {
            c_.expect('(');
            poly inner = expr();
            c_.expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return poly::from_integer(k_, c_.integer());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t at = c_.pos;
            std::string name = c_.identifier();
            if (name == var_) return poly::x(k_);
            if (k_->kind() == field_kind::rational_function_field && name == k_->var())
                return poly::constant(k_, k_->generator());
            if (k_->is_extension()) {
                if (name == k_->var()) return poly::constant(k_, k_->generator());
                if (k_->base()->kind() == field_kind::rational_function_field && name == k_->base()->var())
                    return poly::constant(k_, k_->embed(k_->base()->generator()));
            }
            fail(errc::unknown_symbol,
                 "unknown symbol '" + name + "' at position " + std::to_string(at) + " in \"" + c_.src + "\"");
        }
        c_.error("expected a term");
    }
};

} // namespace

poly parse_poly(const std::string& src, const field_ptr& k, const std::string& var) {
    cursor c{src};
    if (c.done()) fail(errc::parse_error, "empty polynomial");
    return poly_parser(c, k, var).parse();
}

element parse_element(const std::string& src, const field_ptr& k) {
    poly p = parse_poly(src, k);
    if (p.degree() > 0) fail(errc::parse_error, "expected a field element, got a polynomial: \"" + src + "\"");
    return p.is_zero() ? k->zero() : p.coeff(0);
}

// Field-spec grammar: Q | F<p> | F<p>(<var>) | <base>[<sym>]/(<monic poly>).
field_ptr field_make(const std::string& spec) {
    size_t bracket = spec.find('[');
    if (bracket != std::string::npos) {
        field_ptr base = field_make(spec.substr(0, bracket));
        cursor c{spec};
        c.pos = bracket;
        c.expect('[');
        std::string sym = c.identifier();
        c.expect(']');
        c.expect('/');
        c.expect('(');
        size_t close = spec.rfind(')');
        if (close == std::string::npos || close < c.pos) c.error("missing ')' after modulus");
        std::string mod_src = spec.substr(c.pos, close - c.pos);
        if (spec.find_first_not_of(" \t", close + 1) != std::string::npos) c.error("trailing input after modulus");
        poly modulus = parse_poly(mod_src, base, sym);
        return field::extension(base, modulus.coeffs(), sym);
    }
    cursor c{spec};
    if (c.accept('Q')) {
        if (!c.done()) c.error("trailing input after Q");
        return field::rationals();
    }
    if (c.accept('F')) {
        mpz_class p = c.integer();
        if (c.accept('(')) {
            std::string var = c.identifier();
            c.expect(')');
            if (!c.done()) c.error("trailing input after function field");
            return field::rational_function_field(p, var);
        }
        if (!c.done()) c.error("trailing input after prime field");
        return field::prime_field(p);
    }
    fail(errc::parse_error, "unrecognized field spec \"" + spec + "\"");
}

} // namespace a1deg
