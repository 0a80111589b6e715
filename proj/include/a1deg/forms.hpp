#ifndef A1DEG_FORMS_HPP
#define A1DEG_FORMS_HPP

#include "a1deg/fields.hpp"
#include "a1deg/matrix.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace a1deg {

// Structure tags carried by symmetric forms whose Gram matrices have known
// shape. Tags are validated entry-by-entry against the Gram matrix.
struct upper_hankel_tag {
    std::vector<element> s; // s_1..s_d, constant antidiagonals, s_d != 0
};
struct block_hankel_tag {
    unsigned block_size = 0;     // n
    std::vector<matrix> blocks;  // A_1..A_d, each n x n
};

class sym_form {
public:
    explicit sym_form(matrix gram);
    sym_form(matrix gram, upper_hankel_tag tag);
    sym_form(matrix gram, block_hankel_tag tag);

    static sym_form from_upper_hankel(const field_ptr& k, std::vector<element> s);
    static sym_form from_block_hankel(std::vector<matrix> blocks);
    static sym_form diagonal(const field_ptr& k, const std::vector<element>& entries);

    const matrix& gram() const { return gram_; }
    const field_ptr& domain() const { return gram_.domain(); }
    size_t rank_bound() const { return gram_.rows(); }

    const upper_hankel_tag* upper_hankel() const { return std::get_if<upper_hankel_tag>(&tag_); }
    const block_hankel_tag* block_hankel() const { return std::get_if<block_hankel_tag>(&tag_); }

    // Entrywise scaling by a nonzero constant (structure tags are dropped,
    // except upper-Hankel which scales cleanly).
    sym_form scaled(const element& c) const;

private:
    matrix gram_;
    std::variant<std::monostate, upper_hankel_tag, block_hankel_tag> tag_;
};

// Diagonal representation <a_1,...,a_n> of a nondegenerate symmetric bilinear
// form class in GW(k). Entries are nonzero; rank = number of entries.
class gw_class {
public:
    gw_class(field_ptr k, std::vector<element> diag);

    static gw_class hyperbolic(const field_ptr& k, unsigned copies);
    static gw_class rank_one(const element& a);

    const field_ptr& domain() const { return k_; }
    const std::vector<element>& diag() const { return diag_; }
    unsigned rank() const { return static_cast<unsigned>(diag_.size()); }

    element disc_product() const;          // prod of diagonal entries (1 for rank 0)
    element disc_class() const;            // square_class_rep of the product
    int signature() const;                 // rationals only
    gw_class direct_sum(const gw_class& other) const;
    gw_class scaled(const element& c) const; // <c> * this

    std::string to_text() const; // "aH + <c_1,...,c_m>" via hyperbolic reduction

private:
    field_ptr k_;
    std::vector<element> diag_;
};

struct reduce_result {
    unsigned hyperbolic_count = 0;
    gw_class residue;
};
// Greedy removal of <a>+<-a> pairs, detected by square tests on -a_i*a_j.
// Entry pairs whose square test is unsupported are left alone.
reduce_result hyperbolic_reduce(const gw_class& c);

struct diag_result {
    gw_class cls;
    matrix basis;       // P with P^T G P diagonal
    size_t radical_dim; // zero diagonal entries dropped from cls
};
// Symmetric congruence diagonalization (char != 2). Zero-diagonal blocks are
// split off as explicit hyperbolic pairs <2c, -2c>.
diag_result diagonalize(const sym_form& f);

gw_class upper_hankel_class(const field_ptr& k, const std::vector<element>& s);

// GW class of a symmetric block matrix that vanishes below the main block
// antidiagonal, via the explicit paired basis of rows and their tails. The
// blocks need not be Hankel. d = number of blocks per side, n = block size.
gw_class block_hankel_diagonalize(const matrix& gram, unsigned n, unsigned d);
gw_class block_hankel_diagonalize(const sym_form& f);

// Places of Q: the archimedean place or a (finite) prime.
struct qplace {
    bool infinite = false;
    mpz_class p;
};
qplace qplace_infinity();
qplace qplace_prime(const mpz_class& p); // validates primality
std::string to_string(const qplace& v);

int hilbert_symbol(const mpq_class& a, const mpq_class& b, const qplace& v);
int hasse_invariant(const gw_class& c, const qplace& v);
// infinity, 2, and every odd prime dividing a square-class representative of
// a diagonal entry of either class.
std::vector<qplace> relevant_places(const gw_class& a, const gw_class& b);

// Places of the global function field F_p(t): monic irreducibles and the
// degree valuation at infinity. Symbols follow the odd-residue-characteristic
// local formula with the quadratic character of the residue field.
struct fpt_place {
    bool infinite = false;
    fpp::fp_poly pi; // monic irreducible
};
int fpt_hilbert_symbol(const element& a, const element& b, const fpt_place& v);
std::vector<fpt_place> fpt_places_for_pair(const element& a, const element& b);
std::string to_string(const fpt_place& v, const std::string& var);

enum class gw_verdict { equal, not_equal, consistent_undecided };
const char* to_string(gw_verdict v);

// Decides equality in GW(k). Complete over Q (Hasse-Minkowski), finite
// fields (rank + disc), and F_p(t) (rank, disc, and local symbols at all
// relevant places of the global function field). Over extension fields the
// procedure is sound but may return consistent_undecided.
gw_verdict gw_equal(const gw_class& x, const gw_class& y);

} // namespace a1deg

#endif
