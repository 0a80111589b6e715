#ifndef A1DEG_ERRORS_HPP
#define A1DEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace a1deg {

// Every failure the engine can report. Parse/config kinds map to CLI exit
// code 2, mathematical kinds to exit code 1.
enum class errc {
    parse_error,
    characteristic_two,
    reducible_modulus,
    division_by_zero,
    irreducibility_violated,
    zero_argument,
    unsupported_field,
    field_mismatch,
    not_vanishing,
    zero_polynomial,
    not_separable_residue,
    not_monic,
    not_an_extension,
    not_symmetric,
    zero_leading,
    degenerate_form,
    not_a_place,
    not_reduced,
    zero_pair,
    inseparable_extension,
    zero_scale,
    not_isolated,
    unknown_symbol,
    internal,
};

const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

    // Parse and configuration problems, as opposed to mathematical ones.
    bool is_usage_error() const noexcept {
        return code_ == errc::parse_error || code_ == errc::not_a_place || code_ == errc::unknown_symbol;
    }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

} // namespace a1deg

#endif
