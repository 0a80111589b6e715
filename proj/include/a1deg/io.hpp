#ifndef A1DEG_IO_HPP
#define A1DEG_IO_HPP

#include "a1deg/fields.hpp"
#include "a1deg/forms.hpp"
#include "a1deg/poly.hpp"
#include "a1deg/transfer.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace a1deg {

// Polynomial grammar: terms c, v^k, c*v^k, cv^k, products with *,
// parenthesized factors, + and -. Coefficients are field-element literals;
// division requires a constant divisor. Whitespace is ignored.
poly parse_poly(const std::string& src, const field_ptr& k, const std::string& var = "x");
element parse_element(const std::string& src, const field_ptr& k);

std::string gw_class_json(const gw_class& c);
std::string verify_report_json(const verify_report& r);
std::string lift_json(const lift_result& lr);

struct request {
    std::string command; // degree-global, degree-local, lift, transfer,
                         // trace-form, scharlau-form, verify, selftest
    std::string field_spec;
    std::map<std::string, std::string> args;
    bool json_output = false;
    std::optional<uint64_t> seed;
};

struct run_result {
    int exit_code = 0; // 0 ok, 1 mathematical failure, 2 parse/config error
    std::string output;
};

run_result run(const request& req);

struct selftest_report {
    std::string text;
    bool ok = false;
    unsigned instances = 0;
};

// Deterministic randomized property suites across all modules. Identical
// (seed, size) inputs produce byte-identical reports.
selftest_report selftest(uint64_t seed, const std::string& size);

} // namespace a1deg

#endif
