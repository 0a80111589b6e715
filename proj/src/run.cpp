#include "a1deg/errors.hpp"
#include "a1deg/io.hpp"

#include <sstream>

namespace a1deg {

namespace {

std::string require_arg(const request& req, const std::string& name) {
    auto it = req.args.find(name);
    if (it == req.args.end()) fail(errc::parse_error, "missing required argument --" + name);
    return it->second;
}

std::string optional_arg(const request& req, const std::string& name, const std::string& fallback) {
    auto it = req.args.find(name);
    return it == req.args.end() ? fallback : it->second;
}

std::string gw_text(const gw_class& c) {
    std::ostringstream os;
    os << "class: " << c.to_text() << "\n";
    os << "rank: " << c.rank() << "\n";
    os << "disc: " << to_string(c.disc_class()) << "\n";
    return os.str();
}

closed_point point_from_args(const request& req, const field_ptr& k) {
    return make_closed_point(parse_poly(require_arg(req, "point"), k));
}

std::string lift_text(const lift_result& lr) {
    std::ostringstream os;
    os << "kind: " << (lr.kind == lift_kind::geometric ? "geometric" : "cohomological") << "\n";
    os << "lifted: " << to_string(lr.lifted) << "\n";
    os << "point: " << to_string(lr.point) << "\n";
    os << "d: " << lr.d << "\n";
    os << "u_lifted: " << to_string(lr.u_lifted) << "\n";
    if (lr.omega0_at_t) os << "omega0_at_t: " << to_string(*lr.omega0_at_t) << "\n";
    return os.str();
}

std::string verify_text(const verify_report& r) {
    std::ostringstream os;
    os << "lhs: " << r.lhs.to_text() << "\n";
    os << "geometric: " << r.geometric.to_text() << " [" << to_string(r.verdict_geometric) << "]\n";
    os << "cohomological: " << r.cohomological.to_text() << " [" << to_string(r.verdict_cohomological) << "]\n";
    os << "block_antidiagonal_check: " << (r.block_antidiagonal_check ? "true" : "false") << "\n";
    os << "ranks: local=" << r.rank_local << " lift=" << r.rank_lift << " base_change=" << r.rank_base_change;
    if (r.rank_base_change != r.rank_lift)
        os << "  (base change inflates the local rank: " << r.rank_base_change << " vs " << r.rank_lift << ")";
    os << "\n";
    return os.str();
}

} // namespace

run_result run(const request& req) {
    try {
        std::ostringstream out;
        if (req.command == "selftest") {
            selftest_report rep = selftest(req.seed.value_or(1), optional_arg(req, "size", "small"));
            return {rep.ok ? 0 : 1, rep.text};
        }
        field_ptr k = field_make(req.field_spec);
        if (req.command == "degree-global") {
            poly f = parse_poly(require_arg(req, "poly"), k);
            gw_class c = req.args.count("den") ? global_degree(f, parse_poly(req.args.at("den"), k))
                                               : global_degree(f);
            out << (req.json_output ? gw_class_json(c) + "\n" : gw_text(c));
        } else if (req.command == "degree-local") {
            poly f = parse_poly(require_arg(req, "poly"), k);
            closed_point p = point_from_args(req, k);
            gw_class c = local_degree(f, p);
            out << (req.json_output ? gw_class_json(c) + "\n" : gw_text(c));
        } else if (req.command == "lift") {
            poly f = parse_poly(require_arg(req, "poly"), k);
            closed_point p = point_from_args(req, k);
            std::string kind = optional_arg(req, "kind", "geometric");
            lift_result lr = kind == "cohomological" ? cohomological_lift(f, p) : geometric_lift(f, p);
            out << (req.json_output ? lift_json(lr) + "\n" : lift_text(lr));
        } else if (req.command == "transfer") {
            closed_point p = point_from_args(req, k);
            std::string kind = optional_arg(req, "kind", "geometric");
            std::vector<element> diag;
            std::string src = require_arg(req, "diag");
            size_t start = 0;
            while (start <= src.size()) {
                size_t comma = src.find(',', start);
                std::string piece = src.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                if (!piece.empty()) diag.push_back(parse_element(piece, p.residue_field));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            if (diag.empty()) fail(errc::parse_error, "--diag needs at least one entry");
            gw_class beta(p.residue_field, std::move(diag));
            gw_class c = kind == "cohomological" ? cohomological_transfer(beta, p)
                                                 : geometric_transfer(beta, p.residue_field);
            out << (req.json_output ? gw_class_json(c) + "\n" : gw_text(c));
        } else if (req.command == "trace-form" || req.command == "scharlau-form") {
            poly m = parse_poly(require_arg(req, "modulus"), k);
            closed_point p = make_closed_point(m);
            element a = parse_element(optional_arg(req, "scale", "1"), p.residue_field);
            gw_class c = req.command == "trace-form" ? scaled_trace_form(p, a) : scaled_scharlau_form(p, a);
            out << (req.json_output ? gw_class_json(c) + "\n" : gw_text(c));
        } else if (req.command == "verify") {
            poly f = parse_poly(require_arg(req, "poly"), k);
            closed_point p = point_from_args(req, k);
            verify_report r = verify_theorem_1_1(f, p);
            out << (req.json_output ? verify_report_json(r) + "\n" : verify_text(r));
        } else {
            fail(errc::parse_error, "unknown command '" + req.command + "'");
        }
        return {0, out.str()};
    } catch (const error& e) {
        return {e.is_usage_error() ? 2 : 1, std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace a1deg
