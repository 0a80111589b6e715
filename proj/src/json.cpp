#include "a1deg/io.hpp"

#include <json.hpp>

namespace a1deg {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json gw_json(const gw_class& c) {
    ordered_json j;
    j["field"] = c.domain()->spec_string();
    ordered_json diag = ordered_json::array();
    for (const auto& a : c.diag()) diag.push_back(to_string(a));
    j["diag"] = std::move(diag);
    j["rank"] = c.rank();
    j["disc"] = to_string(c.disc_class());
    if (c.domain()->kind() == field_kind::rationals) j["signature"] = c.signature();
    else j["signature"] = nullptr;
    if (c.domain()->kind() == field_kind::rationals) {
        ordered_json hasse;
        for (const auto& v : relevant_places(c, c)) hasse[to_string(v)] = hasse_invariant(c, v);
        j["hasse"] = std::move(hasse);
    } else {
        j["hasse"] = nullptr;
    }
    reduce_result r = hyperbolic_reduce(c);
    j["hyperbolic_count"] = r.hyperbolic_count;
    ordered_json residue = ordered_json::array();
    for (const auto& a : r.residue.diag()) residue.push_back(to_string(a));
    j["residue"] = std::move(residue);
    return j;
}

} // namespace

std::string gw_class_json(const gw_class& c) { return gw_json(c).dump(2); }

std::string lift_json(const lift_result& lr) {
    ordered_json j;
    j["kind"] = lr.kind == lift_kind::geometric ? "geometric" : "cohomological";
    j["field"] = lr.lifted.domain()->spec_string();
    j["lifted"] = to_string(lr.lifted);
    j["point"] = to_string(lr.point);
    j["d"] = lr.d;
    j["u_lifted"] = to_string(lr.u_lifted);
    if (lr.omega0_at_t) j["omega0_at_t"] = to_string(*lr.omega0_at_t);
    else j["omega0_at_t"] = nullptr;
    return j.dump(2);
}

std::string verify_report_json(const verify_report& r) {
    ordered_json j;
    j["lhs"] = gw_json(r.lhs);
    j["geometric"] = gw_json(r.geometric);
    j["cohomological"] = gw_json(r.cohomological);
    j["verdict_geometric"] = to_string(r.verdict_geometric);
    j["verdict_cohomological"] = to_string(r.verdict_cohomological);
    j["block_antidiagonal_check"] = r.block_antidiagonal_check;
    j["ranks"] = ordered_json{{"local", r.rank_local}, {"lift", r.rank_lift}, {"base_change", r.rank_base_change}};
    return j.dump(2);
}

} // namespace a1deg
