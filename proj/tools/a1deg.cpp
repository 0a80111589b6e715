#include "a1deg/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

struct common_opts {
    std::string field = "Q";
    std::string output = "text";
    std::string seed_str;
};

void add_common(CLI::App* cmd, common_opts& opts, bool with_field = true) {
    if (with_field) cmd->add_option("--field", opts.field, "field spec: Q | F<p> | F<p>(<var>) | <base>[<sym>]/(<poly>)");
    cmd->add_option("--output", opts.output, "output format: text | json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--seed", opts.seed_str, "seed for randomized suites (overridden by A1DEG_SEED)");
}

a1deg::request build(const std::string& command, const common_opts& opts,
                     const std::map<std::string, std::string>& args) {
    a1deg::request req;
    req.command = command;
    req.field_spec = opts.field;
    req.args = args;
    req.json_output = opts.output == "json";
    const char* env_seed = std::getenv("A1DEG_SEED");
    std::string seed_src = env_seed ? std::string(env_seed) : opts.seed_str;
    if (!seed_src.empty()) req.seed = std::stoull(seed_src);
    return req;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Grothendieck-Witt degree computations for univariate maps"};
    app.require_subcommand(1);

    common_opts opts;
    std::string poly_arg, den_arg, point_arg, kind_arg = "geometric", modulus_arg, scale_arg = "1", diag_arg;
    std::string size_arg = "small";

    auto* dg = app.add_subcommand("degree-global", "global degree of a polynomial or rational map");
    dg->add_option("--poly", poly_arg, "numerator polynomial in x")->required();
    dg->add_option("--den", den_arg, "denominator polynomial (optional)");
    add_common(dg, opts);

    auto* dl = app.add_subcommand("degree-local", "local degree at a closed point");
    dl->add_option("--poly", poly_arg, "polynomial in x")->required();
    dl->add_option("--point", point_arg, "monic irreducible polynomial defining the point")->required();
    add_common(dl, opts);

    auto* lf = app.add_subcommand("lift", "geometric or cohomological lift at a closed point");
    lf->add_option("--poly", poly_arg)->required();
    lf->add_option("--point", point_arg)->required();
    lf->add_option("--kind", kind_arg, "geometric | cohomological")->check(CLI::IsMember({"geometric", "cohomological"}));
    add_common(lf, opts);

    auto* tr = app.add_subcommand("transfer", "transfer a diagonal form from the residue field");
    tr->add_option("--point", point_arg)->required();
    tr->add_option("--diag", diag_arg, "comma-separated diagonal entries over the residue field")->required();
    tr->add_option("--kind", kind_arg, "geometric | cohomological")->check(CLI::IsMember({"geometric", "cohomological"}));
    add_common(tr, opts);

    auto* tf = app.add_subcommand("trace-form", "scaled trace form as a local degree");
    tf->add_option("--modulus", modulus_arg, "monic irreducible minimal polynomial")->required();
    tf->add_option("--scale", scale_arg, "scale in the extension field");
    add_common(tf, opts);

    auto* sf = app.add_subcommand("scharlau-form", "scaled Scharlau form as a local degree");
    sf->add_option("--modulus", modulus_arg)->required();
    sf->add_option("--scale", scale_arg);
    add_common(sf, opts);

    auto* vf = app.add_subcommand("verify", "check the local degree against both transferred lifts");
    vf->add_option("--poly", poly_arg)->required();
    vf->add_option("--point", point_arg)->required();
    add_common(vf, opts);

    auto* st = app.add_subcommand("selftest", "run the randomized property suites");
    st->add_option("--size", size_arg, "small | medium")->check(CLI::IsMember({"small", "medium"}));
    add_common(st, opts, false);

    CLI11_PARSE(app, argc, argv);

    std::map<std::string, std::string> args;
    a1deg::request req;
    if (dg->parsed()) {
        args["poly"] = poly_arg;
        if (!den_arg.empty()) args["den"] = den_arg;
        req = build("degree-global", opts, args);
    } else if (dl->parsed()) {
        args["poly"] = poly_arg;
        args["point"] = point_arg;
        req = build("degree-local", opts, args);
    } else if (lf->parsed()) {
        args["poly"] = poly_arg;
        args["point"] = point_arg;
        args["kind"] = kind_arg;
        req = build("lift", opts, args);
    } else if (tr->parsed()) {
        args["point"] = point_arg;
        args["diag"] = diag_arg;
        args["kind"] = kind_arg;
        req = build("transfer", opts, args);
    } else if (tf->parsed()) {
        args["modulus"] = modulus_arg;
        args["scale"] = scale_arg;
        req = build("trace-form", opts, args);
    } else if (sf->parsed()) {
        args["modulus"] = modulus_arg;
        args["scale"] = scale_arg;
        req = build("scharlau-form", opts, args);
    } else if (vf->parsed()) {
        args["poly"] = poly_arg;
        args["point"] = point_arg;
        req = build("verify", opts, args);
    } else if (st->parsed()) {
        args["size"] = size_arg;
        req = build("selftest", opts, args);
        if (!req.seed) req.seed = 1;
    }

    a1deg::run_result res = a1deg::run(req);
    std::cout << res.output;
    return res.exit_code;
}
