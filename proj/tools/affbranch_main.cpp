#include "affbranch/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"branching of level-1 orthogonal affine modules under conformal "
                 "subalgebras from symmetric pairs"};
    app.require_subcommand(1);

    affbranch::cli::Request req;
    std::string sigma_str, depth_str = "2", charge_str;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--algebra", req.algebra, "simple type (e.g. D4) or complex:<type>")
            ->required();
        cmd->add_option("--sigma", sigma_str, "comma list s_0,...,s_n");
        cmd->add_option("--k", req.k, "1 = inner, 2 = outer");
        cmd->add_option("--node", req.node, "shorthand: sigma = e_p");
        cmd->add_option("--format", req.format, "text|json");
    };

    auto* dec = app.add_subcommand("decompose", "decompose level-1 modules");
    add_common(dec);
    dec->add_option("--rep", req.rep, "basic|vector|spin|all");
    dec->add_option("--charge", charge_str, "center charge q or range a..b (hermitian)");
    dec->add_flag("--mod-delta", req.mod_delta, "drop delta_k coefficients");

    auto* en = app.add_subcommand("enumerate", "enumerate Weyl-group data");
    add_common(en);
    en->add_option("--what", req.what, "abelian|minuscule|coset-reps");

    auto* ver = app.add_subcommand("verify", "check decompositions against the character");
    add_common(ver);
    ver->add_option("--rep", req.rep, "basic|vector|spin|all");
    ver->add_option("--depth", depth_str, "delta_k-degree bound (rational)");
    ver->add_option("--charge", charge_str, "charge window a..b (hermitian)");

    auto* ins = app.add_subcommand("inspect", "dump the affine datum");
    add_common(ins);

    CLI11_PARSE(app, argc, argv);

    req.command = app.get_subcommands().front()->get_name();
    if (!sigma_str.empty()) {
        std::string tok;
        for (char c : sigma_str + ",") {
            if (c == ',') {
                if (!tok.empty()) req.sigma.push_back(std::stoi(tok));
                tok.clear();
            } else
                tok += c;
        }
    }
    if (!depth_str.empty()) {
        auto slash = depth_str.find('/');
        if (slash == std::string::npos) req.depth = affbranch::Rat(std::stoll(depth_str));
        else
            req.depth = affbranch::Rat(std::stoll(depth_str.substr(0, slash)),
                                       std::stoll(depth_str.substr(slash + 1)));
    }
    if (!charge_str.empty()) {
        req.have_charge = true;
        auto dots = charge_str.find("..");
        if (dots == std::string::npos) {
            req.charge_lo = req.charge_hi = std::stoll(charge_str);
        } else {
            req.charge_lo = std::stoll(charge_str.substr(0, dots));
            req.charge_hi = std::stoll(charge_str.substr(dots + 2));
        }
    }

    auto result = affbranch::cli::run(req);
    std::cout << result.output;
    return result.status;
}
