#include "affbranch/cli.hpp"

#include <json.hpp>

#include <sstream>

namespace affbranch::cli {

using json = nlohmann::ordered_json;

namespace {

std::string rat_str(const Rat& r) { return r.str(); }

json weight_json(const AffineDatum& d, const Vec& w, bool mod_delta, bool hermitian) {
    json comp;
    json ideals = json::array();
    auto coeffs = ideal_coefficients(d, w);
    for (size_t s = 0; s < coeffs.size(); ++s) {
        json ideal;
        ideal["ideal"] = s;
        ideal["type"] = d.kst.ideals[s].type_str();
        ideal["coeffs"] = coeffs[s];
        ideals.push_back(ideal);
    }
    comp["ideals"] = ideals;
    if (!mod_delta) comp["delta"] = rat_str(delta_coefficient(d, w));
    if (hermitian) comp["charge"] = rat_str(w[d.kst.varpi_slot]);
    return comp;
}

std::string label_str(const AffineDatum& d, const ComponentLabel& label) {
    std::string s;
    switch (label.kind) {
    case ComponentLabel::Kind::WSigma: return "w_sigma";
    case ComponentLabel::Kind::Hermitian: s = "I="; break;
    case ComponentLabel::Kind::Abelian: s = "A="; break;
    }
    s += "{";
    bool first = true;
    for (auto& wgt : label.subspace) {
        if (!first) s += ", ";
        first = false;
        Vec c = d.finite_coords(wgt);
        s += "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += c[i].str();
        }
        s += ")";
    }
    s += "}";
    if (label.kind == ComponentLabel::Kind::Hermitian)
        s += " k_I=" + std::to_string(label.k_I);
    return s;
}

json label_json(const AffineDatum& d, const ComponentLabel& label) {
    json j;
    switch (label.kind) {
    case ComponentLabel::Kind::WSigma: j["kind"] = "w_sigma"; break;
    case ComponentLabel::Kind::Hermitian: j["kind"] = "hermitian"; break;
    case ComponentLabel::Kind::Abelian: j["kind"] = "abelian"; break;
    }
    json sub = json::array();
    for (auto& wgt : label.subspace) {
        json one = json::array();
        for (auto& c : d.finite_coords(wgt)) one.push_back(rat_str(c));
        sub.push_back(one);
    }
    j["subspace"] = sub;
    if (label.kind == ComponentLabel::Kind::Hermitian) j["k_I"] = label.k_I;
    return j;
}

Rep parse_rep(const std::string& s) {
    if (s == "basic") return Rep::Basic;
    if (s == "vector") return Rep::Vector;
    if (s == "spin") return Rep::Spin;
    throw Error("unknown rep '" + s + "'");
}

json decomposition_json(const AffineDatum& d, const Decomposition& dec, bool mod_delta) {
    json j;
    j["module"] = module_name(dec.module, dec.spin_m);
    j["multiplier"] = dec.global_multiplier;
    if (dec.has_charge) j["charge"] = dec.charge;
    json comps = json::array();
    for (auto& c : dec.components) {
        json cj = weight_json(d, c.weight, mod_delta, d.hermitian());
        cj["mult"] = c.mult;
        cj["label"] = label_json(d, c.label);
        if (!c.hwv.empty()) cj["hwv"] = c.hwv;
        comps.push_back(cj);
    }
    j["components"] = comps;
    return j;
}

void decomposition_text(std::ostream& os, const AffineDatum& d, const Decomposition& dec,
                        bool mod_delta) {
    os << "module " << module_name(dec.module, dec.spin_m);
    if (dec.has_charge) os << "  charge " << dec.charge;
    if (dec.global_multiplier != 1) os << "  x" << dec.global_multiplier;
    os << "  (" << dec.components.size() << " components)\n";
    for (auto& c : dec.components) {
        os << "  " << component_weight_str(d, c.weight);
        if (!mod_delta) os << "  [delta " << rat_str(delta_coefficient(d, c.weight)) << "]";
        if (c.mult != 1) os << "  [mult " << c.mult << "]";
        os << "  [" << label_str(d, c.label) << "]";
        if (!c.hwv.empty()) os << "  hwv: " << c.hwv;
        os << "\n";
    }
}

std::string verify_json(const AffineDatum& d, const VerifyReport& rep) {
    json j;
    j["status"] = rep.ok ? "ok" : "fail";
    j["depth"] = rat_str(rep.depth);
    if (rep.depth_warning) j["warning"] = "fewer than 2 delta-shells compared";
    json checks = json::array();
    for (auto& chk : rep.checks) {
        json c;
        c["name"] = chk.name;
        c["status"] = chk.ok ? "ok" : "fail";
        json res = json::array();
        for (auto& [w, v] : chk.residual) {
            json e;
            e["weight"] = weight_json(d, w, false, d.hermitian());
            e["value"] = v;
            res.push_back(e);
        }
        c["residuals"] = res;
        checks.push_back(c);
    }
    j["checks"] = checks;
    return j.dump(2) + "\n";
}

} // namespace

std::string component_weight_str(const AffineDatum& d, const Vec& weight) {
    auto coeffs = ideal_coefficients(d, weight);
    std::string s;
    for (size_t q = 0; q < coeffs.size(); ++q) {
        if (q) s += " (x) ";
        s += "L(";
        bool first = true;
        bool all_zero = true;
        for (size_t j = 0; j < coeffs[q].size(); ++j) {
            if (coeffs[q][j] == 0) continue;
            all_zero = false;
            if (!first) s += " + ";
            first = false;
            if (coeffs[q][j] != 1) s += std::to_string(coeffs[q][j]) + "*";
            s += "L" + std::to_string(j);
        }
        if (all_zero) s += "0";
        s += ")";
    }
    return s;
}

AffineDatum datum_from_request(const Request& req) {
    LieType t = parse_lie_type(req.algebra);
    InvolutionSpec sig;
    sig.k = t.complex_pair ? 2 : req.k;
    AffineTable tab = affine_table(t, sig.k);
    if (!req.sigma.empty()) {
        sig.s = req.sigma;
    } else if (req.node >= 0) {
        sig.s.assign(tab.nodes(), 0);
        if (req.node >= tab.nodes()) throw InvalidInvolution("--node out of range");
        sig.s[req.node] = 1;
    } else if (t.complex_pair) {
        sig.s.assign(tab.nodes(), 0);
        sig.s[0] = 1;
    } else {
        throw InvalidInvolution("provide --sigma or --node");
    }
    return build_affine_datum(t, sig);
}

namespace {

RunResult run_decompose(const AffineDatum& d, const Request& req) {
    std::vector<Decomposition> decs;
    std::vector<Rep> reps;
    if (req.rep == "all") reps = {Rep::Basic, Rep::Vector, Rep::Spin};
    else reps = {parse_rep(req.rep)};

    for (Rep r : reps) {
        if (d.hermitian()) {
            if (!req.have_charge)
                throw Error("hermitian data need an explicit --charge (or range)");
            for (long long q = req.charge_lo; q <= req.charge_hi; ++q) {
                Decomposition dec = decompose_hermitian(d, r, q);
                if (!dec.components.empty() || req.charge_lo == req.charge_hi)
                    decs.push_back(std::move(dec));
            }
        } else if (r == Rep::Spin) {
            auto s = decompose_spin(d);
            decs.insert(decs.end(), s.begin(), s.end());
        } else {
            decs.push_back(decompose_basic_vector(d, r == Rep::Vector ? 1 : 0));
        }
    }

    std::ostringstream os;
    if (req.format == "json") {
        json j;
        j["algebra"] = d.type.str();
        j["diagram"] = d.table.name;
        j["sigma"] = d.sigma.s;
        j["k"] = d.sigma.k;
        json arr = json::array();
        for (auto& dec : decs) arr.push_back(decomposition_json(d, dec, req.mod_delta));
        j["decompositions"] = arr;
        os << j.dump(2) << "\n";
    } else {
        os << d.type.str() << " sigma=(";
        for (size_t i = 0; i < d.sigma.s.size(); ++i)
            os << (i ? "," : "") << d.sigma.s[i];
        os << ";" << d.sigma.k << ")  diagram " << d.table.name << "\n";
        for (auto& dec : decs) decomposition_text(os, d, dec, req.mod_delta);
    }
    return {0, os.str()};
}

RunResult run_enumerate(const AffineDatum& d, const Request& req) {
    json arr = json::array();
    auto word_json = [](const WeylElement& w) {
        json jw = json::array();
        for (int i : w.word) jw.push_back(i);
        return jw;
    };
    auto inv_json = [&](const WeylElement& w) {
        json ji = json::array();
        for (auto& r : w.inversions) {
            json jr = json::array();
            for (int c : r) jr.push_back(c);
            ji.push_back(jr);
        }
        return ji;
    };
    if (req.what == "abelian") {
        for (auto& a : abelian_subspaces(d)) {
            json e;
            e["word"] = word_json(a.witness);
            e["inversions"] = inv_json(a.witness);
            json lw = json::array();
            for (auto& wgt : a.weights) {
                json one = json::array();
                for (auto& c : d.finite_coords(wgt)) one.push_back(c.str());
                lw.push_back(one);
            }
            e["label"] = lw;
            arr.push_back(e);
        }
    } else if (req.what == "minuscule" || req.what == "coset-reps") {
        std::vector<WeylElement> els;
        if (req.what == "minuscule") els = enumerate_minuscule(d);
        else
            els = enumerate_coset_reps(
                d, [&](const RootVec& r) { return d.level_of(r) % 2 == 1; });
        for (auto& w : els) {
            json e;
            e["word"] = word_json(w);
            e["inversions"] = inv_json(w);
            e["label"] = w.length();
            arr.push_back(e);
        }
    } else {
        throw Error("unknown --what '" + req.what + "'");
    }

    std::ostringstream os;
    if (req.format == "json") {
        json j;
        j["algebra"] = d.type.str();
        j["what"] = req.what;
        j["count"] = arr.size();
        j["elements"] = arr;
        os << j.dump(2) << "\n";
    } else {
        os << req.what << ": " << arr.size() << " elements\n";
        for (auto& e : arr) os << "  " << e.dump() << "\n";
    }
    return {0, os.str()};
}

RunResult run_verify(const AffineDatum& d, const Request& req) {
    long long qlo = req.have_charge ? req.charge_lo : -2;
    long long qhi = req.have_charge ? req.charge_hi : 2;
    std::vector<VerifyReport> reports;
    std::vector<std::string> names;
    std::vector<Rep> reps;
    if (req.rep == "all") {
        reps = {Rep::Basic, Rep::Spin};
        names = {"basic+vector", "spin"};
    } else {
        reps = {parse_rep(req.rep)};
        names = {req.rep};
    }
    bool ok = true;
    std::ostringstream os;
    json jchecks = json::array();
    for (size_t i = 0; i < reps.size(); ++i) {
        VerifyReport rep = verify(d, reps[i], req.depth, qlo, qhi);
        ok = ok && rep.ok;
        if (req.format == "json") {
            json one = json::parse(verify_json(d, rep));
            one["rep"] = names[i];
            jchecks.push_back(one);
        } else {
            os << names[i] << ": " << (rep.ok ? "ok" : "FAIL") << "\n";
            for (auto& chk : rep.checks)
                os << "  " << chk.name << ": " << (chk.ok ? "ok" : "FAIL") << " ("
                   << chk.residual.size() << " residuals)\n";
        }
    }
    if (req.format == "json") {
        json j;
        j["status"] = ok ? "ok" : "fail";
        j["depth"] = rat_str(req.depth);
        j["reports"] = jchecks;
        os << j.dump(2) << "\n";
    } else {
        os << "status: " << (ok ? "ok" : "fail") << "\n";
    }
    return {ok ? 0 : 2, os.str()};
}

RunResult run_inspect(const AffineDatum& d, const Request&) {
    json j;
    j["algebra"] = d.type.str();
    j["diagram"] = d.table.name;
    j["rank_g"] = d.N;
    j["rank_k"] = d.n;
    j["sigma"] = d.sigma.s;
    j["k"] = d.sigma.k;
    j["dual_coxeter"] = d.hvee;
    j["marks"] = d.table.marks;
    j["comarks"] = d.table.comarks;
    j["cartan"] = d.table.cartan;
    json gram = json::array();
    for (auto& row : d.gram) {
        json r = json::array();
        for (auto& x : row) r.push_back(x.str());
        gram.push_back(r);
    }
    j["gram"] = gram;
    json ideals = json::array();
    for (auto& id : d.kst.ideals) {
        json ji;
        ji["type"] = id.type_str();
        ji["nodes"] = id.label_node;
        ji["level"] = id.j_S;
        ji["dual_coxeter"] = id.hvee_S;
        ji["index"] = id.n_S;
        ideals.push_back(ji);
    }
    j["ideals"] = ideals;
    j["center_dim"] = d.kst.center_dim;
    j["dim_p"] = d.dim_p();
    j["p_weights"] = d.cls.p_weights.size() + (d.cls.zero_mult > 0 ? 1 : 0);
    j["alpha_p_long"] = d.p_index >= 1 && d.alpha_p_long();
    return {0, j.dump(2) + "\n"};
}

} // namespace

RunResult run(const Request& req) {
    try {
        AffineDatum d = datum_from_request(req);
        if (req.command == "decompose") return run_decompose(d, req);
        if (req.command == "enumerate") return run_enumerate(d, req);
        if (req.command == "verify") return run_verify(d, req);
        if (req.command == "inspect") return run_inspect(d, req);
        return {1, "unknown command '" + req.command + "'\n"};
    } catch (const Error& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    } catch (const std::logic_error& e) {
        return {1, std::string("internal error: ") + e.what() + "\n"};
    }
}

} // namespace affbranch::cli
