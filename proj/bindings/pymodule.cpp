#include "affbranch/charoracle.hpp"
#include "affbranch/cli.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace affbranch;

namespace {

Rep parse_rep(const std::string& s) {
    if (s == "basic") return Rep::Basic;
    if (s == "vector") return Rep::Vector;
    if (s == "spin") return Rep::Spin;
    throw Error("unknown rep '" + s + "'");
}

Rat parse_depth(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

py::dict component_dict(const AffineDatum& d, const Component& c) {
    py::dict out;
    py::list ideals;
    for (auto& coeffs : ideal_coefficients(d, c.weight)) {
        py::list one;
        for (long long x : coeffs) one.append(x);
        ideals.append(one);
    }
    out["ideals"] = ideals;
    out["delta"] = delta_coefficient(d, c.weight).str();
    out["mult"] = c.mult;
    switch (c.label.kind) {
    case ComponentLabel::Kind::WSigma: out["label"] = "w_sigma"; break;
    case ComponentLabel::Kind::Hermitian: out["label"] = "hermitian"; break;
    case ComponentLabel::Kind::Abelian: out["label"] = "abelian"; break;
    }
    out["subspace_size"] = c.label.subspace.size();
    if (!c.hwv.empty()) out["hwv"] = c.hwv;
    return out;
}

py::dict decomposition_dict(const AffineDatum& d, const Decomposition& dec) {
    py::dict out;
    out["module"] = module_name(dec.module, dec.spin_m);
    out["multiplier"] = dec.global_multiplier;
    if (dec.has_charge) out["charge"] = dec.charge;
    py::list comps;
    for (auto& c : dec.components) comps.append(component_dict(d, c));
    out["components"] = comps;
    return out;
}

// a conformal pair (so(p), k) fixed by a simple type and an involution type
class Pair {
  public:
    Pair(const std::string& algebra, std::vector<int> sigma, int k)
        : d_(build_affine_datum(parse_lie_type(algebra), {std::move(sigma), k})) {}

    std::string diagram() const { return d_.table.name; }
    int rank_g() const { return d_.N; }
    int rank_k() const { return d_.n; }
    long long dim_p() const { return d_.dim_p(); }
    bool hermitian() const { return d_.hermitian(); }

    py::list ideals() const {
        py::list out;
        for (auto& id : d_.kst.ideals) {
            py::dict one;
            one["type"] = id.type_str();
            one["level"] = id.j_S;
            out.append(one);
        }
        return out;
    }

    size_t abelian_subspace_count() const { return abelian_subspaces(d_).size(); }

    py::list decompose(const std::string& rep) const {
        py::list out;
        for (auto& dec : affbranch::decompose(d_, parse_rep(rep)))
            out.append(decomposition_dict(d_, dec));
        return out;
    }

    py::dict decompose_charge(const std::string& rep, long long q) const {
        return decomposition_dict(d_, decompose_hermitian(d_, parse_rep(rep), q));
    }

    py::dict verify(const std::string& rep, const std::string& depth, long long q_lo,
                    long long q_hi) const {
        VerifyReport r =
            affbranch::verify(d_, parse_rep(rep), parse_depth(depth), q_lo, q_hi);
        py::dict out;
        out["ok"] = r.ok;
        py::list checks;
        for (auto& chk : r.checks) {
            py::dict one;
            one["name"] = chk.name;
            one["ok"] = chk.ok;
            one["residuals"] = chk.residual.size();
            checks.append(one);
        }
        out["checks"] = checks;
        return out;
    }

  private:
    AffineDatum d_;
};

} // namespace

PYBIND11_MODULE(_affbranch, m) {
    m.doc() = "branching of level-1 orthogonal affine modules under conformal "
              "subalgebras attached to symmetric pairs";

    py::register_exception<Error>(m, "AffbranchError");

    py::class_<Pair>(m, "Pair")
        .def(py::init<const std::string&, std::vector<int>, int>(), py::arg("algebra"),
             py::arg("sigma"), py::arg("k") = 1)
        .def_property_readonly("diagram", &Pair::diagram)
        .def_property_readonly("rank_g", &Pair::rank_g)
        .def_property_readonly("rank_k", &Pair::rank_k)
        .def_property_readonly("dim_p", &Pair::dim_p)
        .def_property_readonly("hermitian", &Pair::hermitian)
        .def("ideals", &Pair::ideals)
        .def("abelian_subspace_count", &Pair::abelian_subspace_count)
        .def("decompose", &Pair::decompose, py::arg("rep"))
        .def("decompose_charge", &Pair::decompose_charge, py::arg("rep"), py::arg("q"))
        .def("verify", &Pair::verify, py::arg("rep"), py::arg("depth") = "2",
             py::arg("q_lo") = -2, py::arg("q_hi") = 2);

    m.def(
        "run_json",
        [](const std::string& command, const std::string& algebra, std::vector<int> sigma,
           int k, const std::string& rep, bool mod_delta) {
            cli::Request req;
            req.command = command;
            req.algebra = algebra;
            req.sigma = std::move(sigma);
            req.k = k;
            req.rep = rep;
            req.mod_delta = mod_delta;
            req.format = "json";
            auto r = cli::run(req);
            if (r.status == 1) throw Error(r.output);
            return py::make_tuple(r.status, r.output);
        },
        py::arg("command"), py::arg("algebra"), py::arg("sigma"), py::arg("k") = 1,
        py::arg("rep") = "all", py::arg("mod_delta") = false,
        "run a command as the CLI would and return (status, json)");
}
