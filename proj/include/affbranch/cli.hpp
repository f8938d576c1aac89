#pragma once

#include "affbranch/charoracle.hpp"

#include <string>
#include <vector>

namespace affbranch::cli {

struct Request {
    std::string command = "decompose"; // decompose | enumerate | verify | inspect
    std::string algebra;               // e.g. "D4", "complex:A3"
    std::vector<int> sigma;            // s_0..s_n; empty allowed with `node`
    int k = 1;
    int node = -1;          // shorthand: sigma = e_node
    std::string rep = "all"; // basic | vector | spin | all
    bool have_charge = false;
    long long charge_lo = 0, charge_hi = 0;
    Rat depth = Rat(2);
    std::string format = "text"; // text | json
    bool mod_delta = false;
    std::string what = "abelian"; // enumerate: abelian | minuscule | coset-reps
};

struct RunResult {
    int status = 0; // 0 ok, 1 validation error, 2 verification failure
    std::string output;
};

RunResult run(const Request& req);

// shared pretty-printer: "2*L0 + 3*L1" style factors joined by " (x) "
std::string component_weight_str(const AffineDatum& d, const Vec& weight);

AffineDatum datum_from_request(const Request& req);

} // namespace affbranch::cli
