#pragma once

#include "affbranch/branching.hpp"

#include <map>
#include <string>
#include <vector>

namespace affbranch {

struct TruncatedCharacter {
    Vec base; // the weight anchoring delta_k-degree 0
    Rat depth;
    std::map<Vec, long long, VecLess> entries;
};

// formal character of X_r from the product over positive p-type roots,
// truncated at the given delta_k-degree; parity 0 = basic+vector, 1 = spin
TruncatedCharacter product_character(const AffineDatum& d, int parity, const Rat& depth);

// Weyl-Kac character of L(lambda) truncated at delta_k-degree `depth` below
// lambda; lambda must be dominant integral for the k^ positive system
TruncatedCharacter irreducible_character(const AffineDatum& d, const Vec& lambda,
                                         const Rat& depth);

struct VerifyCheck {
    std::string name;
    bool ok = true;
    std::map<Vec, long long, VecLess> residual;
};

struct VerifyReport {
    bool ok = true;
    Rat depth;
    bool depth_warning = false;
    std::vector<VerifyCheck> checks;
};

// certify a claimed decomposition against the product character
VerifyReport verify_claimed(const AffineDatum& d, Rep rep,
                            const std::vector<Decomposition>& claimed, const Rat& depth,
                            long long q_lo = 0, long long q_hi = 0);

// decompose then certify; hermitian data are verified per charge over
// [q_lo, q_hi] (defaults to |q| <= 2)
VerifyReport verify(const AffineDatum& d, Rep rep, const Rat& depth,
                    long long q_lo = -2, long long q_hi = 2);

} // namespace affbranch
