#pragma once

#include "affbranch/rootdata.hpp"

#include <functional>
#include <vector>

namespace affbranch {

// A real affine root by its integer coordinates on alpha_0..alpha_n.
using RootVec = std::vector<int>;

struct WeylElement {
    std::vector<int> word;           // reduced word, simple-reflection indices
    std::vector<RootVec> inversions; // N(w), canonically sorted
    Mat chart_action;                // exact action on the weight chart
    std::vector<RootVec> root_action; // images of the simple roots
    int length() const { return (int)word.size(); }
};

Vec apply(const AffineDatum& d, const WeylElement& w, const Vec& lambda);

WeylElement identity_element(const AffineDatum& d);
WeylElement element_from_word(const AffineDatum& d, const std::vector<int>& word);

long long enumeration_cap();

// Breadth-first search over the weak order collecting every w whose
// inversion set stays inside the allowed positive roots; deterministic
// (length, word-lex) output order.  max_length < 0 means unbounded.
using RootPredicate = std::function<bool(const RootVec&)>;
std::vector<WeylElement> enumerate_coset_reps(const AffineDatum& d,
                                              const RootPredicate& allowed,
                                              long long cap = enumeration_cap(),
                                              int max_length = -1);

// sigma-minuscule elements: N(w) inside the sigma-height-one roots
std::vector<WeylElement> enumerate_minuscule(const AffineDatum& d,
                                             long long cap = enumeration_cap());

// the exceptional coset representative, defined when p != 0 and alpha_p long
WeylElement w_sigma(const AffineDatum& d);

struct AbelianSubspace {
    std::vector<Vec> weights; // finite chart vectors, sorted
    WeylElement witness;
};

std::vector<AbelianSubspace> abelian_subspaces(const AffineDatum& d,
                                               long long cap = enumeration_cap());

// members of Sigma whose subspace contains the root space g_{-alpha_i}
std::vector<AbelianSubspace>
hermitian_fundamental_subspaces(const AffineDatum& d, long long cap = enumeration_cap());

struct ExtendedElement {
    Vec translation; // gamma, a level-0 chart weight
    Mat finite_part;
    Mat action; // t_gamma o finite_part
};

// chart matrix of the translation t_gamma (Kac's level-preserving action)
Mat translation_matrix(const AffineDatum& d, const Vec& gamma);
ExtendedElement extended_translation(const AffineDatum& d, const Vec& gamma,
                                     const Mat& finite_part);
ExtendedElement extended_translation(const AffineDatum& d, const Vec& gamma);

// test helpers: the spec-level invariants of inversion sets
bool is_biconvex(const AffineDatum& d, const std::vector<RootVec>& nw);
bool is_stable_abelian(const AffineDatum& d, const std::vector<Vec>& weights);

} // namespace affbranch
