#include "affbranch/weylcomb.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

namespace affbranch {

namespace {

bool root_positive(const RootVec& m) {
    bool nonzero = false;
    for (int c : m) {
        if (c < 0) return false;
        if (c > 0) nonzero = true;
    }
    return nonzero;
}

RootVec reflect_root(const AffineDatum& d, int i, const RootVec& m) {
    long long pair = 0;
    for (int j = 0; j < d.nn; ++j) pair += (long long)d.table.cartan[i][j] * m[j];
    RootVec r = m;
    r[i] -= (int)pair;
    return r;
}

Mat simple_reflection_chart(const AffineDatum& d, int i) {
    Mat refl = identity_mat(d.chart_dim);
    for (int a = 0; a < d.chart_dim; ++a) refl[a][i] -= d.alpha[i][a];
    return refl;
}

struct BfsNode {
    std::vector<int> word;
    std::vector<RootVec> inversions;
    Mat chart;
    std::vector<RootVec> roots; // images of simple roots
};

WeylElement finish(BfsNode n) {
    WeylElement w;
    w.word = std::move(n.word);
    w.inversions = std::move(n.inversions);
    std::sort(w.inversions.begin(), w.inversions.end());
    w.chart_action = std::move(n.chart);
    w.root_action = std::move(n.roots);
    return w;
}

std::vector<int> flatten(const std::vector<RootVec>& roots) {
    std::vector<int> key;
    for (auto& r : roots) key.insert(key.end(), r.begin(), r.end());
    return key;
}

} // namespace

long long enumeration_cap() {
    if (const char* env = std::getenv("AFFBRANCH_ENUM_CAP")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 4000000;
}

WeylElement identity_element(const AffineDatum& d) {
    WeylElement w;
    w.chart_action = identity_mat(d.chart_dim);
    for (int i = 0; i < d.nn; ++i) {
        RootVec e(d.nn, 0);
        e[i] = 1;
        w.root_action.push_back(e);
    }
    return w;
}

WeylElement element_from_word(const AffineDatum& d, const std::vector<int>& word) {
    BfsNode n;
    n.chart = identity_mat(d.chart_dim);
    for (int i = 0; i < d.nn; ++i) {
        RootVec e(d.nn, 0);
        e[i] = 1;
        n.roots.push_back(e);
    }
    for (int i : word) {
        RootVec wi = n.roots[i];
        if (!root_positive(wi))
            throw Error("element_from_word: word is not reduced");
        n.inversions.push_back(wi);
        std::vector<RootVec> nr(d.nn);
        for (int j = 0; j < d.nn; ++j) {
            nr[j] = n.roots[j];
            int c = d.table.cartan[i][j];
            if (c != 0)
                for (int a = 0; a < d.nn; ++a) nr[j][a] -= c * wi[a];
        }
        n.roots = std::move(nr);
        n.chart = mat_mul(n.chart, simple_reflection_chart(d, i));
        n.word.push_back(i);
    }
    return finish(std::move(n));
}

Vec apply(const AffineDatum& d, const WeylElement& w, const Vec& lambda) {
    if ((int)lambda.size() != d.chart_dim)
        throw ChartMismatch("apply: weight is not on this datum's chart");
    return mat_vec(w.chart_action, lambda);
}

std::vector<WeylElement> enumerate_coset_reps(const AffineDatum& d,
                                              const RootPredicate& allowed,
                                              long long cap, int max_length) {
    std::vector<Mat> refl;
    for (int i = 0; i < d.nn; ++i) refl.push_back(simple_reflection_chart(d, i));

    std::deque<BfsNode> queue;
    {
        BfsNode id;
        id.chart = identity_mat(d.chart_dim);
        for (int i = 0; i < d.nn; ++i) {
            RootVec e(d.nn, 0);
            e[i] = 1;
            id.roots.push_back(e);
        }
        queue.push_back(std::move(id));
    }
    std::set<std::vector<int>> seen{flatten(queue.front().roots)};
    std::vector<WeylElement> out;

    while (!queue.empty()) {
        BfsNode n = std::move(queue.front());
        queue.pop_front();
        bool expand = max_length < 0 || (int)n.word.size() < max_length;
        if (expand) {
            for (int i = 0; i < d.nn; ++i) {
                const RootVec& wi = n.roots[i];
                if (!root_positive(wi) || !allowed(wi)) continue;
                BfsNode child;
                child.word = n.word;
                child.word.push_back(i);
                child.inversions = n.inversions;
                child.inversions.push_back(wi);
                child.roots.resize(d.nn);
                for (int j = 0; j < d.nn; ++j) {
                    child.roots[j] = n.roots[j];
                    int c = d.table.cartan[i][j];
                    if (c != 0)
                        for (int a = 0; a < d.nn; ++a) child.roots[j][a] -= c * wi[a];
                }
                auto key = flatten(child.roots);
                if (!seen.insert(std::move(key)).second) continue;
                if ((long long)seen.size() > cap)
                    throw CapExceeded("enumeration exceeded the element cap");
                child.chart = mat_mul(n.chart, refl[i]);
                queue.push_back(std::move(child));
            }
        }
        out.push_back(finish(std::move(n)));
    }
    std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
        return a.word < b.word;
    });
    return out;
}

std::vector<WeylElement> enumerate_minuscule(const AffineDatum& d, long long cap) {
    return enumerate_coset_reps(
        d, [&](const RootVec& r) { return d.level_of(r) == 1; }, cap);
}

WeylElement w_sigma(const AffineDatum& d) {
    if (d.p_index <= 0)
        throw NotApplicable("w_sigma requires p != 0");
    if (!d.alpha_p_long())
        throw NotApplicable("w_sigma requires alpha_p long");
    int p = d.p_index;

    std::vector<RootVec> targets;
    RootVec ep(d.nn, 0);
    ep[p] = 1;
    targets.push_back(ep);
    RootVec ep2 = ep;
    for (int i = 0; i < d.nn; ++i) ep2[i] += d.sigma.k * d.table.marks[i]; // + 2 delta'
    targets.push_back(ep2);

    // (alpha_p + positive k-roots) that are roots: level 1, so membership in
    // Delta(p) decides
    std::vector<int> knodes;
    for (int i = 0; i < d.nn; ++i)
        if (d.sigma.s[i] == 0) knodes.push_back(i);
    std::vector<Vec> pik;
    for (int i : knodes) pik.push_back(d.alpha[i]);
    for (auto& r : root_closure(d, pik)) {
        if (!r.positive()) continue;
        RootVec cand = ep;
        for (size_t j = 0; j < knodes.size(); ++j) cand[knodes[j]] += r.coords[j];
        if (d.cls.p_set.count(d.finite_part_of(cand))) targets.push_back(cand);
    }

    // peel the biconvex inversion set into a reduced word
    std::vector<RootVec> t = targets;
    std::vector<int> word;
    while (!t.empty()) {
        int pick = -1;
        for (size_t q = 0; q < t.size() && pick < 0; ++q) {
            int nz = -1;
            bool simple = true;
            for (int i = 0; i < d.nn; ++i) {
                if (t[q][i] == 0) continue;
                if (t[q][i] != 1 || nz >= 0) { simple = false; break; }
                nz = i;
            }
            if (simple && nz >= 0) {
                pick = nz;
                t.erase(t.begin() + q);
            }
        }
        if (pick < 0) throw std::logic_error("w_sigma: inversion set is not biconvex");
        word.push_back(pick);
        for (auto& r : t) r = reflect_root(d, pick, r);
    }
    WeylElement w = element_from_word(d, word);
    std::sort(targets.begin(), targets.end());
    if (w.inversions != targets)
        throw std::logic_error("w_sigma: reconstructed inversion set mismatch");
    return w;
}

namespace {

AbelianSubspace subspace_of(const AffineDatum& d, WeylElement w) {
    AbelianSubspace a;
    for (auto& beta : w.inversions) {
        Vec f = d.finite_part_of(beta);
        a.weights.push_back(zero_vec(d.chart_dim) - f);
    }
    std::sort(a.weights.begin(), a.weights.end(), vec_less);
    a.witness = std::move(w);
    return a;
}

} // namespace

std::vector<AbelianSubspace> abelian_subspaces(const AffineDatum& d, long long cap) {
    std::vector<AbelianSubspace> out;
    for (auto& w : enumerate_minuscule(d, cap)) out.push_back(subspace_of(d, w));
    return out;
}

std::vector<AbelianSubspace> hermitian_fundamental_subspaces(const AffineDatum& d,
                                                             long long cap) {
    if (!d.hermitian())
        throw NotHermitian(d.table.name + " with this sigma is not hermitian");
    Vec neg_ai = zero_vec(d.chart_dim) - d.alpha_bar[d.herm_node];
    std::vector<AbelianSubspace> out;
    for (auto& a : abelian_subspaces(d, cap))
        if (std::binary_search(a.weights.begin(), a.weights.end(), neg_ai, VecLess()))
            out.push_back(a);
    return out;
}

Mat translation_matrix(const AffineDatum& d, const Vec& gamma) {
    if ((int)gamma.size() != d.chart_dim || !gamma[d.chart_dim - 1].is_zero())
        throw ChartMismatch("translation_matrix: gamma must be a level-0 chart weight");
    Vec riesz = mat_vec(d.Binv, gamma);
    Rat half_norm = Rat(1, 2) * dot(gamma, riesz);
    Mat m = identity_mat(d.chart_dim);
    for (int a = 0; a < d.chart_dim; ++a)
        for (int b = 0; b < d.chart_dim; ++b) {
            m[a][b] += gamma[a] * d.K_fun[b];
            m[a][b] -= d.delta[a] * (riesz[b] + half_norm * d.K_fun[b]);
        }
    return m;
}

ExtendedElement extended_translation(const AffineDatum& d, const Vec& gamma,
                                     const Mat& finite_part) {
    ExtendedElement e;
    e.translation = gamma;
    e.finite_part = finite_part;
    e.action = mat_mul(translation_matrix(d, gamma), finite_part);
    return e;
}

ExtendedElement extended_translation(const AffineDatum& d, const Vec& gamma) {
    return extended_translation(d, gamma, identity_mat(d.chart_dim));
}

bool is_biconvex(const AffineDatum& d, const std::vector<RootVec>& nw) {
    // positive real roots truncated at delta'-level (max level in N) + 2
    int maxlev = 0;
    std::set<Vec, VecLess> nset;
    for (auto& r : nw) {
        maxlev = std::max(maxlev, d.level_of(r));
        nset.insert(d.chart_of(r));
    }
    int bound = maxlev + 2;
    std::vector<Vec> all;
    for (int m = 0; m <= bound; ++m) {
        Vec shift = Rat(m) * d.delta_prime;
        if (m == 0) {
            for (auto& g : d.cls.k_positive) all.push_back(g);
        } else if (m % 2 == 0) {
            for (auto& g : d.cls.k_set) all.push_back(g + shift);
        } else {
            for (auto& g : d.cls.p_set) all.push_back(g + shift);
        }
    }
    std::set<Vec, VecLess> allset(all.begin(), all.end());
    auto in_n = [&](const Vec& v) { return nset.count(v) != 0; };
    for (auto& a : all)
        for (auto& b : all) {
            Vec s = a + b;
            if (!allset.count(s)) continue;
            if (in_n(a) && in_n(b) && !in_n(s)) return false;
            if (!in_n(a) && !in_n(b) && in_n(s)) return false;
        }
    return true;
}

bool is_stable_abelian(const AffineDatum& d, const std::vector<Vec>& weights) {
    std::set<Vec, VecLess> aset(weights.begin(), weights.end());
    // abelian: [p_a, p_b] lands in k_{a+b}, so only sums that are k-roots
    // (or zero) obstruct
    for (auto& a : weights)
        for (auto& b : weights) {
            if (a == b) continue;
            Vec s = a + b;
            if (is_zero(s) || d.cls.k_set.count(s)) return false;
        }
    for (auto& a : weights)
        for (auto& g : d.cls.k_positive) {
            Vec s = a + g;
            if (d.cls.p_set.count(s) && !aset.count(s)) return false;
            if (is_zero(s) && d.cls.zero_mult > 0) return false;
        }
    return true;
}

} // namespace affbranch
