#include "affbranch/tables.hpp"
#include "affbranch/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace affbranch {

namespace {

using IMat = std::vector<std::vector<int>>;

IMat empty_cartan(int n) {
    IMat a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    return a;
}

// bond with <alpha_j, alpha_i^vee> = aij and <alpha_i, alpha_j^vee> = aji
void bond(IMat& a, int i, int j, int aij = -1, int aji = -1) {
    a[i][j] = aij;
    a[j][i] = aji;
}

AffineTable make(std::string name, int twist, IMat cartan, std::vector<int> marks,
                 std::vector<int> comarks) {
    AffineTable t;
    t.name = std::move(name);
    t.twist = twist;
    t.cartan = std::move(cartan);
    t.marks = std::move(marks);
    t.comarks = std::move(comarks);
    int n = t.nodes();
    // marks/comarks are the left/right kernel of the Cartan matrix
    for (int j = 0; j < n; ++j) {
        long long rs = 0, cs = 0;
        for (int i = 0; i < n; ++i) {
            rs += (long long)t.marks[i] * t.cartan[j][i];
            cs += (long long)t.comarks[i] * t.cartan[i][j];
        }
        if (rs != 0 || cs != 0)
            throw std::logic_error("affine table inconsistent: " + t.name);
    }
    return t;
}

AffineTable untwisted(char fam, int r) {
    std::string nm = std::string(1, fam) + std::to_string(r) + "(1)";
    switch (fam) {
    case 'A': {
        if (r == 1)
            return make("A1(1)", 1, {{2, -2}, {-2, 2}}, {1, 1}, {1, 1});
        IMat a = empty_cartan(r + 1);
        for (int i = 0; i < r; ++i) bond(a, i, i + 1);
        bond(a, 0, r);
        return make(nm, 1, a, std::vector<int>(r + 1, 1), std::vector<int>(r + 1, 1));
    }
    case 'B': {
        if (r == 2) { // so(5): same diagram as C2(1), labeled 0-2=>1? use C2 layout
            AffineTable t = untwisted('C', 2);
            t.name = "B2(1)";
            return t;
        }
        if (r < 3) break;
        IMat a = empty_cartan(r + 1);
        bond(a, 0, 2);
        bond(a, 1, 2);
        for (int i = 2; i + 1 < r; ++i) bond(a, i, i + 1);
        bond(a, r - 1, r, -1, -2); // alpha_r short
        std::vector<int> mk(r + 1, 2), cm(r + 1, 2);
        mk[0] = mk[1] = 1;
        cm[0] = cm[1] = 1;
        cm[r] = 1;
        return make(nm, 1, a, mk, cm);
    }
    case 'C': {
        if (r < 2) break;
        IMat a = empty_cartan(r + 1);
        bond(a, 0, 1, -1, -2); // alpha_0 long
        for (int i = 1; i + 1 < r; ++i) bond(a, i, i + 1);
        bond(a, r - 1, r, -2, -1); // alpha_r long
        std::vector<int> mk(r + 1, 2);
        mk[0] = mk[r] = 1;
        return make(nm, 1, a, mk, std::vector<int>(r + 1, 1));
    }
    case 'D': {
        if (r < 4) break;
        IMat a = empty_cartan(r + 1);
        bond(a, 0, 2);
        bond(a, 1, 2);
        for (int i = 2; i + 1 < r - 1; ++i) bond(a, i, i + 1);
        bond(a, r - 2, r - 1);
        bond(a, r - 2, r);
        std::vector<int> mk(r + 1, 2);
        mk[0] = mk[1] = mk[r - 1] = mk[r] = 1;
        return make(nm, 1, a, mk, mk);
    }
    case 'E': {
        if (r == 6) {
            IMat a = empty_cartan(7);
            for (int i = 1; i <= 4; ++i) bond(a, i, i + 1);
            bond(a, 3, 6);
            bond(a, 0, 6);
            std::vector<int> mk = {1, 1, 2, 3, 2, 1, 2};
            return make(nm, 1, a, mk, mk);
        }
        if (r == 7) {
            IMat a = empty_cartan(8);
            for (int i = 0; i <= 5; ++i) bond(a, i, i + 1);
            bond(a, 3, 7);
            std::vector<int> mk = {1, 2, 3, 4, 3, 2, 1, 2};
            return make(nm, 1, a, mk, mk);
        }
        if (r == 8) {
            IMat a = empty_cartan(9);
            for (int i = 0; i <= 6; ++i) bond(a, i, i + 1);
            bond(a, 5, 8);
            std::vector<int> mk = {1, 2, 3, 4, 5, 6, 4, 2, 3};
            return make(nm, 1, a, mk, mk);
        }
        break;
    }
    case 'F': {
        if (r != 4) break;
        IMat a = empty_cartan(5);
        bond(a, 0, 1);
        bond(a, 1, 2);
        bond(a, 2, 3, -1, -2); // alpha_3, alpha_4 short
        bond(a, 3, 4);
        return make(nm, 1, a, {1, 2, 3, 4, 2}, {1, 2, 3, 2, 1});
    }
    case 'G': {
        if (r != 2) break;
        IMat a = empty_cartan(3);
        bond(a, 0, 1);
        bond(a, 1, 2, -1, -3); // alpha_2 short
        return make(nm, 1, a, {1, 2, 3}, {1, 2, 1});
    }
    default: break;
    }
    throw UnsupportedType("no untwisted affine diagram for " + std::string(1, fam) +
                          std::to_string(r));
}

AffineTable twisted(char fam, int N) {
    std::string nm = std::string(1, fam) + std::to_string(N) + "(2)";
    if (fam == 'A' && N == 2)
        return make("A2(2)", 2, {{2, -4}, {-1, 2}}, {2, 1}, {1, 2});
    if (fam == 'A' && N >= 4 && N % 2 == 0) { // A_{2l}(2)
        int l = N / 2;
        IMat a = empty_cartan(l + 1);
        bond(a, 0, 1, -2, -1); // alpha_0 shortest
        for (int i = 1; i + 1 < l; ++i) bond(a, i, i + 1);
        bond(a, l - 1, l, -2, -1); // alpha_l longest
        std::vector<int> mk(l + 1, 2), cm(l + 1, 2);
        mk[l] = 1;
        cm[0] = 1;
        return make(nm, 2, a, mk, cm);
    }
    if (fam == 'A' && N >= 5 && N % 2 == 1) { // A_{2l-1}(2)
        int l = (N + 1) / 2;
        IMat a = empty_cartan(l + 1);
        bond(a, 0, 2);
        bond(a, 1, 2);
        for (int i = 2; i + 1 < l; ++i) bond(a, i, i + 1);
        bond(a, l - 1, l, -2, -1); // alpha_l long
        std::vector<int> mk(l + 1, 2), cm(l + 1, 2);
        mk[0] = mk[1] = mk[l] = 1;
        cm[0] = cm[1] = 1;
        return make(nm, 2, a, mk, cm);
    }
    if (fam == 'A' && N == 3) {
        // A3 = D3; its order-2 twist is the l = 2 member of the D_{l+1}(2) family
        AffineTable t = twisted('D', 3);
        t.name = "A3(2)";
        return t;
    }
    if (fam == 'D' && N >= 3) { // D_{l+1}(2), l = N-1
        int l = N - 1;
        IMat a = empty_cartan(l + 1);
        bond(a, 0, 1, -2, -1); // alpha_0 short
        for (int i = 1; i + 1 < l; ++i) bond(a, i, i + 1);
        bond(a, l - 1, l, -1, -2); // alpha_l short
        std::vector<int> mk(l + 1, 1), cm(l + 1, 2);
        cm[0] = cm[l] = 1;
        return make(std::string("D") + std::to_string(N) + "(2)", 2, a, mk, cm);
    }
    if (fam == 'E' && N == 6) {
        IMat a = empty_cartan(5);
        bond(a, 0, 1);
        bond(a, 1, 2);
        bond(a, 2, 3, -2, -1); // alpha_3, alpha_4 long
        bond(a, 3, 4);
        return make("E6(2)", 2, a, {1, 2, 3, 2, 1}, {1, 2, 3, 4, 2});
    }
    throw UnsupportedType("no order-2 twisted affine diagram for " +
                          std::string(1, fam) + std::to_string(N));
}

} // namespace

LieType parse_lie_type(const std::string& in) {
    std::string s = in;
    LieType t;
    if (s.rfind("complex:", 0) == 0) {
        t.complex_pair = true;
        s = s.substr(8);
    }
    if (s.size() < 2 || s[0] < 'A' || s[0] > 'G')
        throw UnsupportedType("cannot parse Lie type '" + in + "'");
    t.family = s[0];
    try {
        t.rank = std::stoi(s.substr(1));
    } catch (...) {
        throw UnsupportedType("cannot parse Lie type '" + in + "'");
    }
    if (t.rank < 1) throw UnsupportedType("rank must be >= 1 in '" + in + "'");
    // aliases from the low-rank coincidences so(3), so(5), so(6)
    if (t.family == 'B' && t.rank == 1) { t.family = 'A'; t.rank = 1; }
    if (t.family == 'C' && t.rank == 1) { t.family = 'A'; t.rank = 1; }
    if (t.family == 'D' && t.rank == 3) { t.family = 'A'; t.rank = 3; }
    return t;
}

AffineTable affine_table(const LieType& t, int k) {
    if (t.complex_pair) {
        AffineTable tab = untwisted(t.family, t.rank);
        tab.name = "complex:" + tab.name;
        return tab;
    }
    if (k == 1) return untwisted(t.family, t.rank);
    if (k == 2) {
        if (t.family == 'A' || t.family == 'D' || t.family == 'E')
            return twisted(t.family, t.rank);
        throw UnsupportedType(t.str() + " has no outer involution");
    }
    throw UnsupportedType("k must be 1 or 2");
}

FiniteTable finite_table(char family, int rank) {
    FiniteTable f;
    f.family = family;
    f.rank = rank;
    auto& a = f.cartan;
    a = std::vector<std::vector<int>>(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) a[i][i] = 2;
    auto fb = [&](int i, int j, int aij = -1, int aji = -1) {
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    };
    switch (family) {
    case 'A':
        for (int i = 1; i < rank; ++i) fb(i, i + 1);
        return f;
    case 'B': // alpha_rank short
        for (int i = 1; i + 1 < rank; ++i) fb(i, i + 1);
        if (rank >= 2) fb(rank - 1, rank, -1, -2);
        return f;
    case 'C': // alpha_rank long
        for (int i = 1; i + 1 < rank; ++i) fb(i, i + 1);
        if (rank >= 2) fb(rank - 1, rank, -2, -1);
        return f;
    case 'D':
        if (rank < 3) break;
        for (int i = 1; i + 1 < rank - 1; ++i) fb(i, i + 1);
        fb(rank - 2, rank - 1);
        fb(rank - 2, rank);
        return f;
    case 'E':
        if (rank == 6) {
            for (int i = 1; i < 5; ++i) fb(i, i + 1);
            fb(3, 6);
            return f;
        }
        if (rank == 7) {
            for (int i = 1; i < 6; ++i) fb(i, i + 1);
            fb(3, 7);
            return f;
        }
        if (rank == 8) {
            for (int i = 1; i < 7; ++i) fb(i, i + 1);
            fb(5, 8);
            return f;
        }
        break;
    case 'F':
        if (rank != 4) break;
        fb(1, 2);
        fb(2, 3, -1, -2);
        fb(3, 4);
        return f;
    case 'G':
        if (rank != 2) break;
        fb(1, 2, -1, -3);
        return f;
    default: break;
    }
    throw UnsupportedType("no finite diagram " + std::string(1, family) +
                          std::to_string(rank));
}

namespace {

// Cartan entry of the concrete diagram from its Gram matrix.
int cartan_entry(const Mat& gram, int i, int j) {
    Rat c = Rat(2) * gram[i][j] / gram[i][i];
    return (int)c.as_integer();
}

bool try_match(const FiniteTable& ref, const Mat& gram, const std::vector<int>& nodes,
               std::vector<int>& out) {
    int r = ref.rank;
    std::vector<int> perm(r, -1);
    std::vector<bool> used(nodes.size(), false);
    // assign reference labels 1..r to concrete nodes by backtracking,
    // trying candidates in index order for a deterministic result
    std::function<bool(int)> rec = [&](int pos) {
        if (pos == r) return true;
        for (size_t c = 0; c < nodes.size(); ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (int q = 0; q < pos && ok; ++q) {
                int i = nodes[perm[q]], j = nodes[c];
                if (cartan_entry(gram, i, j) != ref.cartan[q][pos] ||
                    cartan_entry(gram, j, i) != ref.cartan[pos][q])
                    ok = false;
            }
            if (!ok) continue;
            perm[pos] = (int)c;
            used[c] = true;
            if (rec(pos + 1)) return true;
            used[c] = false;
            perm[pos] = -1;
        }
        return false;
    };
    if (!rec(0)) return false;
    out.resize(r);
    for (int q = 0; q < r; ++q) out[q] = nodes[perm[q]];
    return true;
}

} // namespace

FiniteClassification classify_finite_diagram(const Mat& gram,
                                             const std::vector<int>& nodes) {
    int r = (int)nodes.size();
    // candidate families ordered so that coincidences resolve deterministically:
    // rank-2 double bond is reported as C2, a rank-3 chain as A3.
    std::vector<char> fams;
    if (r == 1) fams = {'A'};
    else if (r == 2) fams = {'A', 'C', 'G'};
    else fams = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
    for (char f : fams) {
        FiniteTable ref;
        try {
            ref = finite_table(f, r);
        } catch (const UnsupportedType&) {
            continue;
        }
        std::vector<int> map;
        if (try_match(ref, gram, nodes, map)) return {f, r, map};
    }
    throw std::logic_error("unclassifiable finite diagram");
}

} // namespace affbranch
