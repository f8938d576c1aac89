#include "affbranch/charoracle.hpp"

#include <doctest.h>

using namespace affbranch;

namespace {

AffineDatum datum(const std::string& type, std::vector<int> s, int k) {
    return build_affine_datum(parse_lie_type(type), {std::move(s), k});
}

} // namespace

TEST_CASE("product character at depth zero") {
    AffineDatum d = datum("D4", {0, 1, 0, 0}, 2);
    auto even = product_character(d, 0, Rat(0));
    REQUIRE(even.entries.size() == 1);
    CHECK(even.entries.begin()->first == d.kst.Lambda0k);
    CHECK(even.entries.begin()->second == 1);

    // odd parity: the top entry carries the 2^{(N-n)/2} prefactor and the
    // degree-zero shell is the finite spin module over the p-positives
    auto odd = product_character(d, 1, Rat(0));
    auto top = odd.entries.find(d.kst.Lambda0k + d.kst.rho_n_k);
    REQUIRE(top != odd.entries.end());
    CHECK(top->second == 1); // floor((4-3)/2) = 0
    long long mass = 0;
    for (auto& [w, c] : odd.entries) mass += c;
    CHECK(mass == (long long)1 << d.cls.positive_p.size());
}

TEST_CASE("complex A1 even product at depth 1 by hand") {
    AffineDatum d = datum("complex:A1", {1, 0}, 2);
    auto ch = product_character(d, 0, Rat(1));
    Vec base = d.kst.Lambda0k;
    Vec alpha = d.finite_to_k(d.alpha_bar[1]);
    Vec half = Rat(1, 2) * d.kst.delta_k;
    std::map<Vec, long long, VecLess> expect;
    expect[base] = 1;
    expect[base - half - alpha] = 1;
    expect[base - half + alpha] = 1;
    expect[base - half] = 1;
    expect[base - half - half] = 1;          // (1/2 + 1/2) from the +-alpha pair
    expect[base - half - half - alpha] = 1;  // alpha with imaginary
    expect[base - half - half + alpha] = 1;
    CHECK(ch.entries == expect);
}

TEST_CASE("irreducible character: highest weight, dominance, Weyl symmetry") {
    AffineDatum d = datum("complex:A2", {1, 0, 0}, 2);
    CHECK_THROWS_AS(
        irreducible_character(d, d.kst.Lambda0k - d.kst.rho_k_hat, Rat(1)), NotDominant);
    auto ch = irreducible_character(d, d.kst.rho_k_hat, Rat(2));
    CHECK(ch.entries.at(d.kst.rho_k_hat) == 1);
    for (auto& [w, c] : ch.entries) {
        CHECK(c > 0);
        CHECK(Rat(0) <= d.kst.rho_k_hat[d.kst.dk_slot] - w[d.kst.dk_slot]);
    }
    // string symmetry: the character is invariant under the finite Weyl
    // reflections of k (shell by shell)
    for (auto& id : d.kst.ideals)
        for (int j = 1; j <= id.rank; ++j) {
            Vec alpha = d.finite_to_k(d.alpha[id.label_node[j - 1]]);
            int slot = id.slot0 + j;
            for (auto& [w, c] : ch.entries) {
                Vec img = w - w[slot] * alpha;
                CHECK(ch.entries.at(img) == c);
            }
        }
}

TEST_CASE("spin product equals the single irreducible in the complex case") {
    // ch(X_r) = 2^{floor(n/2)} ch(L(rho_k)): the two engines share no code path
    for (auto& spec : std::vector<std::pair<std::string, std::vector<int>>>{
             {"complex:A1", {1, 0}}, {"complex:A2", {1, 0, 0}}, {"complex:B2", {1, 0, 0}}}) {
        CAPTURE(spec.first);
        AffineDatum d = datum(spec.first, spec.second, 2);
        auto prod = product_character(d, 1, Rat(2));
        auto irr = irreducible_character(d, d.kst.rho_k_hat, Rat(2));
        long long pref = 1LL << (d.n / 2);
        REQUIRE(prod.entries.size() == irr.entries.size());
        for (auto& [w, c] : irr.entries) CHECK(prod.entries.at(w) == pref * c);
    }
}

TEST_CASE("verify: golden data at depth 1") {
    struct Case {
        std::string t;
        std::vector<int> s;
        int k;
        Rep rep;
    };
    for (auto& c : std::vector<Case>{
             {"G2", {0, 1, 0}, 1, Rep::Spin},
             {"G2", {0, 1, 0}, 1, Rep::Basic},
             {"D4", {0, 1, 0, 0}, 2, Rep::Basic},
             {"D4", {0, 1, 0, 0}, 2, Rep::Spin},
             {"A2", {0, 1}, 2, Rep::Spin},   // A_2n(2) regime
             {"A2", {0, 1}, 2, Rep::Basic},
             {"C3", {0, 1, 0, 0}, 1, Rep::Spin},
             {"complex:A2", {1, 0, 0}, 2, Rep::Basic},
             {"D4", {1, 0, 0, 0}, 2, Rep::Spin}, // p = 0 twisted regime
         }) {
        CAPTURE(c.t);
        CAPTURE((int)c.rep);
        AffineDatum d = datum(c.t, c.s, c.k);
        VerifyReport rep = verify(d, c.rep, Rat(1));
        for (auto& chk : rep.checks) {
            CAPTURE(chk.name);
            CHECK(chk.ok);
        }
        CHECK(rep.ok);
    }
}

TEST_CASE("verify: hermitian charges at depth 1") {
    AffineDatum d = datum("A2", {1, 1, 0}, 1);
    VerifyReport basic = verify(d, Rep::Basic, Rat(1), -2, 2);
    CHECK(basic.ok);
    VerifyReport spin = verify(d, Rep::Spin, Rat(1), -2, 2);
    CHECK(spin.ok);
}

TEST_CASE("fault injection: a half-delta shift is detected") {
    AffineDatum d = datum("G2", {0, 1, 0}, 1);
    auto claimed = decompose_spin(d);
    claimed[0].components[1].weight =
        claimed[0].components[1].weight - Rat(1, 2) * d.kst.delta_k;
    VerifyReport rep = verify_claimed(d, Rep::Spin, claimed, Rat(1));
    CHECK(!rep.ok);
    CHECK(!rep.checks[0].residual.empty());
}

TEST_CASE("depth warning below one shell") {
    AffineDatum d = datum("G2", {0, 1, 0}, 1);
    VerifyReport rep = verify(d, Rep::Basic, Rat(1, 2));
    CHECK(rep.depth_warning);
}
