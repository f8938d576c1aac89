#include "affbranch/rootdata.hpp"

#include <doctest.h>

using namespace affbranch;

namespace {

AffineDatum datum(const std::string& type, std::vector<int> s, int k) {
    return build_affine_datum(parse_lie_type(type), {std::move(s), k});
}

} // namespace

TEST_CASE("G2 inner involution: k^ of type A1 x A1 at levels 2 and 10") {
    AffineDatum d = datum("G2", {0, 1, 0}, 1);
    REQUIRE(d.kst.ideals.size() == 2);
    CHECK(d.kst.ideals[0].type_str() == "A1");
    CHECK(d.kst.ideals[1].type_str() == "A1");
    CHECK(d.kst.ideals[0].j_S == 2);
    CHECK(d.kst.ideals[1].j_S == 10);
    CHECK(d.hvee == 4);
    CHECK(d.dim_p() == 8);
    CHECK(d.alpha_p_long());
    CHECK(d.cls.complex_.empty()); // inner case: no complex roots
}

TEST_CASE("D4 outer involution (0,1,0,0;2): k^ of type A1 x C2 at levels 10 and 3") {
    AffineDatum d = datum("D4", {0, 1, 0, 0}, 2);
    REQUIRE(d.kst.ideals.size() == 2);
    CHECK(d.kst.ideals[0].type_str() == "A1");
    CHECK(d.kst.ideals[0].j_S == 10);
    CHECK(d.kst.ideals[1].type_str() == "C2");
    CHECK(d.kst.ideals[1].j_S == 3);
    CHECK(d.table.name == "D4(2)");
    CHECK(d.hvee == 6);
    CHECK(d.alpha_p_long());
    // Lambda_{0,k} + rho_n is the top spin component 5L0+5L1 (x) 2L0+L1
    Vec top = d.kst.Lambda0k + d.kst.rho_n_k;
    CHECK(top[d.kst.ideals[0].slot0] == Rat(5));
    CHECK(top[d.kst.ideals[0].slot0 + 1] == Rat(5));
    CHECK(top[d.kst.ideals[1].slot0] == Rat(2));
    CHECK(top[d.kst.ideals[1].slot0 + 1] == Rat(1));
    CHECK(top[d.kst.ideals[1].slot0 + 2] == Rat(0));
}

TEST_CASE("complex A1: Delta(p) = Delta_k plus a zero weight") {
    AffineDatum d = datum("complex:A1", {1, 0}, 2);
    CHECK(d.N == 2);
    CHECK(d.n == 1);
    CHECK(d.cls.zero_mult == 1);
    CHECK(d.cls.p_weights.size() == 2);
    CHECK(d.cls.k_set.size() == 2);
    for (auto& v : d.cls.p_weights) CHECK(d.cls.k_set.count(v) == 1);
    CHECK(d.kst.ideals.size() == 1);
    CHECK(d.kst.ideals[0].j_S == 2); // dual Coxeter number of A1
}

TEST_CASE("invalid involutions are rejected") {
    CHECK_THROWS_AS(datum("G2", {0, 0, 1}, 1), InvalidInvolution); // k a_p = 3
    CHECK_THROWS_AS(datum("G2", {1, 1, 0}, 1), InvalidInvolution); // sum = 3
    CHECK_THROWS_AS(datum("B3", {0, 1, 0, 0}, 2), UnsupportedType); // no outer type
    CHECK_THROWS_AS(datum("A2", {0, 1, 1}, 1), UnsupportedType);    // not normalized
}

TEST_CASE("datum invariants on a spread of types") {
    struct Case { std::string t; std::vector<int> s; int k; };
    for (auto& [t, s, k] : std::vector<Case>{
             {"A2", {1, 1, 0}, 1},
             {"B3", {0, 0, 1, 0}, 1},
             {"C3", {0, 1, 0, 0}, 1},
             {"F4", {0, 1, 0, 0, 0}, 1},
             {"A4", {0, 0, 1}, 2},
             {"A3", {1, 0, 0}, 2},
             {"D4", {1, 0, 0, 0}, 2},
             {"E6", {0, 0, 0, 0, 1}, 2},
             {"complex:G2", {1, 0, 0}, 2},
         }) {
        CAPTURE(t);
        AffineDatum d = datum(t, s, k);
        // sum of marks times simple roots is a multiple of delta'
        Vec acc = zero_vec(d.chart_dim);
        for (int i = 0; i < d.nn; ++i) acc += Rat(d.table.marks[i]) * d.alpha[i];
        for (int i = 0; i < d.nn; ++i) CHECK(acc[i] == Rat(0));
        CHECK(acc[d.nn] == Rat(2, d.sigma.k));
        // the chart form evaluates coroot pairings back to the Cartan matrix
        for (int i = 0; i < d.nn; ++i)
            for (int j = 0; j < d.nn; ++j)
                CHECK(d.coroot_pairing(d.alpha[j], d.alpha[i]) ==
                      Rat(d.table.cartan[i][j]));
        CHECK(dot(d.rho_hat, d.K_fun) == Rat(d.hvee));
        // partition sizes: |Delta_ci| + |Delta_ni| + 2 |Delta_cx| counts
        // Delta_k and Delta(p)\0 with the complex part shared
        CHECK(d.cls.compact.size() + d.cls.noncompact.size() + 2 * d.cls.complex_.size() ==
              d.cls.k_set.size() + d.cls.p_weights.size());
    }
}

TEST_CASE("positive p-type roots at small depth") {
    AffineDatum d = datum("D4", {0, 1, 0, 0}, 2);
    auto r0 = positive_p_roots(d, Rat(0));
    CHECK(r0.empty()); // first shell sits at degree 1/2
    auto r1 = positive_p_roots(d, Rat(1));
    size_t imag = 0;
    for (auto& pr : r1) {
        CHECK(pr.degree == Rat(1, 2));
        if (is_zero(pr.finite)) {
            ++imag;
            CHECK(pr.mult == d.N - d.n);
        } else {
            CHECK(pr.mult == 1);
        }
    }
    CHECK(imag == 1);
    CHECK(r1.size() == d.cls.p_weights.size() + 1);

    AffineDatum c = datum("complex:A1", {1, 0}, 2);
    auto rc = positive_p_roots(c, Rat(1));
    CHECK(rc.size() == 3); // {alpha, -alpha, 0} at degree 1/2
}

TEST_CASE("A_2n(2) case: Delta_k consists of complex roots only") {
    AffineDatum d = datum("A4", {0, 0, 1}, 2);
    CHECK(d.table.name == "A4(2)");
    CHECK(d.cls.compact.empty());
    for (auto& v : d.cls.complex_) CHECK(d.cls.k_set.count(v) == 1);
    CHECK(d.cls.complex_.size() == d.cls.k_set.size());
    CHECK(d.kst.ideals.size() == 1);
    CHECK(d.kst.ideals[0].type_str() == "C2"); // so(5) = sp(4)
    CHECK(d.kst.ideals[0].j_S == 7); // index of the 14-dimensional so(5)-module
}

TEST_CASE("A2(2): the level-10 sl2 embedding") {
    AffineDatum d = datum("A2", {0, 1}, 2);
    REQUIRE(d.kst.ideals.size() == 1);
    CHECK(d.kst.ideals[0].type_str() == "A1");
    CHECK(d.kst.ideals[0].j_S == 10);
    CHECK(d.dim_p() == 5);
}

TEST_CASE("psi maps: transport of delta', rho and finite roots") {
    struct Case { std::string t; std::vector<int> s; int k; };
    for (auto& [t, s, k] : std::vector<Case>{
             {"G2", {0, 1, 0}, 1},
             {"D4", {0, 1, 0, 0}, 2},
             {"B3", {0, 0, 1, 0}, 1},
             {"A4", {0, 0, 1}, 2},
         }) {
        CAPTURE(t);
        AffineDatum d = datum(t, s, k);
        CHECK(d.psi0_star(d.delta_prime) == Rat(1, 2) * d.kst.delta_k);
        CHECK(d.psi0_star(d.rho_hat) == d.kst.Lambda0k + d.kst.rho_k_hat);
        // psi_0^* fixes the level-zero simple roots
        for (int i : d.kst.pi_k_nodes)
            CHECK(d.psi0_star(d.alpha[i]) == d.finite_to_k(d.alpha[i]));
        // spin transport: psi_1^*(delta') = delta_k and Lemma strho
        CHECK(d.psi1_star(d.delta_prime) == d.kst.delta_k);
        MuStructure mu = build_lprime(d);
        long long a0 = d.table.marks[0];
        CHECK(d.psi1_star(Rat(a0) * mu.lprime_rho) ==
              d.kst.Lambda0k + d.kst.rho_n_k + d.kst.rho_k_hat);
        // psi_1^*(Lambda_mu) = sum_S k c_S Lambda_0^S
        Vec lmu = zero_vec(d.chart_dim);
        for (int i = 0; i < d.nn; ++i)
            lmu[i] = Rat(2 * d.sigma.s[i]) / d.gram[i][i];
        Vec img = d.psi1_star(lmu);
        for (auto& id : d.kst.ideals) {
            CHECK(img[id.slot0] == Rat(d.sigma.k) * id.c_S);
            for (int j = 1; j <= id.rank; ++j) CHECK(img[id.slot0 + j] == Rat(0));
        }
    }
}

TEST_CASE("build_lprime: kinds and simple roots") {
    AffineDatum g2 = datum("G2", {0, 1, 0}, 1);
    MuStructure m1 = build_lprime(g2);
    CHECK(m1.kind == MuStructure::Kind::KMu);
    CHECK(m1.mult_odd == 2);
    CHECK(m1.lprime_simple_roots.size() == 3);

    AffineDatum d4 = datum("D4", {0, 1, 0, 0}, 2);
    MuStructure m2 = build_lprime(d4);
    CHECK(m2.kind == MuStructure::Kind::KMuDual);
    CHECK(m2.mult_odd == 2 * d4.n - d4.N); // 2
    CHECK(m2.mult_even == 3);

    AffineDatum a4 = datum("A4", {0, 0, 1}, 2);
    MuStructure m3 = build_lprime(a4);
    CHECK(m3.kind == MuStructure::Kind::A2nDual);
    // Pi' = {(delta' - theta_f)/2, finite simple roots}
    Vec first = m3.lprime_simple_roots[0];
    CHECK(first[a4.chart_dim - 1] == Rat(1, 2));

    AffineDatum cx = datum("complex:A2", {1, 0, 0}, 2);
    CHECK_THROWS_AS(build_lprime(cx), NotApplicable);
}

TEST_CASE("hermitian datum: center bookkeeping") {
    AffineDatum d = datum("A2", {1, 1, 0}, 1);
    CHECK(d.hermitian());
    CHECK(d.kst.center_dim == 1);
    CHECK(d.kst.varpi_slot >= 0);
    CHECK(d.dim_p() == 4);
    // all k-roots vanish on the center
    for (auto& v : d.cls.k_set) CHECK(dot(d.varpi_fun, v) == Rat(0));
    // p-weights have center eigenvalue +-1
    for (auto& v : d.cls.p_weights) {
        Rat e = dot(d.varpi_fun, v);
        CHECK((e == Rat(1) || e == Rat(-1)));
    }
}
