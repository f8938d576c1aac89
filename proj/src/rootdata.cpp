#include "affbranch/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace affbranch {

namespace {

void validate_sigma(const LieType& t, const AffineTable& tab, const InvolutionSpec& sig) {
    int nn = tab.nodes();
    if ((int)sig.s.size() != nn)
        throw InvalidInvolution("sigma has " + std::to_string(sig.s.size()) +
                                " entries, diagram " + tab.name + " has " +
                                std::to_string(nn) + " nodes");
    if (sig.k != 1 && sig.k != 2) throw InvalidInvolution("k must be 1 or 2");
    long long tot = 0;
    for (int i = 0; i < nn; ++i) {
        if (sig.s[i] < 0) throw InvalidInvolution("s_i must be non-negative");
        tot += (long long)sig.s[i] * tab.marks[i];
    }
    if (sig.k * tot != 2)
        throw InvalidInvolution("k * sum a_i s_i = " + std::to_string(sig.k * tot) +
                                " != 2: not an order-2 automorphism type");
    std::vector<int> nz;
    for (int i = 0; i < nn; ++i)
        if (sig.s[i] != 0) nz.push_back(i);
    if (t.complex_pair) {
        if (sig.k != 2 || nz != std::vector<int>{0} || sig.s[0] != 1)
            throw UnsupportedType("the complex case requires k = 2 and s = (1,0,...,0)");
        return;
    }
    if (nz.size() == 1) return; // s_p = 1 with k a_p = 2, or s_0 = 2 with k = 1
    if (nz.size() == 2 && nz[0] == 0 && sig.s[0] == 1 && sig.s[nz[1]] == 1 &&
        sig.k == 1 && tab.marks[nz[1]] == 1)
        return;
    throw UnsupportedType("unsupported involution type for " + tab.name +
                          "; use a diagram-equivalent form with s_0 != 0 or a "
                          "single nonzero s_p");
}

// orbit closure of a set of simple roots under their own reflections,
// tracked in subsystem coordinates
std::vector<FiniteRoot> closure_from(const AffineDatum& d, const std::vector<Vec>& simples) {
    size_t r = simples.size();
    Mat cart(r, zero_vec(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j)
            cart[i][j] = d.coroot_pairing(simples[j], simples[i]);
    std::set<std::vector<Rat>, VecLess> seen;
    std::vector<FiniteRoot> out;
    std::vector<std::vector<Rat>> frontier;
    for (size_t i = 0; i < r; ++i) {
        std::vector<Rat> c(r, Rat(0));
        c[i] = Rat(1);
        frontier.push_back(c);
        seen.insert(c);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<Rat>> next;
        for (auto& c : frontier) {
            for (size_t i = 0; i < r; ++i) {
                Rat pair(0);
                for (size_t j = 0; j < r; ++j)
                    if (!c[j].is_zero()) pair += cart[i][j] * c[j];
                std::vector<Rat> c2 = c;
                c2[i] -= pair;
                if (seen.insert(c2).second) next.push_back(c2);
            }
        }
        frontier = std::move(next);
    }
    for (auto& c : seen) {
        FiniteRoot fr;
        fr.coords.resize(r);
        Vec chart = zero_vec(d.chart_dim);
        for (size_t j = 0; j < r; ++j) {
            fr.coords[j] = (int)c[j].as_integer();
            if (!c[j].is_zero()) chart += c[j] * simples[j];
        }
        fr.chart = chart;
        out.push_back(fr);
    }
    std::sort(out.begin(), out.end(), [](const FiniteRoot& a, const FiniteRoot& b) {
        return a.coords < b.coords;
    });
    return out;
}

int height(const FiniteRoot& r) {
    int h = 0;
    for (int c : r.coords) h += c;
    return h;
}

FiniteRoot highest_root(const std::vector<FiniteRoot>& roots) {
    const FiniteRoot* best = nullptr;
    for (auto& r : roots)
        if (!best || height(r) > height(*best)) best = &r;
    for (auto& r : roots)
        for (size_t j = 0; j < r.coords.size(); ++j)
            if (r.coords[j] > best->coords[j])
                throw std::logic_error("highest root is not dominant");
    return *best;
}

} // namespace

Vec AffineDatum::chart_of(const std::vector<int>& rc) const {
    Vec v = zero_vec(chart_dim);
    for (int i = 0; i < nn; ++i)
        if (rc[i] != 0) v += Rat(rc[i]) * alpha[i];
    return v;
}

Vec AffineDatum::finite_part_of(const std::vector<int>& rc) const {
    Vec v = chart_of(rc);
    v[chart_dim - 1] = Rat(0);
    return v;
}

Vec AffineDatum::finite_coords(const Vec& mu) const {
    Vec rhs(n, Rat(0));
    for (int i = 1; i <= n; ++i) rhs[i - 1] = coroot_pairing(mu, alpha_bar[i]);
    return solve_linear(cartan_f, rhs);
}

bool AffineDatum::alpha_p_long() const {
    if (p_index < 0) return false;
    Rat len = gram[p_index][p_index];
    for (int i = 0; i < nn; ++i)
        if (len < gram[i][i]) return false;
    return true;
}

Vec AffineDatum::finite_to_k(const Vec& mu) const {
    if (!mu[chart_dim - 1].is_zero())
        throw ChartMismatch("finite_to_k: weight has a d' component");
    Vec out = zero_vec(kst.kdim);
    for (auto& id : kst.ideals) {
        out[id.slot0] = -dot(id.theta_covec_fun, mu);
        for (int j = 1; j <= id.rank; ++j)
            out[id.slot0 + j] = mu[id.label_node[j - 1]];
    }
    if (kst.varpi_slot >= 0) out[kst.varpi_slot] = dot(varpi_fun, mu);
    return out;
}

Vec AffineDatum::psi0_star(const Vec& lambda) const {
    if ((int)lambda.size() != chart_dim) throw ChartMismatch("psi0_star: wrong chart");
    return mat_vec(kst.psi0, lambda);
}

Vec AffineDatum::psi1_star(const Vec& lambda) const {
    if (is_complex()) throw NotApplicable("psi1 is not defined in the complex case");
    if ((int)lambda.size() != chart_dim) throw ChartMismatch("psi1_star: wrong chart");
    return mat_vec(kst.phi, mat_vec(w0_mat, lambda));
}

std::vector<FiniteRoot> root_closure(const AffineDatum& d, const std::vector<Vec>& simples) {
    return closure_from(d, simples);
}

Mat element_with_inversions(const AffineDatum& d, const std::vector<Vec>& simples,
                            std::vector<Vec> targets) {
    std::vector<int> word;
    while (!targets.empty()) {
        int pick = -1, ti = -1;
        for (size_t s = 0; s < simples.size() && pick < 0; ++s)
            for (size_t t = 0; t < targets.size(); ++t)
                if (targets[t] == simples[s]) {
                    pick = (int)s;
                    ti = (int)t;
                    break;
                }
        if (pick < 0) throw std::logic_error("element_with_inversions: set is not biconvex");
        word.push_back(pick);
        targets.erase(targets.begin() + ti);
        for (auto& t : targets) t = d.reflect(t, simples[pick]);
    }
    Mat m = identity_mat(d.chart_dim);
    for (int s : word) {
        // m := m o s_{simples[s]}
        Mat refl = identity_mat(d.chart_dim);
        Vec beta = simples[s];
        Vec f = mat_vec(d.Binv, beta);
        Rat len = dot(beta, f);
        for (int a = 0; a < d.chart_dim; ++a)
            for (int b = 0; b < d.chart_dim; ++b)
                refl[a][b] -= beta[a] * Rat(2) * f[b] / len;
        m = mat_mul(m, refl);
    }
    return m;
}

RootClassification classify_roots(const AffineDatum& d) { return d.cls; }

namespace {

void build_classification(AffineDatum& d) {
    RootClassification cls;
    cls.zero_mult = d.N - d.n;

    Rat maxlen(0);
    for (auto& r : d.delta_f) {
        Rat l = d.form(r.chart, r.chart);
        if (maxlen < l) maxlen = l;
    }
    auto is_long = [&](const Vec& v) { return d.form(v, v) == maxlen; };
    auto parity = [&](const Vec& v) {
        Rat val = dot(d.omega_p_fun, v);
        return (int)(((val.as_integer() % 2) + 2) % 2);
    };

    bool a2l = (d.table.twist == 2 && d.table.marks[0] == 2);
    if (d.is_complex()) {
        for (auto& r : d.delta_f) {
            cls.complex_.push_back(r.chart);
            cls.p_weights.push_back(r.chart);
        }
    } else if (d.k_twist() == 1) {
        for (auto& r : d.delta_f) {
            if (parity(r.chart) == 0) cls.compact.push_back(r.chart);
            else {
                cls.noncompact.push_back(r.chart);
                cls.p_weights.push_back(r.chart);
            }
        }
    } else if (!a2l) {
        for (auto& r : d.delta_f) {
            if (!is_long(r.chart)) {
                cls.complex_.push_back(r.chart);
                cls.p_weights.push_back(r.chart);
            } else if (parity(r.chart) == 0) {
                cls.compact.push_back(r.chart);
            } else {
                cls.noncompact.push_back(r.chart);
                cls.p_weights.push_back(r.chart);
            }
        }
    } else {
        for (auto& r : d.delta_f) {
            if (is_long(r.chart)) {
                cls.noncompact.push_back(r.chart);
                cls.p_weights.push_back(r.chart);
                cls.complex_.push_back(Rat(1, 2) * r.chart);
                cls.p_weights.push_back(Rat(1, 2) * r.chart);
            } else {
                cls.complex_.push_back(r.chart);
                cls.p_weights.push_back(r.chart);
            }
        }
    }

    for (auto& v : cls.p_weights) cls.p_set.insert(v);
    for (auto& v : cls.compact) cls.k_set.insert(v);
    for (auto& v : cls.complex_) cls.k_set.insert(v);
    for (auto& v : cls.noncompact) cls.ni_set.insert(v);

    // Delta_k must coincide with the level-zero roots, i.e. the closure of
    // the s_i = 0 simple roots.
    std::vector<Vec> pik;
    for (int i = 0; i < d.nn; ++i)
        if (d.sigma.s[i] == 0) pik.push_back(d.alpha[i]);
    auto level0 = closure_from(d, pik);
    if (level0.size() != cls.k_set.size())
        throw std::logic_error("root classification does not match level-0 roots");
    for (auto& r : level0) {
        if (!cls.k_set.count(r.chart))
            throw std::logic_error("root classification does not match level-0 roots");
        if (r.positive()) {
            cls.k_positive.push_back(r.chart);
            cls.k_pos_set.insert(r.chart);
        }
    }
    std::sort(cls.k_positive.begin(), cls.k_positive.end(), vec_less);

    d.cls = std::move(cls);
}

void build_w0_and_positive_p(AffineDatum& d) {
    std::vector<Vec> pik, pik_no0;
    for (int i = 0; i < d.nn; ++i)
        if (d.sigma.s[i] == 0) {
            pik.push_back(d.alpha[i]);
            if (i != 0) pik_no0.push_back(d.alpha[i]);
        }
    auto longest = [&](const std::vector<Vec>& simples) {
        if (simples.empty()) return identity_mat(d.chart_dim);
        auto roots = closure_from(d, simples);
        std::vector<Vec> pos;
        for (auto& r : roots)
            if (r.positive()) pos.push_back(r.chart);
        return element_with_inversions(d, simples, pos);
    };
    Mat u = longest(pik);
    Mat up = longest(pik_no0);
    d.w0_mat = mat_mul(u, up);
    Mat w0inv = mat_mul(up, u); // both factors are involutions

    auto nonneg = [&](const Vec& coords) {
        for (auto& c : coords)
            if (c < Rat(0)) return false;
        return true;
    };

    // w_0 stabilizes both Delta_k and Delta(p)
    for (auto& v : d.cls.k_set)
        if (!d.cls.k_set.count(mat_vec(d.w0_mat, v)))
            throw std::logic_error("w0 does not stabilize Delta_k");
    for (auto& v : d.cls.p_set)
        if (!d.cls.p_set.count(mat_vec(d.w0_mat, v)))
            throw std::logic_error("w0 does not stabilize Delta(p)");
    // compatibility: positive k-roots restrict into w0(positive part)
    std::vector<Vec> pikclosure_pos;
    {
        auto roots = closure_from(d, pik);
        for (auto& r : roots)
            if (r.positive()) pikclosure_pos.push_back(r.chart);
    }
    for (auto& g : pikclosure_pos)
        if (!nonneg(d.finite_coords(mat_vec(w0inv, g))))
            throw std::logic_error("compatible positive system check failed");

    std::vector<Vec> posp;
    for (auto& v : d.cls.p_weights)
        if (nonneg(d.finite_coords(mat_vec(w0inv, v)))) posp.push_back(v);
    if (2 * posp.size() != d.cls.p_weights.size())
        throw std::logic_error("positive p-weights are not half of Delta(p)");
    std::sort(posp.begin(), posp.end(), vec_less);
    d.cls.positive_p = posp;
    Vec rn = zero_vec(d.chart_dim);
    for (auto& v : posp) rn += v;
    d.cls.rho_n = Rat(1, 2) * rn;
}

void build_kstructure(AffineDatum& d) {
    KStructure kst;
    for (int i = 0; i < d.nn; ++i)
        if (d.sigma.s[i] == 0) kst.pi_k_nodes.push_back(i);

    // connected components of the s_i = 0 subdiagram
    std::vector<std::vector<int>> comps;
    std::set<int> left(kst.pi_k_nodes.begin(), kst.pi_k_nodes.end());
    while (!left.empty()) {
        std::vector<int> comp{*left.begin()};
        left.erase(left.begin());
        for (size_t q = 0; q < comp.size(); ++q)
            for (auto it = left.begin(); it != left.end();)
                if (d.table.cartan[comp[q]][*it] != 0) {
                    comp.push_back(*it);
                    it = left.erase(it);
                } else
                    ++it;
        std::sort(comp.begin(), comp.end());
        comps.push_back(comp);
    }
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        bool a0 = !a.empty() && a[0] == 0, b0 = !b.empty() && b[0] == 0;
        if (a0 != b0) return a0;
        return a < b;
    });

    long long rank_sum = 0;
    int slot = 0;
    for (auto& comp : comps) {
        SimpleIdeal id;
        auto fc = classify_finite_diagram(d.gram, comp);
        id.family = fc.family;
        id.rank = fc.rank;
        id.label_node = fc.node_of_label;
        id.slot0 = slot;
        slot += id.rank + 1;
        rank_sum += id.rank;

        std::vector<Vec> simples;
        for (int node : id.label_node) simples.push_back(d.alpha[node]);
        id.roots = closure_from(d, simples);
        FiniteRoot theta = highest_root(id.roots);
        id.theta_chart = theta.chart;
        id.theta_len2 = d.form(theta.chart, theta.chart);

        id.theta_covec_fun = zero_vec(d.chart_dim);
        Rat hv(1);
        for (int j = 0; j < id.rank; ++j) {
            int node = id.label_node[j];
            Rat y = Rat(theta.coords[j]) * d.gram[node][node] / id.theta_len2;
            id.theta_covec_fun[node] = y;
            hv += y;
        }
        id.hvee_S = hv.as_integer();
        Rat ns = Rat(d.table.marks[0] * d.sigma.k) * d.gram[0][0] / id.theta_len2;
        id.n_S = ns.as_integer();
        if (id.n_S < 1 || id.n_S > 4) throw std::logic_error("n_S out of range");
        id.j_S = id.n_S * d.hvee - id.hvee_S;
        // j_S = 0 happens only for the trivial grading s = (2,0,...,0) used
        // as an auxiliary enumeration datum
        if (id.j_S < 0) throw std::logic_error("negative level j_S");
        id.c_S = Rat(id.n_S, d.sigma.k);
        kst.ideals.push_back(std::move(id));
    }

    kst.center_dim = (int)(d.n - rank_sum);
    if (kst.center_dim != (d.hermitian() ? 1 : 0))
        throw std::logic_error("unexpected center dimension");
    kst.dk_slot = slot;
    kst.kdim = slot + 1;
    if (d.hermitian()) kst.varpi_slot = kst.kdim++;

    // chart maps
    auto build_map = [&](const Rat& ks_factor, const Rat& dk_value) {
        Mat m(kst.kdim, zero_vec(d.chart_dim));
        for (auto& id : kst.ideals) {
            for (int a = 0; a < d.chart_dim; ++a)
                m[id.slot0][a] = ks_factor * id.c_S * d.Kprime_fun[a] - id.theta_covec_fun[a];
            for (int j = 1; j <= id.rank; ++j)
                m[id.slot0 + j][id.label_node[j - 1]] = Rat(1);
        }
        m[kst.dk_slot][d.chart_dim - 1] = dk_value;
        if (kst.varpi_slot >= 0)
            for (int a = 0; a < d.chart_dim; ++a) m[kst.varpi_slot][a] = d.varpi_fun[a];
        return m;
    };
    kst.psi0 = build_map(Rat(2), Rat(1, 2));
    kst.phi = build_map(Rat(d.sigma.k), Rat(1));

    kst.Lambda0k = zero_vec(kst.kdim);
    kst.rho_k_hat = zero_vec(kst.kdim);
    for (auto& id : kst.ideals) {
        kst.Lambda0k[id.slot0] = Rat(id.j_S);
        for (int j = 0; j <= id.rank; ++j) kst.rho_k_hat[id.slot0 + j] = Rat(1);
    }
    kst.delta_k = zero_vec(kst.kdim);
    kst.delta_k[kst.dk_slot] = Rat(1);

    d.kst = std::move(kst);
    d.kst.rho_n_k = d.finite_to_k(d.cls.rho_n);
    if (d.hermitian()) d.kst.nu_varpi_k = d.finite_to_k(d.nu_varpi);

    // psi_0^*(rho^) = Lambda_{0,k} + rho^_k, and psi_0^*(delta') = delta_k / 2
    Vec lhs = d.psi0_star(d.rho_hat);
    Vec rhs = d.kst.Lambda0k + d.kst.rho_k_hat;
    if (lhs != rhs) throw std::logic_error("psi0*(rho) != Lambda_{0,k} + rho_k");
    if (d.psi0_star(d.delta_prime) != Rat(1, 2) * d.kst.delta_k)
        throw std::logic_error("psi0*(delta') != delta_k / 2");
}

} // namespace

AffineDatum build_affine_datum(const LieType& t, const InvolutionSpec& sig) {
    AffineDatum d;
    d.type = t;
    d.sigma = sig;
    d.table = affine_table(t, sig.k);
    validate_sigma(t, d.table, sig);
    d.nn = d.table.nodes();
    d.n = d.nn - 1;
    d.N = t.complex_pair ? 2 * t.rank : t.rank;
    d.chart_dim = d.n + 2;
    for (int i = 0; i < d.nn; ++i) d.hvee += d.table.comarks[i];

    {
        std::vector<int> nz;
        for (int i = 0; i < d.nn; ++i)
            if (sig.s[i] != 0) nz.push_back(i);
        if (t.complex_pair) d.p_index = 0;
        else if (nz.size() == 1) d.p_index = nz[0];
        else { d.p_index = -1; d.herm_node = nz[1]; }
    }

    // invariant form on the simple roots: (alpha_i, alpha_j) = (a_i^vee / a_i) A_ij
    d.gram = Mat(d.nn, zero_vec(d.nn));
    for (int i = 0; i < d.nn; ++i)
        for (int j = 0; j < d.nn; ++j)
            d.gram[i][j] = Rat(d.table.comarks[i], d.table.marks[i]) * Rat(d.table.cartan[i][j]);
    for (int i = 0; i < d.nn; ++i)
        for (int j = 0; j < d.nn; ++j) {
            if (d.gram[i][j] != d.gram[j][i])
                throw std::logic_error("Gram matrix is not symmetric");
            Rat back = Rat(2) * d.gram[i][j] / d.gram[i][i];
            if (back != Rat(d.table.cartan[i][j]))
                throw std::logic_error("Gram matrix does not reproduce the Cartan matrix");
        }

    // Gram of the Cartan basis (coroots, d')
    d.B = Mat(d.chart_dim, zero_vec(d.chart_dim));
    for (int i = 0; i < d.nn; ++i) {
        for (int j = 0; j < d.nn; ++j)
            d.B[i][j] = Rat(4) * d.gram[i][j] / (d.gram[i][i] * d.gram[j][j]);
        d.B[i][d.nn] = Rat(2 * sig.s[i]) / d.gram[i][i];
        d.B[d.nn][i] = d.B[i][d.nn];
    }
    d.Binv = mat_inverse(d.B);

    for (int i = 0; i < d.nn; ++i) {
        Vec a = zero_vec(d.chart_dim);
        for (int j = 0; j < d.nn; ++j) a[j] = Rat(d.table.cartan[j][i]);
        a[d.nn] = Rat(sig.s[i]);
        d.alpha.push_back(a);
        Vec ab = a;
        ab[d.nn] = Rat(0);
        d.alpha_bar.push_back(ab);
    }

    d.rho_hat = zero_vec(d.chart_dim);
    for (int i = 0; i < d.nn; ++i) d.rho_hat[i] = Rat(1);
    d.delta_prime = zero_vec(d.chart_dim);
    d.delta_prime[d.nn] = Rat(1);

    d.delta = zero_vec(d.chart_dim);
    long long sas = 0;
    for (int i = 0; i < d.nn; ++i) {
        d.delta += Rat(d.table.marks[i]) * d.alpha[i];
        sas += (long long)d.table.marks[i] * sig.s[i];
    }
    for (int i = 0; i < d.nn; ++i)
        if (!d.delta[i].is_zero())
            throw std::logic_error("delta = sum a_i alpha_i has a nonzero finite part");
    if (d.delta[d.nn] != Rat(sas))
        throw std::logic_error("delta has the wrong d' value");

    d.K_fun = zero_vec(d.chart_dim);
    for (int i = 0; i < d.nn; ++i) d.K_fun[i] = Rat(d.table.comarks[i]);
    d.Kprime_fun = Rat(sig.k, 2) * d.K_fun;
    if (dot(d.rho_hat, d.K_fun) != Rat(d.hvee))
        throw std::logic_error("rho(K) != dual Coxeter number");

    // cartan matrix of Pi_f = {alpha_bar_1 .. alpha_bar_n}
    d.cartan_f = Mat(d.n, zero_vec(d.n));
    for (int i = 1; i <= d.n; ++i)
        for (int j = 1; j <= d.n; ++j)
            d.cartan_f[i - 1][j - 1] = Rat(d.table.cartan[i][j]);

    // omega solve: basis coordinates u of the element of h_0 dual to node `idx`
    auto solve_omega = [&](int idx) {
        Mat a(d.chart_dim, zero_vec(d.chart_dim));
        Vec b = zero_vec(d.chart_dim);
        for (int j = 1; j <= d.n; ++j) { // alpha_bar_j(u) = delta_{j,idx}
            for (int i = 0; i < d.nn; ++i) a[j - 1][i] = Rat(d.table.cartan[i][j]);
            b[j - 1] = Rat(j == idx ? 1 : 0);
        }
        a[d.n][d.nn] = Rat(1); // no d' component
        for (int i = 0; i < d.nn; ++i) a[d.n + 1][i] = d.B[d.nn][i]; // (d', u) = 0
        return solve_linear(a, b);
    };
    int omega_node = d.p_index >= 1 ? d.p_index : (d.hermitian() ? d.herm_node : -1);
    d.omega_p_fun = omega_node >= 1 ? solve_omega(omega_node) : zero_vec(d.chart_dim);
    if (d.hermitian()) {
        d.varpi_fun = d.omega_p_fun;
        Vec bu = mat_vec(d.B, d.varpi_fun);
        d.nu_varpi = bu;
        d.varpi_norm2 = dot(d.varpi_fun, bu);
    } else {
        d.varpi_fun = zero_vec(d.chart_dim);
        d.nu_varpi = zero_vec(d.chart_dim);
        d.varpi_norm2 = Rat(0);
    }

    {
        std::vector<Vec> pif(d.alpha_bar.begin() + 1, d.alpha_bar.end());
        d.delta_f = closure_from(d, pif);
    }

    build_classification(d);
    build_w0_and_positive_p(d);
    build_kstructure(d);

    if (d.hermitian()) {
        Rat dimp(d.dim_p());
        if (Rat(d.hvee) * d.varpi_norm2 != dimp / Rat(2))
            throw std::logic_error("hermitian normalization check failed");
        if (dot(d.varpi_fun, d.cls.rho_n) != dimp / Rat(4))
            throw std::logic_error("rho_n(varpi) != dim(p)/4");
    }
    return d;
}

MuStructure build_lprime(const AffineDatum& d) {
    if (d.is_complex())
        throw NotApplicable("L'(g,sigma) is not used in the complex case");
    if (d.p_index < 0)
        throw NotApplicable("L'(g,sigma) requires a single nonzero s_p");
    MuStructure mu;
    for (int i = 1; i <= d.n; ++i) mu.pi_f.push_back(d.alpha_bar[i]);
    mu.w0 = d.w0_mat;

    FiniteRoot thf = highest_root(d.delta_f);
    Vec alpha0mu = d.delta_prime - thf.chart;
    std::vector<Vec> pimu{alpha0mu};
    for (auto& v : mu.pi_f) pimu.push_back(v);

    bool a2l = (d.table.twist == 2 && d.table.marks[0] == 2);
    Mat bmu = d.B;
    if (d.sigma.k == 2 && !a2l)
        for (int i = 0; i < d.nn; ++i)
            for (int j = 0; j < d.nn; ++j) bmu[i][j] = Rat(2) * bmu[i][j];
    Mat bmu_inv = mat_inverse(bmu);
    auto form_mu = [&](const Vec& x, const Vec& y) { return dot(x, mat_vec(bmu_inv, y)); };

    if (d.sigma.k == 1) {
        mu.kind = MuStructure::Kind::KMu;
        mu.lprime_simple_roots = pimu;
        mu.mult_odd = mu.mult_even = d.n;
    } else if (!a2l) {
        mu.kind = MuStructure::Kind::KMuDual;
        for (auto& b : pimu)
            mu.lprime_simple_roots.push_back(Rat(2) / form_mu(b, b) * b);
        mu.mult_odd = 2 * d.n - d.N;
        mu.mult_even = d.n;
    } else {
        mu.kind = MuStructure::Kind::A2nDual;
        mu.lprime_simple_roots.push_back(Rat(1, 2) * alpha0mu);
        for (auto& v : mu.pi_f) mu.lprime_simple_roots.push_back(v);
        mu.mult_odd = mu.mult_even = d.n;
    }

    if (mu.kind == MuStructure::Kind::A2nDual) {
        // here rho' = (h^vee Lambda_mu + 2 rho_f) / 2, the weight entering the
        // spin character identities for this diagram
        Vec lmu = zero_vec(d.chart_dim);
        for (int i = 0; i < d.nn; ++i) lmu[i] = Rat(2 * d.sigma.s[i]) / d.gram[i][i];
        Vec two_rho = zero_vec(d.chart_dim);
        for (auto& r : d.delta_f)
            if (r.positive()) two_rho += r.chart;
        mu.lprime_rho = Rat(1, 2) * (Rat(d.hvee) * lmu + two_rho);
        return mu;
    }

    // rho' is dual to the coroots of Pi', with rho'(d') = 0
    Mat a(d.chart_dim, zero_vec(d.chart_dim));
    Vec b = zero_vec(d.chart_dim);
    for (int i = 0; i < d.nn; ++i) {
        const Vec& g = mu.lprime_simple_roots[i];
        Vec riesz = mat_vec(bmu_inv, g);
        Rat len = form_mu(g, g);
        for (int j = 0; j < d.chart_dim; ++j) a[i][j] = Rat(2) * riesz[j] / len;
        b[i] = Rat(1);
    }
    a[d.nn][d.nn] = Rat(1);
    mu.lprime_rho = solve_linear(a, b);
    return mu;
}

std::vector<PRoot> positive_p_roots(const AffineDatum& d, const Rat& depth) {
    if (depth < Rat(0)) throw Error("positive_p_roots: depth must be >= 0");
    std::vector<PRoot> out;
    for (long long m = 0;; ++m) {
        Rat deg = Rat(m) + Rat(1, 2);
        if (depth < deg) break;
        for (auto& v : d.cls.p_weights) out.push_back({deg, d.finite_to_k(v), 1});
        if (d.cls.zero_mult > 0)
            out.push_back({deg, zero_vec(d.kst.kdim), d.cls.zero_mult});
    }
    return out;
}

} // namespace affbranch
