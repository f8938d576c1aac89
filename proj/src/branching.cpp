#include "affbranch/branching.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace affbranch {

namespace {

std::string finite_weight_str(const AffineDatum& d, const Vec& mu) {
    Vec c = d.finite_coords(mu);
    std::string s = "e[";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += c[i].str();
    }
    return s + "]";
}

std::string spinor_factor(const AffineDatum& d, int texp, const Vec& mu) {
    return "(t^" + std::to_string(texp) + " " + finite_weight_str(d, mu) + ")";
}

void check_component(const AffineDatum& d, const Vec& weight) {
    for (auto& id : d.kst.ideals)
        for (int j = 0; j <= id.rank; ++j) {
            const Rat& c = weight[id.slot0 + j];
            if (!c.is_integer() || c < Rat(0))
                throw std::logic_error("component is not dominant integral");
        }
}

// canonical order: by descending delta coefficient, then chart order
struct ComponentLess {
    const AffineDatum* d;
    bool operator()(const Component& a, const Component& b) const {
        Rat da = a.weight[d->kst.dk_slot], db = b.weight[d->kst.dk_slot];
        if (da != db) return db < da;
        return vec_less(a.weight, b.weight);
    }
};

long long pow2(long long e) {
    if (e < 0) throw std::logic_error("negative power of two in a multiplier");
    return 1LL << e;
}

// the delta'-degree transported to the spin chart: (level - omega_p value)/2
Rat spin_delta_term(const AffineDatum& d, int level, const Vec& fin) {
    return (Rat(level) - dot(d.omega_p_fun, fin)) / Rat(2);
}

struct SpinFrame {
    AffineDatum fresh;
    std::vector<int> orig_node_of_label; // fresh finite label -> original node
};

SpinFrame make_spin_frame(const AffineDatum& d) {
    std::vector<int> finite_nodes;
    for (int i = 1; i <= d.n; ++i) finite_nodes.push_back(i);
    auto fc = classify_finite_diagram(d.gram, finite_nodes);
    LieType ft;
    ft.family = fc.family;
    ft.rank = fc.rank;
    InvolutionSpec fs;
    fs.k = 1;
    fs.s.assign(fc.rank + 1, 0);
    if (d.p_index >= 1) {
        int lab = -1;
        for (int j = 0; j < fc.rank; ++j)
            if (fc.node_of_label[j] == d.p_index) lab = j + 1;
        if (lab < 0) throw std::logic_error("p node not found in the finite diagram");
        AffineTable ftab = affine_table(ft, 1);
        fs.s[lab] = 1;
        fs.s[0] = 2 - ftab.marks[lab];
        if (fs.s[0] < 0) throw std::logic_error("unexpected mark at the p node");
    } else {
        fs.s[0] = 2;
    }
    SpinFrame frame{build_affine_datum(ft, fs), fc.node_of_label};
    return frame;
}

// fresh finite chart vector -> original finite chart vector
Vec transport(const AffineDatum& d, const SpinFrame& fr, const Vec& mu) {
    Vec coords = fr.fresh.finite_coords(mu);
    Vec out = zero_vec(d.chart_dim);
    for (size_t j = 0; j < coords.size(); ++j)
        if (!coords[j].is_zero()) out += coords[j] * d.alpha_bar[fr.orig_node_of_label[j]];
    return out;
}

} // namespace

std::string module_name(ModuleId m, long long spin_m) {
    switch (m) {
    case ModuleId::Basic: return "basic";
    case ModuleId::Vector: return "vector";
    case ModuleId::SpinTop: return "spin(L" + std::to_string(spin_m) + ")";
    case ModuleId::SpinSecond: return "spin(L" + std::to_string(spin_m - 1) + ")";
    }
    return "?";
}

std::vector<std::vector<long long>> ideal_coefficients(const AffineDatum& d,
                                                       const Vec& weight) {
    std::vector<std::vector<long long>> out;
    for (auto& id : d.kst.ideals) {
        std::vector<long long> c;
        for (int j = 0; j <= id.rank; ++j) c.push_back(weight[id.slot0 + j].as_integer());
        out.push_back(std::move(c));
    }
    return out;
}

Rat delta_coefficient(const AffineDatum& d, const Vec& weight) {
    return weight[d.kst.dk_slot];
}

Decomposition decompose_basic_vector(const AffineDatum& d, int eps) {
    if (d.hermitian())
        throw HasCenter("k has a center: use decompose_hermitian with a charge");
    if (eps != 0 && eps != 1) throw Error("eps must be 0 or 1");

    std::vector<WeylElement> elements = enumerate_minuscule(d);
    size_t n_minuscule = elements.size();
    if (d.p_index >= 1 && d.alpha_p_long()) elements.push_back(w_sigma(d));

    Decomposition dec;
    dec.module = eps ? ModuleId::Vector : ModuleId::Basic;
    for (size_t q = 0; q < elements.size(); ++q) {
        const WeylElement& w = elements[q];
        if (w.length() % 2 != eps) continue;
        Vec sum = zero_vec(d.chart_dim);
        for (auto& beta : w.inversions) sum += d.chart_of(beta);
        Component c;
        c.weight = d.kst.Lambda0k - d.psi0_star(sum) + Rat(eps, 2) * d.kst.delta_k;
        check_component(d, c.weight);
        bool wsig = q >= n_minuscule;
        c.label.kind = wsig ? ComponentLabel::Kind::WSigma : ComponentLabel::Kind::Abelian;
        for (auto& beta : w.inversions)
            c.label.subspace.push_back(zero_vec(d.chart_dim) - d.finite_part_of(beta));
        std::sort(c.label.subspace.begin(), c.label.subspace.end(), vec_less);
        if (!wsig) {
            for (auto& a : c.label.subspace) c.hwv += spinor_factor(d, -2, a);
        } else {
            Vec ap = d.alpha_bar[d.p_index];
            for (auto& beta : w.inversions) {
                Vec fin = d.finite_part_of(beta);
                if (fin == ap) continue; // the alpha_p and alpha_p + 2delta' factors
                c.hwv += spinor_factor(d, -2, zero_vec(d.chart_dim) - fin);
            }
            c.hwv += spinor_factor(d, -2, zero_vec(d.chart_dim) - ap);
            c.hwv += spinor_factor(d, -3, zero_vec(d.chart_dim) - ap);
        }
        dec.components.push_back(std::move(c));
    }
    std::sort(dec.components.begin(), dec.components.end(), ComponentLess{&d});
    return dec;
}

namespace {

// shared component constructor for the spin regimes driven by sigma-minuscule
// enumeration: weight = Lambda_{0,k} + rho_n - sum over N(w) of
// (w0(beta_bar) + spin delta term) transported to the k-chart
Component spin_component(const AffineDatum& d, const WeylElement& w,
                         const std::vector<Vec>& finite_parts,
                         const std::vector<int>& levels, bool use_w0) {
    Vec fsum = zero_vec(d.chart_dim);
    Rat dsum(0);
    for (size_t i = 0; i < finite_parts.size(); ++i) {
        Vec f = use_w0 ? mat_vec(d.w0_mat, finite_parts[i]) : finite_parts[i];
        fsum += f;
        dsum += spin_delta_term(d, levels[i], finite_parts[i]);
    }
    if (!dsum.is_integer())
        throw std::logic_error("spin delta coefficient is not an integer");
    Component c;
    c.weight = d.kst.Lambda0k + d.kst.rho_n_k - d.finite_to_k(fsum) - dsum * d.kst.delta_k;
    check_component(d, c.weight);
    c.label.kind = ComponentLabel::Kind::Abelian;
    for (auto& f : finite_parts) c.label.subspace.push_back(zero_vec(d.chart_dim) - f);
    std::sort(c.label.subspace.begin(), c.label.subspace.end(), vec_less);
    (void)w;
    return c;
}

std::string spin_hwv(const AffineDatum& d, const std::vector<Vec>& subspace,
                     bool zero_modes) {
    // pure spinor factors split by the sign of w0(alpha) in the compatible system
    std::set<Vec, VecLess> posp(d.cls.positive_p.begin(), d.cls.positive_p.end());
    std::string s = zero_modes ? "(zero-mode sector) " : "";
    for (auto& a : subspace) {
        Vec wa = mat_vec(d.w0_mat, a);
        s += spinor_factor(d, posp.count(wa) ? -1 : 0, wa);
    }
    return s;
}

void append_spin_modules(std::vector<Decomposition>& out, long long L, long long spin_m,
                         std::vector<Component> comps) {
    if (L % 2 == 1) {
        Decomposition top;
        top.module = ModuleId::SpinTop;
        top.global_multiplier = pow2((L - 1) / 2);
        top.spin_m = spin_m;
        top.components = std::move(comps);
        out.push_back(std::move(top));
    } else {
        for (ModuleId m : {ModuleId::SpinTop, ModuleId::SpinSecond}) {
            Decomposition dec;
            dec.module = m;
            dec.global_multiplier = pow2(L / 2 - 1);
            dec.spin_m = spin_m;
            dec.components = comps;
            out.push_back(std::move(dec));
        }
    }
}

} // namespace

std::vector<Decomposition> decompose_spin(const AffineDatum& d) {
    if (d.hermitian())
        throw HasCenter("k has a center: use decompose_hermitian with a charge");
    long long m = d.dim_p() / 2;
    long long L = d.N - d.n;
    std::vector<Decomposition> out;

    if (d.is_complex()) {
        Component c;
        c.weight = d.kst.rho_k_hat;
        c.label.kind = ComponentLabel::Kind::Abelian;
        append_spin_modules(out, L, m, {c});
        return out;
    }

    bool a2l = (d.table.twist == 2 && d.table.marks[0] == 2);
    if (d.k_twist() == 1) {
        // equal rank: components over Sigma split by parity, plus the w_sigma
        // component on the side of its length
        std::vector<WeylElement> elements = enumerate_minuscule(d);
        size_t n_minuscule = elements.size();
        if (d.p_index >= 1 && d.alpha_p_long()) elements.push_back(w_sigma(d));
        Decomposition top, second;
        top.module = ModuleId::SpinTop;
        second.module = ModuleId::SpinSecond;
        top.spin_m = second.spin_m = m;
        for (size_t q = 0; q < elements.size(); ++q) {
            const WeylElement& w = elements[q];
            std::vector<Vec> fins;
            std::vector<int> levels;
            for (auto& beta : w.inversions) {
                fins.push_back(d.finite_part_of(beta));
                levels.push_back(d.level_of(beta));
            }
            Component c = spin_component(d, w, fins, levels, /*use_w0=*/true);
            if (q >= n_minuscule) {
                c.label.kind = ComponentLabel::Kind::WSigma;
                Vec ap = d.alpha_bar[d.p_index];
                std::string s;
                std::vector<std::pair<int, Vec>> factors;
                for (auto& beta : w.inversions) {
                    Vec fin = d.finite_part_of(beta);
                    if (fin == ap) continue;
                    bool neg = true;
                    for (auto& co : d.finite_coords(fin))
                        if (Rat(0) < co) neg = false;
                    factors.push_back({neg ? 0 : -1, zero_vec(d.chart_dim) - fin});
                }
                std::sort(factors.begin(), factors.end(),
                          [](auto& a, auto& b) { return a.first < b.first; });
                for (auto& f : factors) s += spinor_factor(d, f.first, f.second);
                s += spinor_factor(d, 0, zero_vec(d.chart_dim) - ap);
                s += spinor_factor(d, -1, zero_vec(d.chart_dim) - ap);
                c.hwv = s;
            } else {
                c.hwv = spin_hwv(d, c.label.subspace, false);
            }
            (w.length() % 2 == 0 ? top : second).components.push_back(std::move(c));
        }
        std::sort(top.components.begin(), top.components.end(), ComponentLess{&d});
        std::sort(second.components.begin(), second.components.end(), ComponentLess{&d});
        out.push_back(std::move(top));
        out.push_back(std::move(second));
        return out;
    }

    std::vector<Component> comps;
    if (a2l) {
        auto reps = enumerate_coset_reps(d, [&](const RootVec& r) {
            return d.level_of(r) == 1 && d.cls.ni_set.count(d.finite_part_of(r)) != 0;
        });
        for (auto& w : reps) {
            std::vector<Vec> fins;
            std::vector<int> levels;
            for (auto& beta : w.inversions) {
                fins.push_back(d.finite_part_of(beta));
                levels.push_back(d.level_of(beta));
            }
            // A_{2n}^(2): weight = Lambda_{0,k} + rho_n + <A> - |A| delta_k
            Vec asum = zero_vec(d.chart_dim);
            for (auto& f : fins) asum -= f;
            Component c;
            c.weight = d.kst.Lambda0k + d.kst.rho_n_k + d.finite_to_k(asum) -
                       Rat((long long)fins.size()) * d.kst.delta_k;
            check_component(d, c.weight);
            c.label.kind = ComponentLabel::Kind::Abelian;
            for (auto& f : fins) c.label.subspace.push_back(zero_vec(d.chart_dim) - f);
            std::sort(c.label.subspace.begin(), c.label.subspace.end(), vec_less);
            c.mult = 1;
            std::string s = "(zero-mode sector) ";
            for (auto& a : c.label.subspace) s += spinor_factor(d, -1, a);
            c.hwv = s;
            comps.push_back(std::move(c));
        }
    } else {
        // non-equal rank, a_0 = 1: enumerate in the untwisted datum of the
        // mu-fixed subalgebra and transport back
        SpinFrame fr = make_spin_frame(d);
        auto reps = enumerate_coset_reps(fr.fresh, [&](const RootVec& r) {
            if (fr.fresh.level_of(r) % 2 == 0) return false;
            return d.cls.ni_set.count(transport(d, fr, fr.fresh.finite_part_of(r))) != 0;
        });
        for (auto& w : reps) {
            std::vector<Vec> fins;
            std::vector<int> levels;
            for (auto& beta : w.inversions) {
                fins.push_back(transport(d, fr, fr.fresh.finite_part_of(beta)));
                levels.push_back(fr.fresh.level_of(beta));
            }
            Component c = spin_component(d, w, fins, levels, /*use_w0=*/true);
            c.hwv = spin_hwv(d, c.label.subspace, true);
            comps.push_back(std::move(c));
        }
    }
    std::sort(comps.begin(), comps.end(), ComponentLess{&d});
    append_spin_modules(out, L, m, std::move(comps));
    return out;
}

Decomposition decompose_hermitian(const AffineDatum& d, Rep rep, long long q) {
    if (!d.hermitian())
        throw NotHermitian("decompose_hermitian requires k with a center");
    long long dimp = d.dim_p();
    long long half = dimp / 2;
    Decomposition dec;
    dec.has_charge = true;
    dec.charge = q;
    long long qmod2 = ((q % 2) + 2) % 2;
    if (rep == Rep::Spin) {
        dec.module = qmod2 == 0 ? ModuleId::SpinTop : ModuleId::SpinSecond;
        dec.spin_m = dimp / 2;
    } else {
        dec.module = rep == Rep::Vector ? ModuleId::Vector : ModuleId::Basic;
        int eps = rep == Rep::Vector ? 1 : 0;
        if (qmod2 != eps) return dec; // empty eigenspace, not an error
    }

    std::set<Vec, VecLess> posp(d.cls.positive_p.begin(), d.cls.positive_p.end());
    for (auto& sub : hermitian_fundamental_subspaces(d)) {
        long long ip = 0;
        for (auto& wgt : sub.weights)
            if (posp.count(wgt)) ++ip;
        long long im = (long long)sub.weights.size() - ip;
        long long num = q - ip + im;
        if (((num % half) + half) % half != 0) continue;
        long long kI = num / half;

        Vec isum = zero_vec(d.chart_dim);
        for (auto& wgt : sub.weights) isum += wgt;
        Vec base = d.kst.Lambda0k + d.finite_to_k(isum) +
                   Rat(kI * d.hvee) * d.kst.nu_varpi_k;
        // delta_k coefficients of the translated alcove weights; the
        // translation index enters with the sign fixed by the coset-side
        // enumeration (see the hermitian regression tests)
        Rat quarter = Rat(dimp) / Rat(4);
        Component c;
        if (rep == Rep::Spin) {
            Rat cp = -quarter * Rat(kI * kI) - (Rat(ip - im) + quarter) * Rat(kI) - Rat(ip);
            c.weight = base + d.kst.rho_n_k + cp * d.kst.delta_k;
        } else {
            int eps = rep == Rep::Vector ? 1 : 0;
            Rat cc = -quarter * Rat(kI * kI) - Rat(ip - im) * Rat(kI) -
                     Rat((long long)sub.weights.size(), 2);
            c.weight = base + (cc + Rat(eps, 2)) * d.kst.delta_k;
        }
        check_component(d, c.weight);
        // the center acts on the component by the charge it was filed under
        Rat expected = rep == Rep::Spin ? Rat(dimp, 4) + Rat(q) : Rat(q);
        if (c.weight[d.kst.varpi_slot] != expected)
            throw std::logic_error("hermitian component has the wrong center charge");
        c.label.kind = ComponentLabel::Kind::Hermitian;
        c.label.subspace = sub.weights;
        c.label.k_I = kI;
        dec.components.push_back(std::move(c));
    }
    std::sort(dec.components.begin(), dec.components.end(), ComponentLess{&d});
    return dec;
}

std::vector<Decomposition> decompose(const AffineDatum& d, Rep rep) {
    if (rep == Rep::Spin) return decompose_spin(d);
    return {decompose_basic_vector(d, rep == Rep::Vector ? 1 : 0)};
}

std::vector<TypeCDecomposition> typec_lattice_paths(int m, int n) {
    if (m < 1 || n < 1) throw Error("typec_lattice_paths requires m, n >= 1");
    std::vector<std::vector<long long>> comps;
    std::vector<long long> cur(m + 1, 0);
    // weak compositions of n with m+1 parts
    std::function<void(int, long long)> rec = [&](int pos, long long left) {
        if (pos == m) {
            cur[m] = left;
            comps.push_back(cur);
            return;
        }
        for (long long v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, n);

    TypeCDecomposition basic{ModuleId::Basic, {}}, vector{ModuleId::Vector, {}},
        spin0{ModuleId::SpinTop, {}}, spin1{ModuleId::SpinSecond, {}};
    for (auto& k : comps) {
        long long eps = 0;
        for (int i = 0; i <= m; ++i) eps += i * k[i];
        eps &= 1;
        // zeta(k) and its complement in {1..m+n}
        std::vector<int> subset;
        long long acc = 0;
        for (int i = 1; i <= m; ++i) {
            acc += k[i - 1];
            subset.push_back((int)acc + i);
        }
        std::vector<int> compl_;
        {
            std::set<int> sset(subset.begin(), subset.end());
            for (int t = 1; t <= m + n; ++t)
                if (!sset.count(t)) compl_.push_back(t);
        }
        std::vector<long long> kp(n + 1, 0);
        kp[0] = compl_[0] - 1;
        for (int i = 1; i < n; ++i) kp[i] = compl_[i] - compl_[i - 1] - 1;
        kp[n] = m + n - compl_[n - 1];
        std::vector<long long> kpp(n + 1);
        for (int i = 0; i <= n; ++i) kpp[i] = kp[n - i];

        TypeCComponent bc{k, kpp};
        (eps == 0 ? basic : vector).components.push_back(bc);
        TypeCComponent sc{k, kp};
        // the top spin component is the path (0,..,0,n), whose parity is mn
        ((eps + (long long)m * n) % 2 == 0 ? spin0 : spin1).components.push_back(sc);
    }
    return {basic, vector, spin0, spin1};
}

} // namespace affbranch
