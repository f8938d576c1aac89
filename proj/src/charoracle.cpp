#include "affbranch/charoracle.hpp"

#include <algorithm>
#include <deque>

namespace affbranch {

namespace {

using WMap = std::map<Vec, long long, VecLess>;

void add_to(WMap& m, const Vec& w, long long c) {
    if (c == 0) return;
    auto it = m.find(w);
    if (it == m.end()) m.emplace(w, c);
    else {
        it->second = detail::checked_add(it->second, c);
        if (it->second == 0) m.erase(it);
    }
}

Rat degree_of(const AffineDatum& d, const Vec& w) { return -w[d.kst.dk_slot]; }

// multiply `m` by (1 + e^{-shift})^mult, truncating at `depth`
void binomial_factor(const AffineDatum& d, WMap& m, const Vec& shift, int mult,
                     const Rat& depth) {
    for (int q = 0; q < mult; ++q) {
        WMap extra;
        for (auto& [w, c] : m) {
            Vec t = w - shift;
            if (degree_of(d, t) <= depth) add_to(extra, t, c);
        }
        for (auto& [w, c] : extra) add_to(m, w, c);
    }
}

// Weyl-Kac machinery for a weighted family of highest weights.  All members
// share the denominator product, which is expanded up to a height bound that
// grows on demand; multiplicities come from the triangular recursion
// c(mu) = num(mu) - sum D(eta) c(mu+eta).
class CharEngine {
  public:
    CharEngine(const AffineDatum& d, std::vector<std::pair<Vec, long long>> tops,
               const Vec& base, const Rat& depth)
        : d_(d), tops_(std::move(tops)), base_(base), depth_(depth) {
        for (auto& [lambda, scale] : tops_)
            for (auto& id : d.kst.ideals)
                for (int j = 0; j <= id.rank; ++j) {
                    const Rat& c = lambda[id.slot0 + j];
                    if (!c.is_integer() || c < Rat(0))
                        throw NotDominant(
                            "irreducible_character: weight is not dominant integral");
                }
        // simple roots of k^ on the k-chart; the coroot pairing of a chart
        // weight against simple j is just its slot coordinate
        for (auto& id : d.kst.ideals) {
            simples_.push_back({d.kst.delta_k - d.finite_to_k(id.theta_chart), id.slot0});
            for (int j = 1; j <= id.rank; ++j)
                simples_.push_back(
                    {d.finite_to_k(d.alpha[id.label_node[j - 1]]), id.slot0 + j});
        }
        // height functional: htC * (dk coordinate) + sum of simple-root
        // coefficients of the finite part, positive on all positive roots
        hfun_ = zero_vec(d.kst.kdim);
        Rat cmax(0);
        for (auto& id : d.kst.ideals) {
            Mat a(id.rank, zero_vec(id.rank));
            for (int i = 0; i < id.rank; ++i)
                for (int j = 0; j < id.rank; ++j)
                    a[i][j] = Rat(d.table.cartan[id.label_node[i]][id.label_node[j]]);
            Mat ainv = mat_inverse(a);
            for (int j = 0; j < id.rank; ++j) {
                Rat col(0);
                for (int i = 0; i < id.rank; ++i) col += ainv[i][j];
                hfun_[id.slot0 + j + 1] = col;
            }
            Rat th(0);
            for (int c : highest(id).coords) th += Rat(c);
            if (cmax < th) cmax = th;
        }
        htC_ = cmax + Rat(1);
        for (auto& [lambda, scale] : tops_) {
            Rat h = ht(lambda);
            if (tops_max_ht_ < h) tops_max_ht_ = h;
        }
        build_numerator();
    }

    Rat ht(const Vec& deficit) const {
        Rat h = htC_ * deficit[d_.kst.dk_slot];
        for (int i = 0; i < d_.kst.kdim; ++i)
            if (!hfun_[i].is_zero() && !deficit[i].is_zero()) h += hfun_[i] * deficit[i];
        return h;
    }

    long long mult(const Vec& mu) {
        auto it = memo_.find(mu);
        if (it != memo_.end()) return it->second;
        long long value = 0;
        Rat hmu = ht(mu);
        Rat room = tops_max_ht_ - hmu; // recursion climbs toward the tops
        if (!(room < Rat(0)) && !((base_ - mu)[d_.kst.dk_slot] < Rat(0))) {
            ensure_denominator(room);
            auto nit = num_.find(mu);
            value = nit == num_.end() ? 0 : nit->second;
            for (auto& term : denom_) {
                if (room < term.ht) break;
                long long up = mult(mu + term.eta);
                if (up != 0)
                    value = detail::checked_add(value, -detail::checked_mul(term.coeff, up));
            }
        }
        memo_.emplace(mu, value);
        return value;
    }

    // all weights with nonzero signed multiplicity down to the degree bound
    WMap support() {
        WMap out;
        std::deque<Vec> queue;
        std::set<Vec, VecLess> seen;
        for (auto& [lambda, scale] : tops_)
            if (!(depth_ < (base_ - lambda)[d_.kst.dk_slot]) && seen.insert(lambda).second)
                queue.push_back(lambda);
        while (!queue.empty()) {
            Vec mu = queue.front();
            queue.pop_front();
            long long c = mult(mu);
            if (c != 0) add_to(out, mu, c);
            else if (!seen_top_.count(mu)) continue;
            // descend by the simple roots and by delta_k itself; the latter
            // keeps the walk connected through pure Heisenberg excitations
            auto visit = [&](const Vec& child) {
                if (depth_ < (base_ - child)[d_.kst.dk_slot]) return;
                if (seen.insert(child).second) queue.push_back(child);
            };
            for (auto& s : simples_) visit(mu - s.chart);
            visit(mu - d_.kst.delta_k);
        }
        return out;
    }

  private:
    struct KSimple {
        Vec chart;
        int slot;
    };
    struct DenomTerm {
        Vec eta;
        Rat ht;
        long long coeff;
    };

    static const FiniteRoot& highest(const SimpleIdeal& id) {
        const FiniteRoot* best = &id.roots.front();
        auto h = [](const FiniteRoot& r) {
            int s = 0;
            for (int c : r.coords) s += c;
            return s;
        };
        for (auto& r : id.roots)
            if (h(r) > h(*best)) best = &r;
        return *best;
    }

    void build_numerator() {
        // orbits of lambda + rho_k under the k^ Weyl group, pruned at the
        // global degree bound; each orbit is free since the points are regular
        for (auto& [lambda, scale] : tops_) {
            Vec start = lambda + d_.kst.rho_k_hat;
            std::deque<std::pair<Vec, long long>> queue{{start, scale}};
            std::set<Vec, VecLess> seen{start};
            while (!queue.empty()) {
                auto [pt, signed_scale] = queue.front();
                queue.pop_front();
                add_to(num_, pt - d_.kst.rho_k_hat, signed_scale);
                for (auto& s : simples_) {
                    Vec img = pt - pt[s.slot] * s.chart;
                    if (depth_ < (base_ - (img - d_.kst.rho_k_hat))[d_.kst.dk_slot])
                        continue;
                    if (seen.insert(img).second) queue.push_back({img, -signed_scale});
                }
            }
            seen_top_.insert(lambda);
        }
    }

    void ensure_denominator(const Rat& h) {
        if (!(denom_ht_bound_ < h)) return;
        Rat target = h + htC_;
        WMap dm;
        add_to(dm, zero_vec(d_.kst.kdim), 1);
        auto mul_term = [&](const Vec& alpha, int mult) {
            Rat ha = ht(alpha);
            if (target < ha || depth_ < alpha[d_.kst.dk_slot]) return;
            for (int q = 0; q < mult; ++q) {
                WMap extra;
                for (auto& [w, c] : dm) {
                    Vec t = w + alpha;
                    if (!(target < ht(t)) && !(depth_ < t[d_.kst.dk_slot]))
                        add_to(extra, t, -c);
                }
                for (auto& [w, c] : extra) add_to(dm, w, c);
            }
        };
        for (auto& id : d_.kst.ideals)
            for (auto& r : id.roots) {
                Vec rk = d_.finite_to_k(r.chart);
                for (long long j = r.positive() ? 0 : 1;; ++j) {
                    Vec alpha = rk + Rat(j) * d_.kst.delta_k;
                    if (target < ht(alpha) || depth_ < Rat(j)) break;
                    mul_term(alpha, 1);
                }
            }
        for (long long j = 1; !(target < htC_ * Rat(j)) && !(depth_ < Rat(j)); ++j)
            mul_term(Rat(j) * d_.kst.delta_k, d_.n);

        denom_.clear();
        for (auto& [w, c] : dm)
            if (!is_zero(w)) denom_.push_back({w, ht(w), c});
        std::sort(denom_.begin(), denom_.end(), [](const DenomTerm& a, const DenomTerm& b) {
            if (a.ht != b.ht) return a.ht < b.ht;
            return vec_less(a.eta, b.eta);
        });
        denom_ht_bound_ = target;
        memo_.clear(); // recompute against the wider denominator
    }

    const AffineDatum& d_;
    std::vector<std::pair<Vec, long long>> tops_;
    Vec base_;
    Rat depth_;
    Rat tops_max_ht_ = Rat(0);
    std::set<Vec, VecLess> seen_top_;
    std::vector<KSimple> simples_;
    Vec hfun_;
    Rat htC_;
    WMap num_;
    std::vector<DenomTerm> denom_;
    Rat denom_ht_bound_ = Rat(-1);
    std::map<Vec, long long, VecLess> memo_;
};

} // namespace

TruncatedCharacter product_character(const AffineDatum& d, int parity, const Rat& depth) {
    if (depth < Rat(0)) throw Error("product_character: depth must be >= 0");
    TruncatedCharacter ch;
    ch.depth = depth;
    WMap m;
    if (parity % 2 == 0) {
        ch.base = d.kst.Lambda0k;
        add_to(m, ch.base, 1);
        for (auto& pr : positive_p_roots(d, depth))
            binomial_factor(d, m, pr.finite + pr.degree * d.kst.delta_k, pr.mult, depth);
    } else {
        ch.base = d.kst.Lambda0k + d.kst.rho_n_k;
        add_to(m, ch.base, 1LL << ((d.N - d.n) / 2));
        for (auto& v : d.cls.positive_p)
            binomial_factor(d, m, d.finite_to_k(v), 1, depth);
        for (long long j = 1; Rat(j) <= depth; ++j) {
            for (auto& v : d.cls.p_weights)
                binomial_factor(d, m, d.finite_to_k(v) + Rat(j) * d.kst.delta_k, 1, depth);
            binomial_factor(d, m, Rat(j) * d.kst.delta_k, d.N - d.n, depth);
        }
    }
    ch.entries = std::move(m);
    return ch;
}

TruncatedCharacter irreducible_character(const AffineDatum& d, const Vec& lambda,
                                         const Rat& depth) {
    if (depth < Rat(0)) throw Error("irreducible_character: depth must be >= 0");
    CharEngine eng(d, {{lambda, 1}}, lambda, depth);
    TruncatedCharacter ch;
    ch.base = lambda;
    ch.depth = depth;
    ch.entries = eng.support();
    return ch;
}

namespace {

// Components of the eps = 1 module are normalized with a +delta_k/2 shift
// relative to the Clifford-side realization (its weights live on half-integer
// d_k values), so the comparison slides them back by `shift`.  All claimed
// components run through one engine: they share the Weyl denominator.
void accumulate_claimed(const AffineDatum& d, const std::vector<Decomposition>& claimed,
                        const Rat& depth, const Vec& base, WMap& out,
                        const Rat& shift = Rat(0)) {
    std::vector<std::pair<Vec, long long>> tops;
    for (auto& dec : claimed)
        for (auto& comp : dec.components) {
            Vec top = comp.weight - shift * d.kst.delta_k;
            if (depth < (base - top)[d.kst.dk_slot]) continue; // below the window
            tops.push_back(
                {comp.weight, detail::checked_mul(dec.global_multiplier, comp.mult)});
        }
    if (tops.empty()) return;
    CharEngine eng(d, std::move(tops), base + shift * d.kst.delta_k, depth);
    for (auto& [w, c] : eng.support())
        add_to(out, w - shift * d.kst.delta_k, c);
}

VerifyCheck make_check(std::string name, WMap prod, const WMap& claimed) {
    for (auto& [w, c] : claimed) add_to(prod, w, -c);
    VerifyCheck chk;
    chk.name = std::move(name);
    chk.residual = std::move(prod);
    chk.ok = chk.residual.empty();
    return chk;
}

} // namespace

VerifyReport verify_claimed(const AffineDatum& d, Rep rep,
                            const std::vector<Decomposition>& claimed, const Rat& depth,
                            long long q_lo, long long q_hi) {
    VerifyReport out;
    out.depth = depth;
    out.depth_warning = depth < Rat(1);

    if (!d.hermitian()) {
        if (rep == Rep::Spin) {
            auto prod = product_character(d, 1, depth);
            WMap want;
            accumulate_claimed(d, claimed, depth, prod.base, want);
            out.checks.push_back(make_check("spin", prod.entries, want));
        } else {
            auto prod = product_character(d, 0, depth);
            WMap even, odd;
            for (auto& [w, c] : prod.entries)
                (degree_of(d, w).is_integer() ? even : odd)[w] = c;
            for (int eps = 0; eps <= 1; ++eps) {
                WMap want;
                std::vector<Decomposition> part;
                for (auto& dec : claimed)
                    if ((dec.module == ModuleId::Basic) == (eps == 0)) part.push_back(dec);
                accumulate_claimed(d, part, depth, prod.base, want, Rat(eps, 2));
                out.checks.push_back(
                    make_check(eps ? "vector" : "basic", eps ? odd : even, want));
            }
        }
    } else {
        int parity = rep == Rep::Spin ? 1 : 0;
        auto prod = product_character(d, parity, depth);
        long long dimp = d.dim_p();
        for (long long q = q_lo; q <= q_hi; ++q) {
            Rat charge = rep == Rep::Spin ? Rat(dimp, 4) + Rat(q) : Rat(q);
            WMap slice;
            for (auto& [w, c] : prod.entries)
                if (w[d.kst.varpi_slot] == charge) slice[w] = c;
            WMap want;
            std::vector<Decomposition> part;
            for (auto& dec : claimed)
                if (dec.has_charge && dec.charge == q) part.push_back(dec);
            Rat shift = rep == Rep::Spin ? Rat(0) : Rat(((q % 2) + 2) % 2, 2);
            accumulate_claimed(d, part, depth, prod.base, want, shift);
            out.checks.push_back(
                make_check("charge " + std::to_string(q), std::move(slice), want));
        }
    }
    for (auto& c : out.checks)
        if (!c.ok) out.ok = false;
    return out;
}

VerifyReport verify(const AffineDatum& d, Rep rep, const Rat& depth, long long q_lo,
                    long long q_hi) {
    std::vector<Decomposition> claimed;
    if (!d.hermitian()) {
        if (rep == Rep::Spin) claimed = decompose_spin(d);
        else {
            claimed.push_back(decompose_basic_vector(d, 0));
            claimed.push_back(decompose_basic_vector(d, 1));
        }
    } else {
        for (long long q = q_lo; q <= q_hi; ++q) {
            if (rep == Rep::Spin) claimed.push_back(decompose_hermitian(d, Rep::Spin, q));
            else
                claimed.push_back(decompose_hermitian(
                    d, ((q % 2) + 2) % 2 == 0 ? Rep::Basic : Rep::Vector, q));
        }
    }
    return verify_claimed(d, rep, claimed, depth, q_lo, q_hi);
}

} // namespace affbranch
