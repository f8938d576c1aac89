#pragma once

#include "affbranch/errors.hpp"
#include "affbranch/linalg.hpp"
#include "affbranch/tables.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace affbranch {

// Weights on the Cartan of L^(g,sigma) are stored as values on the basis
// (alpha_0^vee, ..., alpha_n^vee, d'); weights on the Cartan of k^ as values
// on the affine simple coroots of each ideal (node 0 first), then d_k, then
// the center element varpi_i when k has one.  All coordinates are exact.

// One root of a finite subsystem, tracked both by its coordinates on the
// subsystem's simple basis and by its chart vector.
struct FiniteRoot {
    std::vector<int> coords;
    Vec chart;
    bool positive() const {
        for (int c : coords)
            if (c < 0) return false;
        return true;
    }
};

struct SimpleIdeal {
    char family = 'A';
    int rank = 1;
    std::vector<int> label_node; // finite label j=1..rank -> affine node index
    int slot0 = 0;               // k-chart slot of the ideal's affine node
    std::vector<FiniteRoot> roots; // full finite root system of the ideal
    Vec theta_chart;               // highest root
    Vec theta_covec_fun;           // x -> lambda(theta_S^vee)
    Rat theta_len2;                // (theta_S, theta_S) in the ambient form
    long long hvee_S = 0, n_S = 0, j_S = 0;
    Rat c_S;
    std::string type_str() const {
        return std::string(1, family) + std::to_string(rank);
    }
};

struct KStructure {
    std::vector<SimpleIdeal> ideals;
    std::vector<int> pi_k_nodes; // nodes i with s_i = 0
    int center_dim = 0;
    int kdim = 0, dk_slot = 0, varpi_slot = -1;
    Mat psi0, phi;                    // chart maps h^* -> h_k^*
    Vec Lambda0k, rho_k_hat, delta_k; // k-chart vectors
    Vec rho_n_k;                      // rho_n transported to the k-chart
    Vec nu_varpi_k;                   // hermitian only
};

struct RootClassification {
    std::vector<Vec> compact, noncompact, complex_; // finite chart vectors
    std::vector<Vec> p_weights;                     // Delta(p) \ {0}
    std::vector<Vec> positive_p;
    std::vector<Vec> k_positive; // positive roots of Delta_k
    int zero_mult = 0; // multiplicity of the zero weight in p (= N - n)
    Vec rho_n;         // half sum of positive_p
    std::set<Vec, VecLess> p_set, k_set, ni_set, k_pos_set;
};

struct MuStructure {
    enum class Kind { KMu, KMuDual, A2nDual };
    Kind kind = Kind::KMu;
    std::vector<Vec> pi_f;                // finite simple roots
    std::vector<Vec> lprime_simple_roots; // chart vectors
    Vec lprime_rho;                       // rho^' with rho^'(d') = 0
    Mat w0;
    int mult_odd = 0, mult_even = 0; // multiplicities of j delta' in L'
};

class AffineDatum {
  public:
    LieType type;
    InvolutionSpec sigma;
    AffineTable table;
    int nn = 0;      // nodes = n + 1
    int n = 0;       // rank of k
    int N = 0;       // rank of g
    int p_index = -1;     // the node with s_p != 0 (complex case: 0)
    int herm_node = -1;   // i >= 1 with s_0 = s_i = 1, else -1
    long long hvee = 0;   // dual Coxeter number of the affine datum
    int chart_dim = 0;    // n + 2

    Mat gram;             // (alpha_i, alpha_j)
    Mat B, Binv;          // form of the Cartan basis (coroots, d') and inverse
    std::vector<Vec> alpha;     // chart vectors of the simple roots
    std::vector<Vec> alpha_bar; // finite parts
    Vec rho_hat, delta, delta_prime;
    Vec K_fun;       // x -> lambda(K)
    Vec Kprime_fun;  // x -> lambda(K')
    Vec omega_p_fun; // x -> lambda(omega_p); zero functional when p = 0
    Vec varpi_fun;   // hermitian: x -> lambda(varpi_i)
    Vec nu_varpi;    // hermitian: nu(varpi_i) as chart weight
    Rat varpi_norm2;

    std::vector<FiniteRoot> delta_f; // roots of Delta_f over Pi_f
    Mat cartan_f;                    // Cartan matrix of Pi_f
    Mat w0_mat;                      // the compatible-system element w_0
    RootClassification cls;
    KStructure kst;

    bool is_complex() const { return type.complex_pair; }
    int k_twist() const { return sigma.k; }
    int level_of(const std::vector<int>& root_coords) const {
        int l = 0;
        for (int i = 0; i < nn; ++i) l += sigma.s[i] * root_coords[i];
        return l;
    }
    long long dim_p() const {
        return (long long)cls.p_weights.size() + cls.zero_mult;
    }
    bool hermitian() const { return herm_node >= 0; }

    // bilinear form on the weight chart
    Rat form(const Vec& x, const Vec& y) const { return dot(x, mat_vec(Binv, y)); }
    // lambda(beta^vee) for a level-0 or real root given by its chart vector
    Rat coroot_pairing(const Vec& lambda, const Vec& beta) const {
        return Rat(2) * form(lambda, beta) / form(beta, beta);
    }
    Vec reflect(const Vec& lambda, const Vec& beta) const {
        return lambda - coroot_pairing(lambda, beta) * beta;
    }
    bool alpha_p_long() const;

    // chart vector of a root given in simple-root coordinates
    Vec chart_of(const std::vector<int>& root_coords) const;
    // finite part of the same root
    Vec finite_part_of(const std::vector<int>& root_coords) const;
    // coordinates of a level-0 weight over Pi_f
    Vec finite_coords(const Vec& mu) const;
    // transport of a level-0 h-chart weight to the k-chart
    Vec finite_to_k(const Vec& mu) const;

    Vec psi0_star(const Vec& lambda) const;
    Vec psi1_star(const Vec& lambda) const; // w0 then phi, spin transport
};

AffineDatum build_affine_datum(const LieType& t, const InvolutionSpec& sig);

RootClassification classify_roots(const AffineDatum& d);

MuStructure build_lprime(const AffineDatum& d);

// positive roots of so(p)-type shape (m + 1/2) delta_k + alpha up to the
// given delta_k-degree, as (degree, finite weight, multiplicity)
struct PRoot {
    Rat degree;
    Vec finite; // k-chart vector (zero for the imaginary ones)
    int mult;
};
std::vector<PRoot> positive_p_roots(const AffineDatum& d, const Rat& depth);

// helpers shared with weylcomb: subsystem closure and longest elements
std::vector<FiniteRoot> root_closure(const AffineDatum& d,
                                     const std::vector<Vec>& simples);
// chart matrix of the element of the finite reflection group with the given
// inversion set (a biconvex subset of the positives of `simples`' closure)
Mat element_with_inversions(const AffineDatum& d, const std::vector<Vec>& simples,
                            std::vector<Vec> targets);

} // namespace affbranch
