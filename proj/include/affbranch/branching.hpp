#pragma once

#include "affbranch/weylcomb.hpp"

#include <string>
#include <vector>

namespace affbranch {

enum class Rep { Basic, Vector, Spin };
enum class ModuleId { Basic, Vector, SpinTop, SpinSecond };

std::string module_name(ModuleId m, long long spin_m);

struct ComponentLabel {
    enum class Kind { Abelian, WSigma, Hermitian };
    Kind kind = Kind::Abelian;
    std::vector<Vec> subspace; // the subspace A (resp. I), finite chart vectors
    long long k_I = 0;         // hermitian translation index
};

struct Component {
    Vec weight; // k-chart highest weight
    long long mult = 1;
    ComponentLabel label;
    std::string hwv;
};

struct Decomposition {
    ModuleId module = ModuleId::Basic;
    long long global_multiplier = 1;
    long long spin_m = -1; // floor(dim p / 2), spin modules only
    bool has_charge = false;
    long long charge = 0;
    std::vector<Component> components;
};

// L(Lambda_eps) for eps = 0 (basic) and 1 (vector); k semisimple
Decomposition decompose_basic_vector(const AffineDatum& d, int eps);

// both spin modules (one when dim p is odd); k semisimple
std::vector<Decomposition> decompose_spin(const AffineDatum& d);

// one center-charge eigenspace; k with one-dimensional center
Decomposition decompose_hermitian(const AffineDatum& d, Rep rep, long long q);

// dispatch helper used by the CLI and the oracle
std::vector<Decomposition> decompose(const AffineDatum& d, Rep rep);

// per-ideal fundamental weight coefficients of a component
std::vector<std::vector<long long>> ideal_coefficients(const AffineDatum& d,
                                                       const Vec& weight);
Rat delta_coefficient(const AffineDatum& d, const Vec& weight);

// independent type-C route: lattice-path components for sp(2m) x sp(2n)
// inside sp(2m+2n), as bare coefficient lists (no delta_k bookkeeping)
struct TypeCComponent {
    std::vector<long long> dot, ddot;
};
struct TypeCDecomposition {
    ModuleId module;
    std::vector<TypeCComponent> components;
};
std::vector<TypeCDecomposition> typec_lattice_paths(int m, int n);

} // namespace affbranch
