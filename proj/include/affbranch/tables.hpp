#pragma once

#include "affbranch/linalg.hpp"

#include <string>
#include <vector>

namespace affbranch {

// Simple Lie type X_r, or the "complex" case g = k (+) k with the switch
// involution, carried as Complex(type of one factor).
struct LieType {
    char family = 'A'; // A..G
    int rank = 1;
    bool complex_pair = false;

    std::string str() const {
        std::string s(1, family);
        s += std::to_string(rank);
        return complex_pair ? "complex:" + s : s;
    }
};

LieType parse_lie_type(const std::string& s);

struct InvolutionSpec {
    std::vector<int> s; // s_0..s_n on the affine diagram of the derived type
    int k = 1;          // 1 = inner, 2 = outer
};

// Cartan data of one affine diagram, labeled as in the standard tables of
// affine Dynkin diagrams (Kac, "Infinite dimensional Lie algebras", ch. 4).
// cartan[i][j] = <alpha_j, alpha_i^vee>.
struct AffineTable {
    std::string name; // e.g. "G2(1)", "D4(2)"
    int twist = 1;
    std::vector<std::vector<int>> cartan;
    std::vector<int> marks;   // a_i
    std::vector<int> comarks; // a_i^vee
    int nodes() const { return (int)marks.size(); }
};

// The affine diagram of L^(g,sigma): X_N^(1) for inner involutions and the
// complex case, X_N^(2) for outer ones.
AffineTable affine_table(const LieType& t, int k);

// Finite Cartan data with the table labeling 1..rank.
struct FiniteTable {
    char family;
    int rank;
    std::vector<std::vector<int>> cartan;
};

FiniteTable finite_table(char family, int rank);

// Identify a connected finite diagram given by an exact Gram matrix; returns
// the type plus the node order matching finite_table labels, i.e.
// node_of_label[j] indexes into `nodes` and gram(node_of_label[i-1],
// node_of_label[j-1]) realizes the reference Cartan matrix.
struct FiniteClassification {
    char family;
    int rank;
    std::vector<int> node_of_label;
};

FiniteClassification classify_finite_diagram(const Mat& gram,
                                             const std::vector<int>& nodes);

} // namespace affbranch
