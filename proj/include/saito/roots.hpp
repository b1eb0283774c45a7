#pragma once

#include "saito/linalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace saito {

enum class Family { A, B, D, E, F };

struct UnsupportedGroup : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// One irreducible crystallographic root system. Roots are stored both as
// ambient vectors and as integer coefficient vectors over the simple roots;
// root indices refer to positions in `roots`.
struct RootSystem {
    std::string label;  // e.g. "A3", "E8"
    Family family = Family::A;
    int rank = 0;
    int ambient_dim = 0;
    std::vector<QVec> roots;
    std::vector<std::vector<int>> coeffs;
    std::vector<int> positive;  // indices of positive roots
    std::vector<int> simple;    // simple[i] = index of alpha_{i+1}
    std::vector<std::vector<int>> cartan;  // 2(a_i,a_j)/(a_j,a_j)
    std::vector<QVec> coweights;            // ambient vectors, (w^i, a_j) = delta
    std::vector<int> degrees;
    int h = 0;
    std::vector<std::vector<int>> ip2;  // 2(beta, gamma) for all root pairs

    std::size_t size() const { return roots.size(); }
    int index_of(const std::vector<int>& c) const;  // -1 if not a root
    int negate(int root) const;
    bool is_positive(int root) const;
    // index of the positive root in {beta, -beta}
    int positive_rep(int root) const;
    int simple_reflect(int root, int i) const;  // s_{alpha_i}(beta), i zero-based
    Scalar inner(int a, int b) const { return Scalar(ip2[std::size_t(a)][std::size_t(b)], 2); }

    // Polynomial chart. A_n uses x_1..x_n with x_{n+1} = -sum; other types use
    // the ambient coordinates directly.
    int chart_vars() const;
    QVec chart_form(const QVec& v) const;       // coefficients of x -> (v, x)
    QVec chart_direction(const QVec& v) const;  // derivative along ambient v
    QVec chart_point(const QVec& x) const;
    QMat gradient_metric() const;               // inverse of the induced metric

    std::map<std::vector<int>, int> by_coeffs;
};

RootSystem build_root_system(const std::string& type, int rank);
RootSystem build_root_system(const std::string& label);  // "E8", "B3", ...
// every supported (type, rank) pair up to the given rank cap for A/B/D
std::vector<std::string> supported_labels(int max_classical_rank = 8);

struct Component {
    std::vector<int> roots;
    int rank = 0;
    int size = 0;
    int h = 0;
    std::string type;
};

struct SubsystemReport {
    std::vector<int> roots;
    int rank = 0;
    int size = 0;
    bool irreducible = true;
    std::vector<Component> components;

    const Component* component_of(int root) const;
};

// type label from (rank, size, number of root lengths); B and C are merged
std::string subsystem_type(int rank, int size, bool two_lengths);

SubsystemReport span_subsystem(const RootSystem& R, const std::vector<int>& S);

struct Reduction {
    // reflections applied to the point in order: w = s_{word.back()} ... s_{word[0]}
    std::vector<int> word;
    std::vector<int> I;  // zero-based simple indices, sorted
};

struct DependentRoots : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Reduction reduce_to_fundamental(const RootSystem& R, const std::vector<int>& S, std::uint64_t seed = 1);
int apply_word(const RootSystem& R, const std::vector<int>& word, int root);

}  // namespace saito
