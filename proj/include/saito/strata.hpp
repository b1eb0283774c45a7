#pragma once

#include "saito/roots.hpp"

#include <memory>
#include <random>

namespace saito {

// D = intersection of the mirrors of alpha_i, i in I, parametrized by
// x = sum_{j not in I} s_j w^j so that alpha_j(x) = s_j.
struct Stratum {
    std::shared_ptr<const RootSystem> R;
    std::vector<int> I;       // zero-based simple indices
    std::vector<int> params;  // zero-based simple indices j not in I
    int dim = 0;
    SubsystemReport rd;

    std::vector<std::string> param_names() const;  // "s1", "s3", ... (1-based)
    // restriction of a root to D as a canonical form, nullopt when it vanishes
    std::optional<LinearForm> restrict_root(int root) const;
    QVec restrict_coeffs(int root) const;
    // ambient point of D for given parameter values
    QVec point(const QVec& s) const;
};

struct InvalidStratum : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RestrictedHyperplane {
    LinearForm form;
    int beta = -1;             // positive representative root
    std::vector<int> members;  // positive roots restricting to a multiple of form
    SubsystemReport rdb;       // R_{D,beta}
    Component component0;
    int k = 0;
};

struct NegativeFinalExponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Stratum make_stratum(std::shared_ptr<const RootSystem> R, std::vector<int> I);
std::vector<RestrictedHyperplane> restricted_arrangement(const Stratum& D);
FactoredDeterminant predict_determinant(const Stratum& D);
FactoredDeterminant predict_determinant(const Stratum& D, const std::vector<RestrictedHyperplane>& arr);
// one root per component of D.rd, in component order
FactoredDeterminant q_polynomial(const Stratum& D, const std::vector<int>& gamma_choices);
std::vector<int> random_gamma_choices(const Stratum& D, std::mt19937_64& rng);
// all canonical restricted root forms of A_D
std::vector<LinearForm> arrangement_forms(const Stratum& D);

// every nonempty proper subset of {0..n-1}, in order of increasing bitmask
std::vector<std::vector<int>> proper_subsets(int n);

}  // namespace saito
