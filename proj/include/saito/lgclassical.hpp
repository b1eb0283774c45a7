#pragma once

#include "saito/strata.hpp"

#include <Eigen/Dense>
#include <complex>
#include <optional>

namespace saito {

using cplx = std::complex<double>;

// lambda(p) = prod_{a=0..d} (p - xi_a)^{m_a}, xi_0 = -sum_{i>=1} (m_i/m_0) xi_i
struct StratumConfigA {
    std::vector<int> m;  // m_0..m_d
    int n() const;
    int d() const { return int(m.size()) - 1; }
    void validate() const;
};

enum class BDOrigin { B, D, Generic };

// lambda(p) = p^{2m} prod_{a=1..d} (p^2 - xi_a^2)^{m_a}
struct StratumConfigBD {
    int m = 0;
    std::vector<int> mult;  // m_1..m_d
    BDOrigin origin = BDOrigin::Generic;
    int N() const;
    int d() const { return int(mult.size()); }
    int l() const;  // size of the zero block for B/D origins
    void validate() const;
    // m >= -1 is realized by an actual B or D stratum
    bool realizable() const { return m >= -1; }
};

struct InvalidConfig : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NZero : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegeneratePoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Variables: xi_0..xi_d when keep_xi0, else xi_1..xi_d.
FactoredDeterminant closed_form_det_A(const StratumConfigA& cfg, bool keep_xi0 = false);
// Variables xi_1..xi_d; negative exponents appear only for m < -1 configs.
FactoredDeterminant closed_form_det_BD(const StratumConfigBD& cfg);
Scalar kappa_A(const StratumConfigA& cfg);
Scalar kappa_BD(const StratumConfigBD& cfg);
Scalar eval_factored(const FactoredDeterminant& f, const QVec& pt);
double eval_factored_double(const FactoredDeterminant& f, const std::vector<double>& pt);

struct CriticalData {
    std::vector<cplx> q;
    std::vector<cplx> u;
    std::vector<double> eps;
    std::vector<cplx> lambda2;  // lambda''(q_i)
};

// Exact genericity test at a rational point; the reason is filled on failure.
bool is_generic_point(const StratumConfigA& cfg, const QVec& xi, std::string* reason = nullptr);
bool is_generic_point(const StratumConfigBD& cfg, const QVec& xi, std::string* reason = nullptr);

CriticalData critical_data(const StratumConfigA& cfg, const QVec& xi);
CriticalData critical_data(const StratumConfigBD& cfg, const QVec& xi);

struct ResidueMetric {
    Eigen::MatrixXcd eta;         // eta_D in xi coordinates, transported canonical form
    cplx det;
    Eigen::MatrixXcd eta_direct;  // sum over critical points of d_a(lambda) d_b(lambda) / lambda''
    Eigen::MatrixXcd dxi_du;      // d xi_a / d u_i, rows a, columns i
    CriticalData crit;
    double symmetry_residual = 0;
    double route_residual = 0;  // |eta - eta_direct| / |eta|
};

ResidueMetric residue_metric_at(const StratumConfigA& cfg, const QVec& xi);
ResidueMetric residue_metric_at(const StratumConfigBD& cfg, const QVec& xi);

struct FrobeniusReport {
    double metric_residual = 0;       // eta_D(u,v) vs c g_D(E o u, v)
    double det_residual = 0;          // det eta_D vs c^d det g_D prod u_i
    double idempotency_residual = 0;  // canonical structure constants
    double constant = 0;              // c
    QMat gram;                        // g_D in xi coordinates
};

FrobeniusReport frobenius_check_at(const StratumConfigA& cfg, const QVec& xi);
FrobeniusReport frobenius_check_at(const StratumConfigBD& cfg, const QVec& xi);
QMat gram_A(const StratumConfigA& cfg);
QMat gram_BD(const StratumConfigBD& cfg);

// Root-system stratum realizing a configuration: s = B xi with s the
// stratum parameters (alpha_j(x), j not in I).
struct ClassicalEmbedding {
    std::string group;
    std::vector<int> I;
    QMat B;        // d x d
    QMat ambient;  // ambient coordinates as linear functions of xi
};

ClassicalEmbedding embed_config(const StratumConfigA& cfg);
std::optional<ClassicalEmbedding> embed_config(const StratumConfigBD& cfg);
// rewrite a factored polynomial in xi as one in the stratum parameters
FactoredDeterminant to_stratum_params(const FactoredDeterminant& f, const QMat& B);

// random rational point with small numerators and denominators, re-sampled until generic
QVec random_generic_point(const StratumConfigA& cfg, std::mt19937_64& rng);
QVec random_generic_point(const StratumConfigBD& cfg, std::mt19937_64& rng);

}  // namespace saito
