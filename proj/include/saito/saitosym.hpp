#pragma once

#include "saito/strata.hpp"

#include <memory>

namespace saito {

struct DegenerateBasis : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Homogeneous basic invariants in the chart variables of R, ordered by degree.
// `pairing` is the constant contravariant form eta(dp^a, dp^b) the covariant
// metric is built from; anti-diagonal unless a repeated-degree block refused a
// rational isotropic basis.
struct InvariantBasis {
    std::shared_ptr<const RootSystem> R;
    std::vector<MultiPoly> p;
    std::vector<int> degrees;
    bool flat = false;
    QMat pairing;
    QMat pairing_inv;
    bool antidiagonal = true;
    int n() const { return int(p.size()); }
};

// Max rank handled by the symbolic route.
inline constexpr int kSymbolicRankCap = 4;

MultiPoly root_product(const RootSystem& R);  // prod over R_+ of alpha(x), chart variables
MultiPoly jacobian_det(const RootSystem& R, const std::vector<MultiPoly>& p);

InvariantBasis basic_invariants(std::shared_ptr<const RootSystem> R);
InvariantBasis flat_coordinates(std::shared_ptr<const RootSystem> R);
// D_3 family p1 = (1/8) sum x^2, p2 = x1 x2 x3, p3 = a sum x^4 + b p1^2 with anti-diagonal pairing
InvariantBasis example14_basis(const Scalar& a, const Scalar& b);

// f written as a polynomial in the basis (weights = degrees); throws SolverFailure
MultiPoly express_in(const MultiPoly& f, const std::vector<MultiPoly>& basis, const std::vector<int>& degrees);

// g^{ab} = (grad p^a, grad p^b) in the chart
PolyMatrix gradient_gram(const RootSystem& R, const std::vector<MultiPoly>& p);
// d g^{ab}(p) / d p^n; throws SolverFailure when not constant
QMat saito_pairing_of(const InvariantBasis& B);

// sum P^{-1}_{ab} dp^a dp^b pulled back to V, chart variables
PolyMatrix covariant_metric(const InvariantBasis& B);
PolyMatrix restricted_metric(const InvariantBasis& B, const Stratum& D);
MultiPoly restricted_det_poly(const InvariantBasis& B, const Stratum& D);
// restrictions of the ambient coordinate functions, as extra factor candidates
std::vector<LinearForm> coordinate_forms(const Stratum& D);
// throws IncompleteFactorization when the determinant is not a product of candidates
FactoredDeterminant restricted_saito_det(const InvariantBasis& B, const Stratum& D,
                                         const std::vector<LinearForm>& extra = {});

// directional Jacobi matrix d_{alpha_j} p^i and its minors
struct IdentityFieldData {
    PolyMatrix M;
    MultiPoly J;
    std::vector<MultiPoly> Jk;  // column k and row n removed
    std::vector<int> sign;      // (-1)^{n+k}, 1-based n, k
};
IdentityFieldData identity_field_data(const InvariantBasis& B);

// P_D in stratum parameters, from the k x k minor of eta in the x~ frame.
struct GeneralFormula {
    MultiPoly P_D;
    MultiPoly det_route;     // restricted determinant via the covariant path
    Scalar frame_constant;   // det(G_w)^2 / det(pairing)
    bool equal = false;      // det_route == frame_constant * P_D
};
MultiPoly general_formula_det(const InvariantBasis& B, const Stratum& D, const IdentityFieldData* data = nullptr);
GeneralFormula two_route_check(const InvariantBasis& B, const Stratum& D, const IdentityFieldData* data = nullptr);

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};
struct IdentityReport {
    std::vector<CheckLine> lines;
    bool all_pass() const;
};
// divisibility of J_k, non-divisibility by alpha_k, J_k on the wall of alpha_k,
// the sign relation on codim-2 strata, and (flat basis) e^{-1} tangency
IdentityReport identity_field_checks(const InvariantBasis& B, bool tangency_all_strata = false);
// (e^{-1}, gamma) restricted to D vanishes for gamma in R_D; plus degree h+1 of the components
CheckLine euler_inverse_tangency(const InvariantBasis& B, const Stratum& D);

}  // namespace saito
