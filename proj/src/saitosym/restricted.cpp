#include "internal.hpp"

namespace saito {

std::vector<MultiPoly> detail::stratum_chart_images(const Stratum& D) {
    const RootSystem& R = *D.R;
    int nv = R.chart_vars();
    std::vector<QVec> cols;
    for (int j : D.params) cols.push_back(R.chart_point(R.coweights[j]));
    std::vector<MultiPoly> images;
    for (int a = 0; a < nv; ++a) {
        QVec c;
        for (auto& col : cols) c.push_back(col[a]);
        images.push_back(MultiPoly::linear(c));
    }
    return images;
}

std::vector<LinearForm> coordinate_forms(const Stratum& D) {
    const RootSystem& R = *D.R;
    std::vector<LinearForm> out;
    for (int a = 0; a < R.ambient_dim; ++a) {
        QVec c;
        for (int j : D.params) c.push_back(R.coweights[j][a]);
        if (auto f = LinearForm::canonical(c)) out.push_back(*f);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

static PolyMatrix pulled_back(const InvariantBasis& B, const std::vector<MultiPoly>& t, int nv) {
    int n = B.n();
    std::vector<std::vector<MultiPoly>> dt(n);
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < nv; ++j) dt[a].push_back(t[a].diff(j));
    PolyMatrix m(nv, std::vector<MultiPoly>(nv, MultiPoly(nv)));
    for (int j = 0; j < nv; ++j)
        for (int k = j; k < nv; ++k) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    const Scalar& w = B.pairing_inv[a][b];
                    if (sgn(w) == 0 || dt[a][j].is_zero() || dt[b][k].is_zero()) continue;
                    m[j][k] += dt[a][j] * dt[b][k] * w;
                }
            m[k][j] = m[j][k];
        }
    return m;
}

PolyMatrix covariant_metric(const InvariantBasis& B) { return pulled_back(B, B.p, B.R->chart_vars()); }

PolyMatrix restricted_metric(const InvariantBasis& B, const Stratum& D) {
    if (D.R->label != B.R->label) throw std::invalid_argument("stratum and basis belong to different groups");
    auto images = detail::stratum_chart_images(D);
    std::vector<MultiPoly> t;
    for (auto& p : B.p) t.push_back(p.substitute(images));
    return pulled_back(B, t, D.dim);
}

MultiPoly restricted_det_poly(const InvariantBasis& B, const Stratum& D) {
    if (D.dim != B.n()) return poly_det(restricted_metric(B, D));
    // full space: the metric is J^T P^{-1} J with J square, so det = det(J)^2 / det(P)
    if (D.R->label != B.R->label) throw std::invalid_argument("stratum and basis belong to different groups");
    auto images = detail::stratum_chart_images(D);
    PolyMatrix jac(B.n(), std::vector<MultiPoly>(D.dim));
    for (int a = 0; a < B.n(); ++a) {
        MultiPoly t = B.p[a].substitute(images);
        for (int j = 0; j < D.dim; ++j) jac[a][j] = t.diff(j);
    }
    MultiPoly j = poly_det(jac);
    return j * j * (1 / det(B.pairing));
}

FactoredDeterminant restricted_saito_det(const InvariantBasis& B, const Stratum& D, const std::vector<LinearForm>& extra) {
    MultiPoly det = restricted_det_poly(B, D);
    if (det.is_zero()) throw IncompleteFactorization(FactoredDeterminant{Scalar(0), {}}, det);
    auto cands = arrangement_forms(D);
    cands.insert(cands.end(), extra.begin(), extra.end());
    return factor_linear(det, cands);
}

IdentityFieldData identity_field_data(const InvariantBasis& B) {
    const RootSystem& R = *B.R;
    int n = B.n();
    IdentityFieldData d;
    d.M.assign(n, {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d.M[i].push_back(B.p[i].directional(R.chart_direction(R.roots[R.simple[j]])));
    d.J = poly_det(d.M);
    for (int k = 0; k < n; ++k) {
        PolyMatrix minor;
        for (int i = 0; i < n - 1; ++i) {
            std::vector<MultiPoly> row;
            for (int j = 0; j < n; ++j)
                if (j != k) row.push_back(d.M[i][j]);
            minor.push_back(std::move(row));
        }
        d.Jk.push_back(n == 1 ? MultiPoly(R.chart_vars(), Scalar(1)) : poly_det(minor));
        d.sign.push_back((n + k + 1) % 2 ? -1 : 1);
    }
    return d;
}

MultiPoly general_formula_det(const InvariantBasis& B, const Stratum& D, const IdentityFieldData* data) {
    if (D.I.empty()) throw InvalidStratum("the minor formula needs a nonempty index set");
    IdentityFieldData local;
    if (!data) {
        local = identity_field_data(B);
        data = &local;
    }
    const RootSystem& R = *B.R;
    const auto& I = D.I;
    std::size_t k = I.size();
    const MultiPoly& J = data->J;
    // derivatives along the coweights w^j, j in I
    std::vector<MultiPoly> dJ;
    std::vector<std::vector<MultiPoly>> dJk(k);
    for (int j : I) dJ.push_back(J.directional(R.chart_direction(R.coweights[j])));
    for (std::size_t a = 0; a < k; ++a)
        for (int j : I) dJk[a].push_back(data->Jk[I[a]].directional(R.chart_direction(R.coweights[j])));
    // J^2 Q^{ij} = N_ij, Q = -d_{w^j} e^i - d_{w^i} e^j, e^i = sign_i J_i / J
    auto part = [&](std::size_t a, std::size_t b) {
        MultiPoly v = J * dJk[a][b] - data->Jk[I[a]] * dJ[b];
        return data->sign[I[a]] > 0 ? -v : v;
    };
    PolyMatrix N(k, std::vector<MultiPoly>(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) {
            N[a][b] = part(a, b) + part(b, a);
            N[b][a] = N[a][b];
        }
    MultiPoly num = poly_det(N);
    MultiPoly P = k == 1 ? num : divide_exact(num, J.pow(unsigned(2 * k - 2)));
    return -P.substitute(detail::stratum_chart_images(D));
}

GeneralFormula two_route_check(const InvariantBasis& B, const Stratum& D, const IdentityFieldData* data) {
    GeneralFormula out;
    out.P_D = general_formula_det(B, D, data);
    out.det_route = restricted_det_poly(B, D);
    const RootSystem& R = *B.R;
    QMat G(D.dim, QVec(D.dim));
    for (int a = 0; a < D.dim; ++a)
        for (int b = 0; b < D.dim; ++b) G[a][b] = dot(R.coweights[D.params[a]], R.coweights[D.params[b]]);
    Scalar g = det(G);
    out.frame_constant = -g * g / det(B.pairing);
    out.equal = out.det_route == out.P_D * out.frame_constant;
    return out;
}

}  // namespace saito
