#include "internal.hpp"

#include <map>

namespace saito {

namespace {

using PPoly = MultiPoly;  // polynomial in the basic invariants

QMat constant_matrix(const PolyMatrix& m, const char* what) {
    QMat out(m.size(), QVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (!m[i][j].is_constant()) throw SolverFailure(std::string(what) + " is not constant");
            out[i][j] = m[i][j].constant_value();
        }
    return out;
}

PolyMatrix adjugate(const PolyMatrix& m) {
    std::size_t n = m.size();
    int nv = m[0][0].nvars();
    PolyMatrix adj(n, std::vector<MultiPoly>(n, MultiPoly(nv)));
    if (n == 1) {
        adj[0][0] = MultiPoly(nv, Scalar(1));
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            PolyMatrix minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<MultiPoly> row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            MultiPoly d = poly_det(minor);
            adj[i][j] = (i + j) % 2 ? -d : d;
        }
    return adj;
}

// contravariant metric of `q` (polynomials in x) written in the q's themselves
PolyMatrix gram_in_basis(const RootSystem& R, const std::vector<MultiPoly>& q, const std::vector<int>& deg) {
    PolyMatrix gx = gradient_gram(R, q);
    std::size_t n = q.size();
    PolyMatrix g(n, std::vector<MultiPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            g[i][j] = express_in(gx[i][j], q, deg);
            g[j][i] = g[i][j];
        }
    return g;
}

PolyMatrix diff_matrix(const PolyMatrix& g, int var) {
    PolyMatrix out = g;
    for (auto& row : out)
        for (auto& e : row) e = e.diff(var);
    return out;
}

bool rational_sqrt(const Scalar& q, Scalar& root) {
    if (sgn(q) < 0) return false;
    mpz_class a = q.get_num(), b = q.get_den();
    if (!mpz_perfect_square_p(a.get_mpz_t()) || !mpz_perfect_square_p(b.get_mpz_t())) return false;
    root = Scalar(sqrt(a), sqrt(b));
    root.canonicalize();
    return true;
}

QMat pairing_of(const std::vector<PPoly>& t, const PolyMatrix& eta) {
    std::size_t n = t.size();
    std::vector<std::vector<PPoly>> dt(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < n; ++i) dt[a].push_back(t[a].diff(int(i)));
    PolyMatrix pm(n, std::vector<MultiPoly>(n, MultiPoly(int(n))));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!eta[i][j].is_zero() && !dt[a][i].is_zero() && !dt[b][j].is_zero())
                        pm[a][b] += eta[i][j] * dt[a][i] * dt[b][j];
            pm[b][a] = pm[a][b];
        }
    return constant_matrix(pm, "pairing of the flat solutions");
}

}  // namespace

QMat saito_pairing_of(const InvariantBasis& B) {
    int n = B.n();
    PolyMatrix g = gram_in_basis(*B.R, B.p, B.degrees);
    return constant_matrix(diff_matrix(g, n - 1), "d g / d p^n");
}

InvariantBasis flat_coordinates(std::shared_ptr<const RootSystem> R) {
    InvariantBasis base = basic_invariants(R);
    const int n = base.n();
    const auto& deg = base.degrees;
    const int h = R->h;
    if (deg.back() != h || (n > 1 && deg[n - 2] == h)) throw SolverFailure("top degree must be h and simple");

    PolyMatrix g = gram_in_basis(*R, base.p, deg);
    PolyMatrix eta = diff_matrix(g, n - 1);
    MultiPoly det_eta = poly_det(eta);
    if (!det_eta.is_constant() || det_eta.is_zero()) throw SolverFailure("det eta(p) is not a nonzero constant");
    Scalar inv_det = 1 / det_eta.constant_value();
    PolyMatrix eta_dn = adjugate(eta);
    for (auto& row : eta_dn)
        for (auto& e : row) e *= inv_det;

    // Gamma^k_ij
    std::vector<PolyMatrix> d_dn;
    for (int l = 0; l < n; ++l) d_dn.push_back(diff_matrix(eta_dn, l));
    std::vector<PolyMatrix> gamma(n, PolyMatrix(n, std::vector<MultiPoly>(n, MultiPoly(n))));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                MultiPoly s(n);
                for (int l = 0; l < n; ++l) {
                    if (eta[k][l].is_zero()) continue;
                    MultiPoly c = d_dn[i][l][j] + d_dn[j][l][i] - d_dn[l][i][j];
                    if (!c.is_zero()) s += eta[k][l] * c;
                }
                s *= Scalar(1, 2);
                gamma[k][i][j] = s;
                gamma[k][j][i] = s;
            }

    // flat functions degree by degree: d_i d_j t = Gamma^k_ij d_k t
    std::vector<PPoly> t;
    std::map<int, int> mult;
    for (int d : deg) ++mult[d];
    for (auto [w, count] : mult) {
        auto exps = detail::weighted_exponents(deg, w);
        std::map<std::pair<int, std::uint64_t>, std::size_t> row_of;
        std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(exps.size());
        for (std::size_t c = 0; c < exps.size(); ++c) {
            PPoly m = detail::monomial(n, exps[c], deg);
            std::vector<PPoly> dm;
            for (int k = 0; k < n; ++k) dm.push_back(m.diff(k));
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    PPoly e = dm[i].diff(j);
                    for (int k = 0; k < n; ++k)
                        if (!gamma[k][i][j].is_zero() && !dm[k].is_zero()) e -= gamma[k][i][j] * dm[k];
                    for (auto& term : e.terms()) {
                        auto key = std::make_pair(i * n + j, term.mono.bits);
                        auto [it, fresh] = row_of.emplace(key, row_of.size());
                        cols[c].push_back({it->second, term.coef});
                    }
                }
        }
        QMat A(row_of.size(), QVec(exps.size(), 0));
        for (std::size_t c = 0; c < exps.size(); ++c)
            for (auto& [r, v] : cols[c]) A[r][c] += v;
        QMat ns = A.empty() ? identity(exps.size()) : nullspace(A);
        if (int(ns.size()) != count)
            throw SolverFailure("flat solutions of degree " + std::to_string(w) + ": found " + std::to_string(ns.size()) +
                                ", expected " + std::to_string(count));
        for (auto& v : ns) {
            PPoly f(n);
            for (std::size_t c = 0; c < exps.size(); ++c)
                if (sgn(v[c]) != 0) f += detail::monomial(n, exps[c], deg) * v[c];
            f.set_weights(deg);
            t.push_back(f);
        }
    }

    // the change p -> t must be invertible
    {
        PolyMatrix jac(n, std::vector<MultiPoly>(n));
        for (int a = 0; a < n; ++a)
            for (int i = 0; i < n; ++i) jac[a][i] = t[a].diff(i);
        MultiPoly jd = poly_det(jac);
        if (!jd.is_constant() || jd.is_zero()) throw SolverFailure("flat solutions are not a coordinate system");
    }

    // normalize so that eta(dt^a, dt^b) = delta^{a+b,n+1}
    QMat Pi = pairing_of(t, eta);
    bool antidiag = true;
    std::map<int, std::vector<int>> by_deg;
    for (int a = 0; a < n; ++a) by_deg[deg[a]].push_back(a);
    const int top = n - 1;
    std::vector<std::pair<int, int>> pairs;
    int middle = -1;
    for (auto& [d, idx] : by_deg) {
        int dp = h + 2 - d;
        if (d > dp) continue;
        auto& other = by_deg[dp];
        if (d < dp) {
            if (idx.size() != 1 || other.size() != 1) {
                antidiag = false;
                continue;
            }
            pairs.push_back({idx[0], other[0]});
        } else if (idx.size() == 1) {
            middle = idx[0];
        } else if (idx.size() == 2) {
            int u = idx[0], v = idx[1];
            Scalar m00 = Pi[u][u], m01 = Pi[u][v], m11 = Pi[v][v];
            // isotropic vectors of the 2x2 block
            std::vector<std::pair<Scalar, Scalar>> iso;  // coefficients on (t_u, t_v)
            if (sgn(m00) == 0) {
                iso.push_back({1, 0});
                iso.push_back({-m11 / (2 * m01), 1});
            } else {
                Scalar r;
                if (rational_sqrt(m01 * m01 - m00 * m11, r) && sgn(r) != 0) {
                    iso.push_back({(-m01 + r) / m00, 1});
                    iso.push_back({(-m01 - r) / m00, 1});
                }
            }
            if (iso.size() == 2) {
                PPoly tu = t[u] * iso[0].first + t[v] * iso[0].second;
                PPoly tv = t[u] * iso[1].first + t[v] * iso[1].second;
                t[u] = tu;
                t[v] = tv;
                pairs.push_back({u, v});
            } else {
                antidiag = false;
            }
        } else {
            antidiag = false;
        }
    }
    Pi = pairing_of(t, eta);
    Scalar c = t[top].coefficient_of(top, 1).constant_value();
    if (sgn(c) == 0) throw SolverFailure("top flat coordinate has no linear term");
    std::vector<Scalar> mu(n, Scalar(1));
    if (n == 1) {
        mu[0] = c / Pi[0][0];
    } else {
        if (middle >= 0) mu[top] = Pi[middle][middle] / c;
        for (auto [a, b] : pairs) {
            if (b == top) mu[a] = c / Pi[a][b];
            else mu[b] = mu[top] * c / Pi[a][b];
        }
    }
    for (int a = 0; a < n; ++a) t[a] *= mu[a];
    c *= mu[top];
    QMat P = pairing_of(t, eta);
    for (auto& row : P)
        for (auto& e : row) e /= c;

    InvariantBasis B;
    B.R = R;
    B.degrees = deg;
    B.flat = true;
    for (auto& f : t) B.p.push_back(f.substitute(base.p));
    B.pairing = P;
    auto inv = inverse(P);
    if (!inv) throw SolverFailure("flat pairing is degenerate");
    B.pairing_inv = *inv;
    if (antidiag)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (P[a][b] != (a + b == n - 1 ? 1 : 0)) antidiag = false;
    B.antidiagonal = antidiag;

    // independent self-check: d g^{ab}(t) / d t^n equals the stored pairing
    if (saito_pairing_of(B) != P) throw SolverFailure("flat pairing self-check failed");
    return B;
}

}  // namespace saito
