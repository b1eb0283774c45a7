#include "saito/saitosym.hpp"
#include "internal.hpp"

#include <algorithm>
#include <random>

namespace saito {

MultiPoly root_product(const RootSystem& R) {
    MultiPoly prod(R.chart_vars(), Scalar(1));
    for (int b : R.positive) prod = prod * MultiPoly::linear(R.chart_form(R.roots[b]));
    return prod;
}

MultiPoly jacobian_det(const RootSystem& R, const std::vector<MultiPoly>& p) {
    int nv = R.chart_vars();
    PolyMatrix m(p.size(), std::vector<MultiPoly>(nv));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int a = 0; a < nv; ++a) m[i][a] = p[i].diff(a);
    return poly_det(m);
}

PolyMatrix gradient_gram(const RootSystem& R, const std::vector<MultiPoly>& p) {
    int nv = R.chart_vars();
    QMat G = R.gradient_metric();
    std::vector<std::vector<MultiPoly>> grad(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int a = 0; a < nv; ++a) grad[i].push_back(p[i].diff(a));
    // raised gradients: sum_b G^{ab} d_b p
    std::vector<std::vector<MultiPoly>> up(p.size(), std::vector<MultiPoly>(nv, MultiPoly(nv)));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int a = 0; a < nv; ++a)
            for (int b = 0; b < nv; ++b)
                if (sgn(G[a][b]) != 0) up[i][a] += grad[i][b] * G[a][b];
    PolyMatrix g(p.size(), std::vector<MultiPoly>(p.size(), MultiPoly(nv)));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i; j < p.size(); ++j) {
            for (int a = 0; a < nv; ++a) g[i][j] += up[i][a] * grad[j][a];
            g[j][i] = g[i][j];
        }
    return g;
}

namespace detail {

std::vector<std::vector<int>> weighted_exponents(const std::vector<int>& w, int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(w.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == w.size()) {
            if (left == 0) out.push_back(e);
            return;
        }
        for (int k = 0; k * w[i] <= left; ++k) {
            e[i] = k;
            self(self, i + 1, left - k * w[i]);
        }
        e[i] = 0;
    };
    rec(rec, 0, total);
    return out;
}

MultiPoly monomial(int nvars, const std::vector<int>& e, const std::vector<int>& w) {
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) m = m * Monomial::single(int(i), e[i]);
    MultiPoly r = MultiPoly::from_terms(nvars, {Term{m, Scalar(1)}});
    r.set_weights(w);
    return r;
}

}  // namespace detail

MultiPoly express_in(const MultiPoly& f, const std::vector<MultiPoly>& basis, const std::vector<int>& degrees) {
    int n = int(basis.size());
    MultiPoly zero(n);
    zero.set_weights(degrees);
    if (f.is_zero()) return zero;
    if (!f.is_homogeneous()) throw SolverFailure("express_in: input not homogeneous");
    int total = f.total_degree();
    auto exps = detail::weighted_exponents(degrees, total);
    if (exps.empty()) throw SolverFailure("express_in: no monomial of degree " + std::to_string(total));
    std::size_t K = exps.size();
    int nv = f.nvars();

    std::mt19937_64 rng(0x5eed + total);
    std::uniform_int_distribution<int> dist(-7, 7);
    QMat rows;
    for (std::size_t r = 0; r < K + 4; ++r) {
        QVec x(nv);
        for (auto& c : x) c = dist(rng);
        QVec pv(n);
        for (int i = 0; i < n; ++i) pv[i] = basis[i].eval(x);
        QVec row;
        for (auto& e : exps) {
            Scalar v = 1;
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < e[i]; ++k) v *= pv[i];
            row.push_back(v);
        }
        row.push_back(f.eval(x));
        rows.push_back(std::move(row));
    }
    auto piv = rref(rows);
    if (!piv.empty() && piv.back() == K) throw SolverFailure("express_in: inconsistent system");
    if (piv.size() != K) throw SolverFailure("express_in: underdetermined system (dependent basis?)");
    std::vector<Term> terms;
    for (std::size_t r = 0; r < K; ++r) {
        const Scalar& c = rows[r][K];
        if (sgn(c) == 0) continue;
        Monomial m;
        for (int i = 0; i < n; ++i)
            if (exps[piv[r]][i]) m = m * Monomial::single(i, exps[piv[r]][i]);
        terms.push_back({m, c});
    }
    MultiPoly out = MultiPoly::from_terms(n, std::move(terms));
    out.set_weights(degrees);
    if (out.substitute(basis) != f) throw SolverFailure("express_in: re-expansion mismatch");
    return out;
}

static void check_jacobian(const RootSystem& R, const std::vector<MultiPoly>& p) {
    MultiPoly J = jacobian_det(R, p);
    if (J.is_zero()) throw DegenerateBasis(R.label + ": Jacobian vanishes identically");
    auto q = try_divide(J, root_product(R));
    if (!q || !q->is_constant() || q->is_zero())
        throw DegenerateBasis(R.label + ": Jacobian not proportional to the product of positive roots");
}

static InvariantBasis finish_basis(std::shared_ptr<const RootSystem> R, std::vector<MultiPoly> p) {
    InvariantBasis B;
    B.R = std::move(R);
    for (auto& q : p) B.degrees.push_back(q.total_degree());
    B.p = std::move(p);
    int n = B.n();
    B.pairing.assign(n, QVec(n, 0));
    for (int i = 0; i < n; ++i) B.pairing[i][n - 1 - i] = 1;
    B.pairing_inv = B.pairing;
    return B;
}

InvariantBasis basic_invariants(std::shared_ptr<const RootSystem> R) {
    if (R->rank > kSymbolicRankCap) throw UnsupportedGroup(R->label + ": symbolic route capped at rank 4");
    if (R->family == Family::E) throw UnsupportedGroup(R->label + ": no symbolic invariants for E types");
    int n = R->rank;
    int nv = R->chart_vars();
    std::vector<MultiPoly> x;
    for (int a = 0; a < nv; ++a) x.push_back(MultiPoly::variable(nv, a));
    auto power_sum = [&](int k) {
        MultiPoly s(nv);
        for (auto& v : x) s += v.pow(k);
        return s;
    };
    std::vector<MultiPoly> p;
    switch (R->family) {
        case Family::A: {
            MultiPoly last(nv);
            for (auto& v : x) last -= v;
            for (int k = 2; k <= n + 1; ++k) p.push_back(power_sum(k) + last.pow(k));
            break;
        }
        case Family::B:
            for (int k = 1; k <= n; ++k) p.push_back(power_sum(2 * k));
            break;
        case Family::D: {
            for (int k = 1; k < n; ++k) p.push_back(power_sum(2 * k));
            MultiPoly prod(nv, Scalar(1));
            for (auto& v : x) prod = prod * v;
            p.push_back(prod);
            break;
        }
        case Family::F: {
            std::vector<MultiPoly> forms;
            for (int b : R->positive) forms.push_back(MultiPoly::linear(R->chart_form(R->roots[b])));
            for (int d : R->degrees) {
                MultiPoly s(nv);
                for (auto& f : forms) s += f.pow(d);
                p.push_back(s);
            }
            break;
        }
        default:
            throw UnsupportedGroup(R->label);
    }
    std::stable_sort(p.begin(), p.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return a.total_degree() < b.total_degree();
    });
    check_jacobian(*R, p);
    return finish_basis(std::move(R), std::move(p));
}

InvariantBasis example14_basis(const Scalar& a, const Scalar& b) {
    auto R = std::make_shared<const RootSystem>(build_root_system("D", 3));
    std::vector<MultiPoly> x;
    for (int i = 0; i < 3; ++i) x.push_back(MultiPoly::variable(3, i));
    MultiPoly p1 = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) * Scalar(1, 8);
    MultiPoly p2 = x[0] * x[1] * x[2];
    MultiPoly p3 = (x[0].pow(4) + x[1].pow(4) + x[2].pow(4)) * a + p1 * p1 * b;
    std::vector<MultiPoly> p{p1, p2, p3};
    check_jacobian(*R, p);
    return finish_basis(R, std::move(p));
}

}  // namespace saito
