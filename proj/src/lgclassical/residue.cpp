#include "internal.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace saito {

namespace {

constexpr double kRootTol = 1e-12;

std::vector<cplx> poly_roots(const uni::QPoly& exact) {
    std::vector<double> c;
    for (auto& x : exact) c.push_back(x.get_d());
    int deg = int(c.size()) - 1;
    std::vector<cplx> roots;
    if (deg < 1) return roots;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[i] / c[deg];
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    std::vector<double> dc;
    for (int i = 1; i <= deg; ++i) dc.push_back(i * c[i]);
    for (int i = 0; i < deg; ++i) {
        cplx z = es.eigenvalues()[i];
        for (int it = 0; it < 8; ++it) {
            cplx f = uni::eval(c, z), df = uni::eval(dc, z);
            if (std::abs(df) == 0.0) break;
            cplx step = f / df;
            z -= step;
            if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(z))) break;
        }
        double scale = 0;
        for (int k = 0; k <= deg; ++k) scale += std::abs(c[k]) * std::pow(std::abs(z), k);
        if (std::abs(uni::eval(c, z)) > kRootTol * scale) throw DegeneratePoint("critical point did not converge");
        roots.push_back(z);
    }
    return roots;
}

std::vector<double> to_double(const QVec& v) {
    std::vector<double> d;
    for (auto& x : v) d.push_back(x.get_d());
    return d;
}

void check_distinct(const std::vector<cplx>& u) {
    double scale = 0;
    for (auto& x : u) scale = std::max(scale, std::abs(x));
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (std::abs(u[i] - u[j]) <= 1e-9 * scale) throw DegeneratePoint("critical values collide");
}

double rel(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    double nb = b.cwiseAbs().maxCoeff();
    return (a - b).cwiseAbs().maxCoeff() / (nb > 0 ? nb : 1.0);
}

// Superpotential data for one configuration, evaluated in double precision.
struct Model {
    virtual ~Model() = default;
    virtual int dim() const = 0;
    virtual cplx lambda(cplx p) const = 0;
    virtual cplx dlog2(cplx p) const = 0;         // (lambda'/lambda)'
    virtual cplx dlambda(int a, cplx p) const = 0;  // d lambda / d xi_a at fixed p
    virtual double canonical_scale() const = 0;  // eta(d_ui, d_ui) = scale * eps_i / lambda''(q_i)
    virtual cplx dxi_du(int a, const CriticalData& c, int i) const = 0;
    virtual std::vector<cplx> critical_points(const CriticalData& c) const = 0;  // all zeros of lambda'
    virtual double euler_constant() const = 0;
    virtual QMat gram() const = 0;
};

struct ModelA : Model {
    StratumConfigA cfg;
    std::vector<double> xi;  // xi_0..xi_d
    ModelA(const StratumConfigA& c, const QVec& x) : cfg(c), xi(to_double(full_xi(c, x))) {}
    int dim() const override { return cfg.d(); }
    cplx lambda(cplx p) const override {
        cplx v = 1;
        for (int a = 0; a <= cfg.d(); ++a) v *= std::pow(p - xi[a], cfg.m[a]);
        return v;
    }
    cplx dlog2(cplx p) const override {
        cplx s = 0;
        for (int a = 0; a <= cfg.d(); ++a) s -= double(cfg.m[a]) / ((p - xi[a]) * (p - xi[a]));
        return s;
    }
    cplx dlambda(int a, cplx p) const override {
        return lambda(p) * double(cfg.m[a + 1]) * (1.0 / (p - xi[0]) - 1.0 / (p - xi[a + 1]));
    }
    double canonical_scale() const override { return 1.0; }
    cplx dxi_du(int a, const CriticalData& c, int i) const override {
        return 1.0 / ((c.q[i] - xi[a + 1]) * c.lambda2[i]);
    }
    std::vector<cplx> critical_points(const CriticalData& c) const override { return c.q; }
    double euler_constant() const override { return -1.0; }
    QMat gram() const override { return gram_A(cfg); }
};

struct ModelBD : Model {
    StratumConfigBD cfg;
    std::vector<double> xi;
    ModelBD(const StratumConfigBD& c, const QVec& x) : cfg(c), xi(to_double(x)) {}
    int dim() const override { return cfg.d(); }
    cplx lambda(cplx p) const override {
        cplx v = cfg.m == 0 ? cplx(1) : std::pow(p, 2 * cfg.m);
        for (int a = 0; a < cfg.d(); ++a) v *= std::pow(p * p - xi[a] * xi[a], cfg.mult[a]);
        return v;
    }
    cplx dlog2(cplx p) const override {
        cplx s = cfg.m == 0 ? cplx(0) : -2.0 * cfg.m / (p * p);
        for (int a = 0; a < cfg.d(); ++a)
            s -= double(cfg.mult[a]) * (1.0 / ((p - xi[a]) * (p - xi[a])) + 1.0 / ((p + xi[a]) * (p + xi[a])));
        return s;
    }
    cplx dlambda(int a, cplx p) const override {
        return lambda(p) * (-2.0 * cfg.mult[a] * xi[a]) / (p * p - xi[a] * xi[a]);
    }
    double canonical_scale() const override { return 2.0; }
    cplx dxi_du(int a, const CriticalData& c, int i) const override {
        return 2.0 * c.eps[i] * xi[a] / ((c.q[i] * c.q[i] - xi[a] * xi[a]) * c.lambda2[i]);
    }
    std::vector<cplx> critical_points(const CriticalData& c) const override {
        std::vector<cplx> pts;
        for (std::size_t i = 0; i < c.q.size(); ++i) {
            pts.push_back(c.q[i]);
            if (c.eps[i] == 1.0) pts.push_back(-c.q[i]);
        }
        return pts;
    }
    double euler_constant() const override { return -2.0; }
    QMat gram() const override { return gram_BD(cfg); }
};

void fill_values(const Model& M, CriticalData& c) {
    for (auto& q : c.q) {
        cplx l = M.lambda(q);
        c.u.push_back(l);
        c.lambda2.push_back(l * M.dlog2(q));
    }
    check_distinct(c.u);
}

ResidueMetric residue_from(const Model& M, CriticalData crit) {
    int d = M.dim();
    ResidueMetric out;
    Eigen::MatrixXcd K(d, d);
    Eigen::VectorXcd w(d);
    for (int i = 0; i < d; ++i) {
        w(i) = M.canonical_scale() * crit.eps[i] / crit.lambda2[i];
        for (int a = 0; a < d; ++a) K(a, i) = M.dxi_du(a, crit, i);
    }
    Eigen::MatrixXcd Kinv = K.inverse();
    out.eta = Kinv.transpose() * w.asDiagonal() * Kinv;
    // diagonal form times det(K)^-2; expanding eta first loses digits to cancellation
    cplx kd = K.determinant();
    out.det = w.prod() / (kd * kd);
    out.dxi_du = K;

    out.eta_direct = Eigen::MatrixXcd::Zero(d, d);
    for (cplx p : M.critical_points(crit)) {
        cplx l2 = M.lambda(p) * M.dlog2(p);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) out.eta_direct(a, b) += M.dlambda(a, p) * M.dlambda(b, p) / l2;
    }
    out.symmetry_residual = rel(out.eta, out.eta.transpose());
    out.route_residual = rel(out.eta_direct, out.eta);
    out.crit = std::move(crit);
    return out;
}

FrobeniusReport frobenius_from(const Model& M, const ResidueMetric& rm) {
    int d = M.dim();
    FrobeniusReport rep;
    rep.constant = M.euler_constant();
    rep.gram = M.gram();
    Eigen::MatrixXcd G(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) G(a, b) = rep.gram[a][b].get_d();
    const Eigen::MatrixXcd& K = rm.dxi_du;
    const CriticalData& c = rm.crit;

    // canonical frame: eta is diagonal, E o is diag(u). Entries are compared
    // against sqrt|eta_ii eta_jj| since the diagonal spans many decades.
    Eigen::MatrixXcd g_u = K.transpose() * G * K;
    std::vector<cplx> w(d);
    for (int i = 0; i < d; ++i) w[i] = M.canonical_scale() * c.eps[i] / c.lambda2[i];
    rep.metric_residual = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            cplx lhs = i == j ? w[i] : cplx(0);
            double scale = std::sqrt(std::abs(w[i] * w[j]));
            rep.metric_residual = std::max(rep.metric_residual, std::abs(rep.constant * c.u[i] * g_u(i, j) - lhs) / scale);
        }

    cplx prod = std::pow(rep.constant, d) * G.determinant();
    for (auto& u : c.u) prod *= u;
    rep.det_residual = std::abs(prod - rm.det) / std::abs(rm.det);

    // three-point residues transported to canonical coordinates
    std::vector<cplx> pts = M.critical_points(c);
    std::vector<Eigen::VectorXcd> grads;
    std::vector<cplx> l2s;
    for (cplx p : pts) {
        Eigen::VectorXcd g(d);
        for (int a = 0; a < d; ++a) g(a) = M.dlambda(a, p);
        grads.push_back(g);
        l2s.push_back(M.lambda(p) * M.dlog2(p));
    }
    double worst = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                cplx s = 0;
                for (std::size_t t = 0; t < pts.size(); ++t) {
                    cplx gi = grads[t].transpose() * K.col(i);
                    cplx gj = grads[t].transpose() * K.col(j);
                    cplx gk = grads[t].transpose() * K.col(k);
                    s += gi * gj * gk / l2s[t];
                }
                cplx expect = (i == j && j == k) ? w[i] : cplx(0);
                double scale = std::cbrt(std::abs(w[i] * w[j] * w[k]));
                worst = std::max(worst, std::abs(s - expect) / scale);
            }
    rep.idempotency_residual = worst;
    return rep;
}

}  // namespace

CriticalData critical_data(const StratumConfigA& cfg, const QVec& xi) {
    std::string why;
    if (!is_generic_point(cfg, xi, &why)) throw DegeneratePoint(why);
    ModelA M(cfg, xi);
    CriticalData c;
    c.q = poly_roots(critical_poly(cfg, full_xi(cfg, xi)));
    if (int(c.q.size()) != cfg.d()) throw std::logic_error("wrong critical point count");
    c.eps.assign(c.q.size(), 1.0);
    fill_values(M, c);
    return c;
}

CriticalData critical_data(const StratumConfigBD& cfg, const QVec& xi) {
    std::string why;
    if (!is_generic_point(cfg, xi, &why)) throw DegeneratePoint(why);
    ModelBD M(cfg, xi);
    auto R = critical_poly(cfg, xi);
    CriticalData c;
    if (cfg.m == 0) {
        // y = 0 is an exact root: deflate it and keep q = 0 with weight 1/2
        if (sgn(R[0]) != 0) throw std::logic_error("expected a zero critical point");
        R.erase(R.begin());
        c.q.push_back(0.0);
        c.eps.push_back(0.5);
    }
    for (cplx y : poly_roots(R)) {
        c.q.push_back(std::sqrt(y));
        c.eps.push_back(1.0);
    }
    if (int(c.q.size()) != cfg.d()) throw std::logic_error("wrong critical point count");
    fill_values(M, c);
    return c;
}

ResidueMetric residue_metric_at(const StratumConfigA& cfg, const QVec& xi) {
    return residue_from(ModelA(cfg, xi), critical_data(cfg, xi));
}

ResidueMetric residue_metric_at(const StratumConfigBD& cfg, const QVec& xi) {
    return residue_from(ModelBD(cfg, xi), critical_data(cfg, xi));
}

FrobeniusReport frobenius_check_at(const StratumConfigA& cfg, const QVec& xi) {
    ModelA M(cfg, xi);
    return frobenius_from(M, residue_from(M, critical_data(cfg, xi)));
}

FrobeniusReport frobenius_check_at(const StratumConfigBD& cfg, const QVec& xi) {
    ModelBD M(cfg, xi);
    return frobenius_from(M, residue_from(M, critical_data(cfg, xi)));
}

}  // namespace saito
