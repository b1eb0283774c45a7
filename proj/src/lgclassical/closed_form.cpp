#include "saito/lgclassical.hpp"

#include "internal.hpp"

#include <cmath>
#include <numeric>

namespace saito {

namespace {

Scalar qpow(const Scalar& b, long e) {
    if (e == 0) return 1;  // includes 0^0
    if (sgn(b) == 0) {
        if (e < 0) throw std::domain_error("zero to a negative power");
        return 0;
    }
    Scalar r = 1;
    Scalar base = e > 0 ? b : Scalar(1 / b);
    for (long k = 0; k < (e > 0 ? e : -e); ++k) r *= base;
    return r;
}

QVec xi_unit(int d, int a) {
    QVec v(d, 0);
    v[a] = 1;
    return v;
}

// add c * canonical(v) to f with exponent e, folding the scale into the coefficient
void add_scaled(FactoredDeterminant& f, const QVec& v, int e) {
    LinearForm L = LinearForm::from_rational(v);
    std::size_t k = 0;
    while (L.coeffs()[k] == 0) ++k;
    Scalar scale = v[k] / Scalar(static_cast<long>(L.coeffs()[k]));
    *f.coefficient *= qpow(scale, e);
    f.add(L, e);
}

}  // namespace

int StratumConfigA::n() const { return std::accumulate(m.begin(), m.end(), 0) - 1; }

void StratumConfigA::validate() const {
    if (m.size() < 2) throw InvalidConfig("A configuration needs d >= 1");
    for (int x : m)
        if (x < 1) throw InvalidConfig("A multiplicities must be positive");
}

int StratumConfigBD::N() const { return m + std::accumulate(mult.begin(), mult.end(), 0); }

int StratumConfigBD::l() const { return origin == BDOrigin::D ? m + 1 : m; }

void StratumConfigBD::validate() const {
    if (mult.empty()) throw InvalidConfig("B/D configuration needs d >= 1");
    for (int x : mult)
        if (x < 1) throw InvalidConfig("B/D multiplicities must be positive");
    if (N() == 0) throw NZero("N = m + sum m_i vanishes");
    if (origin == BDOrigin::B && m < 0) throw InvalidConfig("B origin needs m = l >= 0");
    if (origin == BDOrigin::D && (m < -1 || m == 0)) throw InvalidConfig("D origin needs m = l - 1 with l = 0 or l >= 2");
}

Scalar kappa_A(const StratumConfigA& cfg) {
    cfg.validate();
    int n = cfg.n(), d = cfg.d();
    long sign_exp = long(n) * d;
    for (int i = 1; i <= d; ++i) sign_exp += long(i) * cfg.m[i];
    Scalar k = qpow(Scalar(n + 1), -n);
    for (int a = 1; a <= d; ++a) k *= qpow(Scalar(cfg.m[a]), 2);
    for (int a = 0; a <= d; ++a) k *= qpow(Scalar(cfg.m[a]), cfg.m[a] - 1);
    return sign_exp % 2 ? Scalar(-k) : k;
}

Scalar kappa_BD(const StratumConfigBD& cfg) {
    cfg.validate();
    int d = cfg.d(), N = cfg.N(), m = cfg.m;
    long sign_exp = long(d) * d + long(d) * (N - m);
    for (int i = 1; i <= d - 1; ++i) sign_exp += long(i) * cfg.mult[i];
    Scalar k = qpow(Scalar(2), d) * qpow(Scalar(m), m) * qpow(Scalar(N), -N);
    for (int a : cfg.mult) k *= qpow(Scalar(a), a + 1);
    return ((sign_exp % 2) + 2) % 2 ? Scalar(-k) : k;
}

FactoredDeterminant closed_form_det_A(const StratumConfigA& cfg, bool keep_xi0) {
    cfg.validate();
    int d = cfg.d();
    FactoredDeterminant f;
    f.coefficient = kappa_A(cfg);
    int nv = keep_xi0 ? d + 1 : d;
    auto xi = [&](int a) {
        if (keep_xi0) return xi_unit(nv, a);
        if (a > 0) return xi_unit(nv, a - 1);
        QVec v(nv);
        for (int i = 1; i <= d; ++i) v[i - 1] = -ratio(cfg.m[i], cfg.m[0]);
        return v;
    };
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) add_scaled(f, axpy(-1, xi(j), xi(i)), cfg.m[i] + cfg.m[j]);
    return f;
}

FactoredDeterminant closed_form_det_BD(const StratumConfigBD& cfg) {
    cfg.validate();
    int d = cfg.d();
    FactoredDeterminant f;
    f.coefficient = kappa_BD(cfg);
    for (int i = 0; i < d; ++i) {
        int e = 2 * (cfg.mult[i] + cfg.m);
        if (e != 0) f.add(LinearForm::from_rational(xi_unit(d, i)), e);
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            int e = cfg.mult[i] + cfg.mult[j];
            f.add(LinearForm::from_rational(axpy(-1, xi_unit(d, j), xi_unit(d, i))), e);
            f.add(LinearForm::from_rational(axpy(1, xi_unit(d, j), xi_unit(d, i))), e);
        }
    return f;
}

Scalar eval_factored(const FactoredDeterminant& f, const QVec& pt) {
    if (!f.coefficient) throw std::logic_error("cannot evaluate with an unknown coefficient");
    Scalar v = *f.coefficient;
    for (auto& fac : f.factors) {
        Scalar l = 0;
        for (std::size_t k = 0; k < fac.form.dim(); ++k) l += Scalar(static_cast<long>(fac.form.coeffs()[k])) * pt[k];
        v *= qpow(l, fac.exponent);
    }
    return v;
}

double eval_factored_double(const FactoredDeterminant& f, const std::vector<double>& pt) {
    if (!f.coefficient) throw std::logic_error("cannot evaluate with an unknown coefficient");
    double v = f.coefficient->get_d();
    for (auto& fac : f.factors) {
        double l = 0;
        for (std::size_t k = 0; k < fac.form.dim(); ++k) l += double(fac.form.coeffs()[k]) * pt[k];
        v *= std::pow(l, fac.exponent);
    }
    return v;
}

// exact critical polynomial: roots are the critical points (A) or their squares (B/D)
uni::QPoly critical_poly(const StratumConfigA& cfg, const QVec& xi_full) {
    uni::QPoly R;
    int d = cfg.d();
    for (int a = 0; a <= d; ++a) {
        uni::QPoly t{Scalar(cfg.m[a])};
        for (int b = 0; b <= d; ++b)
            if (b != a) t = uni::mul(t, uni::linear_root(xi_full[b]));
        R = uni::add(R, t);
    }
    return R;
}

uni::QPoly critical_poly(const StratumConfigBD& cfg, const QVec& xi) {
    int d = cfg.d();
    uni::QPoly prod{1};
    for (int b = 0; b < d; ++b) prod = uni::mul(prod, uni::linear_root(xi[b] * xi[b]));
    uni::QPoly R = uni::mul(uni::QPoly{Scalar(cfg.m)}, prod);
    for (int a = 0; a < d; ++a) {
        uni::QPoly t{0, Scalar(cfg.mult[a])};
        for (int b = 0; b < d; ++b)
            if (b != a) t = uni::mul(t, uni::linear_root(xi[b] * xi[b]));
        R = uni::add(R, t);
    }
    return R;
}

QVec full_xi(const StratumConfigA& cfg, const QVec& xi) {
    QVec f(cfg.m.size());
    f[0] = 0;
    for (int i = 1; i <= cfg.d(); ++i) {
        f[i] = xi[i - 1];
        f[0] -= ratio(cfg.m[i], cfg.m[0]) * xi[i - 1];
    }
    return f;
}

bool is_generic_point(const StratumConfigA& cfg, const QVec& xi, std::string* reason) {
    auto fail = [&](const char* why) {
        if (reason) *reason = why;
        return false;
    };
    if (int(xi.size()) != cfg.d()) return fail("wrong point dimension");
    QVec f = full_xi(cfg, xi);
    for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = a + 1; b < f.size(); ++b)
            if (f[a] == f[b]) return fail("coinciding xi");
    auto R = critical_poly(cfg, f);
    if (!uni::squarefree(R)) return fail("repeated critical point");
    for (auto& x : f)
        if (sgn(uni::eval(R, x)) == 0) return fail("critical point at a root of lambda");
    return true;
}

bool is_generic_point(const StratumConfigBD& cfg, const QVec& xi, std::string* reason) {
    auto fail = [&](const char* why) {
        if (reason) *reason = why;
        return false;
    };
    if (int(xi.size()) != cfg.d()) return fail("wrong point dimension");
    for (std::size_t a = 0; a < xi.size(); ++a) {
        if (sgn(xi[a]) == 0) return fail("xi vanishes");
        for (std::size_t b = a + 1; b < xi.size(); ++b)
            if (xi[a] * xi[a] == xi[b] * xi[b]) return fail("coinciding xi^2");
    }
    auto R = critical_poly(cfg, xi);
    if (!uni::squarefree(R)) return fail("repeated critical point");
    for (auto& x : xi)
        if (sgn(uni::eval(R, x * x)) == 0) return fail("critical point at a root of lambda");
    return true;
}

template <class Cfg>
static QVec sample_generic(const Cfg& cfg, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        QVec xi(cfg.d());
        for (auto& x : xi) {
            x = Scalar(num(rng), den(rng));
            x.canonicalize();
        }
        if (!is_generic_point(cfg, xi)) continue;
        // canonical coordinates also need distinct critical values
        try {
            critical_data(cfg, xi);
        } catch (const DegeneratePoint&) {
            continue;
        }
        return xi;
    }
    throw DegeneratePoint("no generic point found");
}

QVec random_generic_point(const StratumConfigA& cfg, std::mt19937_64& rng) { return sample_generic(cfg, rng); }
QVec random_generic_point(const StratumConfigBD& cfg, std::mt19937_64& rng) { return sample_generic(cfg, rng); }

QMat gram_A(const StratumConfigA& cfg) {
    int d = cfg.d();
    QMat g(d, QVec(d, 0));
    for (int a = 1; a <= d; ++a)
        for (int b = 1; b <= d; ++b)
            g[a - 1][b - 1] = ratio(cfg.m[a] * cfg.m[b], cfg.m[0]) + (a == b ? Scalar(cfg.m[a]) : Scalar(0));
    return g;
}

QMat gram_BD(const StratumConfigBD& cfg) {
    int d = cfg.d();
    QMat g(d, QVec(d, 0));
    for (int a = 0; a < d; ++a) g[a][a] = cfg.mult[a];
    return g;
}

static ClassicalEmbedding embed_rows(const std::string& group, const QMat& rows) {
    RootSystem R = build_root_system(group);
    ClassicalEmbedding e;
    e.group = group;
    e.ambient = rows;
    for (int j = 0; j < R.rank; ++j) {
        const QVec& a = R.roots[R.simple[j]];
        int d = int(rows[0].size());
        QVec s(d, 0);
        for (std::size_t k = 0; k < rows.size(); ++k) s = axpy(a[k], rows[k], s);
        bool zero = true;
        for (auto& x : s)
            if (sgn(x) != 0) zero = false;
        if (zero)
            e.I.push_back(j);
        else
            e.B.push_back(s);
    }
    if (e.B.size() != rows[0].size() || !inverse(e.B)) throw std::logic_error("configuration embedding is degenerate");
    return e;
}

ClassicalEmbedding embed_config(const StratumConfigA& cfg) {
    cfg.validate();
    int d = cfg.d();
    QMat rows;
    for (int a = 0; a <= d; ++a) {
        QVec r(d, 0);
        if (a == 0)
            for (int i = 1; i <= d; ++i) r[i - 1] = -ratio(cfg.m[i], cfg.m[0]);
        else
            r[a - 1] = 1;
        for (int k = 0; k < cfg.m[a]; ++k) rows.push_back(r);
    }
    return embed_rows("A" + std::to_string(cfg.n()), rows);
}

std::optional<ClassicalEmbedding> embed_config(const StratumConfigBD& cfg) {
    cfg.validate();
    if (!cfg.realizable()) return std::nullopt;
    bool d_type = cfg.origin == BDOrigin::D || (cfg.origin == BDOrigin::Generic && cfg.m == -1);
    int l = d_type ? cfg.m + 1 : cfg.m;
    int n = l + cfg.N() - cfg.m;
    if (d_type ? n < 3 : n < 2) return std::nullopt;
    int d = cfg.d();
    QMat rows;
    for (int a = 0; a < d; ++a)
        for (int k = 0; k < cfg.mult[a]; ++k) rows.push_back(xi_unit(d, a));
    for (int k = 0; k < l; ++k) rows.push_back(QVec(d, 0));
    return embed_rows((d_type ? "D" : "B") + std::to_string(n), rows);
}

FactoredDeterminant to_stratum_params(const FactoredDeterminant& f, const QMat& B) {
    auto Binv = inverse(B);
    if (!Binv) throw std::invalid_argument("singular parameter change");
    FactoredDeterminant out;
    out.coefficient = f.coefficient ? *f.coefficient : Scalar(1);
    for (auto& fac : f.factors) {
        QVec L;
        for (long long c : fac.form.coeffs()) L.emplace_back(static_cast<long>(c));
        QVec row(B.size(), 0);
        for (std::size_t a = 0; a < L.size(); ++a) row = axpy(L[a], (*Binv)[a], row);
        add_scaled(out, row, fac.exponent);
    }
    if (!f.coefficient) out.coefficient.reset();
    return out;
}

}  // namespace saito
