#include "saito/roots.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace saito {

namespace {

QVec unit(int dim, int i, long c = 1) {
    QVec v(dim, 0);
    v[i] = c;
    return v;
}

QVec add(QVec a, const QVec& b, long s = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
    return a;
}

void pm_pairs(int dim, std::vector<QVec>& out) {
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) out.push_back(add(unit(dim, i, si), unit(dim, j, sj)));
}

std::vector<QVec> e8_roots() {
    std::vector<QVec> r;
    pm_pairs(8, r);
    for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(unsigned(mask)) % 2) continue;
        QVec v(8);
        for (int i = 0; i < 8; ++i) v[i] = Scalar((mask >> i) & 1 ? -1 : 1, 2);
        r.push_back(v);
    }
    return r;
}

std::vector<QVec> e8_simple() {
    std::vector<QVec> s;
    QVec a1(8, Scalar(-1, 2));
    a1[0] = Scalar(1, 2);
    a1[7] = Scalar(1, 2);
    s.push_back(a1);
    s.push_back(add(unit(8, 0), unit(8, 1)));
    for (int i = 3; i <= 8; ++i) s.push_back(add(unit(8, i - 2), unit(8, i - 3), -1));
    return s;
}

}  // namespace

int RootSystem::index_of(const std::vector<int>& c) const {
    auto it = by_coeffs.find(c);
    return it == by_coeffs.end() ? -1 : it->second;
}

int RootSystem::negate(int root) const {
    auto c = coeffs[root];
    for (auto& x : c) x = -x;
    return index_of(c);
}

bool RootSystem::is_positive(int root) const {
    for (int x : coeffs[root])
        if (x != 0) return x > 0;
    return false;
}

int RootSystem::positive_rep(int root) const { return is_positive(root) ? root : negate(root); }

int RootSystem::simple_reflect(int root, int i) const {
    int a = simple[i];
    int pair = 2 * ip2[root][a] / ip2[a][a];
    auto c = coeffs[root];
    c[i] -= pair;
    return index_of(c);
}

int RootSystem::chart_vars() const { return family == Family::A ? rank : ambient_dim; }

QVec RootSystem::chart_form(const QVec& v) const {
    if (family != Family::A) return v;
    QVec c(rank);
    for (int a = 0; a < rank; ++a) c[a] = v[a] - v[rank];
    return c;
}

QVec RootSystem::chart_direction(const QVec& v) const {
    if (family != Family::A) return v;
    return QVec(v.begin(), v.begin() + rank);
}

QVec RootSystem::chart_point(const QVec& x) const {
    if (family != Family::A) return x;
    return QVec(x.begin(), x.begin() + rank);
}

QMat RootSystem::gradient_metric() const {
    int n = chart_vars();
    QMat g = identity(n);
    if (family == Family::A)
        for (auto& row : g)
            for (auto& x : row) x -= Scalar(1, rank + 1);
    return g;
}

static void finish(RootSystem& R, const std::vector<QVec>& all, const std::vector<QVec>& simple_vecs) {
    int n = R.rank;
    QMat gram(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram[i][j] = dot(simple_vecs[i], simple_vecs[j]);
    auto ginv = inverse(gram);
    if (!ginv) throw std::logic_error("simple roots are dependent");
    R.coweights.assign(n, QVec(R.ambient_dim, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            R.coweights[i] = axpy((*ginv)[i][k], simple_vecs[k], R.coweights[i]);
    R.cartan.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar c = 2 * gram[i][j] / gram[j][j];
            R.cartan[i][j] = int(c.get_num().get_si());
        }
    // keep only roots in the span of the simple system, with integer coefficients
    for (auto& v : all) {
        std::vector<int> c(n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            Scalar x = dot(v, R.coweights[i]);
            if (x.get_den() != 1) ok = false;
            else c[i] = int(x.get_num().get_si());
        }
        if (!ok) continue;
        QVec back(R.ambient_dim, 0);
        for (int i = 0; i < n; ++i) back = axpy(c[i], simple_vecs[i], back);
        if (back != v) continue;
        R.roots.push_back(v);
        R.coeffs.push_back(c);
    }
    for (std::size_t r = 0; r < R.roots.size(); ++r) {
        bool pos = false, neg = false;
        for (int x : R.coeffs[r]) {
            if (x > 0) pos = true;
            if (x < 0) neg = true;
        }
        if (pos && neg) throw std::logic_error("root with mixed-sign coefficients");
        R.by_coeffs[R.coeffs[r]] = int(r);
    }
    for (std::size_t r = 0; r < R.roots.size(); ++r)
        if (R.is_positive(int(r))) R.positive.push_back(int(r));
    for (int i = 0; i < n; ++i) {
        std::vector<int> c(n, 0);
        c[i] = 1;
        int idx = R.index_of(c);
        if (idx < 0) throw std::logic_error("simple root missing from root list");
        R.simple.push_back(idx);
    }
    std::size_t N = R.roots.size();
    R.ip2.assign(N, std::vector<int>(N));
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a; b < N; ++b) {
            Scalar x = 2 * dot(R.roots[a], R.roots[b]);
            R.ip2[a][b] = R.ip2[b][a] = int(x.get_num().get_si());
        }
}

RootSystem build_root_system(const std::string& type, int n) {
    RootSystem R;
    std::vector<QVec> all, simple;
    if (type == "A") {
        if (n < 1) throw UnsupportedGroup("A_n needs n >= 1");
        R.family = Family::A;
        R.ambient_dim = n + 1;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                if (i != j) all.push_back(add(unit(n + 1, i), unit(n + 1, j), -1));
        for (int i = 0; i < n; ++i) simple.push_back(add(unit(n + 1, i), unit(n + 1, i + 1), -1));
        for (int k = 2; k <= n + 1; ++k) R.degrees.push_back(k);
        R.h = n + 1;
    } else if (type == "B") {
        if (n < 2) throw UnsupportedGroup("B_n needs n >= 2");
        R.family = Family::B;
        R.ambient_dim = n;
        pm_pairs(n, all);
        for (int i = 0; i < n; ++i) {
            all.push_back(unit(n, i));
            all.push_back(unit(n, i, -1));
        }
        for (int i = 0; i + 1 < n; ++i) simple.push_back(add(unit(n, i), unit(n, i + 1), -1));
        simple.push_back(unit(n, n - 1));
        for (int k = 1; k <= n; ++k) R.degrees.push_back(2 * k);
        R.h = 2 * n;
    } else if (type == "D") {
        if (n < 3) throw UnsupportedGroup("D_n needs n >= 3");
        R.family = Family::D;
        R.ambient_dim = n;
        pm_pairs(n, all);
        for (int i = 0; i + 1 < n; ++i) simple.push_back(add(unit(n, i), unit(n, i + 1), -1));
        simple.push_back(add(unit(n, n - 2), unit(n, n - 1)));
        for (int k = 1; k < n; ++k) R.degrees.push_back(2 * k);
        R.degrees.push_back(n);
        std::sort(R.degrees.begin(), R.degrees.end());
        R.h = 2 * n - 2;
    } else if (type == "E") {
        if (n < 6 || n > 8) throw UnsupportedGroup("E_n needs n in {6,7,8}");
        R.family = Family::E;
        R.ambient_dim = 8;
        all = e8_roots();
        auto s8 = e8_simple();
        simple.assign(s8.begin(), s8.begin() + n);
        if (n == 6) R.degrees = {2, 5, 6, 8, 9, 12}, R.h = 12;
        if (n == 7) R.degrees = {2, 6, 8, 10, 12, 14, 18}, R.h = 18;
        if (n == 8) R.degrees = {2, 8, 12, 14, 18, 20, 24, 30}, R.h = 30;
    } else if (type == "F") {
        if (n != 4) throw UnsupportedGroup("F_n needs n = 4");
        R.family = Family::F;
        R.ambient_dim = 4;
        pm_pairs(4, all);
        for (int i = 0; i < 4; ++i) {
            all.push_back(unit(4, i));
            all.push_back(unit(4, i, -1));
        }
        for (int mask = 0; mask < 16; ++mask) {
            QVec v(4);
            for (int i = 0; i < 4; ++i) v[i] = Scalar((mask >> i) & 1 ? -1 : 1, 2);
            all.push_back(v);
        }
        simple = {add(unit(4, 1), unit(4, 2), -1), add(unit(4, 2), unit(4, 3), -1), unit(4, 3),
                  QVec{Scalar(1, 2), Scalar(-1, 2), Scalar(-1, 2), Scalar(-1, 2)}};
        R.degrees = {2, 6, 8, 12};
        R.h = 12;
    } else {
        throw UnsupportedGroup("unsupported root system type " + type);
    }
    R.rank = n;
    R.label = type + std::to_string(n);
    finish(R, all, simple);
    return R;
}

RootSystem build_root_system(const std::string& label) {
    std::size_t p = 0;
    while (p < label.size() && std::isalpha(static_cast<unsigned char>(label[p]))) ++p;
    if (p == 0 || p == label.size()) throw UnsupportedGroup("bad group label " + label);
    std::string type = label.substr(0, p);
    for (auto& ch : type) ch = char(std::toupper(static_cast<unsigned char>(ch)));
    int n = 0;
    try {
        n = std::stoi(label.substr(p));
    } catch (const std::exception&) {
        throw UnsupportedGroup("bad group label " + label);
    }
    return build_root_system(type, n);
}

std::vector<std::string> supported_labels(int max_rank) {
    std::vector<std::string> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back("A" + std::to_string(n));
    for (int n = 2; n <= max_rank; ++n) out.push_back("B" + std::to_string(n));
    for (int n = 3; n <= max_rank; ++n) out.push_back("D" + std::to_string(n));
    out.insert(out.end(), {"E6", "E7", "E8", "F4"});
    return out;
}

}  // namespace saito
