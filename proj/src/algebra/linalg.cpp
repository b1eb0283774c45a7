#include "saito/linalg.hpp"

#include <stdexcept>

namespace saito {

Scalar dot(const QVec& a, const QVec& b) {
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

QVec axpy(const Scalar& a, const QVec& x, const QVec& y) {
    QVec r = y;
    for (std::size_t i = 0; i < x.size(); ++i) r[i] += a * x[i];
    return r;
}

QMat identity(std::size_t n) {
    QMat m(n, QVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMat transpose(const QMat& m) {
    if (m.empty()) return {};
    QMat t(m[0].size(), QVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

QMat matmul(const QMat& a, const QMat& b) {
    std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    QMat c(n, QVec(p, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (sgn(a[i][l]) == 0) continue;
            for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

QVec matvec(const QMat& a, const QVec& v) {
    QVec r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], v);
    return r;
}

std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> piv;
    if (m.empty()) return piv;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Scalar inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            Scalar f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

std::size_t rank(QMat m) { return rref(m).size(); }

QMat nullspace(const QMat& m) {
    if (m.empty()) return {};
    QMat a = m;
    auto piv = rref(a);
    std::size_t cols = m[0].size();
    std::vector<bool> is_piv(cols, false);
    for (auto p : piv) is_piv[p] = true;
    QMat basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        QVec v(cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve(const QMat& a, const QVec& b) {
    std::size_t rows = a.size();
    if (rows == 0) return QVec{};
    std::size_t cols = a[0].size();
    QMat aug(rows, QVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    QVec x(cols, 0);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
    return x;
}

std::optional<QMat> inverse(const QMat& m) {
    std::size_t n = m.size();
    QMat aug(n, QVec(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("inverse: non-square matrix");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    QMat inv(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

Scalar det(QMat m) {
    std::size_t n = m.size();
    Scalar d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m[i][c]) == 0) continue;
            Scalar f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

QVec SpanBasis::reduce(QVec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& f = v[pivots_[r]];
        if (sgn(f) == 0) continue;
        Scalar ff = f;
        for (std::size_t j = 0; j < dim_; ++j)
            if (sgn(rows_[r][j]) != 0) v[j] -= ff * rows_[r][j];
    }
    return v;
}

bool SpanBasis::contains(const QVec& v) const {
    QVec r = reduce(v);
    for (auto& x : r)
        if (sgn(x) != 0) return false;
    return true;
}

bool SpanBasis::add(const QVec& v) {
    QVec r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && sgn(r[p]) == 0) ++p;
    if (p == dim_) return false;
    Scalar inv = 1 / r[p];
    for (auto& x : r) x *= inv;
    // keep rows fully reduced against the new pivot
    for (auto& row : rows_) {
        if (sgn(row[p]) == 0) continue;
        Scalar f = row[p];
        for (std::size_t j = 0; j < dim_; ++j) row[j] -= f * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

}  // namespace saito
