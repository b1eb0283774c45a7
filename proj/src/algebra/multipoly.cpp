#include "saito/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace saito {

Scalar parse_scalar(const std::string& s) {
    Scalar q(s);
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& q) { return q.get_str(); }

Scalar ratio(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

Monomial Monomial::single(int var, int e) {
    if (var < 0 || var >= kMaxVars || e < 0 || e > 255)
        throw std::out_of_range("monomial exponent out of range");
    Monomial m;
    m.bits = std::uint64_t(e) << (8 * (7 - var));
    m.deg = std::uint32_t(e);
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (deg + o.deg > 255) {
        for (int v = 0; v < kMaxVars; ++v)
            if (exp(v) + o.exp(v) > 255) throw std::overflow_error("monomial exponent overflow");
    }
    Monomial m;
    m.bits = bits + o.bits;
    m.deg = deg + o.deg;
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int v = 0; v < kMaxVars; ++v)
        if (exp(v) > o.exp(v)) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial m;
    m.bits = bits - o.bits;
    m.deg = deg - o.deg;
    return m;
}

void MultiPoly::check_nvars() const {
    if (nvars_ < 0 || nvars_ > Monomial::kMaxVars)
        throw std::out_of_range("MultiPoly supports at most 8 variables");
}

MultiPoly::MultiPoly(int nvars, const Scalar& c) : nvars_(nvars) {
    check_nvars();
    if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
}

MultiPoly MultiPoly::variable(int nvars, int var) {
    MultiPoly p(nvars);
    if (var < 0 || var >= nvars) throw std::out_of_range("variable index");
    p.terms_.push_back({Monomial::single(var, 1), 1});
    return p;
}

MultiPoly MultiPoly::linear(const std::vector<Scalar>& coeffs) {
    MultiPoly p(int(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (sgn(coeffs[i]) != 0) p.terms_.push_back({Monomial::single(int(i), 1), coeffs[i]});
    // variable order 0,1,... is already grlex-descending
    return p;
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<Term> terms) {
    MultiPoly p(nvars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void MultiPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coef += t.coef;
        else
            out.push_back(std::move(t));
        if (sgn(out.back().coef) == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.deg == 0);
}

Scalar MultiPoly::constant_value() const {
    if (!terms_.empty() && terms_.back().mono.deg == 0) return terms_.back().coef;
    return 0;
}

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : int(terms_.front().mono.deg); }

bool MultiPoly::is_homogeneous() const {
    return terms_.empty() || terms_.front().mono.deg == terms_.back().mono.deg;
}

long MultiPoly::weighted_degree(const std::vector<int>& w) const {
    long d = -1;
    for (auto& t : terms_) {
        long e = 0;
        for (int v = 0; v < nvars_; ++v) e += long(t.mono.exp(v)) * w.at(v);
        if (d == -1)
            d = e;
        else if (d != e)
            return -1;
    }
    return d;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

static void merge_into(std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && grlex_greater(a[i].mono, b[j].mono))) {
            out.push_back(std::move(a[i++]));
        } else if (i == a.size() || grlex_greater(b[j].mono, a[i].mono)) {
            out.push_back({b[j].mono, subtract ? Scalar(-b[j].coef) : b[j].coef});
            ++j;
        } else {
            Scalar c = subtract ? Scalar(a[i].coef - b[j].coef) : Scalar(a[i].coef + b[j].coef);
            if (sgn(c) != 0) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    merge_into(terms_, o.terms_, false);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    merge_into(terms_, o.terms_, true);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coef *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
    MultiPoly r(a.nvars_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (b.terms_.size() == 1) {
        r.terms_.reserve(a.terms_.size());
        for (auto& t : a.terms_) r.terms_.push_back({t.mono * b.terms_[0].mono, t.coef * b.terms_[0].coef});
        return r;  // multiplying by a monomial preserves the order
    }
    if (a.terms_.size() == 1) return b * a;
    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(a.terms_.size() * b.terms_.size());
    std::vector<Term> acc;
    mpq_class prod;
    for (auto& s : a.terms_)
        for (auto& t : b.terms_) {
            Monomial m = s.mono * t.mono;
            prod = s.coef * t.coef;
            auto [it, fresh] = index.emplace(m.bits, acc.size());
            if (fresh)
                acc.push_back({m, prod});
            else
                acc[it->second].coef += prod;
        }
    std::erase_if(acc, [](const Term& t) { return sgn(t.coef) == 0; });
    std::sort(acc.begin(), acc.end(), [](const Term& x, const Term& y) { return grlex_greater(x.mono, y.mono); });
    r.terms_ = std::move(acc);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result(nvars_, Scalar(1)), base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::diff(int var) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        int e = t.mono.exp(var);
        if (e == 0) continue;
        Monomial m = t.mono / Monomial::single(var, 1);
        out.push_back({m, t.coef * e});
    }
    return from_terms(nvars_, std::move(out));
}

MultiPoly MultiPoly::directional(const std::vector<Scalar>& v) const {
    std::vector<Term> out;
    for (int a = 0; a < nvars_ && a < int(v.size()); ++a) {
        if (sgn(v[a]) == 0) continue;
        for (auto& t : terms_) {
            int e = t.mono.exp(a);
            if (e == 0) continue;
            out.push_back({t.mono / Monomial::single(a, 1), t.coef * e * v[a]});
        }
    }
    return from_terms(nvars_, std::move(out));
}

Scalar MultiPoly::eval(const std::vector<Scalar>& pt) const {
    if (int(pt.size()) < nvars_) throw std::invalid_argument("eval: point too short");
    std::vector<std::vector<Scalar>> powers(nvars_);
    for (int v = 0; v < nvars_; ++v) powers[v].push_back(1);
    Scalar s = 0, term;
    for (auto& t : terms_) {
        term = t.coef;
        for (int v = 0; v < nvars_; ++v) {
            int e = t.mono.exp(v);
            if (!e) continue;
            auto& pw = powers[v];
            while (int(pw.size()) <= e) pw.push_back(pw.back() * pt[v]);
            term *= pw[e];
        }
        s += term;
    }
    return s;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (int(images.size()) < nvars_) throw std::invalid_argument("substitute: too few images");
    int nv = images.empty() ? 0 : images[0].nvars();
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    for (int v = 0; v < nvars_; ++v) powers[v].push_back(MultiPoly(nv, Scalar(1)));
    auto power = [&](int v, int e) -> const MultiPoly& {
        auto& pw = powers[v];
        while (int(pw.size()) <= e) pw.push_back(pw.back() * images[v]);
        return pw[e];
    };
    std::unordered_map<std::uint64_t, std::size_t> index;
    std::vector<Term> acc;
    for (auto& t : terms_) {
        MultiPoly prod(nv, t.coef);
        for (int v = 0; v < nvars_; ++v) {
            int e = t.mono.exp(v);
            if (e) prod = prod * power(v, e);
        }
        for (auto& u : prod.terms()) {
            auto [it, fresh] = index.emplace(u.mono.bits, acc.size());
            if (fresh)
                acc.push_back(u);
            else
                acc[it->second].coef += u.coef;
        }
    }
    return from_terms(nv, std::move(acc));
}

MultiPoly MultiPoly::coefficient_of(int var, int k) const {
    std::vector<Term> out;
    for (auto& t : terms_)
        if (t.mono.exp(var) == k) out.push_back({t.mono / Monomial::single(var, k), t.coef});
    return from_terms(nvars_, std::move(out));
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        Scalar c = t.coef;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool unit = (c == 1);
        if (!unit || t.mono.deg == 0) os << c.get_str();
        bool need_star = !unit;
        for (int v = 0; v < nvars_; ++v) {
            int e = t.mono.exp(v);
            if (!e) continue;
            if (need_star) os << '*';
            need_star = true;
            if (std::size_t(v) < names.size())
                os << names[v];
            else
                os << 'x' << (v + 1);
            if (e > 1) os << '^' << e;
        }
    }
    return os.str();
}

std::optional<MultiPoly> try_divide(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (num.nvars() != den.nvars()) throw std::invalid_argument("variable count mismatch");
    MultiPoly q(num.nvars());
    if (num.is_zero()) return q;
    if (den.is_constant()) return num * Scalar(1 / den.constant_value());
    auto cmp = [](const Monomial& a, const Monomial& b) { return grlex_greater(a, b); };
    std::map<Monomial, Scalar, decltype(cmp)> rem(cmp);
    for (auto& t : num.terms()) rem.emplace(t.mono, t.coef);
    const Term& lt = den.leading();
    Scalar inv_lc = 1 / lt.coef;
    std::vector<Term> qterms;
    while (!rem.empty()) {
        auto top = rem.begin();
        if (!lt.mono.divides(top->first)) return std::nullopt;
        Monomial qm = top->first / lt.mono;
        Scalar qc = top->second * inv_lc;
        rem.erase(top);
        for (std::size_t i = 1; i < den.terms().size(); ++i) {
            const Term& t = den.terms()[i];
            Monomial m = qm * t.mono;
            auto it = rem.find(m);
            if (it == rem.end()) {
                rem.emplace(m, -(qc * t.coef));
            } else {
                it->second -= qc * t.coef;
                if (sgn(it->second) == 0) rem.erase(it);
            }
        }
        qterms.push_back({qm, std::move(qc)});
    }
    return MultiPoly::from_terms(num.nvars(), std::move(qterms));
}

MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den) {
    auto q = try_divide(num, den);
    if (!q) throw NotDivisible("divide_exact: nonzero remainder");
    return *q;
}

static void check_square(const PolyMatrix& m) {
    for (auto& row : m)
        if (row.size() != m.size()) throw NonSquareMatrix("determinant of a non-square matrix");
}

static MultiPoly det_cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row, int nv) {
    if (row == m.size()) return MultiPoly(nv, Scalar(1));
    MultiPoly s(nv);
    int sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::size_t c = cols[k];
        if (!m[row][c].is_zero()) {
            cols.erase(cols.begin() + long(k));
            MultiPoly minor = det_cofactor_rec(m, cols, row + 1, nv);
            cols.insert(cols.begin() + long(k), c);
            MultiPoly term = m[row][c] * minor;
            if (sign > 0)
                s += term;
            else
                s -= term;
        }
        sign = -sign;
    }
    return s;
}

static int matrix_nvars(const PolyMatrix& m) { return m.empty() || m[0].empty() ? 0 : m[0][0].nvars(); }

MultiPoly det_cofactor(const PolyMatrix& m) {
    check_square(m);
    std::vector<std::size_t> cols(m.size());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return det_cofactor_rec(m, cols, 0, matrix_nvars(m));
}

MultiPoly det_bareiss(PolyMatrix m) {
    check_square(m);
    std::size_t n = m.size();
    int nv = matrix_nvars(m);
    if (n == 0) return MultiPoly(nv, Scalar(1));
    MultiPoly prev(nv, Scalar(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return MultiPoly(nv);
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divide_exact(v, prev);
            }
        prev = m[k][k];
    }
    MultiPoly d = m[n - 1][n - 1];
    return sign > 0 ? d : -d;
}

MultiPoly poly_det(const PolyMatrix& m) {
    check_square(m);
    return m.size() <= 3 ? det_cofactor(m) : det_bareiss(m);
}

}  // namespace saito
