#include "saito/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace saito {

LinearForm::LinearForm(const std::vector<long long>& c) : c_(c) {
    long long g = 0;
    for (auto x : c_) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) throw std::invalid_argument("zero linear form");
    std::size_t first = 0;
    while (c_[first] == 0) ++first;
    if (c_[first] < 0) g = -g;
    for (auto& x : c_) x /= g;
}

std::optional<LinearForm> LinearForm::canonical(const std::vector<Scalar>& c) {
    mpz_class l = 1;
    bool nonzero = false;
    for (auto& x : c) {
        if (sgn(x) != 0) nonzero = true;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    if (!nonzero) return std::nullopt;
    std::vector<mpz_class> ints;
    mpz_class g = 0;
    for (auto& x : c) {
        mpz_class v = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    std::vector<long long> out;
    for (auto& v : ints) {
        mpz_class r = v / g;
        if (!r.fits_slong_p()) throw std::overflow_error("linear form coefficient too large");
        out.push_back(r.get_si());
    }
    return LinearForm(out);
}

LinearForm LinearForm::from_rational(const std::vector<Scalar>& c) {
    auto f = canonical(c);
    if (!f) throw std::invalid_argument("zero linear form");
    return *f;
}

MultiPoly LinearForm::poly() const {
    std::vector<Scalar> q;
    for (auto x : c_) q.emplace_back(static_cast<long>(x));
    return MultiPoly::linear(q);
}

std::string LinearForm::str(const std::vector<std::string>& names) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        long long c = c_[i];
        if (!c) continue;
        if (!first) os << (c > 0 ? "+" : "-");
        else if (c < 0) os << "-";
        first = false;
        long long a = c < 0 ? -c : c;
        if (a != 1) os << a;
        if (i < names.size())
            os << names[i];
        else
            os << "s" << (i + 1);
    }
    return os.str();
}

void FactoredDeterminant::add(const LinearForm& f, int e) {
    auto it = std::lower_bound(factors.begin(), factors.end(), f,
                               [](const Factor& a, const LinearForm& b) { return a.form < b; });
    if (it != factors.end() && it->form == f) {
        it->exponent += e;
        if (it->exponent == 0) factors.erase(it);
    } else if (e != 0) {
        factors.insert(it, Factor{f, e});
    }
}

int FactoredDeterminant::exponent_of(const LinearForm& f) const {
    for (auto& x : factors)
        if (x.form == f) return x.exponent;
    return 0;
}

int FactoredDeterminant::total_degree() const {
    int d = 0;
    for (auto& x : factors) d += x.exponent;
    return d;
}

MultiPoly FactoredDeterminant::expand() const {
    if (!coefficient) throw std::logic_error("cannot expand with an unknown coefficient");
    int nv = factors.empty() ? 0 : int(factors[0].form.dim());
    MultiPoly p(nv, *coefficient);
    for (auto& f : factors) {
        if (f.exponent < 0) throw std::logic_error("negative exponent in expansion");
        p = p * f.form.poly().pow(unsigned(f.exponent));
    }
    return p;
}

std::string FactoredDeterminant::str(const std::vector<std::string>& names) const {
    std::ostringstream os;
    os << (coefficient ? coefficient->get_str() : std::string("c"));
    for (auto& f : factors) {
        os << " (" << f.form.str(names) << ")";
        if (f.exponent != 1) os << "^" << f.exponent;
    }
    return os.str();
}

IncompleteFactorization::IncompleteFactorization(FactoredDeterminant p, MultiPoly c)
    : std::runtime_error("cofactor is not constant: " + c.str()), partial(std::move(p)), cofactor(std::move(c)) {}

FactoredDeterminant factor_linear(const MultiPoly& poly, const std::vector<LinearForm>& candidates) {
    if (poly.is_zero()) throw std::invalid_argument("factor_linear: zero polynomial");
    std::vector<LinearForm> cands = candidates;
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    FactoredDeterminant out;
    MultiPoly rest = poly;
    for (auto& f : cands) {
        if (int(f.dim()) != poly.nvars()) throw std::invalid_argument("candidate dimension mismatch");
        MultiPoly lf = f.poly();
        int e = 0;
        while (rest.total_degree() > 0) {
            auto q = try_divide(rest, lf);
            if (!q) break;
            rest = std::move(*q);
            ++e;
        }
        if (e) out.add(f, e);
    }
    if (!rest.is_constant()) throw IncompleteFactorization(out, rest);
    out.coefficient = rest.constant_value();
    return out;
}

}  // namespace saito
