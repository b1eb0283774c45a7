#pragma once

#include "saito/algebra.hpp"

#include <complex>
#include <vector>

namespace saito::uni {

// coefficients from the constant term upwards
using QPoly = std::vector<Scalar>;

inline void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline QPoly add(QPoly a, const QPoly& b, const Scalar& s = 1) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
    trim(a);
    return a;
}

inline QPoly deriv(const QPoly& p) {
    QPoly r;
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * long(i));
    trim(r);
    return r;
}

inline Scalar eval(const QPoly& p, const Scalar& x) {
    Scalar s = 0;
    for (std::size_t i = p.size(); i-- > 0;) s = s * x + p[i];
    return s;
}

inline QPoly rem(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Scalar f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

inline QPoly gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline bool squarefree(const QPoly& p) { return gcd(p, deriv(p)).size() <= 1; }

// (x - r)
inline QPoly linear_root(const Scalar& r) { return {-r, 1}; }

inline std::complex<double> eval(const std::vector<double>& p, std::complex<double> x) {
    std::complex<double> s = 0;
    for (std::size_t i = p.size(); i-- > 0;) s = s * x + p[i];
    return s;
}

}  // namespace saito::uni
