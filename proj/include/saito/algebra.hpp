#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace saito {

using Scalar = mpq_class;

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSquareMatrix : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Scalar parse_scalar(const std::string& s);
// num/den in lowest terms
Scalar ratio(long num, long den);
std::string to_string(const Scalar& q);

// Packed exponent vector: up to 8 variables, 8 bits each, variable 0 in the
// top byte so that integer comparison of the packed word is lexicographic.
struct Monomial {
    std::uint64_t bits = 0;
    std::uint32_t deg = 0;

    static constexpr int kMaxVars = 8;

    int exp(int var) const { return int((bits >> (8 * (7 - var))) & 0xffu); }
    static Monomial single(int var, int e);
    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;  // requires divides
    bool operator==(const Monomial& o) const { return bits == o.bits; }
    bool operator!=(const Monomial& o) const { return bits != o.bits; }
};

// grlex, descending: true when a should come before b
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
    return a.deg != b.deg ? a.deg > b.deg : a.bits > b.bits;
}

struct Term {
    Monomial mono;
    Scalar coef;
};

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) { check_nvars(); }
    MultiPoly(int nvars, const Scalar& c);

    static MultiPoly variable(int nvars, int var);
    static MultiPoly linear(const std::vector<Scalar>& coeffs);
    // assumes terms may be unsorted / contain duplicates / zeros
    static MultiPoly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_value() const;  // coefficient of 1
    const Term& leading() const { return terms_.front(); }
    int total_degree() const;
    bool is_homogeneous() const;
    // weighted degree with variable i of weight w[i]; -1 if not w-homogeneous
    long weighted_degree(const std::vector<int>& w) const;
    void set_weights(std::vector<int> w) { weights_ = std::move(w); }
    const std::vector<int>& weights() const { return weights_; }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Scalar& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
    friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(unsigned e) const;
    MultiPoly diff(int var) const;
    // Σ v_a ∂_a
    MultiPoly directional(const std::vector<Scalar>& v) const;
    Scalar eval(const std::vector<Scalar>& pt) const;
    // replace variable i by images[i]; all images share one variable space
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;
    // coefficient of var^k viewed as a polynomial in the remaining variables
    MultiPoly coefficient_of(int var, int k) const;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void check_nvars() const;
    void normalize();

    int nvars_ = 0;
    std::vector<Term> terms_;
    std::vector<int> weights_;
};

std::optional<MultiPoly> try_divide(const MultiPoly& num, const MultiPoly& den);
MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den);

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

MultiPoly det_cofactor(const PolyMatrix& m);
MultiPoly det_bareiss(PolyMatrix m);
MultiPoly poly_det(const PolyMatrix& m);

// Primitive integer covector, first nonzero entry positive.
class LinearForm {
public:
    LinearForm() = default;
    // throws std::invalid_argument on the zero vector
    explicit LinearForm(const std::vector<long long>& c);
    static LinearForm from_rational(const std::vector<Scalar>& c);
    // canonical form of c, or nullopt when c vanishes
    static std::optional<LinearForm> canonical(const std::vector<Scalar>& c);

    const std::vector<long long>& coeffs() const { return c_; }
    std::size_t dim() const { return c_.size(); }
    MultiPoly poly() const;
    std::string str(const std::vector<std::string>& names = {}) const;

    auto operator<=>(const LinearForm&) const = default;

private:
    std::vector<long long> c_;
};

struct Factor {
    LinearForm form;
    int exponent = 0;
    bool operator==(const Factor&) const = default;
};

struct FactoredDeterminant {
    std::optional<Scalar> coefficient;  // nullopt: unknown nonzero scalar
    std::vector<Factor> factors;        // sorted by form, forms distinct

    void add(const LinearForm& f, int e);  // merges, drops zero exponents
    int exponent_of(const LinearForm& f) const;
    int total_degree() const;
    bool same_factors(const FactoredDeterminant& o) const { return factors == o.factors; }
    MultiPoly expand() const;  // requires a known coefficient
    std::string str(const std::vector<std::string>& names = {}) const;
};

struct IncompleteFactorization : std::runtime_error {
    IncompleteFactorization(FactoredDeterminant partial, MultiPoly cofactor);
    FactoredDeterminant partial;
    MultiPoly cofactor;
};

FactoredDeterminant factor_linear(const MultiPoly& poly, const std::vector<LinearForm>& candidates);

}  // namespace saito
