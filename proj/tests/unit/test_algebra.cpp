#include <doctest.h>

#include "saito/linalg.hpp"

#include <random>

using namespace saito;

namespace {

MultiPoly x(int nv, int i) { return MultiPoly::variable(nv, i); }

MultiPoly random_poly(std::mt19937_64& rng, int nv, int maxdeg, int terms) {
    std::uniform_int_distribution<int> c(-5, 5), v(0, nv - 1), d(0, maxdeg);
    MultiPoly p(nv);
    for (int t = 0; t < terms; ++t) {
        MultiPoly m(nv, Scalar(c(rng)));
        int deg = d(rng);
        for (int k = 0; k < deg; ++k) m = m * x(nv, v(rng));
        p += m;
    }
    return p;
}

MultiPoly random_homogeneous(std::mt19937_64& rng, int nv, int deg) {
    std::uniform_int_distribution<int> c(-4, 4), v(0, nv - 1);
    MultiPoly p(nv);
    while (p.is_zero())
        for (int t = 0; t < 4; ++t) {
            MultiPoly m(nv, Scalar(c(rng)));
            for (int k = 0; k < deg; ++k) m = m * x(nv, v(rng));
            p += m;
        }
    return p;
}

}  // namespace

TEST_CASE("scalars stay exact") {
    Scalar a(1, 3), b(1, 6);
    CHECK(a + b == Scalar(1, 2));
    CHECK(to_string(Scalar(1, 4) + Scalar(-7, 4)) == "-3/2");
    CHECK(parse_scalar("10/-4") == Scalar(-5, 2));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        auto a = random_poly(rng, 3, 3, 4), b = random_poly(rng, 3, 3, 4), c = random_poly(rng, 3, 2, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MultiPoly(3));
        CHECK(a * b == b * a);
    }
}

TEST_CASE("evaluation, derivatives, substitution") {
    auto p = x(2, 0) * x(2, 0) * x(2, 1) + MultiPoly(2, Scalar(3));
    CHECK(p.eval({Scalar(2), Scalar(5)}) == Scalar(23));
    CHECK(p.diff(0) == Scalar(2) * x(2, 0) * x(2, 1));
    CHECK(p.directional({Scalar(1), Scalar(1)}) == Scalar(2) * x(2, 0) * x(2, 1) + x(2, 0) * x(2, 0));
    auto q = p.substitute({x(2, 1), x(2, 0)});
    CHECK(q.eval({Scalar(5), Scalar(2)}) == Scalar(23));
    CHECK(p.coefficient_of(1, 1) == x(2, 0) * x(2, 0));
    CHECK_FALSE(p.is_homogeneous());
    CHECK(p.total_degree() == 3);
    CHECK(x(2, 0).pow(4).weighted_degree({3, 1}) == 12);
}

TEST_CASE("too many variables rejected") { CHECK_THROWS(MultiPoly(9)); }

TEST_CASE("poly_det small cases") {
    PolyMatrix id{{MultiPoly(2, Scalar(1)), MultiPoly(2)}, {MultiPoly(2), MultiPoly(2, Scalar(1))}};
    CHECK(poly_det(id) == MultiPoly(2, Scalar(1)));
    auto f = x(2, 0) + x(2, 1), g = x(2, 0) * x(2, 0);
    PolyMatrix dg{{f, MultiPoly(2)}, {MultiPoly(2), g}};
    CHECK(poly_det(dg) == f * g);
    PolyMatrix rect{{f, g}};
    CHECK_THROWS_AS(poly_det(rect), NonSquareMatrix);
}

TEST_CASE("poly_det agrees with cofactor expansion") {
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 5; ++n)
        for (int t = 0; t < 4; ++t) {
            PolyMatrix m(n, std::vector<MultiPoly>(n));
            for (auto& row : m)
                for (auto& e : row) e = random_poly(rng, 3, 2, 3);
            auto ref = det_cofactor(m);
            CHECK(det_bareiss(m) == ref);
            CHECK(poly_det(m) == ref);
            // symmetric input, two elimination orders
            PolyMatrix s(n, std::vector<MultiPoly>(n));
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) s[i][j] = s[j][i] = m[i][j];
            PolyMatrix r = s;
            std::reverse(r.begin(), r.end());
            for (auto& row : r) std::reverse(row.begin(), row.end());
            CHECK(poly_det(s) == poly_det(r));
        }
}

TEST_CASE("poly_det with two equal rows vanishes") {
    std::mt19937_64 rng(5);
    PolyMatrix m(3, std::vector<MultiPoly>(3));
    for (auto& row : m)
        for (auto& e : row) e = random_poly(rng, 2, 2, 3);
    m[2] = m[0];
    CHECK(poly_det(m).is_zero());
}

TEST_CASE("divide_exact") {
    auto a = x(2, 0), b = x(2, 1);
    CHECK(divide_exact(a * a - b * b, a - b) == a + b);
    auto f = a * a * b + Scalar(3) * b;
    CHECK(divide_exact(f, MultiPoly(2, Scalar(1))) == f);
    CHECK_THROWS_AS(divide_exact(a * a + b * b, a - b), NotDivisible);
    CHECK_FALSE(try_divide(a + MultiPoly(2, Scalar(1)), a).has_value());

    std::mt19937_64 rng(8);
    for (int t = 0; t < 15; ++t) {
        auto p = random_homogeneous(rng, 3, 1 + t % 4), q = random_homogeneous(rng, 3, 1 + t % 3);
        CHECK(divide_exact(p * q, q) == p);
    }
}

TEST_CASE("linear forms are primitive with positive lead") {
    auto f = LinearForm::from_rational({Scalar(0), Scalar(-4), Scalar(6)});
    CHECK(f.coeffs() == std::vector<long long>{0, 2, -3});
    CHECK_FALSE(LinearForm::canonical({Scalar(0), Scalar(0)}).has_value());
    CHECK_THROWS(LinearForm(std::vector<long long>{0, 0}));
    CHECK(LinearForm::from_rational({Scalar(1, 2), Scalar(1, 3)}).coeffs() == std::vector<long long>{3, 2});
}

TEST_CASE("factor_linear on the b = -32a shape") {
    // x1^2 x3^2 (x1^2 - x3^2)^2 in (x1, x3)
    auto x1 = x(2, 0), x3 = x(2, 1);
    auto p = x1 * x1 * x3 * x3 * (x1 * x1 - x3 * x3).pow(2);
    std::vector<LinearForm> cands{LinearForm({1, 0}), LinearForm({0, 1}), LinearForm({1, -1}), LinearForm({1, 1})};
    auto f = factor_linear(p, cands);
    REQUIRE(f.coefficient);
    CHECK(*f.coefficient == 1);
    for (auto& c : cands) CHECK(f.exponent_of(c) == 2);
    CHECK(f.total_degree() == 8);
    CHECK(f.expand() == p);
}

TEST_CASE("factor_linear edge cases") {
    auto f = factor_linear(MultiPoly(2, Scalar(5)), {});
    CHECK(*f.coefficient == 5);
    CHECK(f.factors.empty());
    auto a = x(2, 0), b = x(2, 1);
    try {
        factor_linear(a * (a * a + b * b), {LinearForm({1, 0})});
        FAIL("expected IncompleteFactorization");
    } catch (const IncompleteFactorization& e) {
        CHECK(e.partial.exponent_of(LinearForm({1, 0})) == 1);
        CHECK(e.cofactor == a * a + b * b);
    }
}

TEST_CASE("expand then factor round trip") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int t = 0; t < 10; ++t) {
        std::vector<LinearForm> forms;
        while (forms.size() < 3) {
            std::vector<long long> v{c(rng), c(rng), c(rng)};
            if (v == std::vector<long long>{0, 0, 0}) continue;
            QVec q;
            for (auto e : v) q.emplace_back(static_cast<long>(e));
            auto lf = *LinearForm::canonical(q);
            if (std::find(forms.begin(), forms.end(), lf) == forms.end()) forms.push_back(lf);
        }
        FactoredDeterminant want;
        want.coefficient = Scalar(-7, 3);
        for (int k = 0; k < 3; ++k) want.add(forms[k], k + 1);
        auto got = factor_linear(want.expand(), forms);
        CHECK(got.same_factors(want));
        CHECK(*got.coefficient == *want.coefficient);
    }
}

TEST_CASE("exact linear algebra") {
    QMat m{{Scalar(2), Scalar(1)}, {Scalar(4), Scalar(3)}};
    CHECK(det(m) == 2);
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(matmul(m, *inv) == identity(2));
    QMat sing{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
    CHECK_FALSE(inverse(sing));
    CHECK(nullspace(sing).size() == 1);
    CHECK(rank(sing) == 1);
}
