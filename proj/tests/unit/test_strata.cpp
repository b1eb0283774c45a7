#include <doctest.h>

#include "saito/strata.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace saito;

namespace {

std::shared_ptr<const RootSystem> group(const std::string& l) { return std::make_shared<const RootSystem>(build_root_system(l)); }

std::vector<int> zero_based(std::vector<int> S) {
    for (auto& i : S) --i;
    return S;
}

std::multiset<int> exponents(const FactoredDeterminant& f) {
    std::multiset<int> e;
    for (auto& x : f.factors) e.insert(x.exponent);
    return e;
}

}  // namespace

TEST_CASE("make_stratum basics") {
    auto E8 = group("E8");
    auto D = make_stratum(E8, zero_based({4, 5, 6, 7, 8}));
    CHECK(D.dim == 3);
    REQUIRE(D.rd.components.size() == 1);
    CHECK(D.rd.components[0].type == "A5");

    auto D2 = make_stratum(E8, zero_based({2, 3, 5, 7, 8}));
    CHECK(D2.rd.components.size() == 4);
    std::multiset<std::string> types;
    for (auto& c : D2.rd.components) types.insert(c.type);
    CHECK(types == std::multiset<std::string>{"A1", "A1", "A1", "A2"});

    auto full = make_stratum(E8, {});
    CHECK(full.dim == 8);
    CHECK(full.rd.components.empty());

    std::vector<int> all(8);
    for (int i = 0; i < 8; ++i) all[i] = i;
    CHECK_THROWS_AS(make_stratum(E8, all), InvalidStratum);
}

TEST_CASE("parametrization: simple roots restrict to the parameters") {
    auto F4 = group("F4");
    auto D = make_stratum(F4, {1, 2});
    QVec s{Scalar(3), Scalar(-5)};
    QVec pt = D.point(s);
    CHECK(dot(F4->roots[F4->simple[1]], pt) == 0);
    CHECK(dot(F4->roots[F4->simple[2]], pt) == 0);
    CHECK(dot(F4->roots[F4->simple[0]], pt) == 3);
    CHECK(dot(F4->roots[F4->simple[3]], pt) == -5);
    // coefficient truncation agrees with evaluation
    for (int b : F4->positive) {
        auto c = D.restrict_coeffs(b);
        CHECK(dot(c, s) == dot(F4->roots[b], pt));
    }
}

TEST_CASE("restricted arrangement cardinalities") {
    auto A3 = group("A3");
    for (int i = 0; i < 3; ++i) CHECK(restricted_arrangement(make_stratum(A3, {i})).size() == 6 - 4 + 1);

    auto E8 = group("E8");
    auto D = make_stratum(E8, zero_based({1, 2, 3, 4, 5, 6}));
    auto arr = restricted_arrangement(D);
    std::set<std::vector<long long>> got;
    for (auto& H : arr) got.insert(H.form.coeffs());
    std::set<std::vector<long long>> want{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    CHECK(got == want);

    auto full = make_stratum(A3, {});
    auto fa = restricted_arrangement(full);
    CHECK(fa.size() == 6);
    for (auto& H : fa) {
        CHECK(H.k == 2);
        CHECK(H.component0.size == 2);
    }
}

TEST_CASE("predictor rows") {
    auto E8 = group("E8");
    auto D = make_stratum(E8, zero_based({4, 5, 6, 7, 8}));
    auto f = predict_determinant(D);
    CHECK_FALSE(f.coefficient.has_value());
    CHECK(f.factors.size() == 13);
    CHECK(exponents(f) == std::multiset<int>{2, 7, 7, 7, 10, 10, 12, 7, 7, 7, 10, 2, 2});
    CHECK(f.total_degree() == 90);
    // a1 + a2 + 2 a3 -> E6, k = 12
    CHECK(f.exponent_of(LinearForm({1, 1, 2})) == 12);
    for (auto& H : restricted_arrangement(D))
        if (H.form == LinearForm({1, 1, 2})) CHECK(H.rdb.components[0].type == "E6");

    auto E6s = make_stratum(E8, zero_based({1, 2, 3, 4, 5, 6}));
    for (auto& H : restricted_arrangement(E6s))
        if (H.form == LinearForm({0, 1})) {
            CHECK(H.k == 2);
            CHECK(H.component0.type == "A1");
            CHECK(H.rdb.size == 74);
        }

    auto A2 = group("A2");
    auto a = predict_determinant(make_stratum(A2, {0}));
    REQUIRE(a.factors.size() == 1);
    CHECK(a.factors[0].exponent == 3);
}

TEST_CASE("k_H is the Coxeter number of the component and at least 2") {
    for (auto label : {"B3", "D5", "E6", "F4"}) {
        auto R = group(label);
        for (auto& I : proper_subsets(R->rank)) {
            auto D = make_stratum(R, I);
            int deg = 0;
            for (auto& H : restricted_arrangement(D)) {
                CHECK(H.k * H.component0.rank == H.component0.size);
                CHECK(H.k >= 2);
                CHECK((H.k == 2) == (H.component0.size == 2));
                CHECK(std::find(H.component0.roots.begin(), H.component0.roots.end(), H.beta) != H.component0.roots.end());
                deg += H.k;
            }
            CHECK(deg == R->h * D.dim);
        }
    }
}

TEST_CASE("Q polynomial agrees with the predictor") {
    auto A3 = group("A3");
    auto D = make_stratum(A3, {0, 1});
    std::mt19937_64 rng(1);
    CHECK(q_polynomial(D, random_gamma_choices(D, rng)).same_factors(predict_determinant(D)));

    auto full = make_stratum(A3, {});
    auto q = q_polynomial(full, {});
    for (auto& f : q.factors) CHECK(f.exponent == 2);

    auto E8 = group("E8");
    auto D8 = make_stratum(E8, zero_based({4, 5, 6, 7, 8}));
    auto pred = predict_determinant(D8);
    for (int t = 0; t < 5; ++t) {
        auto q8 = q_polynomial(D8, random_gamma_choices(D8, rng));
        CHECK(q8.same_factors(pred));
        CHECK(q8.total_degree() == 90);
    }
}

TEST_CASE("W-equivariance through the fundamental reduction") {
    auto D5 = group("D5");
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> pick(0, D5->positive.size() - 1);
    for (int t = 0; t < 8; ++t) {
        int a = D5->positive[pick(rng)], b = D5->positive[pick(rng)];
        if (a == b) continue;
        Reduction red;
        try {
            red = reduce_to_fundamental(*D5, {a, b}, t + 1);
        } catch (const DependentRoots&) {
            continue;
        }
        // the stratum of {a, b} carried to a standard one keeps its exponent multiset
        auto D = make_stratum(D5, red.I);
        std::multiset<int> e = exponents(predict_determinant(D));
        int deg = std::accumulate(e.begin(), e.end(), 0);
        CHECK(deg == D5->h * 3);
        auto img_a = apply_word(*D5, red.word, a), img_b = apply_word(*D5, red.word, b);
        auto s1 = span_subsystem(*D5, {img_a, img_b});
        std::vector<int> simple;
        for (int i : red.I) simple.push_back(D5->simple[i]);
        CHECK(s1.roots == span_subsystem(*D5, simple).roots);
    }
}
