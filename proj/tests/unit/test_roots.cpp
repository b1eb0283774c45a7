#include <doctest.h>

#include "saito/roots.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace saito;

TEST_CASE("E8 counts and simple system") {
    auto R = build_root_system("E8");
    CHECK(R.positive.size() == 120);
    CHECK(R.h == 30);
    CHECK(R.rank == 8);
    // alpha_2 = e1 + e2, alpha_1 has half-integer entries
    QVec a2(8, Scalar(0));
    a2[0] = a2[1] = 1;
    CHECK(R.roots[R.simple[1]] == a2);
    CHECK(R.roots[R.simple[0]][0].get_den() == 2);
}

TEST_CASE("A1") {
    auto R = build_root_system("A", 1);
    CHECK(R.size() == 2);
    CHECK(R.h == 2);
    CHECK(R.degrees == std::vector<int>{2});
    CHECK(R.negate(R.simple[0]) != R.simple[0]);
}

TEST_CASE("every supported group satisfies the counting identities") {
    for (auto& label : supported_labels(6)) {
        CAPTURE(label);
        auto R = build_root_system(label);
        int n = R.rank;
        CHECK(int(R.size()) == n * R.h);
        CHECK(R.size() == 2 * R.positive.size());
        int s = 0;
        for (int d : R.degrees) s += d - 1;
        CHECK(s == int(R.positive.size()));
        CHECK(R.degrees.front() == 2);
        CHECK(R.degrees.back() == R.h);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(dot(R.coweights[i], R.roots[R.simple[j]]) == Scalar(i == j ? 1 : 0));
        for (int b : R.positive)
            for (int c : R.coeffs[b]) CHECK(c >= 0);
        for (std::size_t r = 0; r < R.size(); ++r) CHECK(R.negate(R.negate(int(r))) == int(r));
    }
}

TEST_CASE("Cartan matrices match the diagrams") {
    auto F4 = build_root_system("F4");
    // long-long-short-short
    std::vector<std::vector<int>> f4{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
    CHECK(F4.cartan == f4);
    auto E6 = build_root_system("E6");
    int edges = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) edges += E6.cartan[i][j] != 0;
    CHECK(edges == 5);
    auto B3 = build_root_system("B3");
    CHECK(B3.cartan[1][2] * B3.cartan[2][1] == 2);
}

TEST_CASE("span_subsystem examples") {
    auto B3 = build_root_system("B3");
    auto s = span_subsystem(B3, {B3.simple[0], B3.simple[1]});
    CHECK(s.size == 6);
    CHECK(s.rank == 2);
    REQUIRE(s.components.size() == 1);
    CHECK(s.components[0].type == "A2");
    CHECK(s.components[0].h == 3);

    // brute-force membership oracle over all 18 roots
    SpanBasis sb(3);
    sb.add(B3.roots[B3.simple[0]]);
    sb.add(B3.roots[B3.simple[1]]);
    int count = 0;
    for (auto& r : B3.roots) count += sb.contains(r);
    CHECK(count == s.size);

    auto E8 = build_root_system("E8");
    std::vector<int> S(E8.simple.begin(), E8.simple.begin() + 5);
    auto d5 = span_subsystem(E8, S);
    CHECK(d5.size == 40);
    CHECK(d5.components[0].type == "D5");
    CHECK(d5.components[0].h == 8);

    auto a1 = span_subsystem(E8, {E8.simple[3]});
    CHECK(a1.size == 2);
    CHECK(a1.components[0].type == "A1");
    CHECK(span_subsystem(E8, {}).size == 0);
}

TEST_CASE("span_subsystem is idempotent and components are orthogonal") {
    auto E7 = build_root_system("E7");
    std::vector<int> S{E7.simple[0], E7.simple[2], E7.simple[5], E7.simple[6]};
    auto s = span_subsystem(E7, S);
    auto again = span_subsystem(E7, s.roots);
    CHECK(again.roots == s.roots);
    int total = 0;
    for (auto& c : s.components) {
        total += c.size;
        CHECK(c.h * c.rank == c.size);
    }
    CHECK(total == s.size);
    for (std::size_t a = 0; a < s.components.size(); ++a)
        for (std::size_t b = a + 1; b < s.components.size(); ++b)
            for (int r : s.components[a].roots)
                for (int q : s.components[b].roots) CHECK(E7.ip2[r][q] == 0);
}

TEST_CASE("type labels") {
    CHECK(subsystem_type(2, 8, true) == "B2");
    CHECK(subsystem_type(4, 24, false) == "D4");
    CHECK(subsystem_type(4, 48, true) == "F4");
    CHECK(subsystem_type(2, 12, true) == "G2");
    CHECK(subsystem_type(6, 72, false) == "E6");
}

TEST_CASE("reduce_to_fundamental") {
    auto A3 = build_root_system("A3");
    // S inside the simple system: nothing to do
    auto red = reduce_to_fundamental(A3, {A3.simple[0], A3.simple[2]});
    CHECK(red.word.empty());
    CHECK(red.I == std::vector<int>{0, 2});

    // e1 - e3 = alpha_1 + alpha_2
    int r = A3.index_of({1, 1, 0});
    REQUIRE(r >= 0);
    red = reduce_to_fundamental(A3, {r});
    CHECK(red.I.size() == 1);
    int image = apply_word(A3, red.word, r);
    CHECK(A3.positive_rep(image) == A3.simple[red.I[0]]);

    // e3 in B3 is the short simple root
    auto B3 = build_root_system("B3");
    int e3 = -1;
    for (std::size_t k = 0; k < B3.size(); ++k)
        if (B3.roots[k] == QVec{Scalar(0), Scalar(0), Scalar(1)}) e3 = int(k);
    REQUIRE(e3 >= 0);
    red = reduce_to_fundamental(B3, {e3}, 99);
    CHECK(red.I == std::vector<int>{2});

    CHECK_THROWS_AS(reduce_to_fundamental(A3, {A3.simple[0], A3.negate(A3.simple[0])}), DependentRoots);
}

TEST_CASE("reduction preserves the normal subsystem") {
    auto E7 = build_root_system("E7");
    std::mt19937_64 rng(4);
    for (int t = 0; t < 10; ++t) {
        // two random orthogonal-or-not independent roots
        std::uniform_int_distribution<std::size_t> pick(0, E7.positive.size() - 1);
        int a = E7.positive[pick(rng)], b = E7.positive[pick(rng)];
        if (a == b) continue;
        auto before = span_subsystem(E7, {a, b});
        auto red = reduce_to_fundamental(E7, {a, b}, 1 + t);
        std::vector<int> simple;
        for (int i : red.I) simple.push_back(E7.simple[i]);
        auto after = span_subsystem(E7, simple);
        CHECK(after.size == before.size);
        std::multiset<std::string> ta, tb;
        for (auto& c : before.components) tb.insert(c.type);
        for (auto& c : after.components) ta.insert(c.type);
        CHECK(ta == tb);
    }
}

TEST_CASE("unsupported groups") {
    CHECK_THROWS(build_root_system("H3"));
    CHECK_THROWS(build_root_system("D", 2));
    CHECK_THROWS(build_root_system("E", 5));
}
