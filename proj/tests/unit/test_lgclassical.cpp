#include <doctest.h>

#include "saito/lgclassical.hpp"

#include <cmath>

using namespace saito;

namespace {

LinearForm lf(std::vector<long long> c) { return LinearForm(c); }

double rel_err(const StratumConfigA& c, const QVec& xi) {
    double want = eval_factored(closed_form_det_A(c), xi).get_d();
    return std::abs(residue_metric_at(c, xi).det - cplx(want, 0)) / std::abs(want);
}

double rel_err(const StratumConfigBD& c, const QVec& xi) {
    double want = eval_factored(closed_form_det_BD(c), xi).get_d();
    return std::abs(residue_metric_at(c, xi).det - cplx(want, 0)) / std::abs(want);
}

}  // namespace

TEST_CASE("A closed form exponents") {
    StratumConfigA c{{2, 1, 1}};
    auto f = closed_form_det_A(c, true);  // variables xi0, xi1, xi2
    CHECK(f.exponent_of(lf({1, -1, 0})) == 3);
    CHECK(f.exponent_of(lf({1, 0, -1})) == 3);
    CHECK(f.exponent_of(lf({0, 1, -1})) == 2);
    CHECK(kappa_A(c) == Scalar(-1, 32));

    StratumConfigA ones{{1, 1, 1, 1}};
    for (auto& x : closed_form_det_A(ones).factors) CHECK(x.exponent == 2);
}

TEST_CASE("A (2,1): kappa and value") {
    StratumConfigA c{{2, 1}};
    CHECK(kappa_A(c) == Scalar(-2, 9));
    auto f = closed_form_det_A(c, true);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].exponent == 3);
    CHECK(*f.coefficient == Scalar(-2, 9));
    // xi1 = 1, xi0 = -1/2
    CHECK(eval_factored(closed_form_det_A(c), {Scalar(1)}) == Scalar(3, 4));
    auto r = residue_metric_at(c, {Scalar(1)});
    CHECK(std::abs(r.det - cplx(0.75, 0)) < 1e-8);
}

TEST_CASE("BD closed form exponents") {
    StratumConfigBD d{-1, {2, 1}, BDOrigin::D};
    auto f = closed_form_det_BD(d);
    CHECK(f.exponent_of(lf({1, 0})) == 2);
    CHECK(f.exponent_of(lf({0, 1})) == 0);
    CHECK(f.exponent_of(lf({1, -1})) == 3);
    CHECK(f.exponent_of(lf({1, 1})) == 3);

    StratumConfigBD b{0, {1, 1, 1}, BDOrigin::B};
    for (auto& x : closed_form_det_BD(b).factors) CHECK(x.exponent == 2);
    CHECK(closed_form_det_BD(b).factors.size() == 9);

    StratumConfigBD b2{0, {2}, BDOrigin::B};
    auto g = closed_form_det_BD(b2);
    CHECK(*g.coefficient == -4);
    CHECK(g.exponent_of(lf({1})) == 4);
}

TEST_CASE("configuration errors") {
    CHECK_THROWS_AS((StratumConfigBD{-2, {1, 1}}).validate(), NZero);
    CHECK_THROWS_AS((StratumConfigA{{3}}).validate(), InvalidConfig);
    CHECK_THROWS_AS((StratumConfigA{{2, 0}}).validate(), InvalidConfig);
    CHECK_THROWS_AS((StratumConfigBD{0, {1, 1}, BDOrigin::D}).validate(), InvalidConfig);
    CHECK((StratumConfigBD{-1, {1, 2}}).realizable());
    CHECK_FALSE((StratumConfigBD{-3, {2, 2}}).realizable());
}

TEST_CASE("residue oracle symmetric, matches the B closed form") {
    StratumConfigBD b{0, {2, 1}, BDOrigin::B};
    QVec xi{Scalar(2), Scalar(1)};
    auto r = residue_metric_at(b, xi);
    CHECK((r.eta - r.eta.transpose()).norm() < 1e-10);
    CHECK(rel_err(b, xi) < 1e-8);
    CHECK(r.crit.q.size() == 2);
}

TEST_CASE("closed form vs oracle on random configurations") {
    std::mt19937_64 rng(2024);
    int count = 0;
    for (auto m : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 2, 1}, {3, 1, 1}, {2, 2, 1}, {1, 1, 1, 1}, {2, 1, 2, 1}, {4, 3}})
        for (int t = 0; t < 2; ++t, ++count) {
            StratumConfigA c{m};
            CHECK(rel_err(c, random_generic_point(c, rng)) < 1e-8);
        }
    for (auto [m, mult] : std::vector<std::pair<int, std::vector<int>>>{
             {0, {1, 1}}, {1, {1, 2}}, {-1, {2, 1}}, {2, {1, 1, 1}}, {0, {3}}, {-1, {1, 1, 1}}, {-2, {1, 2}}, {3, {2, 1}}})
        for (int t = 0; t < 2; ++t, ++count) {
            StratumConfigBD c{m, mult};
            CHECK(rel_err(c, random_generic_point(c, rng)) < 1e-8);
        }
    CHECK(count >= 20);
}

TEST_CASE("critical point count after deflation") {
    std::mt19937_64 rng(5);
    StratumConfigA a{{2, 2, 1}};
    auto xi = random_generic_point(a, rng);
    CHECK(critical_data(a, xi).q.size() == 2);
    StratumConfigBD b{0, {1, 2}};
    auto y = random_generic_point(b, rng);
    auto cd = critical_data(b, y);
    CHECK(cd.q.size() == 2);
    int halves = 0;
    for (double e : cd.eps) halves += e == 0.5;
    CHECK(halves == 1);
}

TEST_CASE("Frobenius identities") {
    StratumConfigA a{{2, 1}};
    CHECK(gram_A(a) == QMat{{Scalar(3, 2)}});
    std::mt19937_64 rng(17);
    StratumConfigA c{{2, 2, 1}};
    for (int t = 0; t < 10; ++t) {
        auto rep = frobenius_check_at(c, random_generic_point(c, rng));
        CHECK(rep.det_residual < 1e-8);
        CHECK(rep.metric_residual < 1e-8);
    }
    StratumConfigBD b{1, {1, 2}};
    auto rb = frobenius_check_at(b, random_generic_point(b, rng));
    CHECK(rb.idempotency_residual < 1e-8);
}

TEST_CASE("genericity is checked exactly") {
    StratumConfigA a{{1, 1, 1}};
    std::string why;
    // xi1 = xi2 collides two roots
    CHECK_FALSE(is_generic_point(a, {Scalar(1), Scalar(1)}, &why));
    CHECK_FALSE(why.empty());
}

TEST_CASE("closed forms carry the predicted multiplicities") {
    StratumConfigA a{{2, 1, 1}};
    auto e = embed_config(a);
    auto R = std::make_shared<const RootSystem>(build_root_system(e.group));
    CHECK(to_stratum_params(closed_form_det_A(a), e.B).same_factors(predict_determinant(make_stratum(R, e.I))));

    StratumConfigBD d{-1, {2, 1}, BDOrigin::D};
    auto ed = embed_config(d);
    REQUIRE(ed);
    auto Rd = std::make_shared<const RootSystem>(build_root_system(ed->group));
    CHECK(to_stratum_params(closed_form_det_BD(d), ed->B).same_factors(predict_determinant(make_stratum(Rd, ed->I))));

    CHECK_FALSE(embed_config(StratumConfigBD{-3, {2, 2}}).has_value());
}
