#include <doctest.h>

#include "saito/commands.hpp"

#include <cstdlib>

using namespace saito;

TEST_CASE("golden token parsing") {
    CHECK(parse_form_token("2a1+3a4") == std::map<int, int>{{1, 2}, {4, 3}});
    CHECK(parse_form_token("a7") == std::map<int, int>{{7, 1}});
    CHECK_THROWS_AS(parse_form_token("2b1"), GoldenParseError);
    CHECK(split_type("A4xA1^2") == std::vector<std::string>{"A1", "A1", "A4"});
    CHECK(split_type("D4'xA1") == std::vector<std::string>{"A1", "D4"});
    auto R = std::make_shared<const RootSystem>(build_root_system("E8"));
    auto D = make_stratum(R, {3, 4, 5, 6, 7});
    CHECK(split_type(join_type(D.rd.components)) == std::vector<std::string>{"A5"});
    CHECK_THROWS_AS(golden_form(D, {{5, 1}}), GoldenParseError);
}

TEST_CASE("golden tables load and regenerate") {
    const int rows[] = {8, 11, 9};
    const char* groups[] = {"E8", "E8", "E7", "E8", "E8", "E7"};
    for (int t = 1; t <= 6; ++t) {
        auto g = load_golden(t);
        CHECK(g.group == groups[t - 1]);
        if (t <= 3) CHECK(int(g.det_rows.size()) == rows[t - 1]);
        else CHECK(!g.beta_rows.empty());
    }
    for (int t = 1; t <= 6; ++t) {
        auto r = check_table(t);
        CAPTURE(t);
        CHECK(r.pass());
        for (auto& row : r.rows)
            if (!row.pass) MESSAGE(row.label, " ", row.diffs.front());
    }
    CHECK_THROWS(load_golden(7));
}

TEST_CASE("predict report for the E8 A5 stratum") {
    StratumRequest q{"E8", "4,5,6,7,8", "", false};
    auto rep = cmd_predict(q);
    CHECK(rep.ok);
    CHECK(rep.doc["command"] == "predict");
    CHECK(rep.doc["factors"].size() == 13);
    std::map<int, int> hist;
    for (auto& f : rep.doc["factors"]) hist[f["exponent"].get<int>()]++;
    CHECK(hist == std::map<int, int>{{2, 3}, {7, 6}, {10, 3}, {12, 1}});
    CHECK(rep.doc["total_degree"] == 90);
    // deterministic
    CHECK(cmd_predict(q).doc.dump() == rep.doc.dump());
}

TEST_CASE("predict through roots reduces to a fundamental stratum") {
    StratumRequest q{"A3", "", "1,1,0", false};
    auto rep = cmd_predict(q);
    CHECK(rep.doc["dim"] == 2);
    CHECK(rep.doc.contains("reduction"));
    CHECK(rep.doc["total_degree"] == 8);
}

TEST_CASE("input errors") {
    CHECK_THROWS_AS(cmd_predict({"Z9", "1", "", false}), InputError);
    CHECK_THROWS_AS(cmd_predict({"A3", "1,2,3", "", false}), InputError);
    CHECK_THROWS_AS(cmd_predict({"A3", "4", "", false}), InputError);
    CHECK_THROWS_AS(cmd_predict({"A3", "1,1", "", false}), InputError);
    CHECK_THROWS_AS(cmd_predict({"A3", "1", "1,0,0", false}), InputError);
    DetRequest d{{"E6", "1", "", false}};
    CHECK_THROWS_AS(cmd_det(d), InputError);
    DetRequest bad{{"A3", "1", "", false}, "numeric"};
    CHECK_THROWS_AS(cmd_det(bad), InputError);
    DetRequest inv{{"A3", "1", "", false}, "symbolic", "1,2"};
    CHECK_THROWS_AS(cmd_det(inv), InputError);
    ClassicalRequest c;
    c.type = "A";
    c.mult = "0,1";
    CHECK_THROWS_AS(cmd_classical(c), InputError);
    c.type = "Q";
    c.mult = "1,1";
    CHECK_THROWS_AS(cmd_classical(c), InputError);
    CHECK_THROWS_AS(cmd_tables("9"), InputError);
}

TEST_CASE("det reports") {
    DetRequest d{{"B3", "1", "", false}};
    auto rep = cmd_det(d);
    CHECK(rep.ok);
    CHECK(rep.doc["status"] == "factored");
    CHECK(rep.doc["matches_prediction"] == true);

    DetRequest m = d;
    m.backend = "minor";
    CHECK(cmd_det(m).doc["matches_prediction"] == true);

    DetRequest fam{{"D3", "2", "", false}, "symbolic", "1,-32"};
    auto deg = cmd_det(fam);
    CHECK(deg.doc["status"] == "vanishes");
    fam.invariants = "2,-64";
    auto a = cmd_det(fam);
    CHECK(a.doc["status"] == "factored");
    CHECK(a.doc["factors"].size() == 4);
}

TEST_CASE("classical report") {
    ClassicalRequest c;
    c.type = "A";
    c.mult = "2,1,1";
    auto rep = cmd_classical(c);
    CHECK(rep.ok);
    CHECK(rep.doc["kappa"] == "-1/32");
    CHECK(rep.doc["points"].size() == 3);
    CHECK(rep.doc["stratum"]["group"] == "A3");
    CHECK(rep.doc["stratum"]["matches_prediction"] == true);
}

TEST_CASE("tables and verify reports") {
    auto t = cmd_tables("1,4");
    CHECK(t.ok);
    CHECK(t.doc["tables"].size() == 2);
    CHECK(cmd_tables("1,4").doc.dump() == t.doc.dump());

    VerifyOptions opt;
    opt.threads = 2;
    auto v = cmd_verify("B3", opt);
    CHECK(v.ok);
    CHECK(v.doc["failures"].empty());
    opt.threads = 1;
    CHECK(cmd_verify("B3", opt).doc.dump() == v.doc.dump());
}

TEST_CASE("thread count from the environment") {
    setenv("SAITO_STRATA_THREADS", "3", 1);
    CHECK(default_threads() == 3);
    setenv("SAITO_STRATA_THREADS", "zero", 1);
    CHECK(default_threads() >= 1);
    setenv("SAITO_STRATA_THREADS", "-2", 1);
    CHECK(default_threads() >= 1);
    unsetenv("SAITO_STRATA_THREADS");
}
