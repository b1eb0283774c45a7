// saito-strata: restricted Saito determinants on discriminant strata
#include "saito/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace saito;

int main(int argc, char** argv) {
    CLI::App app{"Restricted Saito determinants on Coxeter discriminant strata"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    std::string format = "json", output;
    bool dump_roots = false;
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output", output, "write the report to a file");
    app.add_flag("--dump-roots", dump_roots, "include the root system data");

    StratumRequest pst;
    auto* predict = app.add_subcommand("predict", "combinatorial multiplicities k_H");
    predict->add_option("--group", pst.group)->required();
    predict->add_option("--simple", pst.simple, "1-based simple indices, e.g. 4,5,6");
    predict->add_option("--roots", pst.roots, "roots as simple-root coefficients, ';' separated");
    predict->add_flag("--raw-coords", pst.raw, "read --roots as ambient coordinates");

    DetRequest dq;
    auto* det = app.add_subcommand("det", "restricted Saito determinant from invariant polynomials");
    det->add_option("--group", dq.st.group)->required();
    det->add_option("--simple", dq.st.simple);
    det->add_option("--roots", dq.st.roots);
    det->add_flag("--raw-coords", dq.st.raw);
    det->add_option("--backend", dq.backend)->check(CLI::IsMember({"symbolic", "minor"}));
    det->add_option("--invariants", dq.invariants, "a,b of the D3 family a sum x^4 + b p1^2");
    det->add_flag("--show-basis", dq.show_basis);

    ClassicalRequest cq;
    auto* classical = app.add_subcommand("classical", "closed forms from the superpotentials, checked numerically");
    classical->add_option("--type", cq.type)->required();
    classical->add_option("--mult", cq.mult, "A: m_0..m_d; B/D: m_1..m_d")->required();
    classical->add_option("--m", cq.m, "power of p^2 for B/D");
    classical->add_option("--at", cq.at, "xi points, ';' separated");
    classical->add_option("--points", cq.points)->check(CLI::Range(1, 100));
    classical->add_option("--seed", cq.seed);
    classical->add_option("--tol", cq.tol);

    std::string which = "all";
    auto* tables = app.add_subcommand("tables", "compare regenerated tables with the golden data");
    tables->add_option("--which", which, "1..6, a comma list, or all");

    std::string vgroup;
    VerifyOptions vopt;
    bool no_symbolic = false;
    auto* verify = app.add_subcommand("verify", "property suite for one group");
    verify->add_option("--group", vgroup)->required();
    verify->add_option("--threads", vopt.threads, "default SAITO_STRATA_THREADS or all cores");
    verify->add_option("--gamma-trials", vopt.gamma_trials)->check(CLI::Range(1, 50));
    verify->add_option("--seed", vopt.seed);
    verify->add_flag("--no-symbolic", no_symbolic);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Report rep;
    try {
        if (*predict) rep = cmd_predict(pst, dump_roots);
        else if (*det) rep = cmd_det(dq, dump_roots);
        else if (*classical) rep = cmd_classical(cq);
        else if (*tables) rep = cmd_tables(which);
        else {
            vopt.symbolic = !no_symbolic;
            rep = cmd_verify(vgroup, vopt, dump_roots);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidStratum& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    std::string out = format == "json" ? rep.doc.dump(2) + "\n" : rep.text;
    if (output.empty()) {
        std::cout << out;
    } else {
        std::ofstream f(output);
        if (!f) {
            std::cerr << "error: cannot write " << output << "\n";
            return 2;
        }
        f << out;
    }
    return rep.ok ? 0 : 1;
}
