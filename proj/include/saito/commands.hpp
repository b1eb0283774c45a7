#pragma once

#include "saito/io.hpp"

namespace saito {

// bad user input; the command line maps it to exit status 2
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Report {
    json doc;
    std::string text;
    bool ok = true;
};

struct StratumRequest {
    std::string group;
    std::string simple;  // "4,5,6", 1-based
    std::string roots;   // "1,1,0;0,0,1", simple-root coefficients
    bool raw = false;    // roots given in ambient coordinates
};

struct DetRequest {
    StratumRequest st;
    std::string backend = "symbolic";
    std::string invariants;  // "a,b" for the D3 family
    bool show_basis = false;
};

struct ClassicalRequest {
    std::string type;
    std::string mult;
    int m = 0;
    std::string at;
    int points = 3;
    std::uint64_t seed = 1;
    double tol = 1e-8;
};

Report cmd_predict(const StratumRequest& q, bool dump_roots = false);
Report cmd_det(const DetRequest& q, bool dump_roots = false);
Report cmd_classical(const ClassicalRequest& q);
Report cmd_tables(const std::string& which);
Report cmd_verify(const std::string& group, const VerifyOptions& opt, bool dump_roots = false);

}  // namespace saito
