#pragma once

#include "saito/lgclassical.hpp"
#include "saito/saitosym.hpp"

#include <map>
#include <nlohmann/json.hpp>

namespace saito {

using json = nlohmann::ordered_json;

json to_json(const Component& c);
json root_system_json(const RootSystem& R);
json factored_json(const FactoredDeterminant& f, const std::vector<std::string>& names);
// stratum document; hyperplane data is attached to every factor whose form is in A_D
json stratum_json(const Stratum& D, const FactoredDeterminant& det, const std::vector<RestrictedHyperplane>& arr);

// Directory holding golden/; the compiled-in source path unless overridden
// (installed Python packages point it at their bundled copy).
std::string data_dir();
void set_data_dir(const std::string& dir);

struct GoldenDetRow {
    std::string type;
    std::vector<int> S;  // 1-based
    std::vector<std::pair<std::map<int, int>, int>> factors;  // {1-based index -> coeff}, exponent
};
struct GoldenBetaRow {
    std::string type;
    std::vector<int> S;
    std::vector<std::map<int, int>> forms;
    int size = 0;
    std::string rdb_type;
    std::string comp0_type;
    int h = 0;
};
struct GoldenTable {
    int number = 0;
    std::string group;
    std::vector<GoldenDetRow> det_rows;    // tables 1-3
    std::vector<GoldenBetaRow> beta_rows;  // tables 4-6
};
struct GoldenParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GoldenTable load_golden(int which, const std::string& dir = data_dir());
// "2a1+3a4" -> {1:2, 4:3}
std::map<int, int> parse_form_token(const std::string& tok);
// restricted form over the stratum parameters from a golden {index -> coeff} map
LinearForm golden_form(const Stratum& D, const std::map<int, int>& coeffs);
// multiset of component types, "A4xA1^2" -> {A1, A1, A4}
std::vector<std::string> split_type(const std::string& type);
std::string join_type(const std::vector<Component>& comps);

struct TableRowResult {
    std::string label;  // R_D type and S
    bool pass = false;
    std::vector<std::string> diffs;
};
struct TableResult {
    int number = 0;
    std::string group;
    std::vector<TableRowResult> rows;
    bool pass() const;
    json to_json() const;
};
// regenerate a table from the combinatorial route and diff against the golden rows
TableResult check_table(int which, const std::string& dir = data_dir());

// property suite for one group, fanned out over a worker pool
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};
struct VerifyOptions {
    int threads = 0;  // 0: SAITO_STRATA_THREADS or hardware concurrency
    int gamma_trials = 3;
    bool symbolic = true;  // rank <= 4 symbolic route
    std::uint64_t seed = 7;
};
int default_threads();
std::vector<CheckResult> verify_group(const std::string& label, const VerifyOptions& opt = {});
json checks_json(const std::vector<CheckResult>& checks);

}  // namespace saito
