#include "saito/io.hpp"

#include <mutex>

namespace saito {

namespace {
std::mutex data_mu;
std::string data_override;
}  // namespace

std::string data_dir() {
    std::lock_guard lock(data_mu);
    return data_override.empty() ? std::string(SAITO_DATA_DIR) : data_override;
}

void set_data_dir(const std::string& dir) {
    std::lock_guard lock(data_mu);
    data_override = dir;
}

json to_json(const Component& c) { return json{{"type", c.type}, {"rank", c.rank}, {"size", c.size}, {"h", c.h}}; }

static json fraction_vector(const QVec& v) {
    json a = json::array();
    for (auto& x : v) a.push_back(to_string(x));
    return a;
}

json root_system_json(const RootSystem& R) {
    json j;
    j["label"] = R.label;
    j["rank"] = R.rank;
    j["ambient_dim"] = R.ambient_dim;
    j["h"] = R.h;
    j["degrees"] = R.degrees;
    j["note"] = "B and C types share labels; fractions are exact";
    json simple = json::array();
    for (int i : R.simple) simple.push_back(fraction_vector(R.roots[i]));
    j["simple_roots"] = simple;
    json cw = json::array();
    for (auto& w : R.coweights) cw.push_back(fraction_vector(w));
    j["coweights"] = cw;
    j["cartan"] = R.cartan;
    json pos = json::array();
    for (int b : R.positive) pos.push_back(json{{"coeffs", R.coeffs[b]}, {"vector", fraction_vector(R.roots[b])}});
    j["positive_roots"] = pos;
    return j;
}

json factored_json(const FactoredDeterminant& f, const std::vector<std::string>& names) {
    json j;
    j["coefficient"] = f.coefficient ? json(to_string(*f.coefficient)) : json(nullptr);
    json fs = json::array();
    for (auto& fac : f.factors)
        fs.push_back(json{{"form", fac.form.coeffs()}, {"text", fac.form.str(names)}, {"exponent", fac.exponent}});
    j["factors"] = fs;
    j["total_degree"] = f.total_degree();
    j["text"] = f.str(names);
    return j;
}

json stratum_json(const Stratum& D, const FactoredDeterminant& det, const std::vector<RestrictedHyperplane>& arr) {
    const RootSystem& R = *D.R;
    json j;
    j["group"] = R.label;
    std::vector<int> S;
    for (int i : D.I) S.push_back(i + 1);
    j["simple_indices"] = S;
    j["dim"] = D.dim;
    j["parameters"] = D.param_names();
    json comps = json::array();
    for (auto& c : D.rd.components) comps.push_back(to_json(c));
    j["r_d_components"] = comps;
    j["coefficient"] = det.coefficient ? json(to_string(*det.coefficient)) : json(nullptr);
    json fs = json::array();
    for (auto& fac : det.factors) {
        json f;
        f["form"] = fac.form.coeffs();
        f["text"] = fac.form.str(D.param_names());
        f["exponent"] = fac.exponent;
        const RestrictedHyperplane* H = nullptr;
        for (auto& h : arr)
            if (h.form == fac.form) H = &h;
        if (H) {
            f["beta"] = fraction_vector(R.roots[H->beta]);
            f["beta_coeffs"] = R.coeffs[H->beta];
            f["r_d_beta_size"] = H->rdb.size;
            f["component0"] = to_json(H->component0);
        } else {
            f["beta"] = nullptr;
            f["beta_coeffs"] = nullptr;
            f["r_d_beta_size"] = nullptr;
            f["component0"] = nullptr;
        }
        fs.push_back(f);
    }
    j["factors"] = fs;
    j["total_degree"] = det.total_degree();
    return j;
}

json checks_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    bool all = true;
    for (auto& c : checks) {
        arr.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        all = all && c.pass;
    }
    json failures = json::array();
    for (auto& c : checks)
        if (!c.pass) failures.push_back(c.name);
    return json{{"pass", all}, {"checks", arr}, {"failures", failures}};
}

}  // namespace saito
