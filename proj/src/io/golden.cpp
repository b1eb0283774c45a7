#include "saito/io.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

namespace saito {

namespace {

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    return out;
}

std::vector<int> parse_indices(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    int v;
    while (is >> v) out.push_back(v);
    if (!is.eof()) throw GoldenParseError("bad index list: " + s);
    return out;
}

int to_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw GoldenParseError("bad integer: " + s);
        return v;
    } catch (const std::logic_error&) {
        throw GoldenParseError("bad integer: " + s);
    }
}

std::string row_label(const std::string& type, const std::vector<int>& S) {
    std::string l = type + " {";
    for (std::size_t i = 0; i < S.size(); ++i) l += (i ? "," : "") + std::to_string(S[i]);
    return l + "}";
}

std::string form_text(const std::map<int, int>& m) {
    std::string s;
    for (auto [i, c] : m) {
        if (!s.empty()) s += "+";
        if (c != 1) s += std::to_string(c);
        s += "a" + std::to_string(i);
    }
    return s;
}

Stratum stratum_for(const std::shared_ptr<const RootSystem>& R, const std::vector<int>& S) {
    std::vector<int> I;
    for (int i : S) {
        if (i < 1 || i > R->rank) throw GoldenParseError("simple index out of range");
        I.push_back(i - 1);
    }
    return make_stratum(R, I);
}

}  // namespace

std::map<int, int> parse_form_token(const std::string& tok) {
    std::map<int, int> out;
    for (auto& part : split(tok, '+')) {
        auto a = part.find('a');
        if (a == std::string::npos || a + 1 >= part.size()) throw GoldenParseError("bad form: " + tok);
        int c = a == 0 ? 1 : to_int(part.substr(0, a));
        int i = to_int(part.substr(a + 1));
        if (c <= 0 || i <= 0) throw GoldenParseError("bad form: " + tok);
        out[i] += c;
    }
    return out;
}

LinearForm golden_form(const Stratum& D, const std::map<int, int>& coeffs) {
    QVec c(std::size_t(D.dim), Scalar(0));
    for (auto [i, v] : coeffs) {
        auto it = std::find(D.params.begin(), D.params.end(), i - 1);
        if (it == D.params.end()) throw GoldenParseError("form uses a simple root of R_D: a" + std::to_string(i));
        c[std::size_t(it - D.params.begin())] = Scalar(v);
    }
    auto f = LinearForm::canonical(c);
    if (!f) throw GoldenParseError("zero form");
    return *f;
}

std::vector<std::string> split_type(const std::string& type) {
    std::vector<std::string> out;
    std::string t = type;
    t.erase(std::remove(t.begin(), t.end(), '\''), t.end());
    std::size_t pos = 0;
    while (pos <= t.size()) {
        auto x = t.find('x', pos);
        std::string part = t.substr(pos, x == std::string::npos ? std::string::npos : x - pos);
        int times = 1;
        if (auto c = part.find('^'); c != std::string::npos) {
            times = to_int(part.substr(c + 1));
            part = part.substr(0, c);
        }
        for (int k = 0; k < times; ++k) out.push_back(part);
        if (x == std::string::npos) break;
        pos = x + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string join_type(const std::vector<Component>& comps) {
    std::vector<std::pair<std::string, int>> runs;
    for (auto& c : comps) {
        if (!runs.empty() && runs.back().first == c.type) ++runs.back().second;
        else runs.push_back({c.type, 1});
    }
    std::string s;
    for (auto& [t, k] : runs) {
        if (!s.empty()) s += "x";
        s += t;
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

GoldenTable load_golden(int which, const std::string& dir) {
    if (which < 1 || which > 6) throw GoldenParseError("tables are numbered 1 to 6");
    std::string path = dir + "/golden/table" + std::to_string(which) + ".txt";
    std::ifstream in(path);
    if (!in) throw GoldenParseError("cannot open " + path);
    GoldenTable t;
    t.number = which;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("group ", 0) == 0) {
            t.group = trim(line.substr(6));
            continue;
        }
        auto cols = split(line, '|');
        try {
            if (which <= 3) {
                if (cols.size() != 3) throw GoldenParseError("expected 3 columns");
                GoldenDetRow r{cols[0], parse_indices(cols[1]), {}};
                std::istringstream is(cols[2]);
                std::string tok;
                while (is >> tok) {
                    auto caret = tok.rfind('^');
                    if (caret == std::string::npos) throw GoldenParseError("missing exponent in " + tok);
                    r.factors.push_back({parse_form_token(tok.substr(0, caret)), to_int(tok.substr(caret + 1))});
                }
                t.det_rows.push_back(std::move(r));
            } else {
                if (cols.size() != 7) throw GoldenParseError("expected 7 columns");
                GoldenBetaRow r;
                r.type = cols[0];
                r.S = parse_indices(cols[1]);
                for (auto& f : split(cols[2], ',')) r.forms.push_back(parse_form_token(f));
                r.size = to_int(cols[3]);
                r.rdb_type = cols[4];
                r.comp0_type = cols[5];
                r.h = to_int(cols[6]);
                t.beta_rows.push_back(std::move(r));
            }
        } catch (const GoldenParseError& e) {
            throw GoldenParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (t.group.empty()) throw GoldenParseError(path + ": no group line");
    return t;
}

bool TableResult::pass() const {
    if (rows.empty()) return false;
    for (auto& r : rows)
        if (!r.pass) return false;
    return true;
}

json TableResult::to_json() const {
    json j;
    j["table"] = number;
    j["group"] = group;
    j["pass"] = pass();
    json rs = json::array();
    for (auto& r : rows) rs.push_back(json{{"row", r.label}, {"pass", r.pass}, {"diffs", r.diffs}});
    j["rows"] = rs;
    return j;
}

TableResult check_table(int which, const std::string& dir) {
    GoldenTable g = load_golden(which, dir);
    auto R = std::make_shared<const RootSystem>(build_root_system(g.group));
    TableResult res;
    res.number = which;
    res.group = g.group;

    auto type_diff = [](const Stratum& D, const std::string& type, std::vector<std::string>& diffs) {
        std::vector<std::string> got;
        for (auto& c : D.rd.components) got.push_back(c.type);
        std::sort(got.begin(), got.end());
        if (got != split_type(type)) diffs.push_back("R_D is " + join_type(D.rd.components) + ", table says " + type);
    };

    for (auto& row : g.det_rows) {
        TableRowResult out{row_label(row.type, row.S), false, {}};
        Stratum D = stratum_for(R, row.S);
        type_diff(D, row.type, out.diffs);
        FactoredDeterminant want;
        for (auto& [f, e] : row.factors) {
            LinearForm lf = golden_form(D, f);
            if (want.exponent_of(lf)) out.diffs.push_back("form listed twice: " + form_text(f));
            want.add(lf, e);
        }
        FactoredDeterminant got = predict_determinant(D);
        auto names = D.param_names();
        for (auto& fac : got.factors)
            if (int e = want.exponent_of(fac.form); e != fac.exponent)
                out.diffs.push_back(fac.form.str(names) + ": predicted " + std::to_string(fac.exponent) + ", table " +
                                    std::to_string(e));
        for (auto& fac : want.factors)
            if (got.exponent_of(fac.form) == 0) out.diffs.push_back(fac.form.str(names) + ": not in A_D");
        if (got.total_degree() != R->h * D.dim) out.diffs.push_back("total degree is not h*d");
        out.pass = out.diffs.empty();
        res.rows.push_back(std::move(out));
    }

    // tables 4-6: one row per R_{D,beta} class; the rows of one stratum must cover A_D
    std::map<std::vector<int>, std::vector<LinearForm>> covered;
    std::map<std::vector<int>, std::string> first_label;
    for (auto& row : g.beta_rows) {
        TableRowResult out{row_label(row.type, row.S) + " " + row.rdb_type, false, {}};
        Stratum D = stratum_for(R, row.S);
        type_diff(D, row.type, out.diffs);
        auto arr = restricted_arrangement(D);
        auto names = D.param_names();
        first_label.emplace(row.S, row_label(row.type, row.S));
        for (auto& f : row.forms) {
            LinearForm lf = golden_form(D, f);
            auto it = std::find_if(arr.begin(), arr.end(), [&](const RestrictedHyperplane& H) { return H.form == lf; });
            std::string tag = form_text(f) + ": ";
            if (it == arr.end()) {
                out.diffs.push_back(tag + "not in A_D");
                continue;
            }
            covered[row.S].push_back(lf);
            if (it->rdb.size != row.size)
                out.diffs.push_back(tag + "|R_D,beta| = " + std::to_string(it->rdb.size) + ", table " + std::to_string(row.size));
            std::vector<std::string> types;
            for (auto& c : it->rdb.components) types.push_back(c.type);
            std::sort(types.begin(), types.end());
            if (types != split_type(row.rdb_type))
                out.diffs.push_back(tag + "R_D,beta is " + join_type(it->rdb.components) + ", table " + row.rdb_type);
            if (it->component0.type != row.comp0_type)
                out.diffs.push_back(tag + "component is " + it->component0.type + ", table " + row.comp0_type);
            if (it->k != row.h || it->component0.h != row.h)
                out.diffs.push_back(tag + "h = " + std::to_string(it->k) + ", table " + std::to_string(row.h));
        }
        out.pass = out.diffs.empty();
        res.rows.push_back(std::move(out));
    }
    for (auto& [S, forms] : covered) {
        Stratum D = stratum_for(R, S);
        auto all = arrangement_forms(D);
        std::sort(all.begin(), all.end());
        std::sort(forms.begin(), forms.end());
        TableRowResult out{first_label[S] + " coverage", true, {}};
        if (std::adjacent_find(forms.begin(), forms.end()) != forms.end()) out.diffs.push_back("a form is listed twice");
        forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
        if (forms != all)
            out.diffs.push_back("rows list " + std::to_string(forms.size()) + " of " + std::to_string(all.size()) +
                                " hyperplanes");
        out.pass = out.diffs.empty();
        res.rows.push_back(std::move(out));
    }
    return res;
}

}  // namespace saito
