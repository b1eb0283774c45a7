#include "saito/io.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

namespace saito {

int default_threads() {
    if (const char* env = std::getenv("SAITO_STRATA_THREADS"); env && *env) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (*end == '\0' && v > 0 && v <= 1024) return int(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

namespace {

using Task = std::function<std::vector<CheckResult>()>;

std::vector<CheckResult> run_pool(const std::vector<Task>& tasks, int threads) {
    std::vector<std::vector<CheckResult>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < tasks.size();) {
            try {
                slots[i] = tasks[i]();
            } catch (const std::exception& e) {
                slots[i] = {{"task " + std::to_string(i) + " raised", false, e.what()}};
            }
        }
    };
    int nt = std::max(1, std::min<int>(threads, int(tasks.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    std::vector<CheckResult> out;
    for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    return out;
}

std::string set_label(const std::vector<int>& I) {
    std::string s = "{";
    for (std::size_t i = 0; i < I.size(); ++i) s += (i ? "," : "") + std::to_string(I[i] + 1);
    return s + "}";
}

// fold per-stratum lines with the same name into one line
std::vector<CheckResult> merge(std::vector<CheckResult> lines) {
    std::map<std::string, std::pair<std::vector<CheckResult>, std::vector<CheckResult>>> by;
    for (auto& l : lines) {
        auto& slot = by[l.name];
        slot.first.push_back(l);
        if (!l.pass) slot.second.push_back(l);
    }
    std::vector<CheckResult> out;
    for (auto& [name, v] : by) {
        if (v.first.size() == 1) {
            out.push_back(v.first[0]);
            continue;
        }
        CheckResult c{name, v.second.empty(), std::to_string(v.first.size()) + " cases"};
        for (std::size_t i = 0; i < v.second.size() && i < 8; ++i) c.detail += "; " + v.second[i].detail;
        if (v.second.size() > 8) c.detail += "; ...";
        out.push_back(c);
    }
    return out;
}

std::vector<CheckResult> root_checks(const RootSystem& R) {
    std::vector<CheckResult> out;
    int n = R.rank;
    out.push_back({"root count |R| = 2|R+| = n h", R.size() == 2 * R.positive.size() && int(R.positive.size()) * 2 == n * R.h,
                   std::to_string(R.positive.size()) + " positive roots, h = " + std::to_string(R.h)});
    bool dual = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dual = dual && dot(R.coweights[i], R.roots[R.simple[j]]) == Scalar(i == j ? 1 : 0);
    out.push_back({"coweights dual to simple roots", dual, ""});
    bool nonneg = true;
    for (int b : R.positive)
        for (int c : R.coeffs[b]) nonneg = nonneg && c >= 0;
    out.push_back({"positive roots are nonnegative in simple roots", nonneg, ""});
    out.push_back({"degrees start at 2 and end at h", R.degrees.front() == 2 && R.degrees.back() == R.h, ""});
    return out;
}

}  // namespace

std::vector<CheckResult> verify_group(const std::string& label, const VerifyOptions& opt) {
    auto R = std::make_shared<const RootSystem>(build_root_system(label));
    const int n = R->rank;
    int threads = opt.threads > 0 ? opt.threads : default_threads();
    std::vector<CheckResult> results = root_checks(*R);

    std::vector<std::vector<int>> strata{{}};
    for (auto& I : proper_subsets(n)) strata.push_back(I);

    std::shared_ptr<const InvariantBasis> flat;
    bool symbolic = opt.symbolic && n <= kSymbolicRankCap && R->family != Family::E;
    if (symbolic) {
        try {
            flat = std::make_shared<const InvariantBasis>(flat_coordinates(R));
            results.push_back({"flat coordinates with constant pairing", true, flat->antidiagonal ? "anti-diagonal" : "general pairing"});
        } catch (const std::exception& e) {
            results.push_back({"flat coordinates with constant pairing", false, e.what()});
        }
    }
    std::shared_ptr<const IdentityFieldData> idata;
    if (flat) idata = std::make_shared<const IdentityFieldData>(identity_field_data(*flat));

    const int total_mirrors = int(R->positive.size());
    std::vector<Task> tasks;
    for (auto& I : strata) {
        tasks.push_back([=, &opt]() {
            std::vector<CheckResult> out;
            Stratum D = make_stratum(R, I);
            std::string tag = set_label(I);
            auto arr = restricted_arrangement(D);
            FactoredDeterminant pred = predict_determinant(D, arr);
            out.push_back({"sum of k_H equals h*d", pred.total_degree() == R->h * D.dim, tag});
            bool kok = true;
            for (auto& H : arr) kok = kok && H.k >= 2 && ((H.k == 2) == (H.component0.size == 2));
            out.push_back({"k_H >= 2, equal to 2 only for {+-beta}", kok, tag});
            if (I.size() == 1)
                out.push_back({"codim-1 arrangement size |A| - h + 1", int(arr.size()) == total_mirrors - R->h + 1,
                               tag + " has " + std::to_string(arr.size())});
            if (I.empty()) {
                bool ok = int(arr.size()) == total_mirrors;
                for (auto& f : pred.factors) ok = ok && f.exponent == 2;
                out.push_back({"full space prediction is I(A)^2", ok, tag});
            }
            std::uint64_t s = opt.seed;
            for (int i : I) s = s * 1315423911u + std::uint64_t(i + 1);
            std::mt19937_64 rng(s);
            for (int t = 0; t < opt.gamma_trials; ++t) {
                auto gam = random_gamma_choices(D, rng);
                bool ok;
                std::string why = tag;
                try {
                    ok = q_polynomial(D, gam).same_factors(pred);
                } catch (const NegativeFinalExponent& e) {
                    ok = false;
                    why += std::string(" ") + e.what();
                }
                out.push_back({"Q polynomial matches prediction", ok, why});
            }
            if (flat) {
                std::string name = I.empty() ? "symbolic determinant on the full space" : "symbolic determinant matches prediction";
                try {
                    auto det = restricted_saito_det(*flat, D);
                    out.push_back({name, det.same_factors(pred), tag + " " + det.str(D.param_names())});
                } catch (const IncompleteFactorization& e) {
                    out.push_back({name, false, tag + " non-linear cofactor"});
                }
                if (n <= 3 && !I.empty()) {
                    auto g = two_route_check(*flat, D, idata.get());
                    out.push_back({"minor formula agrees with covariant determinant", g.equal,
                                   tag + " frame constant " + to_string(g.frame_constant)});
                }
            }
            return out;
        });
    }
    if (flat) {
        tasks.push_back([=]() {
            std::vector<CheckResult> out;
            for (auto& l : identity_field_checks(*flat).lines) out.push_back({l.name, l.pass, l.detail});
            return out;
        });
    }
    // classical closed forms realized on this group
    if (R->family == Family::A || R->family == Family::B || R->family == Family::D) {
        tasks.push_back([=]() {
            std::vector<CheckResult> out;
            auto compare = [&](const ClassicalEmbedding& e, const FactoredDeterminant& closed, const std::string& what) {
                if (e.group != R->label) return;
                Stratum D = make_stratum(R, e.I);
                auto ok = to_stratum_params(closed, e.B).same_factors(predict_determinant(D));
                out.push_back({"closed form exponents match prediction", ok, what});
            };
            // compositions of n+1 (A) or splits of n (B/D) into at least two parts
            std::function<void(std::vector<int>&, int)> rec;
            std::vector<std::vector<int>> parts;
            rec = [&](std::vector<int>& cur, int left) {
                if (left == 0) {
                    parts.push_back(cur);
                    return;
                }
                for (int k = 1; k <= left; ++k) {
                    cur.push_back(k);
                    rec(cur, left - k);
                    cur.pop_back();
                }
            };
            std::vector<int> cur;
            if (R->family == Family::A) {
                rec(cur, n + 1);
                for (auto& m : parts) {
                    if (m.size() < 2 || m.size() > std::size_t(n)) continue;
                    StratumConfigA cfg{m};
                    compare(embed_config(cfg), closed_form_det_A(cfg), "A mult " + std::to_string(m.size()));
                }
            } else {
                bool dtype = R->family == Family::D;
                for (int l = 0; l < n; ++l) {
                    if (dtype && l == 1) continue;
                    parts.clear();
                    rec(cur, n - l);
                    for (auto& mult : parts) {
                        StratumConfigBD cfg{dtype ? l - 1 : l, mult, dtype ? BDOrigin::D : BDOrigin::B};
                        auto e = embed_config(cfg);
                        if (!e) continue;
                        if (int(e->I.size()) == 0) continue;
                        compare(*e, closed_form_det_BD(cfg), "l = " + std::to_string(l) + ", d = " + std::to_string(mult.size()));
                    }
                }
            }
            return out;
        });
    }

    auto lines = run_pool(tasks, threads);
    auto merged = merge(std::move(lines));
    results.insert(results.end(), merged.begin(), merged.end());
    std::stable_sort(results.begin(), results.end(), [](auto& a, auto& b) { return a.name < b.name; });
    return results;
}

}  // namespace saito
