#include "saito/strata.hpp"

#include <algorithm>
#include <map>

namespace saito {

std::vector<std::string> Stratum::param_names() const {
    std::vector<std::string> names;
    for (int j : params) names.push_back("s" + std::to_string(j + 1));
    return names;
}

QVec Stratum::restrict_coeffs(int root) const {
    QVec c;
    for (int j : params) c.emplace_back(R->coeffs[root][j]);
    return c;
}

std::optional<LinearForm> Stratum::restrict_root(int root) const { return LinearForm::canonical(restrict_coeffs(root)); }

QVec Stratum::point(const QVec& s) const {
    QVec x(R->ambient_dim, 0);
    for (std::size_t a = 0; a < params.size(); ++a) x = axpy(s[a], R->coweights[params[a]], x);
    return x;
}

Stratum make_stratum(std::shared_ptr<const RootSystem> R, std::vector<int> I) {
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    for (int i : I)
        if (i < 0 || i >= R->rank) throw InvalidStratum("simple index out of range");
    if (int(I.size()) >= R->rank) throw InvalidStratum("zero-dimensional stratum");
    Stratum D;
    D.R = std::move(R);
    D.I = I;
    for (int j = 0; j < D.R->rank; ++j)
        if (!std::binary_search(I.begin(), I.end(), j)) D.params.push_back(j);
    D.dim = int(D.params.size());
    std::vector<int> S;
    for (int i : I) S.push_back(D.R->simple[i]);
    D.rd = span_subsystem(*D.R, S);
    return D;
}

std::vector<RestrictedHyperplane> restricted_arrangement(const Stratum& D) {
    const RootSystem& R = *D.R;
    std::map<LinearForm, std::vector<int>> classes;
    for (int b : R.positive) {
        auto f = D.restrict_root(b);
        if (f) classes[*f].push_back(b);
    }
    std::vector<int> base;
    for (int i : D.I) base.push_back(R.simple[i]);
    std::vector<RestrictedHyperplane> out;
    for (auto& [form, members] : classes) {
        RestrictedHyperplane H;
        H.form = form;
        H.members = members;
        H.beta = members.front();
        auto S = base;
        S.push_back(H.beta);
        H.rdb = span_subsystem(R, S);
        const Component* c0 = H.rdb.component_of(H.beta);
        if (!c0) throw std::logic_error("representative root missing from its subsystem");
        H.component0 = *c0;
        // the component must not depend on the representative
        for (int b : members)
            if (!std::binary_search(c0->roots.begin(), c0->roots.end(), b))
                throw std::logic_error("component0 depends on the chosen representative");
        H.k = c0->size / c0->rank;
        out.push_back(std::move(H));
    }
    return out;
}

FactoredDeterminant predict_determinant(const Stratum&, const std::vector<RestrictedHyperplane>& arr) {
    FactoredDeterminant f;
    for (auto& H : arr) f.add(H.form, H.k);
    return f;
}

FactoredDeterminant predict_determinant(const Stratum& D) { return predict_determinant(D, restricted_arrangement(D)); }

std::vector<LinearForm> arrangement_forms(const Stratum& D) {
    std::vector<LinearForm> out;
    for (int b : D.R->positive)
        if (auto f = D.restrict_root(b)) out.push_back(*f);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FactoredDeterminant q_polynomial(const Stratum& D, const std::vector<int>& gammas) {
    const RootSystem& R = *D.R;
    if (gammas.size() != D.rd.components.size()) throw std::invalid_argument("need one gamma per component of R_D");
    std::map<LinearForm, long> total;

    // I(A \ A^D) restricted to D, with exponent m = 2 - sum r_i
    int m = 2;
    for (auto& c : D.rd.components) m -= c.rank;
    for (int b : R.positive)
        if (auto f = D.restrict_root(b)) total[*f] += m;

    for (std::size_t i = 0; i < gammas.size(); ++i) {
        int g = gammas[i];
        const Component& comp = D.rd.components[i];
        if (!std::binary_search(comp.roots.begin(), comp.roots.end(), g))
            throw std::invalid_argument("gamma not in its component");
        // hyperplanes of the restriction to the mirror of gamma, by class of beta mod gamma
        std::map<LinearForm, LinearForm> on_mirror;
        Scalar gg = R.inner(g, g);
        for (int b : R.positive) {
            if (b == g || b == R.negate(g)) continue;
            Scalar t = R.inner(b, g) / gg;
            QVec proj(R.rank);
            for (int a = 0; a < R.rank; ++a) proj[a] = R.coeffs[b][a] - t * R.coeffs[g][a];
            auto key = LinearForm::canonical(proj);
            if (!key) continue;
            auto f = D.restrict_root(b);
            auto it = on_mirror.find(*key);
            if (it == on_mirror.end()) {
                if (f) on_mirror.emplace(*key, *f);
                else on_mirror.emplace(*key, LinearForm());  // contains D
            }
        }
        for (auto& [key, f] : on_mirror)
            if (f.dim() > 0) total[f] += comp.rank;
    }

    FactoredDeterminant out;
    for (auto& [f, e] : total) {
        if (e < 1) throw NegativeFinalExponent("non-positive exponent " + std::to_string(e) + " on " + f.str(D.param_names()));
        out.add(f, int(e));
    }
    return out;
}

std::vector<int> random_gamma_choices(const Stratum& D, std::mt19937_64& rng) {
    std::vector<int> g;
    for (auto& c : D.rd.components) {
        std::uniform_int_distribution<std::size_t> pick(0, c.roots.size() - 1);
        g.push_back(c.roots[pick(rng)]);
    }
    return g;
}

std::vector<std::vector<int>> proper_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

}  // namespace saito
