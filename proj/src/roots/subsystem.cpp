#include "saito/roots.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace saito {

namespace {

QVec as_qvec(const std::vector<int>& c) { return QVec(c.begin(), c.end()); }

struct DisjointSets {
    std::vector<int> p;
    explicit DisjointSets(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void join(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

std::string subsystem_type(int r, int size, bool two_lengths) {
    if (r == 0) return "empty";
    if (two_lengths) {
        if (r == 2 && size == 12) return "G2";
        if (r == 4 && size == 48) return "F4";
        if (size == 2 * r * r) return "B" + std::to_string(r);
        return "?" + std::to_string(r) + "/" + std::to_string(size);
    }
    if (size == r * (r + 1)) return "A" + std::to_string(r);
    if (r >= 4 && size == 2 * r * (r - 1)) return "D" + std::to_string(r);
    if (r == 6 && size == 72) return "E6";
    if (r == 7 && size == 126) return "E7";
    if (r == 8 && size == 240) return "E8";
    return "?" + std::to_string(r) + "/" + std::to_string(size);
}

const Component* SubsystemReport::component_of(int root) const {
    for (auto& c : components)
        if (std::binary_search(c.roots.begin(), c.roots.end(), root)) return &c;
    return nullptr;
}

SubsystemReport span_subsystem(const RootSystem& R, const std::vector<int>& S) {
    SubsystemReport rep;
    if (S.empty()) return rep;
    SpanBasis span(R.rank);
    for (int s : S) span.add(as_qvec(R.coeffs[s]));
    for (std::size_t r = 0; r < R.size(); ++r)
        if (span.contains(as_qvec(R.coeffs[r]))) rep.roots.push_back(int(r));
    rep.size = int(rep.roots.size());
    rep.rank = int(span.rank());

    DisjointSets ds(rep.roots.size());
    for (std::size_t a = 0; a < rep.roots.size(); ++a)
        for (std::size_t b = a + 1; b < rep.roots.size(); ++b)
            if (R.ip2[rep.roots[a]][rep.roots[b]] != 0) ds.join(int(a), int(b));
    std::map<int, std::vector<int>> groups;
    for (std::size_t a = 0; a < rep.roots.size(); ++a) groups[ds.find(int(a))].push_back(rep.roots[a]);
    for (auto& [k, roots] : groups) {
        Component c;
        c.roots = roots;
        std::sort(c.roots.begin(), c.roots.end());
        SpanBasis cs(R.rank);
        std::set<int> lengths;
        for (int r : c.roots) {
            cs.add(as_qvec(R.coeffs[r]));
            lengths.insert(R.ip2[r][r]);
        }
        c.rank = int(cs.rank());
        c.size = int(c.roots.size());
        if (c.size % c.rank != 0) throw std::logic_error("component size not divisible by rank");
        c.h = c.size / c.rank;
        c.type = subsystem_type(c.rank, c.size, lengths.size() > 1);
        rep.components.push_back(std::move(c));
    }
    std::sort(rep.components.begin(), rep.components.end(), [](const Component& a, const Component& b) {
        return a.size != b.size ? a.size > b.size : a.roots.front() < b.roots.front();
    });
    rep.irreducible = rep.components.size() == 1;
    return rep;
}

Reduction reduce_to_fundamental(const RootSystem& R, const std::vector<int>& S, std::uint64_t seed) {
    int n = R.rank;
    QMat rows;
    for (int s : S) rows.push_back(as_qvec(R.coeffs[s]));
    if (rank(rows) != S.size()) throw DependentRoots("roots are linearly dependent");
    if (int(S.size()) >= n) throw DependentRoots("zero-dimensional stratum");
    // points are written in coordinates s_j = alpha_j(x)
    QMat basis = rows.empty() ? identity(n) : nullspace(rows);
    SpanBasis span(n);
    for (auto& r : rows) span.add(r);
    std::vector<int> outside;
    for (int r : R.positive)
        if (!span.contains(as_qvec(R.coeffs[r]))) outside.push_back(r);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    QVec pt;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 1000) throw std::runtime_error("failed to sample a generic point");
        pt.assign(n, 0);
        for (auto& b : basis) pt = axpy(Scalar(dist(rng)), b, pt);
        bool generic = true;
        for (int r : outside)
            if (sgn(dot(as_qvec(R.coeffs[r]), pt)) == 0) {
                generic = false;
                break;
            }
        if (generic) break;
    }
    // S inside +-Delta: the point can be taken in the closed chamber, w = 1
    bool simple_only = std::all_of(S.begin(), S.end(), [&](int s) {
        return std::count_if(R.coeffs[s].begin(), R.coeffs[s].end(), [](int c) { return c != 0; }) == 1;
    });
    if (simple_only)
        for (auto& c : pt) c = abs(c);

    Reduction red;
    for (;;) {
        int i = -1;
        for (int k = 0; k < n; ++k)
            if (sgn(pt[k]) < 0) {
                i = k;
                break;
            }
        if (i < 0) break;
        Scalar si = pt[i];
        for (int j = 0; j < n; ++j) pt[j] -= si * R.cartan[j][i];
        red.word.push_back(i);
    }
    for (int k = 0; k < n; ++k)
        if (sgn(pt[k]) == 0) red.I.push_back(k);
    if (red.I.size() != S.size()) throw std::logic_error("fundamental reduction changed the stratum dimension");
    return red;
}

int apply_word(const RootSystem& R, const std::vector<int>& word, int root) {
    for (int i : word) root = R.simple_reflect(root, i);
    return root;
}

}  // namespace saito
