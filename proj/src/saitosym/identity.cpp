#include "internal.hpp"

#include <sstream>

namespace saito {

bool IdentityReport::all_pass() const {
    for (auto& l : lines)
        if (!l.pass) return false;
    return true;
}

static MultiPoly root_poly(const RootSystem& R, int root) { return MultiPoly::linear(R.chart_form(R.roots[root])); }

CheckLine euler_inverse_tangency(const InvariantBasis& B, const Stratum& D) {
    const RootSystem& R = *B.R;
    int n = B.n(), nv = R.chart_vars();
    CheckLine line{"e^-1 tangent to " + R.label + " stratum", true, ""};
    if (!B.flat) {
        line.pass = false;
        line.detail = "basis is not flat";
        return line;
    }
    // covector components sum d_a t^a P^{-1}_{ab} d t^b, homogeneous of degree h+1
    std::vector<MultiPoly> weighted;
    for (int b = 0; b < n; ++b) {
        MultiPoly s(nv);
        for (int a = 0; a < n; ++a)
            if (sgn(B.pairing_inv[a][b]) != 0) s += B.p[a] * (B.pairing_inv[a][b] * B.degrees[a]);
        weighted.push_back(s * Scalar(1, R.h));
    }
    for (int j = 0; j < nv; ++j) {
        MultiPoly comp(nv);
        for (int b = 0; b < n; ++b) comp += weighted[b] * B.p[b].diff(j);
        if (!comp.is_zero() && (!comp.is_homogeneous() || comp.total_degree() != R.h + 1)) {
            line.pass = false;
            line.detail = "component of wrong degree";
            return line;
        }
    }
    auto images = detail::stratum_chart_images(D);
    int checked = 0;
    for (int g : D.rd.roots) {
        if (!R.is_positive(g)) continue;
        QVec dir = R.chart_direction(R.roots[g]);
        MultiPoly pairing(nv);
        for (int b = 0; b < n; ++b) pairing += weighted[b] * B.p[b].directional(dir);
        if (!pairing.substitute(images).is_zero()) {
            line.pass = false;
            line.detail = "normal component along a root of R_D does not vanish";
            return line;
        }
        ++checked;
    }
    std::ostringstream os;
    os << "I={";
    for (std::size_t i = 0; i < D.I.size(); ++i) os << (i ? "," : "") << D.I[i] + 1;
    os << "} " << checked << " normal roots";
    line.detail = os.str();
    return line;
}

IdentityReport identity_field_checks(const InvariantBasis& B, bool tangency_all_strata) {
    const RootSystem& R = *B.R;
    int n = B.n();
    IdentityReport rep;
    IdentityFieldData d = identity_field_data(B);

    {
        CheckLine l{"J_k divisible by roots in span of the other simple roots", true, ""};
        int count = 0;
        for (int k = 0; k < n; ++k)
            for (int b : R.positive) {
                if (R.coeffs[b][k] != 0) continue;
                ++count;
                if (!try_divide(d.Jk[k], root_poly(R, b))) {
                    l.pass = false;
                    l.detail = "J_" + std::to_string(k + 1) + " fails";
                }
            }
        if (l.pass) l.detail = std::to_string(count) + " divisibilities";
        rep.lines.push_back(l);
    }
    {
        CheckLine l{"J_k not divisible by alpha_k", true, ""};
        for (int k = 0; k < n; ++k)
            if (try_divide(d.Jk[k], root_poly(R, R.simple[k]))) {
                l.pass = false;
                l.detail += "J_" + std::to_string(k + 1) + " ";
            }
        rep.lines.push_back(l);
    }
    if (n >= 2) {
        CheckLine l{"J_k on the wall of alpha_k is I(A_D)", true, ""};
        auto R_ptr = B.R;
        int expected_deg = int(R.positive.size()) - R.h + 1;
        for (int k = 0; k < n; ++k) {
            Stratum Dk = make_stratum(R_ptr, {k});
            if (d.Jk[k].total_degree() != expected_deg) {
                l.pass = false;
                l.detail += "deg J_" + std::to_string(k + 1) + " ";
                continue;
            }
            auto forms = arrangement_forms(Dk);
            MultiPoly restricted = d.Jk[k].substitute(detail::stratum_chart_images(Dk));
            try {
                auto f = factor_linear(restricted, forms);
                bool ok = f.factors.size() == forms.size();
                for (auto& fac : f.factors) ok = ok && fac.exponent == 1;
                if (!ok) {
                    l.pass = false;
                    l.detail += "J_" + std::to_string(k + 1) + " multiplicities ";
                }
            } catch (const IncompleteFactorization&) {
                l.pass = false;
                l.detail += "J_" + std::to_string(k + 1) + " nonlinear ";
            }
        }
        rep.lines.push_back(l);
    }
    if (n >= 3) {
        CheckLine l{"I_m = (-1)^(l-m-1) I_l on D_{l,m}", true, ""};
        std::vector<MultiPoly> Ik;
        for (int k = 0; k < n; ++k) {
            MultiPoly den(R.chart_vars(), Scalar(1));
            for (int i = 0; i < n; ++i)
                if (i != k) den = den * root_poly(R, R.simple[i]);
            Ik.push_back(divide_exact(d.Jk[k], den));
        }
        int pairs = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (R.cartan[a][b] == 0) continue;  // only two roots in the span
                ++pairs;
                Stratum D = make_stratum(B.R, {a, b});
                auto images = detail::stratum_chart_images(D);
                MultiPoly il = Ik[a].substitute(images), im = Ik[b].substitute(images);
                // l = a+1, m = b+1
                int e = (a + 1) - (b + 1) - 1;
                MultiPoly rhs = (e % 2 == 0) ? il : -il;
                if (im != rhs) {
                    l.pass = false;
                    std::string why = im == -rhs ? "opposite sign" : "not proportional";
                    l.detail += "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ") " + why + " ";
                }
            }
        if (l.pass) l.detail = std::to_string(pairs) + " pairs";
        rep.lines.push_back(l);
    }
    if (B.flat) {
        CheckLine l{"e^-1 tangent to codim-1 and codim-2 strata", true, ""};
        int count = 0;
        for (auto& I : proper_subsets(n)) {
            if (!tangency_all_strata && I.size() > 2) continue;
            auto line = euler_inverse_tangency(B, make_stratum(B.R, I));
            ++count;
            if (!line.pass) {
                l.pass = false;
                l.detail += line.detail + " ";
            }
        }
        if (l.pass) l.detail = std::to_string(count) + " strata";
        rep.lines.push_back(l);
    }
    return rep;
}

}  // namespace saito
