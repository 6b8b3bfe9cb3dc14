#include "tangledec/decider.hpp"

#include <bit>

namespace tangledec {

CrossMatrix cross_matrix(const std::vector<Separation>& maximals) {
    CrossMatrix cm;
    cm.n = maximals.size();
    cm.m = RatMatrix(cm.n, cm.n);
    for (std::size_t i = 0; i < cm.n; ++i) {
        for (std::size_t j = 0; j < cm.n; ++j) {
            VertexSet sj = separator(maximals[j]);
            cm.m(i, j) = set_size(maximals[i].b & sj) - set_size(maximals[i].a & sj);
        }
    }
    return cm;
}

CrossCheckResult check_cross_counting(const std::vector<Separation>& maximals, int k) {
    CrossCheckResult res;
    for (std::size_t i = 0; i < maximals.size(); ++i) {
        for (std::size_t j = i + 1; j < maximals.size(); ++j) {
            const Separation& s = maximals[i];
            const Separation& t = maximals[j];
            VertexSet si = separator(s);
            VertexSet sj = separator(t);
            int lhs = set_size(s.b & sj) + set_size(t.b & si);
            int rhs = set_size(s.a & sj) + set_size(t.a & si);
            if (lhs <= rhs) {
                res.ok = false;
                res.defect = CrossDefect::CrossCounting;
                res.witness = {i, j};
                return res;
            }
            if (set_size((s.a | t.a) & (s.b & t.b)) < k) {
                res.ok = false;
                res.defect = CrossDefect::Corner;
                res.witness = {i, j};
                return res;
            }
        }
    }
    return res;
}

SynthesisResult synthesize_weights(const GroundSystem& g, const Orientation& o,
                                   const Limits& limits) {
    TangleCertificate cert = g.mode() == Mode::SetSep ? is_profile(g, o, limits)
                                                      : is_tangle(g, o, limits);
    if (!cert.ok) {
        throw AxiomViolation("orientation fails the " +
                                 std::string(g.mode() == Mode::SetSep ? "profile" : "tangle") +
                                 " axioms (" + defect_to_string(cert.kind) + ")",
                             cert);
    }

    SynthesisResult res;
    res.w.values.assign(static_cast<std::size_t>(g.vertex_count()), Int(0));

    std::vector<Separation> maximals = maximal_elements(o);
    std::size_t n = maximals.size();
    res.provenance.n = n;
    if (n == 0) {
        return res;
    }

    CrossMatrix cm = cross_matrix(maximals);
    if (!check_cross_counting(maximals, o.k).ok) {
        throw InternalError("cross-counting inequality failed on tangle maximals");
    }

    RatMatrix sym(n, n);
    RatMatrix skew(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            sym(i, j) = (cm.m(i, j) + cm.m(j, i)) / 2;
            skew(i, j) = cm.m(i, j) - sym(i, j);
        }
    }
    if (!is_skew_symmetric(skew)) {
        throw InternalError("M - (M + M^T)/2 is not skew-symmetric");
    }

    TuckerSolution tucker = tucker_solve(skew);
    res.provenance.x = tucker.x;

    RatVec weight(static_cast<std::size_t>(g.vertex_count()), Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (VertexSet bits = separator(maximals[i]); bits != 0; bits &= bits - 1) {
            weight[static_cast<std::size_t>(std::countr_zero(bits))] += tucker.x[i];
        }
    }
    auto eval = [&weight](VertexSet s) {
        Rational sum = 0;
        for (VertexSet bits = s; bits != 0; bits &= bits - 1) {
            sum += weight[static_cast<std::size_t>(std::countr_zero(bits))];
        }
        return sum;
    };

    RatVec margins = mat_vec(cm.m, tucker.x);
    std::size_t zero_at = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (eval(maximals[i].b) - eval(maximals[i].a) != margins[i]) {
            throw InternalError("margin identity w(B_i) - w(A_i) = (Mx)_i failed");
        }
        if (margins[i] < 0) {
            throw InternalError("negative margin for a maximal element");
        }
        if (margins[i] == 0) {
            if (zero_at != n) {
                throw InternalError("more than one zero margin");
            }
            zero_at = i;
        }
    }

    if (zero_at != n) {
        Rational eps = 1;
        if (n > 1) {
            bool have = false;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == zero_at) {
                    continue;
                }
                if (!have || margins[j] < eps) {
                    eps = margins[j];
                    have = true;
                }
            }
            eps /= 2;
        }
        VertexSet candidates = maximals[zero_at].b & ~maximals[zero_at].a;
        if (candidates == 0) {
            throw InternalError("maximal element with empty B \\ A");
        }
        int v = std::countr_zero(candidates);
        weight[static_cast<std::size_t>(v)] += eps;
        res.provenance.bump_fired = true;
        res.provenance.bump_vertex = v;
    }

    res.w.values = scale_to_integers(weight);

    for (const Separation& s : maximals) {
        if (res.w.eval(s.a) >= res.w.eval(s.b)) {
            throw InternalError("synthesized weights fail w(A) < w(B) on a maximal element");
        }
    }
    return res;
}

MonotoneCheckResult monotone_extension_check(const Orientation& o, const WeightFunction& w) {
    MonotoneCheckResult res;
    std::vector<Separation> maximals = maximal_elements(o);
    for (const Separation& s : o.chosen) {
        for (const Separation& m : maximals) {
            if (!leq(s, m)) {
                continue;
            }
            if (w.eval(s.a) > w.eval(m.a) || w.eval(m.b) > w.eval(s.b)) {
                res.ok = false;
                res.witness = {s, m};
                return res;
            }
        }
    }
    return res;
}

} // namespace tangledec
