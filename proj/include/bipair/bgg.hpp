#pragma once

#include <optional>
#include <vector>

#include "bipair/repthy.hpp"

namespace bipair {

struct BGGNode {
    WeylElement element;
    Weight weight;  // w . lambda, p-dominant
};

struct BGGArrow {
    int from = 0, to = 0;  // node indices
    long order = 0;        // m, where the weight difference is m * root
    Weight root;           // a root of g_-
    bool extremal = false;
};

struct BGGDiagram {
    ParabolicStructure parabolic;
    Weight lambda;
    std::vector<BGGNode> nodes;  // ordered by length, then word
    std::vector<BGGArrow> arrows;
    int max_length = 0;
    /// true when the shape is outside the four families whose arrows the
    /// Appendix prints; the difference-is-root-multiple rule is a convention
    /// there rather than established.
    bool convention_warning = false;
};

namespace detail {
inline bool appendix_shape(const ParabolicStructure& p) {
    const auto& t = p.type;
    if (t.family == Family::A && p.crossed == std::set<int>{1}) return true;
    if (t.family == Family::B && p.crossed == std::set<int>{1}) return true;
    if (t.family == Family::D && p.crossed == std::set<int>{1}) return true;
    if (t.family == Family::A && p.crossed == std::set<int>{1, t.rank}) return true;
    return false;
}
}  // namespace detail

/// Nodes are the affine orbit {w.lambda : w in W^p} arranged by length;
/// arrows join consecutive lengths whenever the weight difference is a
/// positive integer multiple m of a root of g_-, labelled with the order m.
inline BGGDiagram bgg_sequence(const RootSystem& rs, const ParabolicStructure& p, const Weight& lambda,
                               long long cap = kDefaultWeylCap) {
    for (int j = 1; j <= rs.rank(); ++j)
        if (!is_nonneg_integer(rs.label(lambda, j)))
            throw Error("NotDominant", "bgg_sequence needs a g-dominant integral weight");
    BGGDiagram out;
    out.parabolic = p;
    out.lambda = rs.convert(lambda, WBasis::epsilon);
    out.convention_warning = !detail::appendix_shape(p);

    auto h = hasse(rs, p, cap);
    for (const auto& e : h.elements) {
        out.nodes.push_back({e, affine_act(rs, e, lambda)});
        out.max_length = std::max(out.max_length, e.length);
    }

    // negative-grade roots of g_-
    std::vector<Weight> gminus;
    for (const auto& r : rs.positive_roots())
        if (grade_of_root(rs, p, r) >= 1) gminus.push_back(rs.negate(r));

    for (size_t a = 0; a < out.nodes.size(); ++a)
        for (size_t b = 0; b < out.nodes.size(); ++b) {
            if (out.nodes[b].element.length != out.nodes[a].element.length + 1) continue;
            Weight diff = rs.sub(out.nodes[b].weight, out.nodes[a].weight);
            for (const auto& theta : gminus) {
                // diff == m * theta for a positive integer m
                std::optional<Rat> m;
                bool ok = true;
                for (size_t c = 0; c < diff.coords.size() && ok; ++c) {
                    const Rat& t = theta.coords[c];
                    const Rat& d = diff.coords[c];
                    if (t == 0) {
                        if (d != 0) ok = false;
                    } else {
                        Rat ratio = d / t;
                        if (m && *m != ratio) ok = false;
                        m = ratio;
                    }
                }
                if (!ok || !m || !is_integer(*m) || *m < 1) continue;
                bool ext = false;
                if (grade_of_root(rs, p, theta) == -1) ext = is_extremal(rs, p, theta);
                out.arrows.push_back({static_cast<int>(a), static_cast<int>(b),
                                      static_cast<long>(to_long(*m)), theta, ext});
                break;
            }
        }
    return out;
}

/// Resolution shadow: the alternating sum of the fiber dimensions vanishes.
inline Int bgg_euler_characteristic(const RootSystem& rs, const BGGDiagram& d) {
    Int chi(0);
    for (const auto& node : d.nodes) {
        Int dim = weyl_dim(rs, d.parabolic, node.weight);
        chi += (node.element.length % 2) ? -dim : dim;
    }
    return chi;
}

}  // namespace bipair
