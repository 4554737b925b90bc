#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "bipair/lie.hpp"
#include "bipair/poly.hpp"

namespace bipair {

/// Parabolic subalgebra given by the crossed nodes I of the Dynkin diagram.
/// An empty crossed set is allowed internally and means p = g itself; the
/// representation-theory routines use that to treat g as the "Levi" of the
/// trivial parabolic.
struct ParabolicStructure {
    LieType type;
    std::set<int> crossed;  // 1-based node indices

    ParabolicStructure() = default;
    ParabolicStructure(LieType t, std::set<int> I) : type(t), crossed(std::move(I)) {
        for (int i : crossed)
            if (i < 1 || i > type.rank) throw Error("IndexOutOfRange", "crossed node " + std::to_string(i));
    }

    std::vector<int> uncrossed() const {
        std::vector<int> J;
        for (int j = 1; j <= type.rank; ++j)
            if (!crossed.count(j)) J.push_back(j);
        return J;
    }

    int l0() const { return static_cast<int>(crossed.size()); }
    bool is_borel() const { return l0() == type.rank; }

    friend bool operator==(const ParabolicStructure& a, const ParabolicStructure& b) {
        return a.type == b.type && a.crossed == b.crossed;
    }
};

/// Grade of a root: sum of its simple-root coefficients over the crossed nodes.
inline int grade_of_root(const RootSystem& rs, const ParabolicStructure& p, const Weight& root) {
    if (!rs.is_root(root)) throw Error("NotARoot", "grade of a non-root");
    Vec e = rs.simple_expansion(root);
    Rat g(0);
    for (int i : p.crossed) g += e[i - 1];
    return static_cast<int>(to_long(g));
}

inline int grading_length_k0(const RootSystem& rs, const ParabolicStructure& p) {
    Vec n = rs.simple_expansion(rs.highest_root());
    Rat k(0);
    for (int i : p.crossed) k += n[i - 1];
    return static_cast<int>(to_long(k));
}

/// grade -> dim g_grade table; grade 0 includes the Cartan subalgebra.
inline std::map<int, long> grading_dims(const RootSystem& rs, const ParabolicStructure& p) {
    std::map<int, long> dims;
    int k0 = grading_length_k0(rs, p);
    for (int j = -k0; j <= k0; ++j) dims[j] = (j == 0) ? rs.rank() : 0;
    for (const auto& r : rs.positive_roots()) {
        int g = grade_of_root(rs, p, r);
        dims[g] += 1;
        dims[-g] += 1;
    }
    return dims;
}

/// Irreducible g_0-summand of g_1 attached to crossed node i: the roots of
/// grade one whose coefficient at node i is one.  Its dual g_{-1}^i has
/// highest weight -alpha_i.
struct G1Component {
    int node = 0;
    long dim = 0;
    Weight lowest_weight;       // alpha_i
    Weight dual_highest;        // -alpha_i, highest weight of g_{-1}^i
    std::vector<Weight> roots;  // all of Delta_1^i
};

inline std::vector<G1Component> g1_components(const RootSystem& rs, const ParabolicStructure& p) {
    std::vector<G1Component> out;
    for (int i : p.crossed) {
        G1Component c;
        c.node = i;
        c.lowest_weight = rs.simple_roots()[i - 1];
        c.dual_highest = rs.negate(c.lowest_weight);
        for (size_t k = 0; k < rs.positive_roots().size(); ++k) {
            const Vec& e = rs.root_expansion(k);
            if (e[i - 1] != 1) continue;
            bool other = false;
            for (int i2 : p.crossed)
                if (i2 != i && e[i2 - 1] != 0) { other = true; break; }
            if (!other) c.roots.push_back(rs.positive_roots()[k]);
        }
        c.dim = static_cast<long>(c.roots.size());
        out.push_back(std::move(c));
    }
    return out;
}

/// n = dim g_- = (dim g - dim g_0^S - l_0)/2.
inline long manifold_dim(const RootSystem& rs, const ParabolicStructure& p) {
    long dim_g = static_cast<long>(2 * rs.positive_roots().size()) + rs.rank();
    long roots_g0 = 0;
    for (size_t k = 0; k < rs.positive_roots().size(); ++k)
        if (grade_of_root(rs, p, rs.positive_roots()[k]) == 0) roots_g0 += 2;
    long dim_g0s = roots_g0 + (rs.rank() - p.l0());
    return (dim_g - dim_g0s - p.l0()) / 2;
}

/// p-dominance: integral labels everywhere, non-negative over uncrossed nodes.
inline bool is_p_dominant(const RootSystem& rs, const ParabolicStructure& p, const Weight& w) {
    Vec lab = rs.labels(w);
    for (int j = 1; j <= rs.rank(); ++j) {
        if (!is_integer(lab[j - 1])) return false;
        if (!p.crossed.count(j) && lab[j - 1] < 0) return false;
    }
    return true;
}

/// Rational but non-integral labels over crossed nodes: a density twist.
inline bool is_density_twisted(const RootSystem& rs, const ParabolicStructure& p, const Weight& w) {
    Vec lab = rs.labels(w);
    for (int j = 1; j <= rs.rank(); ++j) {
        if (!is_integer(lab[j - 1])) {
            if (!p.crossed.count(j)) return false;
        }
    }
    for (int i : p.crossed)
        if (!is_integer(lab[i - 1])) return true;
    return false;
}

/// Dominance over the uncrossed nodes only (weights of irreducible g_0-modules).
inline bool is_g0_dominant(const RootSystem& rs, const ParabolicStructure& p, const Weight& w) {
    for (int j : p.uncrossed()) {
        Rat c = rs.label(w, j);
        if (!is_nonneg_integer(c)) return false;
    }
    return true;
}

/// Scale factor turning the Killing form into the normalized inner product
/// with (omega_{i0}, omega_{i0}) = 1 on a |1|-graded parabolic.
inline Rat normalized_form_scale(const RootSystem& rs, const ParabolicStructure& p) {
    if (grading_length_k0(rs, p) != 1 || p.l0() != 1)
        throw Error("NotOneGraded", "normalized form needs a |1|-grading");
    int i0 = *p.crossed.begin();
    return Rat(1) / rs.norm2(rs.fundamental_weight(i0));
}

/// Geometric weight of the irreducible p-module whose dual has highest
/// weight w: the scalar by which the grading element acts, -w(E).
inline Rat geometric_weight(const RootSystem& rs, const ParabolicStructure& p, const Weight& w) {
    if (grading_length_k0(rs, p) != 1 || p.l0() != 1)
        throw Error("NotOneGraded", "geometric weight needs a |1|-grading");
    int i0 = *p.crossed.begin();
    const Weight& om = rs.fundamental_weight(i0);
    const Weight& al = rs.simple_roots()[i0 - 1];
    return -Rat(2) * rs.bilinear(w, om) / rs.norm2(al);
}

// ---------------------------------------------------------------------------
// Dynkin-notation text codec
// ---------------------------------------------------------------------------

/// Grammar:  <family><rank>: <node>+   with node = o(<rational>) | x(<rational>)
struct DynkinDiagram {
    LieType type;
    std::set<int> crossed;
    Vec labels;  // fundamental-basis coefficients, one per node

    ParabolicStructure parabolic() const { return ParabolicStructure(type, crossed); }
    Weight weight(const RootSystem& rs) const { return rs.from_labels(labels); }
};

namespace detail {
struct DynkinTokens {
    LieType type;
    std::set<int> crossed;
    std::vector<std::string> labels;
};

inline DynkinTokens dynkin_tokenize(const std::string& s) {
    DynkinTokens out;
    size_t colon = s.find(':');
    if (colon == std::string::npos) throw Error("ParseError", "missing ':' in '" + s + "'");
    std::string head = s.substr(0, colon);
    while (!head.empty() && isspace(static_cast<unsigned char>(head.back()))) head.pop_back();
    out.type = LieType::parse(head);
    size_t i = colon + 1;
    int node = 0;
    while (i < s.size()) {
        while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size()) break;
        char kind = s[i];
        if (kind != 'o' && kind != 'x')
            throw Error("ParseError", "expected 'o' or 'x' at position " + std::to_string(i));
        ++i;
        if (i >= s.size() || s[i] != '(')
            throw Error("ParseError", "expected '(' at position " + std::to_string(i));
        size_t close = s.find(')', i);
        if (close == std::string::npos)
            throw Error("ParseError", "unbalanced '(' at position " + std::to_string(i));
        ++node;
        if (kind == 'x') out.crossed.insert(node);
        out.labels.push_back(s.substr(i + 1, close - i - 1));
        i = close + 1;
    }
    if (node != out.type.rank)
        throw Error("RankMismatch", out.type.str() + " expects " + std::to_string(out.type.rank) +
                                        " nodes, got " + std::to_string(node));
    return out;
}
}  // namespace detail

/// Strict parse: labels must be exact rationals.
inline DynkinDiagram dynkin_parse(const std::string& s) {
    auto tok = detail::dynkin_tokenize(s);
    DynkinDiagram out;
    out.type = tok.type;
    out.crossed = tok.crossed;
    for (size_t k = 0; k < tok.labels.size(); ++k) {
        try {
            out.labels.push_back(rat_parse(tok.labels[k]));
        } catch (const std::exception&) {
            throw Error("ParseError", "node " + std::to_string(k + 1) + ": label '" + tok.labels[k] +
                                          "' is not a rational");
        }
    }
    return out;
}

inline std::string dynkin_format(const LieType& t, const std::set<int>& crossed,
                                 const std::vector<std::string>& labels) {
    std::string out = t.str() + ":";
    for (int j = 1; j <= t.rank; ++j) {
        out += " ";
        out += crossed.count(j) ? "x" : "o";
        out += "(" + labels[j - 1] + ")";
    }
    return out;
}

inline std::string dynkin_format(const DynkinDiagram& d) {
    std::vector<std::string> labels;
    for (const auto& r : d.labels) labels.push_back(rat_str(r));
    return dynkin_format(d.type, d.crossed, labels);
}

/// Extended parse used by the classification front ends: crossed nodes may
/// carry linear polynomial labels ("w", "1+v"); uncrossed labels stay rational.
struct DynkinDiagramSym {
    LieType type;
    std::set<int> crossed;
    std::vector<Poly> labels;
};

inline DynkinDiagramSym dynkin_parse_sym(const std::string& s) {
    auto tok = detail::dynkin_tokenize(s);
    DynkinDiagramSym out;
    out.type = tok.type;
    out.crossed = tok.crossed;
    for (size_t k = 0; k < tok.labels.size(); ++k) {
        Poly p;
        try {
            p = poly_parse_linear(tok.labels[k]);
        } catch (const std::exception&) {
            throw Error("ParseError", "node " + std::to_string(k + 1) + ": bad label '" + tok.labels[k] + "'");
        }
        if (!p.is_constant() && !tok.crossed.count(static_cast<int>(k + 1)))
            throw Error("ParseError",
                        "node " + std::to_string(k + 1) + ": symbolic labels are only allowed over crossed nodes");
        out.labels.push_back(std::move(p));
    }
    return out;
}

}  // namespace bipair
