#pragma once

#include <vector>

#include "bipair/parabolic.hpp"
#include "bipair/poly.hpp"

namespace bipair {

/// Weight depending affine-linearly on named symbols: base + sum s_k * dir_k.
/// The classification routines put symbols only on crossed-node labels, so
/// all Levi combinatorics see the numeric base while Casimir constants come
/// out as linear polynomials.
struct SymWeight {
    Weight base;
    std::vector<std::pair<std::string, Weight>> dirs;

    SymWeight() = default;
    explicit SymWeight(Weight w) : base(std::move(w)) {}

    bool is_numeric() const { return dirs.empty(); }

    Weight eval(const RootSystem& rs, const std::map<std::string, Rat>& bind) const {
        Weight out = base;
        for (const auto& [s, d] : dirs) {
            auto it = bind.find(s);
            if (it == bind.end()) throw Error("ParseError", "unbound symbol '" + s + "'");
            out = rs.add(out, rs.scale(d, it->second));
        }
        return out;
    }
};

inline SymWeight sym_add(const RootSystem& rs, const SymWeight& a, const Weight& w) {
    SymWeight out = a;
    out.base = rs.add(out.base, w);
    return out;
}

inline SymWeight sym_add(const RootSystem& rs, const SymWeight& a, const SymWeight& b) {
    SymWeight out = a;
    out.base = rs.add(out.base, b.base);
    for (const auto& [s, d] : b.dirs) {
        bool merged = false;
        for (auto& [t, e] : out.dirs)
            if (t == s) { e = rs.add(e, d); merged = true; break; }
        if (!merged) out.dirs.emplace_back(s, d);
    }
    return out;
}

inline Poly sym_bilinear(const RootSystem& rs, const SymWeight& a, const SymWeight& b) {
    Poly out(rs.bilinear(a.base, b.base));
    for (const auto& [s, d] : a.dirs) out += Poly::var(s) * Poly(rs.bilinear(d, b.base));
    for (const auto& [t, e] : b.dirs) out += Poly::var(t) * Poly(rs.bilinear(a.base, e));
    for (const auto& [s, d] : a.dirs)
        for (const auto& [t, e] : b.dirs) out += Poly::var(s) * Poly::var(t) * Poly(rs.bilinear(d, e));
    return out;
}

/// Fundamental-basis labels as polynomials.
inline std::vector<Poly> sym_labels(const RootSystem& rs, const SymWeight& w) {
    std::vector<Poly> out;
    for (int i = 1; i <= rs.rank(); ++i) {
        Poly p(rs.label(w.base, i));
        for (const auto& [s, d] : w.dirs) p += Poly::var(s) * Poly(rs.label(d, i));
        out.push_back(p);
    }
    return out;
}

/// Builds a SymWeight from an extended Dynkin diagram; symbols may sit only
/// over crossed nodes (enforced by the parser).
inline SymWeight sym_from_diagram(const RootSystem& rs, const DynkinDiagramSym& d) {
    SymWeight out(rs.zero());
    std::map<std::string, Weight> dirs;
    for (int i = 1; i <= rs.rank(); ++i) {
        const Poly& lab = d.labels[i - 1];
        for (const auto& [mono, c] : lab.terms()) {
            if (mono.empty()) {
                out.base = rs.add(out.base, rs.scale(rs.fundamental_weight(i), c));
                continue;
            }
            if (mono.size() != 1 || mono[0].second != 1)
                throw Error("ParseError", "labels must be affine-linear in the symbols");
            auto [it, fresh] = dirs.emplace(mono[0].first, rs.zero());
            it->second = rs.add(it->second, rs.scale(rs.fundamental_weight(i), c));
        }
    }
    for (auto& [s, d2] : dirs) out.dirs.emplace_back(s, d2);
    return out;
}

}  // namespace bipair
