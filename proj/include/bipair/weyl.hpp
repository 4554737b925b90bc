#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "bipair/parabolic.hpp"

namespace bipair {

inline constexpr long long kDefaultWeylCap = 1000000;  // refuse Weyl groups beyond desk scale

/// sigma_alpha(lambda) = lambda - B(lambda, alpha^vee) alpha.
inline Weight reflect_root(const RootSystem& rs, const Weight& alpha, const Weight& lam) {
    return rs.sub(lam, rs.scale(alpha, rs.coroot_pairing(lam, alpha)));
}

/// Simple reflection, 1-based index.
inline Weight reflect(const RootSystem& rs, int i, const Weight& lam) {
    if (i < 1 || i > rs.rank()) throw Error("IndexOutOfRange", "simple-root index " + std::to_string(i));
    return reflect_root(rs, rs.simple_roots()[i - 1], lam);
}

/// Applies the element sigma_{w[0]} . sigma_{w[1]} . ... (rightmost acts first).
inline Weight apply_word(const RootSystem& rs, const std::vector<int>& word, const Weight& lam) {
    Weight out = rs.convert(lam, WBasis::epsilon);
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = reflect(rs, *it, out);
    return out;
}

/// Coxeter length of the element: number of positive roots sent negative.
inline int word_length(const RootSystem& rs, const std::vector<int>& word) {
    int inv = 0;
    for (const auto& alpha : rs.positive_roots())
        if (!rs.is_positive_root(apply_word(rs, word, alpha))) ++inv;
    return inv;
}

namespace detail {
inline bool is_identity(const RootSystem& rs, const std::vector<int>& word) {
    for (int i = 1; i <= rs.rank(); ++i) {
        const Weight& om = rs.fundamental_weight(i);
        if (!(apply_word(rs, word, om) == om)) return false;
    }
    return true;
}
}  // namespace detail

/// Weyl group element carried as its lexicographically smallest reduced word.
struct WeylElement {
    LieType type;
    std::vector<int> word;
    int length = 0;

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.type == b.type && a.word == b.word;
    }
};

/// Canonicalizes an arbitrary word: greedy smallest left descent.
inline WeylElement weyl_element(const RootSystem& rs, std::vector<int> word) {
    for (int i : word)
        if (i < 1 || i > rs.rank()) throw Error("IndexOutOfRange", "generator " + std::to_string(i));
    std::vector<int> canon;
    std::vector<int> cur = std::move(word);
    int len = word_length(rs, cur);
    while (len > 0) {
        bool found = false;
        for (int i = 1; i <= rs.rank() && !found; ++i) {
            std::vector<int> trial;
            trial.push_back(i);
            trial.insert(trial.end(), cur.begin(), cur.end());
            int tl = word_length(rs, trial);
            if (tl < len) {
                canon.push_back(i);
                cur = std::move(trial);
                len = tl;
                found = true;
            }
        }
        if (!found) throw std::logic_error("weyl_element: no left descent");
    }
    // canon holds s_{i1} s_{i2} ... with w = s_{i1} * (shorter element), so it
    // is already the left-to-right reduced word of the original element
    WeylElement out;
    out.type = rs.type();
    out.word = std::move(canon);
    out.length = static_cast<int>(out.word.size());
    return out;
}

/// Affine ("dot") action w.lambda = w(lambda + rho) - rho.
inline Weight affine_act(const RootSystem& rs, const std::vector<int>& word, const Weight& lam) {
    Weight shifted = rs.add(rs.convert(lam, WBasis::epsilon), rs.rho());
    return rs.sub(apply_word(rs, word, shifted), rs.rho());
}

inline Weight affine_act(const RootSystem& rs, const WeylElement& w, const Weight& lam) {
    return affine_act(rs, w.word, lam);
}

/// Full linear-action orbit; refuses groups larger than the cap.
inline std::vector<Weight> orbit(const RootSystem& rs, const Weight& lam, long long cap = kDefaultWeylCap) {
    if (rs.weyl_order() > cap)
        throw Error("OrbitTooLarge", "|W| = " + rs.weyl_order().str() + " exceeds cap " + std::to_string(cap));
    std::set<Vec> seen;
    std::deque<Weight> queue;
    Weight start = rs.convert(lam, WBasis::epsilon);
    seen.insert(start.coords);
    queue.push_back(start);
    std::vector<Weight> out;
    while (!queue.empty()) {
        Weight w = queue.front();
        queue.pop_front();
        out.push_back(w);
        for (int i = 1; i <= rs.rank(); ++i) {
            Weight r = reflect(rs, i, w);
            if (seen.insert(r.coords).second) queue.push_back(r);
        }
    }
    return out;
}

/// True iff the two roots lie in the same Weyl orbit.
inline bool same_orbit(const RootSystem& rs, const Weight& a, const Weight& b) {
    if (!rs.is_root(a) || !rs.is_root(b)) throw Error("NotARoot", "same_orbit needs two roots");
    Weight target = rs.convert(b, WBasis::epsilon);
    for (const auto& w : orbit(rs, a))
        if (w == target) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Hasse diagram W^p
// ---------------------------------------------------------------------------

struct HasseDiagram {
    ParabolicStructure parabolic;
    std::vector<WeylElement> elements;            // sorted by length, then word
    std::vector<std::pair<int, int>> arrows;      // indices into elements, consecutive lengths
    int max_length = 0;
};

namespace detail {
/// Enumerates the whole Weyl group as words, BFS by length.
inline std::vector<std::vector<int>> enumerate_weyl(const RootSystem& rs, long long cap) {
    if (rs.weyl_order() > cap)
        throw Error("OrbitTooLarge", "|W| = " + rs.weyl_order().str() + " exceeds cap " + std::to_string(cap));
    std::map<std::vector<Vec>, std::vector<int>> seen;  // fingerprint -> word
    auto fingerprint = [&](const std::vector<int>& word) {
        std::vector<Vec> fp;
        for (int i = 1; i <= rs.rank(); ++i) fp.push_back(apply_word(rs, word, rs.fundamental_weight(i)).coords);
        return fp;
    };
    std::deque<std::vector<int>> queue;
    std::vector<std::vector<int>> out;
    std::vector<int> id;
    seen[fingerprint(id)] = id;
    queue.push_back(id);
    while (!queue.empty()) {
        auto w = queue.front();
        queue.pop_front();
        out.push_back(w);
        for (int i = 1; i <= rs.rank(); ++i) {
            auto next = w;
            next.push_back(i);
            auto fp = fingerprint(next);
            if (!seen.count(fp)) {
                seen[fp] = next;
                queue.push_back(next);
            }
        }
    }
    return out;
}
}  // namespace detail

/// Minimal-length coset representatives: w in W^p iff w^{-1} maps every
/// uncrossed simple root to a positive root.
inline HasseDiagram hasse(const RootSystem& rs, const ParabolicStructure& p, long long cap = kDefaultWeylCap) {
    HasseDiagram out;
    out.parabolic = p;
    auto all = detail::enumerate_weyl(rs, cap);
    std::vector<int> J = p.uncrossed();
    for (auto& word : all) {
        std::vector<int> winv(word.rbegin(), word.rend());
        bool ok = true;
        for (int j : J)
            if (!rs.is_positive_root(apply_word(rs, winv, rs.simple_roots()[j - 1]))) { ok = false; break; }
        if (ok) out.elements.push_back(weyl_element(rs, word));
    }
    std::sort(out.elements.begin(), out.elements.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.word < b.word;
    });
    for (const auto& e : out.elements) out.max_length = std::max(out.max_length, e.length);

    // arrows: consecutive lengths forming a Bruhat cover, i.e. w u^{-1} is a reflection
    auto is_reflection = [&](const std::vector<int>& word) {
        for (const auto& beta : rs.positive_roots()) {
            bool match = true;
            for (int i = 1; i <= rs.rank() && match; ++i) {
                const Weight& om = rs.fundamental_weight(i);
                if (!(apply_word(rs, word, om) == reflect_root(rs, beta, om))) match = false;
            }
            if (match) return true;
        }
        return false;
    };
    for (size_t a = 0; a < out.elements.size(); ++a)
        for (size_t b = 0; b < out.elements.size(); ++b) {
            if (out.elements[b].length != out.elements[a].length + 1) continue;
            std::vector<int> compose = out.elements[b].word;  // w u^{-1}
            compose.insert(compose.end(), out.elements[a].word.rbegin(), out.elements[a].word.rend());
            if (is_reflection(compose)) out.arrows.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    return out;
}

/// Extremal root test: theta sits in g_{-1}^i, alpha_i is long, and theta lies
/// in the Weyl orbit of -alpha_i.
inline bool is_extremal(const RootSystem& rs, const ParabolicStructure& p, const Weight& theta) {
    if (!rs.is_root(theta)) throw Error("NotARoot", "extremal test needs a root");
    if (grade_of_root(rs, p, theta) != -1) throw Error("NotInGminus1", "root is not of grade -1");
    Vec e = rs.simple_expansion(theta);
    int node = 0;
    for (int i : p.crossed)
        if (e[i - 1] == -1) { node = i; break; }
    if (node == 0) throw Error("NotInGminus1", "no crossed node carries coefficient -1");
    const Weight& alpha = rs.simple_roots()[node - 1];
    if (!rs.is_long_root(alpha)) return false;
    return same_orbit(rs, theta, rs.negate(alpha));
}

}  // namespace bipair
