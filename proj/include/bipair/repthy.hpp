#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "bipair/weyl.hpp"

namespace bipair {

inline constexpr long long kDefaultDimCap = 1000000;

// ---------------------------------------------------------------------------
// Levi-relative helpers.  All representation combinatorics below are taken
// with respect to the reductive part g_0 of a parabolic p; the whole algebra
// is the special case of an empty crossed set.
// ---------------------------------------------------------------------------

/// Positive roots of g_0 (those supported on uncrossed nodes).
inline std::vector<Weight> levi_positive_roots(const RootSystem& rs, const ParabolicStructure& p) {
    std::vector<Weight> out;
    for (size_t k = 0; k < rs.positive_roots().size(); ++k) {
        bool in_g0 = true;
        for (int i : p.crossed)
            if (rs.root_expansion(k)[i - 1] != 0) { in_g0 = false; break; }
        if (in_g0) out.push_back(rs.positive_roots()[k]);
    }
    return out;
}

/// Makes a weight dominant for g_0 by simple reflections over uncrossed nodes.
/// Returns the conjugate, the sign (-1)^{#reflections}, and whether a wall
/// (zero pairing) was hit.
struct DominantConjugate {
    Weight weight;
    int sign = 1;
    bool on_wall = false;
};

inline DominantConjugate levi_dominant_conjugate(const RootSystem& rs, const ParabolicStructure& p,
                                                 const Weight& w) {
    DominantConjugate out;
    out.weight = rs.convert(w, WBasis::epsilon);
    auto J = p.uncrossed();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int j : J) {
            Rat c = rs.label(out.weight, j);
            if (c == 0) out.on_wall = true;
            if (c < 0) {
                out.weight = reflect(rs, j, out.weight);
                out.sign = -out.sign;
                changed = true;
            }
        }
    }
    return out;
}

inline bool levi_dominant_integral(const RootSystem& rs, const ParabolicStructure& p, const Weight& w) {
    for (int j : p.uncrossed())
        if (!is_nonneg_integer(rs.label(w, j))) return false;
    return true;
}

/// Weyl dimension formula over the Levi part (central components drop out).
inline Int weyl_dim(const RootSystem& rs, const ParabolicStructure& p, const Weight& lam) {
    if (!levi_dominant_integral(rs, p, lam)) throw Error("NotDominant", "weyl_dim: " + lam.str());
    Weight r0 = rs.rho0(p.crossed);
    Rat num(1), den(1);
    for (const auto& a : levi_positive_roots(rs, p)) {
        num *= rs.bilinear(rs.add(lam, r0), a);
        den *= rs.bilinear(r0, a);
    }
    Rat d = num / den;
    if (!is_integer(d)) throw std::logic_error("weyl_dim: non-integer result");
    return to_int(d);
}

inline Int weyl_dim(const RootSystem& rs, const Weight& lam) {
    return weyl_dim(rs, ParabolicStructure(rs.type(), {}), lam);
}

// ---------------------------------------------------------------------------
// Character tables (Freudenthal)
// ---------------------------------------------------------------------------

struct CharacterTable {
    Weight highest;
    ParabolicStructure parabolic;
    std::map<Vec, Int> dominant;  // g_0-dominant weights only, epsilon coords
    Int dim = 0;

    Int multiplicity(const RootSystem& rs, const Weight& w) const {
        auto dc = levi_dominant_conjugate(rs, parabolic, w);
        auto it = dominant.find(dc.weight.coords);
        return it == dominant.end() ? Int(0) : it->second;
    }

    /// All weights with multiplicities (Weyl-orbit expansion over the Levi).
    std::vector<std::pair<Weight, Int>> full(const RootSystem& rs) const {
        std::vector<std::pair<Weight, Int>> out;
        auto J = parabolic.uncrossed();
        for (const auto& [coords, m] : dominant) {
            std::set<Vec> seen{coords};
            std::deque<Weight> queue{Weight(rs.type(), WBasis::epsilon, coords)};
            while (!queue.empty()) {
                Weight w = queue.front();
                queue.pop_front();
                out.emplace_back(w, m);
                for (int j : J) {
                    Weight r = reflect(rs, j, w);
                    if (seen.insert(r.coords).second) queue.push_back(r);
                }
            }
        }
        return out;
    }
};

/// Exact weight multiplicities of the irreducible g_0-module with highest
/// weight lam (Freudenthal recursion over the Levi root system).
inline CharacterTable weight_multiplicities(const RootSystem& rs, const ParabolicStructure& p,
                                            const Weight& lam_in, long long dim_cap = kDefaultDimCap) {
    Weight lam = rs.convert(lam_in, WBasis::epsilon);
    if (!levi_dominant_integral(rs, p, lam)) throw Error("NotDominant", "weight_multiplicities: " + lam.str());
    CharacterTable table;
    table.highest = lam;
    table.parabolic = p;

    auto pos = levi_positive_roots(rs, p);
    auto J = p.uncrossed();
    Weight rho0 = rs.rho0(p.crossed);

    // lowest weight and the per-simple-root box bounds
    Weight lowest = rs.negate(levi_dominant_conjugate(rs, p, rs.negate(lam)).weight);
    Vec span = rs.simple_expansion(rs.sub(lam, lowest));
    std::vector<long> bound;
    long max_level = 0;
    for (int j : J) {
        if (!is_nonneg_integer(span[j - 1])) throw std::logic_error("weight_multiplicities: bad span");
        long b = to_long(span[j - 1]);
        bound.push_back(b);
        max_level += b;
    }
    {
        // crude cap on the candidate box
        double box = 1;
        for (long b : bound) box *= static_cast<double>(b + 1);
        if (box > 4.0 * static_cast<double>(dim_cap))
            throw Error("DimensionCap", "weight box too large for " + lam.str());
    }

    // enumerate dominant candidates lam - sum c_j alpha_j, grouped by level
    std::vector<std::vector<Weight>> by_level(max_level + 1);
    std::vector<long> c(J.size(), 0);
    while (true) {
        long level = 0;
        for (size_t t = 0; t < c.size(); ++t) level += c[t];
        if (level <= max_level) {
            Weight w = lam;
            for (size_t t = 0; t < c.size(); ++t)
                if (c[t]) w = rs.sub(w, rs.scale(rs.simple_roots()[J[t] - 1], Rat(c[t])));
            bool dom = true;
            for (int j : J)
                if (rs.label(w, j) < 0) { dom = false; break; }
            if (dom) by_level[level].push_back(w);
        }
        // advance odometer
        size_t t = 0;
        while (t < c.size() && c[t] == bound[t]) { c[t] = 0; ++t; }
        if (t == c.size()) break;
        ++c[t];
    }

    Rat top_norm = rs.norm2(rs.add(lam, rho0));
    table.dominant[lam.coords] = 1;
    for (long level = 1; level <= max_level; ++level) {
        for (const auto& mu : by_level[level]) {
            Rat denom = top_norm - rs.norm2(rs.add(mu, rho0));
            if (denom == 0) continue;  // not a weight of the module
            Rat num(0);
            for (const auto& alpha : pos) {
                for (long k = 1;; ++k) {
                    Weight up = rs.add(mu, rs.scale(alpha, Rat(k)));
                    auto dc = levi_dominant_conjugate(rs, p, up);
                    auto it = table.dominant.find(dc.weight.coords);
                    if (it == table.dominant.end()) break;  // alpha-strings are unbroken
                    num += Rat(2) * Rat(it->second) * rs.bilinear(up, alpha);
                }
            }
            if (num == 0) continue;
            Rat m = num / denom;
            if (!is_integer(m) || m < 0) throw std::logic_error("Freudenthal: bad multiplicity");
            table.dominant[mu.coords] = to_int(m);
        }
    }

    // dimension by orbit expansion, guarded by the cap
    Int dim(0);
    for (const auto& [coords, m] : table.dominant) {
        std::set<Vec> seen{coords};
        std::deque<Vec> queue{coords};
        while (!queue.empty()) {
            Vec v = queue.front();
            queue.pop_front();
            dim += m;
            for (int j : J) {
                Vec r = reflect(rs, j, Weight(rs.type(), WBasis::epsilon, v)).coords;
                if (seen.insert(r).second) queue.push_back(r);
            }
        }
        if (dim > dim_cap) throw Error("DimensionCap", "dimension exceeds cap for " + lam_in.str());
    }
    table.dim = dim;
    if (weyl_dim(rs, p, lam) != dim) throw std::logic_error("Freudenthal: dimension audit failed");
    return table;
}

/// Read-mostly memoization of character tables.  Concurrent reads are safe
/// and writes are idempotent.
class CharacterCache {
public:
    static CharacterCache& instance() {
        static CharacterCache cache;
        return cache;
    }

    std::shared_ptr<const CharacterTable> get(const RootSystem& rs, const ParabolicStructure& p,
                                              const Weight& lam, long long cap = kDefaultDimCap) {
        Key key{rs.type().str(), std::vector<int>(p.crossed.begin(), p.crossed.end()),
                rs.convert(lam, WBasis::epsilon).coords};
        {
            std::shared_lock lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        auto table = std::make_shared<CharacterTable>(weight_multiplicities(rs, p, lam, cap));
        std::unique_lock lock(mutex_);
        auto [it, inserted] = map_.emplace(key, table);
        return it->second;
    }

private:
    using Key = std::tuple<std::string, std::vector<int>, Vec>;
    std::map<Key, std::shared_ptr<const CharacterTable>> map_;
    std::shared_mutex mutex_;
};

// ---------------------------------------------------------------------------
// Tensor decomposition (Brauer-Klimyk over the Levi)
// ---------------------------------------------------------------------------

struct IrrepComponent {
    Weight highest;
    long mult = 0;
};
using IrrepDecomposition = std::vector<IrrepComponent>;

inline void sort_decomposition(const RootSystem& rs, IrrepDecomposition& dec) {
    std::sort(dec.begin(), dec.end(), [&](const IrrepComponent& a, const IrrepComponent& b) {
        return rs.labels(a.highest) < rs.labels(b.highest);
    });
}

inline IrrepDecomposition tensor_decompose(const RootSystem& rs, const ParabolicStructure& p,
                                           const Weight& lam, const Weight& mu,
                                           long long dim_cap = kDefaultDimCap) {
    auto mu_table = CharacterCache::instance().get(rs, p, mu, dim_cap);
    Weight rho0 = rs.rho0(p.crossed);
    Weight lam_eps = rs.convert(lam, WBasis::epsilon);
    std::map<Vec, long> acc;
    for (const auto& [beta, m] : mu_table->full(rs)) {
        Weight xi = rs.add(rs.add(lam_eps, beta), rho0);
        auto dc = levi_dominant_conjugate(rs, p, xi);
        if (dc.on_wall) continue;
        acc[rs.sub(dc.weight, rho0).coords] += dc.sign * static_cast<long>(m);
    }
    IrrepDecomposition out;
    for (const auto& [coords, m] : acc) {
        if (m == 0) continue;
        if (m < 0) throw std::logic_error("tensor_decompose: negative multiplicity");
        out.push_back({Weight(rs.type(), WBasis::epsilon, coords), m});
    }
    sort_decomposition(rs, out);
    // dimension sum rule
    Int lhs(0);
    for (const auto& c : out) lhs += Int(c.mult) * weyl_dim(rs, p, c.highest);
    if (lhs != weyl_dim(rs, p, lam) * weyl_dim(rs, p, mu))
        throw std::logic_error("tensor_decompose: dimension sum rule failed");
    return out;
}

inline IrrepDecomposition tensor_decompose(const RootSystem& rs, const Weight& lam, const Weight& mu,
                                           long long dim_cap = kDefaultDimCap) {
    return tensor_decompose(rs, ParabolicStructure(rs.type(), {}), lam, mu, dim_cap);
}

/// Cartan product: highest weights add.
inline Weight cartan_product(const RootSystem& rs, const Weight& lam, const Weight& mu) {
    return rs.add(lam, mu);
}

// ---------------------------------------------------------------------------
// Formal characters
// ---------------------------------------------------------------------------

/// Finite weight -> multiplicity table; the oracle currency for products.
struct FormalCharacter {
    LieType type;
    std::map<Vec, Int> entries;

    static FormalCharacter of(const RootSystem& rs, const CharacterTable& t) {
        FormalCharacter out;
        out.type = rs.type();
        for (const auto& [w, m] : t.full(rs)) out.entries[w.coords] += m;
        return out;
    }

    Int dim() const {
        Int d(0);
        for (const auto& [w, m] : entries) d += m;
        return d;
    }

    friend FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b) {
        FormalCharacter out;
        out.type = a.type;
        RootSystem rs = RootSystem::build(a.type);
        for (const auto& [wa, ma] : a.entries)
            for (const auto& [wb, mb] : b.entries) {
                Vec sum = detail::add(wa, wb);
                out.entries[rs.normalized(Weight(a.type, WBasis::epsilon, sum)).coords] += ma * mb;
            }
        return out;
    }

    friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
        return a.entries == b.entries;
    }
};

/// Greedy peeling of a genuine character into irreducible components.
inline IrrepDecomposition decompose_character(const RootSystem& rs, const ParabolicStructure& p,
                                              FormalCharacter ch, long long dim_cap = kDefaultDimCap) {
    IrrepDecomposition out;
    auto J = p.uncrossed();
    while (!ch.entries.empty()) {
        // a top weight: no alpha_j can be added within the support
        const Vec* top = nullptr;
        for (const auto& [w, m] : ch.entries) {
            bool maximal = true;
            for (int j : J) {
                Vec up = detail::add(w, rs.convert(rs.simple_roots()[j - 1], WBasis::epsilon).coords);
                Weight upw = rs.normalized(Weight(rs.type(), WBasis::epsilon, up));
                if (ch.entries.count(upw.coords)) { maximal = false; break; }
            }
            if (maximal) { top = &w; break; }
        }
        if (!top) throw std::logic_error("decompose_character: no maximal weight");
        Weight hw(rs.type(), WBasis::epsilon, *top);
        Int mult = ch.entries.at(*top);
        if (mult < 0) throw std::logic_error("decompose_character: not a character");
        auto table = CharacterCache::instance().get(rs, p, hw, dim_cap);
        for (const auto& [w, m] : table->full(rs)) {
            auto it = ch.entries.find(w.coords);
            if (it == ch.entries.end() || it->second < mult * m)
                throw std::logic_error("decompose_character: not a character");
            it->second -= mult * m;
            if (it->second == 0) ch.entries.erase(it);
        }
        out.push_back({hw, static_cast<long>(mult)});
    }
    sort_decomposition(rs, out);
    return out;
}

/// Character of the weighted-degree-l piece U_l(p_+) of the universal
/// enveloping algebra of the nilradical.
inline FormalCharacter u_l_pplus_character(const RootSystem& rs, const ParabolicStructure& p, int l) {
    // PBW: monomials in the roots of p_+ with total grade l
    std::map<Vec, Int> cur;
    cur[rs.zero().coords] = 1;
    std::vector<std::pair<Weight, int>> radical;
    for (const auto& r : rs.positive_roots()) {
        int g = grade_of_root(rs, p, r);
        if (g >= 1) radical.emplace_back(r, g);
    }
    std::map<std::pair<Vec, int>, Int> state;  // (weight, grade) -> count
    state[{rs.zero().coords, 0}] = 1;
    for (const auto& [root, g] : radical) {
        std::map<std::pair<Vec, int>, Int> next;
        for (const auto& [key, cnt] : state) {
            auto [w, d] = key;
            for (int k = 0; d + k * g <= l; ++k) {
                Vec nw = w;
                for (int rep = 0; rep < k; ++rep) nw = detail::add(nw, rs.convert(root, WBasis::epsilon).coords);
                Weight norm = rs.normalized(Weight(rs.type(), WBasis::epsilon, nw));
                next[{norm.coords, d + k * g}] += cnt;
            }
        }
        state = std::move(next);
    }
    FormalCharacter out;
    out.type = rs.type();
    for (const auto& [key, cnt] : state)
        if (key.second == l) out.entries[key.first] += cnt;
    return out;
}

// ---------------------------------------------------------------------------
// Kostant cohomology
// ---------------------------------------------------------------------------

/// H^d(g_-, V_Lambda) = sum over Hasse elements of length d of the module
/// with highest weight w.Lambda, each with multiplicity one.
inline IrrepDecomposition kostant_cohomology(const RootSystem& rs, const ParabolicStructure& p,
                                             const Weight& Lambda, int degree,
                                             long long cap = kDefaultWeylCap) {
    for (int j = 1; j <= rs.rank(); ++j)
        if (!is_nonneg_integer(rs.label(Lambda, j)))
            throw Error("NotDominant", "kostant_cohomology needs a g-dominant weight");
    auto h = hasse(rs, p, cap);
    IrrepDecomposition out;
    for (const auto& e : h.elements)
        if (e.length == degree) out.push_back({affine_act(rs, e, Lambda), 1});
    sort_decomposition(rs, out);
    return out;
}

// ---------------------------------------------------------------------------
// A-series branching (projective M-modules)
// ---------------------------------------------------------------------------

/// Composition series of the projective M-module: family A, crossed node {1}.
struct CompositionSeries {
    Weight Lambda;                            // g-highest weight of the dual
    long N = 0;                               // top slot index
    std::vector<std::vector<Weight>> slots;   // slot l -> p-dominant weights (multiplicity one each)
};

/// Slots of V_M(E^0)(k - M) on projective space: slot l holds the tuples
/// (M-k+l | b~) interlacing (M-k | b), where b_i = M + a_1 + ... + a_i.
inline CompositionSeries branch_slots(const RootSystem& rs, const ParabolicStructure& p,
                                      const std::vector<long>& a, long M, const Rat& k) {
    if (rs.type().family != Family::A || p.crossed != std::set<int>{1})
        throw Error("FamilyUnsupported", "branch_slots implements the A-series, crossed node 1");
    int n = rs.rank();
    if (static_cast<int>(a.size()) != n - 1) throw Error("RankMismatch", "expected rank-1 Levi labels");
    for (long ai : a)
        if (ai < 0) throw Error("NotDominant", "Levi labels must be non-negative");
    if (M < 0) throw Error("NotDominant", "M must be non-negative");

    std::vector<long> b(n);
    b[0] = M;
    for (int i = 1; i < n; ++i) b[i] = b[i - 1] + a[i - 1];
    CompositionSeries out;
    Vec Lab(n, Rat(0));
    Lab[0] = Rat(M);
    for (int i = 1; i < n; ++i) Lab[i] = Rat(a[i - 1]);
    out.Lambda = rs.from_labels(Lab);
    out.N = b[n - 1];
    out.slots.assign(out.N + 1, {});

    // enumerate interlacing tuples b~ with b_{i-1} <= b~_i <= b_i (b_{-1} = 0)
    std::vector<long> bt(n);
    std::vector<long> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        lo[i] = (i == 0) ? 0 : b[i - 1];
        hi[i] = b[i];
        bt[i] = lo[i];
    }
    while (true) {
        long drop = 0;
        for (int i = 0; i < n; ++i) drop += b[i] - bt[i];
        if (drop <= out.N) {
            // weight of (M - k + drop | b~): crossed label b~_0 - (M - k + drop)
            Vec lab(n);
            lab[0] = Rat(bt[0]) - (Rat(M) - k + Rat(drop));
            for (int i = 1; i < n; ++i) lab[i] = Rat(bt[i] - bt[i - 1]);
            out.slots[drop].push_back(rs.from_labels(lab));
        }
        int t = 0;
        while (t < n && bt[t] == hi[t]) { bt[t] = lo[t]; ++t; }
        if (t == n) break;
        ++bt[t];
    }
    for (auto& slot : out.slots)
        std::sort(slot.begin(), slot.end(),
                  [&](const Weight& x, const Weight& y) { return rs.labels(x) < rs.labels(y); });
    return out;
}

}  // namespace bipair
