#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bipair/central.hpp"
#include "bipair/repthy.hpp"

namespace bipair {

// ---------------------------------------------------------------------------
// Projective excluded weights
// ---------------------------------------------------------------------------

/// One excluded crossed label k together with the invariant linear operator
/// that causes it.
struct ExcludedWeight {
    Poly k;        // excluded value of the crossed label (may involve "n")
    long order;    // order l of the operator
    long node;     // j = 0..n-1; 0 means the crossed node itself
    std::string operator_desc;
};

namespace detail {
inline std::string labels_str(const std::vector<std::string>& labels) {
    std::string out;
    for (size_t i = 0; i < labels.size(); ++i) {
        out += (i ? " " : "") + std::string(i == 0 ? "x(" : "o(") + labels[i] + ")";
    }
    return out;
}

inline std::string poly_compact(const Poly& p) {
    std::string out;
    for (char ch : p.str())
        if (ch != ' ' && ch != '*') out += ch;
    return out;
}

/// Target labels of the order-l operator attached to position j (Prop. 12);
/// j = 0 drops the crossed label by 2l and raises a_1 by l.
inline std::string excluded_operator_desc(const Poly& k, const std::vector<Poly>& a, long l, long j) {
    std::vector<std::string> labels;
    size_t n1 = a.size();  // number of uncrossed labels
    if (j == 0) {
        labels.push_back(poly_compact(k - Poly(2 * l)));
        for (size_t t = 0; t < n1; ++t)
            labels.push_back(poly_compact(t == 0 ? a[t] + Poly(l) : a[t]));
    } else {
        labels.push_back(poly_compact(k - Poly(l)));
        for (size_t t = 0; t < n1; ++t) {
            Poly v = a[t];
            if (static_cast<long>(t) + 1 == j) v = v - Poly(l);
            if (static_cast<long>(t) + 1 == j + 1) v = v + Poly(l);
            labels.push_back(poly_compact(v));
        }
    }
    return "order-" + std::to_string(l) + " invariant operator to " + labels_str(labels);
}
}  // namespace detail

/// Complete projective excluded-weight list for orders 1..M (Prop. 11):
/// j = 0 contributes k = l-1; node j >= 1 contributes
/// k = -(a_1+...+a_j + j - l + 1) whenever a_j >= l.  By Lemma 16 the list
/// is complete for all orders once M >= max a_i.
inline std::vector<ExcludedWeight> projective_excluded_weights(const std::vector<long>& a, long M) {
    for (long ai : a)
        if (ai < 0) throw Error("NotDominant", "labels must be non-negative integers");
    std::vector<Poly> ap;
    for (long ai : a) ap.push_back(Poly(ai));
    std::vector<ExcludedWeight> out;
    for (long l = 1; l <= M; ++l) {
        out.push_back({Poly(l - 1), l, 0, detail::excluded_operator_desc(Poly(l - 1), ap, l, 0)});
        long prefix = 0;
        for (long j = 1; j <= static_cast<long>(a.size()); ++j) {
            prefix += a[j - 1];
            if (a[j - 1] < l) continue;
            Poly k(-(prefix + j - l + 1));
            out.push_back({k, l, j, detail::excluded_operator_desc(k, ap, l, j)});
        }
    }
    return out;
}

/// Symbolic-rank variant for the tail patterns of Section 5.4: labels
/// (0, ..., 0, c) with the manifold dimension n left symbolic.  c = 0 gives
/// weighted functions.
inline std::vector<ExcludedWeight> projective_excluded_weights_sym(long c_last, long M) {
    if (c_last < 0) throw Error("NotDominant", "label must be a non-negative integer");
    Poly n = Poly::var("n");
    std::vector<ExcludedWeight> out;
    for (long l = 1; l <= M; ++l) {
        out.push_back({Poly(l - 1), l, 0,
                       "order-" + std::to_string(l) + " invariant operator (crossed label drops by " +
                           std::to_string(2 * l) + ")"});
        if (c_last >= l) {
            // j = n-1: k = -(c + (n-1) - l + 1) = -(c + n - l)
            Poly k = -(Poly(c_last) + n - Poly(l));
            out.push_back({k, l, -1,
                           "order-" + std::to_string(l) +
                               " invariant operator lowering the last label by " + std::to_string(l)});
        }
    }
    return out;
}

/// Lemma 16 verifier: for slots l > M of the series (M-k | b) with
/// M >= max a_i, no interlacing tuple shares a central character with slot
/// zero for any k.  Returns the offending tuples (empty = lemma confirmed).
inline std::vector<std::vector<long>> lemma16_violations(const std::vector<long>& a, long M) {
    long max_a = 0;
    for (long ai : a) max_a = std::max(max_a, ai);
    if (M < max_a) throw Error("NotDominant", "Lemma 16 needs M >= max a_i");
    size_t n = a.size() + 1;
    std::vector<long> b(n);
    b[0] = M;
    for (size_t i = 1; i < n; ++i) b[i] = b[i - 1] + a[i - 1];
    long N = b[n - 1];

    std::vector<std::vector<long>> bad;
    // enumerate interlacing tuples with drop l > M; for each, test whether a
    // shift k exists making {M-k+1, bt_i+i+2} equal to {M-k+l+1, b_i+i+2}
    std::vector<long> bt(n), lo(n), hi(n);
    for (size_t i = 0; i < n; ++i) {
        lo[i] = (i == 0) ? 0 : b[i - 1];
        hi[i] = b[i];
        bt[i] = lo[i];
    }
    while (true) {
        long drop = 0;
        for (size_t i = 0; i < n; ++i) drop += b[i] - bt[i];
        if (drop > M && drop <= N) {
            // candidate k from matching the slot-zero extra entry against each b_j
            for (size_t j = 0; j < n; ++j) {
                long k = M + drop + 1 - b[j] - static_cast<long>(j) - 2;
                std::multiset<long> s0{M - k + 1}, sl{M - k + drop + 1};
                for (size_t i = 0; i < n; ++i) {
                    s0.insert(b[i] + static_cast<long>(i) + 2);
                    sl.insert(bt[i] + static_cast<long>(i) + 2);
                }
                if (s0 == sl) bad.push_back(bt);
            }
        }
        size_t t = 0;
        while (t < n && bt[t] == hi[t]) { bt[t] = lo[t]; ++t; }
        if (t == n) break;
        ++bt[t];
    }
    return bad;
}

// ---------------------------------------------------------------------------
// Splitting recursions (tractor inclusions)
// ---------------------------------------------------------------------------

enum class Geometry { projective, conformal, cr_holomorphic, cr_antiholomorphic };

inline std::string geometry_str(Geometry g) {
    switch (g) {
        case Geometry::projective: return "projective";
        case Geometry::conformal: return "conformal";
        case Geometry::cr_holomorphic: return "cr-holomorphic";
        case Geometry::cr_antiholomorphic: return "cr-antiholomorphic";
    }
    return "?";
}

struct SplittingStep {
    long index;        // alpha (1..k) or s (0..k-1)
    Poly denominator;  // the factor multiplying the next component
};

struct SplittingExclusion {
    Poly weight;
    std::string kind;  // "standard" or "non-standard"
    std::string operator_desc;
};

struct SplittingCoefficients {
    Geometry geometry = Geometry::projective;
    long k = 0;
    std::string weight_symbol;
    std::vector<SplittingStep> denominators;
    std::vector<SplittingExclusion> excluded;  // exclusions of the k-step recursion
    /// Theorem 16/17 mode (M-bundle inclusion): the full exclusion families.
    std::optional<long> M;
    std::vector<std::vector<SplittingExclusion>> theorem_families;
};

/// Per-step denominators and excluded weights of the special splittings
/// (Props. 14/16/20/21); with M given, also the full inclusion exclusions
/// (Theorem 16 projectively, Theorem 17 conformally).
inline SplittingCoefficients splitting_recursion(Geometry g, long k, std::optional<long> M = std::nullopt) {
    if (k < 1) throw Error("UnsupportedGeometry", "valence k must be >= 1");
    SplittingCoefficients out;
    out.geometry = g;
    out.k = k;
    out.M = M;
    Poly n = Poly::var("n");
    switch (g) {
        case Geometry::projective: {
            out.weight_symbol = "v";
            Poly v = Poly::var("v");
            for (long al = 1; al <= k; ++al) {
                out.denominators.push_back({al, v + n + Poly(k + al - 1)});
                out.excluded.push_back({-(n + Poly(k + al - 1)), "standard",
                                        "order-" + std::to_string(k + 1 - al) +
                                            " operator V -> divergence^" + std::to_string(k + 1 - al) +
                                            " V + C.C.T."});
            }
            if (M) {
                out.theorem_families.push_back(out.excluded);
                std::vector<SplittingExclusion> fam2;
                for (long al = 0; al <= *M - 1; ++al)
                    fam2.push_back({Poly(al - k), "standard",
                                    "order-" + std::to_string(al + 1) +
                                        " operator V -> sym grad^" + std::to_string(al + 1) + " V - trace"});
                out.theorem_families.push_back(std::move(fam2));
            }
            break;
        }
        case Geometry::conformal: {
            out.weight_symbol = "v";
            Poly v = Poly::var("v");
            for (long al = 1; al <= k; ++al) {
                out.denominators.push_back({al, v + n + Poly(k + al - 2)});
                out.excluded.push_back({-(n + Poly(k + al - 2)), "standard",
                                        "order-" + std::to_string(k - al + 1) +
                                            " operator V -> divergence^" + std::to_string(k - al + 1) +
                                            " V + C.C.T."});
            }
            if (M) {
                // Theorem 17: four families
                out.theorem_families.push_back(out.excluded);
                std::vector<SplittingExclusion> fam2, fam3, fam4;
                for (long al = 0; al <= k - 1; ++al)
                    fam2.push_back({Poly(al - k - 1), "standard",
                                    "order-" + std::to_string(al + 1) + " operator V -> pair-skew grad^" +
                                        std::to_string(al + 1) + " V"});
                for (long al = 0; al <= *M - 1; ++al)
                    fam3.push_back({Poly(al), "standard",
                                    "order-" + std::to_string(al + 1) + " operator V -> sym grad^" +
                                        std::to_string(al + 1) + " V - trace"});
                for (long al = 0; al <= k + *M - 1; ++al)
                    fam4.push_back({Poly(1) - n * Poly(Rat(1, 2)) - Poly(k) + Poly(al), "non-standard",
                                    "Laplacian power Delta^" + std::to_string(al + 1) + " V + ..."});
                out.theorem_families.push_back(std::move(fam2));
                out.theorem_families.push_back(std::move(fam3));
                out.theorem_families.push_back(std::move(fam4));
            }
            break;
        }
        case Geometry::cr_holomorphic:
        case Geometry::cr_antiholomorphic: {
            const char* sym = (g == Geometry::cr_holomorphic) ? "w'" : "w";
            out.weight_symbol = sym;
            Poly wp = Poly::var(sym);
            for (long s = k - 1; s >= 0; --s) out.denominators.push_back({s, n + wp + Poly(s)});
            for (long s = 0; s <= k - 1; ++s) {
                long l = k - s;
                out.excluded.push_back({-(n + Poly(s)), "standard",
                                        "order-" + std::to_string(l) + " operator v -> divergence^" +
                                            std::to_string(l) + " v + C.C.T."});
            }
            if (M) throw Error("UnsupportedGeometry", "the CR M-bundle inclusion is not tabulated here");
            break;
        }
    }
    return out;
}

}  // namespace bipair
