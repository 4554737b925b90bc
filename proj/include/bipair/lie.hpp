#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bipair/error.hpp"
#include "bipair/linalg.hpp"
#include "bipair/rational.hpp"

namespace bipair {

// ---------------------------------------------------------------------------
// Lie type
// ---------------------------------------------------------------------------

enum class Family { A, B, C, D, G2 };

inline std::string family_str(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::G2: return "G";
    }
    return "?";
}

struct LieType {
    Family family = Family::A;
    int rank = 1;

    LieType() = default;
    LieType(Family f, int r) : family(f), rank(r) { validate(); }

    void validate() const {
        if (rank < 1) throw Error("UnsupportedType", "rank must be >= 1");
        if (family == Family::D && rank < 3) throw Error("UnsupportedType", "family D requires rank >= 3");
        if (family == Family::G2 && rank != 2) throw Error("UnsupportedType", "G2 has rank 2");
    }

    std::string str() const { return family_str(family) + std::to_string(rank); }

    friend bool operator==(const LieType& a, const LieType& b) {
        return a.family == b.family && a.rank == b.rank;
    }
    friend bool operator!=(const LieType& a, const LieType& b) { return !(a == b); }

    /// Parses "A3", "B2", "G2", ...
    static LieType parse(const std::string& s) {
        if (s.size() < 2) throw Error("UnsupportedType", "bad Lie type '" + s + "'");
        Family f;
        switch (s[0]) {
            case 'A': f = Family::A; break;
            case 'B': f = Family::B; break;
            case 'C': f = Family::C; break;
            case 'D': f = Family::D; break;
            case 'G': f = Family::G2; break;
            default: throw Error("UnsupportedType", "unknown family '" + s.substr(0, 1) + "'");
        }
        int r = 0;
        try {
            r = std::stoi(s.substr(1));
        } catch (const std::exception&) {
            throw Error("UnsupportedType", "bad rank in '" + s + "'");
        }
        return LieType(f, r);
    }
};

// ---------------------------------------------------------------------------
// Weights
// ---------------------------------------------------------------------------

enum class WBasis { fundamental, epsilon };

/// Exact weight, the universal currency.
///
/// Epsilon coordinates follow the conventions of the classical families:
/// for A_l they have length rank+1 and are defined modulo the all-ones
/// vector; we store the representative whose last coordinate is zero.
/// For B/C/D they are the standard orthogonal-basis coordinates of length
/// rank.  G2 has no classical epsilon basis; its "epsilon" coordinates are
/// coordinates with respect to the simple roots (alpha1 short, alpha2 long)
/// and the bilinear form carries the corresponding Gram matrix.
struct Weight {
    LieType type;
    WBasis basis = WBasis::fundamental;
    Vec coords;

    Weight() = default;
    Weight(LieType t, WBasis b, Vec c) : type(t), basis(b), coords(std::move(c)) {}

    friend bool operator==(const Weight& a, const Weight& b) {
        return a.type == b.type && a.basis == b.basis && a.coords == b.coords;
    }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }

    std::string str() const {
        std::string out = "(";
        for (size_t i = 0; i < coords.size(); ++i) {
            if (i) out += ",";
            out += rat_str(coords[i]);
        }
        return out + ")";
    }
};

namespace detail {
inline Vec add(const Vec& a, const Vec& b) {
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}
inline Vec sub(const Vec& a, const Vec& b) {
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}
inline Vec scale(const Vec& a, const Rat& s) {
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] * s;
    return c;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Root system
// ---------------------------------------------------------------------------

/// Exact root-system data for the families A, B, C, D and G2.
///
/// All weights handed in and out in epsilon coordinates; conversion to and
/// from Dynkin labels ("fundamental basis") goes through convert().
class RootSystem {
public:
    static RootSystem build(LieType t) { return RootSystem(t); }

    const LieType& type() const { return t_; }
    int rank() const { return t_.rank; }

    const std::vector<Weight>& simple_roots() const { return simple_; }
    const std::vector<Weight>& positive_roots() const { return positive_; }
    const Weight& highest_root() const { return highest_; }
    const Weight& rho() const { return rho_; }
    const Weight& fundamental_weight(int i) const { return fundamental_.at(i - 1); }

    /// Simple-root expansion coefficients of positive root #k (integers).
    const Vec& root_expansion(size_t k) const { return expansion_.at(k); }

    Weight zero() const { return Weight(t_, WBasis::epsilon, Vec(eps_dim(), Rat(0))); }

    size_t eps_dim() const { return (t_.family == Family::A) ? t_.rank + 1 : t_.rank; }

    /// Killing form on weights (exact).
    Rat bilinear(const Weight& a, const Weight& b) const {
        check_same(a, b);
        const Vec& x = eps(a).coords;
        const Vec& y = eps(b).coords;
        if (t_.family == Family::A) {
            long n1 = t_.rank + 1;
            Rat dot(0), sx(0), sy(0);
            for (size_t i = 0; i < x.size(); ++i) {
                dot += x[i] * y[i];
                sx += x[i];
                sy += y[i];
            }
            return (dot - sx * sy / n1) / Rat(2 * n1);
        }
        if (t_.family == Family::G2) {
            // Gram matrix of the simple roots under the Killing form
            static const Rat g11(2, 24), g12(-3, 24), g22(6, 24);
            return g11 * x[0] * y[0] + g12 * (x[0] * y[1] + x[1] * y[0]) + g22 * x[1] * y[1];
        }
        Rat dot(0);
        for (size_t i = 0; i < x.size(); ++i) dot += x[i] * y[i];
        long l = t_.rank;
        switch (t_.family) {
            case Family::B: return dot / Rat(4 * l - 2);
            case Family::C: return dot / Rat(4 * l + 4);
            case Family::D: return dot / Rat(4 * l - 4);
            default: break;
        }
        throw Error("UnsupportedType", "unreachable");
    }

    Rat norm2(const Weight& a) const { return bilinear(a, a); }

    /// B(lambda, alpha^vee) = 2 B(lambda, alpha) / B(alpha, alpha).
    Rat coroot_pairing(const Weight& lam, const Weight& alpha) const {
        Rat nn = norm2(alpha);
        if (nn == 0) throw Error("NotARoot", "coroot of the zero weight");
        return Rat(2) * bilinear(lam, alpha) / nn;
    }

    /// Same, but insists that alpha is actually a root of this system.
    Rat coroot_pairing_checked(const Weight& lam, const Weight& alpha) const {
        if (!is_root(alpha)) throw Error("NotARoot", "not a root: " + alpha.str());
        return coroot_pairing(lam, alpha);
    }

    Rat label(const Weight& w, int i) const { return coroot_pairing(w, simple_.at(i - 1)); }

    bool is_root(const Weight& w) const { return root_keys_.count(eps(w).coords) > 0; }
    bool is_positive_root(const Weight& w) const { return pos_keys_.count(eps(w).coords) > 0; }

    Weight negate(const Weight& w) const {
        Weight out = eps(w);
        for (auto& c : out.coords) c = -c;
        return normalized(out);
    }

    Weight add(const Weight& a, const Weight& b) const {
        check_same(a, b);
        return normalized(Weight(t_, WBasis::epsilon, detail::add(eps(a).coords, eps(b).coords)));
    }
    Weight sub(const Weight& a, const Weight& b) const {
        check_same(a, b);
        return normalized(Weight(t_, WBasis::epsilon, detail::sub(eps(a).coords, eps(b).coords)));
    }
    Weight scale(const Weight& a, const Rat& s) const {
        return normalized(Weight(t_, WBasis::epsilon, detail::scale(eps(a).coords, s)));
    }

    Weight from_labels(const Vec& labels) const {
        if (static_cast<int>(labels.size()) != t_.rank)
            throw Error("RankMismatch", "expected " + std::to_string(t_.rank) + " labels");
        Weight out = zero();
        for (int i = 0; i < t_.rank; ++i)
            out = add(out, scale(fundamental_.at(i), labels[i]));
        return out;
    }

    Vec labels(const Weight& w) const {
        Vec out(t_.rank);
        for (int i = 1; i <= t_.rank; ++i) out[i - 1] = label(w, i);
        return out;
    }

    Weight convert(const Weight& w, WBasis target) const {
        if (w.basis == target) return w.basis == WBasis::epsilon ? normalized(w) : w;
        if (target == WBasis::epsilon) return eps(w);
        return Weight(t_, WBasis::fundamental, labels(w));
    }

    /// Expands a root-lattice element in the simple roots: n_i = 2 B(w, omega_i)/|alpha_i|^2.
    Vec simple_expansion(const Weight& w) const {
        Vec out(t_.rank);
        for (int i = 0; i < t_.rank; ++i)
            out[i] = Rat(2) * bilinear(w, fundamental_[i]) / norm2(simple_[i]);
        return out;
    }

    /// Height of a root-lattice element (sum of simple-root coefficients).
    Rat height(const Weight& w) const {
        Vec e = simple_expansion(w);
        return std::accumulate(e.begin(), e.end(), Rat(0));
    }

    bool is_long_root(const Weight& alpha) const {
        return norm2(alpha) == norm2(highest_);
    }

    /// rho_0 for a crossed set: half-sum of positive roots supported on the
    /// uncrossed nodes.
    Weight rho0(const std::set<int>& crossed) const {
        Weight sum = zero();
        for (size_t k = 0; k < positive_.size(); ++k) {
            bool in_g0 = true;
            for (int i : crossed)
                if (expansion_[k][i - 1] != 0) { in_g0 = false; break; }
            if (in_g0) sum = add(sum, positive_[k]);
        }
        return scale(sum, Rat(1, 2));
    }

    Int weyl_order() const {
        Int f(1);
        long l = t_.rank;
        switch (t_.family) {
            case Family::A:
                for (long i = 2; i <= l + 1; ++i) f *= i;
                return f;
            case Family::B:
            case Family::C:
                for (long i = 2; i <= l; ++i) f *= i;
                return f << l;
            case Family::D:
                for (long i = 2; i <= l; ++i) f *= i;
                return f << (l - 1);
            case Family::G2: return 12;
        }
        return f;
    }

    /// Fixed-representative normalization (family A: last epsilon coordinate 0).
    Weight normalized(const Weight& w) const {
        if (w.basis != WBasis::epsilon) return w;
        Weight out = w;
        if (t_.family == Family::A) {
            Rat shift = out.coords.back();
            if (shift != 0)
                for (auto& c : out.coords) c -= shift;
        }
        return out;
    }

private:
    explicit RootSystem(LieType t) : t_(t) {
        t_.validate();
        build_roots();
        build_fundamental();
        rho_ = zero();
        for (const auto& w : fundamental_) rho_ = add(rho_, w);
        index_roots();
        pick_highest();
    }

    void check_same(const Weight& a, const Weight& b) const {
        if (a.type != t_ || b.type != t_)
            throw Error("TypeMismatch", "weight belongs to a different Lie type");
    }

    Weight eps(const Weight& w) const {
        if (w.type != t_) throw Error("TypeMismatch", "weight belongs to a different Lie type");
        if (w.basis == WBasis::epsilon) {
            if (w.coords.size() != eps_dim()) throw Error("RankMismatch", "bad epsilon length");
            return normalized(w);
        }
        return from_labels(w.coords);
    }

    Weight mk(std::initializer_list<std::pair<int, int>> entries) const {
        Vec c(eps_dim(), Rat(0));
        for (auto [idx, val] : entries) c[idx] += val;
        return Weight(t_, WBasis::epsilon, c);
    }

    void build_roots() {
        int l = t_.rank;
        switch (t_.family) {
            case Family::A:
                for (int i = 0; i <= l; ++i)
                    for (int j = i + 1; j <= l; ++j) positive_.push_back(mk({{i, 1}, {j, -1}}));
                for (int i = 0; i < l; ++i) simple_.push_back(mk({{i, 1}, {i + 1, -1}}));
                break;
            case Family::B:
                for (int i = 0; i < l; ++i)
                    for (int j = i + 1; j < l; ++j) {
                        positive_.push_back(mk({{i, 1}, {j, -1}}));
                        positive_.push_back(mk({{i, 1}, {j, 1}}));
                    }
                for (int i = 0; i < l; ++i) positive_.push_back(mk({{i, 1}}));
                for (int i = 0; i + 1 < l; ++i) simple_.push_back(mk({{i, 1}, {i + 1, -1}}));
                simple_.push_back(mk({{l - 1, 1}}));
                break;
            case Family::C:
                for (int i = 0; i < l; ++i)
                    for (int j = i + 1; j < l; ++j) {
                        positive_.push_back(mk({{i, 1}, {j, -1}}));
                        positive_.push_back(mk({{i, 1}, {j, 1}}));
                    }
                for (int i = 0; i < l; ++i) positive_.push_back(mk({{i, 2}}));
                for (int i = 0; i + 1 < l; ++i) simple_.push_back(mk({{i, 1}, {i + 1, -1}}));
                simple_.push_back(mk({{l - 1, 2}}));
                break;
            case Family::D:
                for (int i = 0; i < l; ++i)
                    for (int j = i + 1; j < l; ++j) {
                        positive_.push_back(mk({{i, 1}, {j, -1}}));
                        positive_.push_back(mk({{i, 1}, {j, 1}}));
                    }
                for (int i = 0; i + 1 < l; ++i) simple_.push_back(mk({{i, 1}, {i + 1, -1}}));
                simple_.push_back(mk({{l - 2, 1}, {l - 1, 1}}));
                break;
            case Family::G2:
                // coordinates w.r.t. the simple roots; alpha1 short, alpha2 long
                for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}})
                    positive_.push_back(mk({{0, a}, {1, b}}));
                simple_.push_back(mk({{0, 1}}));
                simple_.push_back(mk({{1, 1}}));
                break;
        }
        for (auto& r : positive_) r = normalized(r);
        for (auto& r : simple_) r = normalized(r);
    }

    void build_fundamental() {
        // Solve B(x, alpha_j^vee) = delta_ij; for family A fix the last
        // epsilon coordinate to zero so the representative is unique.
        int l = t_.rank;
        size_t dim = (t_.family == Family::A) ? l : eps_dim();
        Mat m(l, Vec(dim, Rat(0)));
        for (int j = 0; j < l; ++j)
            for (size_t k = 0; k < dim; ++k) {
                Vec unit(eps_dim(), Rat(0));
                unit[k] = 1;
                Weight e(t_, WBasis::epsilon, unit);
                m[j][k] = Rat(2) * raw_bilinear(e, simple_[j]) / raw_bilinear(simple_[j], simple_[j]);
            }
        for (int i = 0; i < l; ++i) {
            Vec rhs(l, Rat(0));
            rhs[i] = 1;
            Vec x = solve(m, rhs);
            Vec full(eps_dim(), Rat(0));
            for (size_t k = 0; k < dim; ++k) full[k] = x[k];
            fundamental_.push_back(normalized(Weight(t_, WBasis::epsilon, full)));
        }
    }

    // bilinear without the normalization/conversion plumbing (used during construction)
    Rat raw_bilinear(const Weight& a, const Weight& b) const {
        const Vec& x = a.coords;
        const Vec& y = b.coords;
        if (t_.family == Family::A) {
            long n1 = t_.rank + 1;
            Rat dot(0), sx(0), sy(0);
            for (size_t i = 0; i < x.size(); ++i) {
                dot += x[i] * y[i];
                sx += x[i];
                sy += y[i];
            }
            return (dot - sx * sy / n1) / Rat(2 * n1);
        }
        if (t_.family == Family::G2) {
            static const Rat g11(2, 24), g12(-3, 24), g22(6, 24);
            return g11 * x[0] * y[0] + g12 * (x[0] * y[1] + x[1] * y[0]) + g22 * x[1] * y[1];
        }
        Rat dot(0);
        for (size_t i = 0; i < x.size(); ++i) dot += x[i] * y[i];
        long l = t_.rank;
        if (t_.family == Family::B) return dot / Rat(4 * l - 2);
        if (t_.family == Family::C) return dot / Rat(4 * l + 4);
        return dot / Rat(4 * l - 4);
    }

    void index_roots() {
        for (size_t k = 0; k < positive_.size(); ++k) {
            pos_keys_.insert(positive_[k].coords);
            root_keys_.insert(positive_[k].coords);
            root_keys_.insert(negate(positive_[k]).coords);
            expansion_.push_back(simple_expansion(positive_[k]));
        }
    }

    void pick_highest() {
        size_t best = 0;
        Rat best_h = height(positive_[0]);
        for (size_t k = 1; k < positive_.size(); ++k) {
            Rat h = height(positive_[k]);
            if (h > best_h) { best_h = h; best = k; }
        }
        highest_ = positive_[best];
    }

    LieType t_;
    std::vector<Weight> simple_;
    std::vector<Weight> positive_;
    std::vector<Vec> expansion_;
    std::vector<Weight> fundamental_;
    Weight highest_;
    Weight rho_;
    std::set<Vec> root_keys_;
    std::set<Vec> pos_keys_;
};

}  // namespace bipair
