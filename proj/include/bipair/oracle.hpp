#pragma once

#include <array>
#include <map>
#include <vector>

#include "bipair/linalg.hpp"
#include "bipair/repthy.hpp"

namespace bipair {

// ---------------------------------------------------------------------------
// sl2: Verma and bi-Verma slices
// ---------------------------------------------------------------------------

namespace sl2 {

/// y^a (x) v  ->  coefficient.  The raising action is accumulated from the
/// single relation [x, y] = h, so the closed PBW identity remains an
/// independent check in the tests.
using State = std::map<long, Rat>;

inline State act_raise(const Rat& q, const State& v) {
    State out;
    for (const auto& [a, c] : v) {
        if (a == 0) continue;
        Rat coeff(0);
        for (long i = 0; i < a; ++i) coeff += q - Rat(2 * i);  // weight of the vector x falls on
        out[a - 1] += c * coeff;
        if (out[a - 1] == 0) out.erase(a - 1);
    }
    return out;
}

}  // namespace sl2

struct SingularVectors {
    int dimension = 0;
    std::vector<Vec> vectors;
};

/// Nullspace of the raising operator on span{ y^j (x) y^{M-j} } inside the
/// sl2 bi-Verma module with highest weights q, q' on the coroot.
inline SingularVectors singular_vectors_biverma_sl2(long M, const Rat& q, const Rat& qp) {
    if (M < 0 || M > 64) throw Error("DegreeCap", "sl2 bi-Verma degree out of range");
    if (M == 0) return {1, {Vec{Rat(1)}}};
    // image basis: y^s (x) y^{M-1-s}, s = 0..M-1
    Mat m(M, Vec(M + 1, Rat(0)));
    for (long j = 0; j <= M; ++j) {
        // first slot: x . y^j lands on row s = j-1
        for (const auto& [a, c] : sl2::act_raise(q, sl2::State{{j, Rat(1)}})) m[a][j] += c;
        // second slot: x . y^{M-j} lands on row s = j
        if (j <= M - 1)
            for (const auto& [b, c] : sl2::act_raise(qp, sl2::State{{M - j, Rat(1)}})) m[j][j] += c;
    }
    SingularVectors out;
    out.vectors = nullspace(m);
    out.dimension = static_cast<int>(out.vectors.size());
    return out;
}

/// Nullspace dimension at weight lambda - d alpha in the sl2 Verma module.
inline int singular_vectors_verma_sl2(const Rat& q, long d) {
    if (d < 0 || d > 64) throw Error("DegreeCap", "sl2 Verma degree out of range");
    if (d == 0) return 1;
    auto img = sl2::act_raise(q, sl2::State{{d, Rat(1)}});
    return img.empty() ? 1 : 0;
}

// ---------------------------------------------------------------------------
// sl3: PBW monomials y1^a ytheta^b y2^c with ytheta = [y2, y1]
// ---------------------------------------------------------------------------

namespace sl3 {

using Mono = std::array<long, 3>;  // exponents of y1, ytheta, y2 (fixed order)
using State = std::map<Mono, Rat>;

inline void add_to(State& s, const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = s.find(m);
    if (it == s.end()) s.emplace(m, c);
    else {
        it->second += c;
        if (it->second == 0) s.erase(it);
    }
}

inline State mult_y1(const State& s) {
    State out;
    for (const auto& [m, c] : s) add_to(out, {m[0] + 1, m[1], m[2]}, c);
    return out;
}

inline State mult_ytheta(const State& s) {
    State out;
    for (const auto& [m, c] : s) add_to(out, {m[0], m[1] + 1, m[2]}, c);
    return out;
}

/// Left multiplication by y2 with normal ordering: y2 y1^a = y1^a y2 + a y1^{a-1} ytheta.
inline State mult_y2(const State& s) {
    State out;
    for (const auto& [m, c] : s) {
        add_to(out, {m[0], m[1], m[2] + 1}, c);
        if (m[0] > 0) add_to(out, {m[0] - 1, m[1] + 1, m[2]}, c * Rat(m[0]));
    }
    return out;
}

/// (h1, h2)-labels of the weight of y1^a ytheta^b y2^c (x) v_lambda.
inline std::pair<Rat, Rat> weight_labels(const Mono& m, const Rat& l1, const Rat& l2) {
    // alpha1 has labels (2, -1), alpha2 (-1, 2), theta (1, 1)
    Rat w1 = l1 - 2 * Rat(m[0]) - Rat(m[1]) + Rat(m[2]);
    Rat w2 = l2 + Rat(m[0]) - Rat(m[1]) - 2 * Rat(m[2]);
    return {w1, w2};
}

/// Raising action e_i . (monomial (x) v), built recursively from the letter
/// commutators [e1,y1]=h1, [e2,y2]=h2, [e1,ytheta]=-y2, [e2,ytheta]=y1,
/// [e1,y2]=[e2,y1]=0.
inline State act_raise(int i, const Mono& m, const Rat& l1, const Rat& l2) {
    State out;
    if (m[0] > 0) {
        Mono r{m[0] - 1, m[1], m[2]};
        if (i == 1) {
            auto [w1, w2] = weight_labels(r, l1, l2);
            add_to(out, r, w1);  // h1 acting on the rest
        }
        for (const auto& [mm, c] : act_raise(i, r, l1, l2)) add_to(out, {mm[0] + 1, mm[1], mm[2]}, c);
        return out;
    }
    if (m[1] > 0) {
        Mono r{m[0], m[1] - 1, m[2]};
        State rest{{r, Rat(1)}};
        if (i == 1) {
            for (const auto& [mm, c] : mult_y2(rest)) add_to(out, mm, -c);
        } else {
            for (const auto& [mm, c] : mult_y1(rest)) add_to(out, mm, c);
        }
        for (const auto& [mm, c] : act_raise(i, r, l1, l2)) add_to(out, {mm[0], mm[1] + 1, mm[2]}, c);
        return out;
    }
    if (m[2] > 0) {
        Mono r{m[0], m[1], m[2] - 1};
        if (i == 2) {
            auto [w1, w2] = weight_labels(r, l1, l2);
            add_to(out, r, w2);
        }
        for (const auto& [mm, c] : act_raise(i, r, l1, l2)) {
            for (const auto& [m2, c2] : mult_y2(State{{mm, c}})) add_to(out, m2, c2);
        }
        return out;
    }
    return out;  // highest weight vector
}

inline State act_raise(int i, const State& s, const Rat& l1, const Rat& l2) {
    State out;
    for (const auto& [m, c] : s)
        for (const auto& [mm, cc] : act_raise(i, m, l1, l2)) add_to(out, mm, c * cc);
    return out;
}

/// All monomials y1^a ytheta^b y2^c with drop X alpha1 + Y alpha2:
/// a + b = X, b + c = Y.
inline std::vector<Mono> monomials_with_drop(long X, long Y) {
    std::vector<Mono> out;
    if (X < 0 || Y < 0) return out;
    for (long b = 0; b <= std::min(X, Y); ++b) out.push_back({X - b, b, Y - b});
    return out;
}

}  // namespace sl3

/// Weight-subspace basis of the sl3 bi-Verma module at drop (X, Y) below
/// lambda + nu: all pairs of monomials whose simple-root drops add up.
inline std::vector<std::pair<sl3::Mono, sl3::Mono>> biverma_basis_sl3(long X, long Y) {
    std::vector<std::pair<sl3::Mono, sl3::Mono>> out;
    for (long x1 = 0; x1 <= X; ++x1)
        for (long y1 = 0; y1 <= Y; ++y1)
            for (const auto& m1 : sl3::monomials_with_drop(x1, y1))
                for (const auto& m2 : sl3::monomials_with_drop(X - x1, Y - y1)) out.emplace_back(m1, m2);
    return out;
}

/// Exact nullspace of both raising operators on the weight slice of the sl3
/// bi-Verma module at lambda + nu - X alpha1 - Y alpha2.
inline SingularVectors singular_vectors_biverma_sl3(const std::array<Rat, 2>& lam,
                                                    const std::array<Rat, 2>& nu, long X, long Y) {
    if (X < 0 || Y < 0 || X + Y > 24) throw Error("DegreeCap", "sl3 bi-Verma slice out of range");
    auto basis = biverma_basis_sl3(X, Y);
    auto index_of = [](const std::vector<std::pair<sl3::Mono, sl3::Mono>>& b) {
        std::map<std::pair<sl3::Mono, sl3::Mono>, size_t> idx;
        for (size_t k = 0; k < b.size(); ++k) idx[b[k]] = k;
        return idx;
    };
    Mat rows;
    for (int gen = 1; gen <= 2; ++gen) {
        long tx = X - (gen == 1 ? 1 : 0), ty = Y - (gen == 2 ? 1 : 0);
        auto image = biverma_basis_sl3(tx, ty);
        if (image.empty()) continue;
        auto idx = index_of(image);
        Mat block(image.size(), Vec(basis.size(), Rat(0)));
        for (size_t k = 0; k < basis.size(); ++k) {
            const auto& [m1, m2] = basis[k];
            for (const auto& [mm, c] : sl3::act_raise(gen, m1, lam[0], lam[1]))
                block[idx.at({mm, m2})][k] += c;
            for (const auto& [mm, c] : sl3::act_raise(gen, m2, nu[0], nu[1]))
                block[idx.at({m1, mm})][k] += c;
        }
        for (auto& r : block) rows.push_back(std::move(r));
    }
    SingularVectors out;
    if (rows.empty()) {
        out.dimension = static_cast<int>(basis.size());
        for (size_t k = 0; k < basis.size(); ++k) {
            Vec v(basis.size(), Rat(0));
            v[k] = 1;
            out.vectors.push_back(std::move(v));
        }
        return out;
    }
    out.vectors = nullspace(rows);
    out.dimension = static_cast<int>(out.vectors.size());
    return out;
}

/// Same for a single sl3 Verma module.
inline SingularVectors singular_vectors_verma_sl3(const std::array<Rat, 2>& lam, long X, long Y) {
    if (X < 0 || Y < 0 || X + Y > 30) throw Error("DegreeCap", "sl3 Verma slice out of range");
    auto basis = sl3::monomials_with_drop(X, Y);
    Mat rows;
    for (int gen = 1; gen <= 2; ++gen) {
        auto image = sl3::monomials_with_drop(X - (gen == 1 ? 1 : 0), Y - (gen == 2 ? 1 : 0));
        if (image.empty()) continue;
        std::map<sl3::Mono, size_t> idx;
        for (size_t k = 0; k < image.size(); ++k) idx[image[k]] = k;
        Mat block(image.size(), Vec(basis.size(), Rat(0)));
        for (size_t k = 0; k < basis.size(); ++k)
            for (const auto& [mm, c] : sl3::act_raise(gen, basis[k], lam[0], lam[1]))
                block[idx.at(mm)][k] += c;
        for (auto& r : block) rows.push_back(std::move(r));
    }
    SingularVectors out;
    if (rows.empty()) {
        out.dimension = static_cast<int>(basis.size());
        return out;
    }
    out.vectors = nullspace(rows);
    out.dimension = static_cast<int>(out.vectors.size());
    return out;
}

// ---------------------------------------------------------------------------
// Character product oracle
// ---------------------------------------------------------------------------

/// True iff the product of the formal characters equals the character sum of
/// the computed tensor decomposition.
inline bool character_product_check(const RootSystem& rs, const Weight& lam, const Weight& mu,
                                    long long dim_cap = kDefaultDimCap) {
    ParabolicStructure whole(rs.type(), {});
    auto cl = FormalCharacter::of(rs, *CharacterCache::instance().get(rs, whole, lam, dim_cap));
    auto cm = FormalCharacter::of(rs, *CharacterCache::instance().get(rs, whole, mu, dim_cap));
    auto prod = cl * cm;
    FormalCharacter sum;
    sum.type = rs.type();
    for (const auto& comp : tensor_decompose(rs, lam, mu, dim_cap)) {
        auto cc = FormalCharacter::of(rs, *CharacterCache::instance().get(rs, whole, comp.highest, dim_cap));
        for (const auto& [w, m] : cc.entries) sum.entries[w] += Int(comp.mult) * m;
    }
    return prod == sum;
}

}  // namespace bipair
