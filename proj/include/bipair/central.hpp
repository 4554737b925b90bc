#pragma once

#include <algorithm>

#include "bipair/symweight.hpp"
#include "bipair/weyl.hpp"

namespace bipair {

/// Casimir eigenvalue B(lambda, lambda + 2 rho_c); rho_c is either the full
/// rho or rho_0 of a parabolic.  Equals |lambda+rho_c|^2 - |rho_c|^2.
inline Rat casimir_eigenvalue(const RootSystem& rs, const Weight& lam, const Weight& rho_choice) {
    return rs.bilinear(lam, rs.add(lam, rs.scale(rho_choice, Rat(2))));
}

inline Rat casimir_eigenvalue(const RootSystem& rs, const Weight& lam) {
    return casimir_eigenvalue(rs, lam, rs.rho());
}

/// Pairing constant 2c = |tau+rho|^2 - |lambda+rho|^2 under the Killing form.
inline Rat pairing_constant_c(const RootSystem& rs, const Weight& lam, const Weight& tau) {
    Weight lr = rs.add(lam, rs.rho()), tr = rs.add(tau, rs.rho());
    return (rs.norm2(tr) - rs.norm2(lr)) / Rat(2);
}

/// Symbolic variant for weights with symbolic crossed labels.
inline Poly pairing_constant_c(const RootSystem& rs, const SymWeight& lam, const SymWeight& tau) {
    SymWeight lr = sym_add(rs, lam, rs.rho()), tr = sym_add(rs, tau, rs.rho());
    return (sym_bilinear(rs, tr, tr) - sym_bilinear(rs, lr, lr)) * Poly(Rat(1, 2));
}

/// The |1|-graded normalized channel: the same constant under the inner
/// product scaled so (omega_{i0}, omega_{i0}) = 1 (the "omega - c0" form).
inline Rat pairing_constant_c_normalized(const RootSystem& rs, const ParabolicStructure& p,
                                         const Weight& lam, const Weight& tau) {
    return pairing_constant_c(rs, lam, tau) * normalized_form_scale(rs, p);
}

inline Poly pairing_constant_c_normalized(const RootSystem& rs, const ParabolicStructure& p,
                                          const SymWeight& lam, const SymWeight& tau) {
    return pairing_constant_c(rs, lam, tau) * Poly(normalized_form_scale(rs, p));
}

// ---------------------------------------------------------------------------
// Harish-Chandra central characters
// ---------------------------------------------------------------------------

/// Canonical representative of the W-orbit of lambda + rho.  Two weights
/// yield equal keys iff their generalized Verma modules share a central
/// character (Harish-Chandra).
struct CentralCharacterKey {
    LieType type;
    Vec canonical;

    friend bool operator==(const CentralCharacterKey& a, const CentralCharacterKey& b) {
        return a.type == b.type && a.canonical == b.canonical;
    }
    friend bool operator<(const CentralCharacterKey& a, const CentralCharacterKey& b) {
        return a.canonical < b.canonical;
    }
};

inline CentralCharacterKey central_character_key(const RootSystem& rs, const Weight& lam) {
    Vec v = rs.add(lam, rs.rho()).coords;
    switch (rs.type().family) {
        case Family::A: {
            // shift so the coordinates sum to zero, then sort descending
            Rat mean(0);
            for (const auto& c : v) mean += c;
            mean /= Rat(static_cast<long>(v.size()));
            for (auto& c : v) c -= mean;
            std::sort(v.begin(), v.end(), std::greater<Rat>());
            break;
        }
        case Family::B:
        case Family::C: {
            for (auto& c : v) c = abs(c);
            std::sort(v.begin(), v.end(), std::greater<Rat>());
            break;
        }
        case Family::D: {
            // even sign changes: a zero coordinate absorbs the sign parity
            int negs = 0;
            bool zero = false;
            for (auto& c : v) {
                if (c < 0) { ++negs; c = -c; }
                if (c == 0) zero = true;
            }
            std::sort(v.begin(), v.end(), std::greater<Rat>());
            if (!zero && (negs % 2)) v.back() = -v.back();
            break;
        }
        case Family::G2: {
            // tiny group: take the lex-largest orbit element
            auto orb = orbit(rs, Weight(rs.type(), WBasis::epsilon, v));
            Vec best = orb.front().coords;
            for (const auto& w : orb) best = std::max(best, w.coords);
            v = best;
            break;
        }
    }
    return CentralCharacterKey{rs.type(), v};
}

/// True iff lambda + rho and mu + rho lie in the same W-orbit.
inline bool same_central_character(const RootSystem& rs, const Weight& lam, const Weight& mu) {
    return central_character_key(rs, lam) == central_character_key(rs, mu);
}

// ---------------------------------------------------------------------------
// The explicit sl3 higher Casimir
// ---------------------------------------------------------------------------

/// Evaluates 18 phi(pi(K^(3))) at the H-coordinates of lambda + rho, where
/// h1 = H1 - H2 and h2 = H2 - H3.  Symmetric in the H_i and invariant under
/// a common shift, so the choice of representative does not matter.
inline Rat sl3_k3_eval(const RootSystem& rs, const Weight& lam) {
    if (rs.type().family != Family::A || rs.rank() != 2)
        throw Error("WrongFamily", "sl3_k3_eval needs A2");
    Weight lr = rs.add(lam, rs.rho());
    Rat l1 = rs.coroot_pairing(lr, rs.simple_roots()[0]);
    Rat l2 = rs.coroot_pairing(lr, rs.simple_roots()[1]);
    Rat H1 = l1 + l2, H2 = l2, H3 = 0;
    auto e3 = [](Rat a, Rat b, Rat c) { return a * a * a + b * b * b + c * c * c; };
    Rat sq = H1 * H1 + H2 * H2 + H3 * H3;
    Rat cross = H1 * H2 + H1 * H3 + H2 * H3;
    Rat mixed = H1 * H1 * (H2 + H3) + H2 * H2 * (H1 + H3) + H3 * H3 * (H1 + H2);
    return Rat(6) * e3(H1, H2, H3) - Rat(9) * mixed + Rat(36) * H1 * H2 * H3 - Rat(27) * sq +
           Rat(27) * cross + Rat(81);
}

/// The degree-two companion 9 phi(pi(K^(2))): equals the Casimir eigenvalue
/// |lambda+rho|^2 - |rho|^2 up to the printed normalization (cross-check).
inline Rat sl3_k2_eval(const RootSystem& rs, const Weight& lam) {
    if (rs.type().family != Family::A || rs.rank() != 2)
        throw Error("WrongFamily", "sl3_k2_eval needs A2");
    Weight lr = rs.add(lam, rs.rho());
    Rat l1 = rs.coroot_pairing(lr, rs.simple_roots()[0]);
    Rat l2 = rs.coroot_pairing(lr, rs.simple_roots()[1]);
    Rat H1 = l1 + l2, H2 = l2, H3 = 0;
    return H1 * H1 + H2 * H2 + H3 * H3 - H1 * H2 - H1 * H3 - H2 * H3 - Rat(3);
}

}  // namespace bipair
