#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "bipair/gamma.hpp"

namespace bipair {

// ---------------------------------------------------------------------------
// Numeric Moebius-invariance check on CP^1.  This is the one floating-point
// corner of the engine; everything else is exact.
// ---------------------------------------------------------------------------

namespace cp1 {

/// Truncated Taylor expansion at a point: coeffs[k] = f^(k)(z0)/k!.
using Jet = std::vector<double>;

inline Jet jet_mul(const Jet& a, const Jet& b) {
    Jet out(std::min(a.size(), b.size()), 0.0);
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; i + j < out.size() && j < b.size(); ++j)
            if (i < a.size()) out[i + j] += a[i] * b[j];
    return out;
}

inline Jet jet_add(const Jet& a, const Jet& b) {
    Jet out(std::max(a.size(), b.size()), 0.0);
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

/// Composition g(w(z)) given the jet of g at w0 = w[0] and the jet of w.
inline Jet jet_compose(const Jet& g, const Jet& w) {
    size_t ord = w.size();
    Jet dw = w;
    dw[0] = 0.0;  // w - w0
    Jet out(ord, 0.0), pw(ord, 0.0);
    pw[0] = 1.0;
    for (size_t k = 0; k < g.size(); ++k) {
        for (size_t i = 0; i < ord; ++i) out[i] += g[k] * pw[i];
        if (k + 1 < g.size()) pw = jet_mul(pw, dw);
    }
    return out;
}

/// (u0 + du)^q via the binomial series, u0 > 0.
inline Jet jet_pow(const Jet& u, double q) {
    size_t ord = u.size();
    double u0 = u[0];
    Jet t = u;
    t[0] = 0.0;
    for (auto& c : t) c /= u0;
    Jet out(ord, 0.0), pw(ord, 0.0);
    pw[0] = 1.0;
    double binom = 1.0;
    for (size_t k = 0; k < ord; ++k) {
        for (size_t i = 0; i < ord; ++i) out[i] += binom * pw[i];
        binom *= (q - static_cast<double>(k)) / static_cast<double>(k + 1);
        pw = jet_mul(pw, t);
    }
    double scale = std::pow(u0, q);
    for (auto& c : out) c *= scale;
    return out;
}

/// A section: anything that can produce its jet at a point.
using Section = std::function<Jet(double z0, int order)>;

inline Section polynomial(std::vector<double> coeffs) {
    return [coeffs = std::move(coeffs)](double z0, int order) {
        Jet out(order + 1, 0.0);
        // Taylor shift: evaluate the polynomial and its derivatives at z0
        for (size_t k = coeffs.size(); k-- > 0;) {
            for (size_t i = out.size(); i-- > 1;) out[i] = out[i] * z0 + out[i - 1];
            out[0] = out[0] * z0 + coeffs[k];
        }
        return out;
    };
}

struct Moebius {
    double a = 1, b = 0, c = 0, d = 1;  // z -> (a z + b)/(c z + d)
};

/// Weight-q action: (T f)(z) = (c z + d)^q f((a z + b)/(c z + d)).
inline Section transformed(const Moebius& g, double q, Section inner) {
    return [g, q, inner = std::move(inner)](double z0, int order) {
        Jet den{g.c * z0 + g.d, g.c};
        den.resize(order + 1, 0.0);
        Jet num{g.a * z0 + g.b, g.a};
        num.resize(order + 1, 0.0);
        Jet w = jet_mul(num, jet_pow(den, -1.0));
        Jet f_at_w = inner(w[0], order);
        return jet_mul(jet_pow(den, q), jet_compose(f_at_w, w));
    };
}

/// P(f, g)(z) = sum_j gamma_j f^(j)(z) g^(M-j)(z), itself jet-evaluable.
inline Section pairing(std::vector<double> gam, long M, Section f, Section g) {
    return [gam = std::move(gam), M, f = std::move(f), g = std::move(g)](double z0, int order) {
        Jet jf = f(z0, order + static_cast<int>(M));
        Jet jg = g(z0, order + static_cast<int>(M));
        // jet of f^(k): coefficient i equals src[i+k] * C(i+k, k) * k!
        auto derivative_jet = [order](const Jet& src, long k) {
            Jet out(order + 1, 0.0);
            double fact = 1.0;
            for (long i = 1; i <= k; ++i) fact *= static_cast<double>(i);
            for (size_t i = 0; i < out.size(); ++i) {
                if (i + k >= src.size()) break;
                double binom = 1.0;
                for (long t = 1; t <= k; ++t)
                    binom *= static_cast<double>(i + t) / static_cast<double>(t);
                out[i] = src[i + k] * binom * fact;
            }
            return out;
        };
        Jet total(order + 1, 0.0);
        for (long j = 0; j <= M; ++j) {
            if (gam[j] == 0.0) continue;
            Jet term = jet_mul(derivative_jet(jf, j), derivative_jet(jg, M - j));
            for (auto& c : term) c *= gam[j];
            total = jet_add(total, term);
        }
        total.resize(order + 1, 0.0);
        return total;
    };
}

}  // namespace cp1

struct Cp1Result {
    double max_relative_residual = 0.0;
    long trials = 0;
};

/// Maximum relative residual of P(Tf, Tg) - T(P(f, g)) over random
/// polynomials, random generator products and random sample points.
/// gamma may be supplied explicitly (degenerate families); otherwise the
/// closed form for (M, q, q') is used.
inline Cp1Result cp1_invariance_residual(long M, const Rat& q, const Rat& qp, int trials,
                                         std::uint64_t seed,
                                         const std::vector<double>* gamma_override = nullptr) {
    std::vector<double> gam;
    if (gamma_override) {
        gam = *gamma_override;
    } else {
        if (in_critical_set(Poly(q), M) && in_critical_set(Poly(qp), M))
            throw Error("DegenerateWeights", "q and q' both critical; pass an explicit gamma vector");
        for (const auto& g : gamma_closed_form(M, Poly(q), Poly(qp)))
            gam.push_back(static_cast<double>(g.constant_value()));
    }
    double qd = static_cast<double>(q), qpd = static_cast<double>(qp);
    double pd = qd + qpd - 2.0 * static_cast<double>(M);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0), zpt(0.1, 2.0), tpar(-0.3, 0.3),
        spar(0.5, 1.5);
    std::uniform_int_distribution<int> nfac(1, 3), kind(0, 2);

    Cp1Result out;
    out.trials = trials;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<double> fc(7), gc(7);
        for (auto& c : fc) c = coeff(rng);
        for (auto& c : gc) c = coeff(rng);
        cp1::Section f = cp1::polynomial(fc), g = cp1::polynomial(gc);

        // a random word in the three generator families
        std::vector<cp1::Moebius> word;
        int n = nfac(rng);
        for (int i = 0; i < n; ++i) {
            cp1::Moebius m;
            switch (kind(rng)) {
                case 0: m = {1, tpar(rng), 0, 1}; break;                     // translation
                case 1: { double l = spar(rng); m = {l, 0, 0, 1.0 / l}; break; }  // scaling
                case 2: m = {1, 0, tpar(rng), 1}; break;                     // lower triangular
            }
            word.push_back(m);
        }

        cp1::Section tf = f, tg = g;
        cp1::Section tp = cp1::pairing(gam, M, f, g);
        for (const auto& m : word) {
            tf = cp1::transformed(m, qd, std::move(tf));
            tg = cp1::transformed(m, qpd, std::move(tg));
            tp = cp1::transformed(m, pd, std::move(tp));
        }
        cp1::Section lhs = cp1::pairing(gam, M, tf, tg);

        for (int pt = 0; pt < 3; ++pt) {
            double z = zpt(rng);
            double l = lhs(z, 0)[0];
            double r = tp(z, 0)[0];
            double scale = std::max({1.0, std::fabs(l), std::fabs(r)});
            out.max_relative_residual = std::max(out.max_relative_residual, std::fabs(l - r) / scale);
        }
    }
    return out;
}

}  // namespace bipair
