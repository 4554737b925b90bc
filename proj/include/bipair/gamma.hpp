#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "bipair/error.hpp"
#include "bipair/linalg.hpp"
#include "bipair/poly.hpp"

namespace bipair {

// ---------------------------------------------------------------------------
// The gamma coefficient system
// ---------------------------------------------------------------------------

/// gamma_{M,j} = (-1)^j binom(M,j) prod_{i=j}^{M-1}(q-i) prod_{i=M-j}^{M-1}(q'-i).
inline std::vector<Poly> gamma_closed_form(long M, const Poly& q, const Poly& qp) {
    std::vector<Poly> out;
    for (long j = 0; j <= M; ++j) {
        Poly g(binomial(M, j) * (j % 2 ? Rat(-1) : Rat(1)));
        for (long i = j; i <= M - 1; ++i) g *= q - Poly(i);
        for (long i = M - j; i <= M - 1; ++i) g *= qp - Poly(i);
        out.push_back(g);
    }
    return out;
}

/// The three literal transcriptions of the recurrence; they are the same
/// system and the solver asserts as much.
enum class GammaSystem { intro, biverma, extremal };

inline Mat gamma_system_matrix(GammaSystem which, long M, const Rat& q, const Rat& qp) {
    Mat m(M, Vec(M + 1, Rat(0)));
    for (long r = 0; r < M; ++r) {
        switch (which) {
            case GammaSystem::intro:
                // gamma_s (M-s)(M-s-q'-1) + gamma_{s+1} (s+1)(s-q) = 0
                m[r][r] = Rat(M - r) * (Rat(M - r) - qp - 1);
                m[r][r + 1] = Rat(r + 1) * (Rat(r) - q);
                break;
            case GammaSystem::biverma:
                // gamma_{j+1} (j+1)(q-j) + gamma_j (M-j)(q'-M+j+1) = 0
                m[r][r + 1] = Rat(r + 1) * (q - Rat(r));
                m[r][r] = Rat(M - r) * (qp - Rat(M) + Rat(r) + 1);
                break;
            case GammaSystem::extremal:
                // gamma_{j+1} (j+1)(q-j) + gamma_j (M-j)(q'+j+1-M) = 0
                m[r][r + 1] = Rat(r + 1) * (q - Rat(r));
                m[r][r] = Rat(M - r) * (qp + Rat(r) + 1 - Rat(M));
                break;
        }
    }
    return m;
}

/// Exact solution data of the order-M pairing system.
struct GammaVector {
    long M = 0;
    Poly q, qp;
    bool symbolic = false;
    bool closed_form_valid = false;    // q or q' outside {0,...,M-1}
    std::vector<Poly> closed_form;     // always the product formula
    std::vector<Vec> nullspace_basis;  // numeric case
    int solution_dim = 1;
    bool degenerate = false;
    std::vector<Poly> coefficients;    // canonical representative when dim == 1
};

inline bool in_critical_set(const Poly& x, long M) {
    if (!x.is_constant()) return false;
    Rat v = x.constant_value();
    return is_integer(v) && v >= 0 && v <= M - 1;
}

inline GammaVector gamma_coefficients(long M, const Poly& q, const Poly& qp) {
    if (M < 0) throw Error("DegreeCap", "order must be non-negative");
    GammaVector out;
    out.M = M;
    out.q = q;
    out.qp = qp;
    out.symbolic = !(q.is_constant() && qp.is_constant());
    out.closed_form = gamma_closed_form(M, q, qp);
    out.closed_form_valid = !(in_critical_set(q, M) && in_critical_set(qp, M));

    // the closed form satisfies the recurrence identically (self-check)
    for (long j = 0; j < M; ++j) {
        Poly lhs = out.closed_form[j + 1] * Poly(j + 1) * (q - Poly(j)) +
                   out.closed_form[j] * Poly(M - j) * (qp - Poly(M) + Poly(j + 1));
        if (!lhs.is_zero()) throw std::logic_error("gamma closed form fails the recurrence");
    }

    if (M == 0) {
        out.solution_dim = 1;
        out.coefficients = {Poly(1)};
        out.nullspace_basis = {{Rat(1)}};
        return out;
    }

    if (out.symbolic) {
        // symbols are generic: one-dimensional solution space, closed form valid
        out.solution_dim = 1;
        out.coefficients = out.closed_form;
        return out;
    }

    Rat qv = q.constant_value(), qpv = qp.constant_value();
    Mat m = gamma_system_matrix(GammaSystem::biverma, M, qv, qpv);
    out.nullspace_basis = nullspace(m);
    out.solution_dim = static_cast<int>(out.nullspace_basis.size());
    out.degenerate = out.solution_dim >= 2;

    // all three printed systems agree
    for (auto which : {GammaSystem::intro, GammaSystem::extremal}) {
        auto other = nullspace(gamma_system_matrix(which, M, qv, qpv));
        if (other != out.nullspace_basis) throw std::logic_error("gamma systems disagree");
    }

    if (out.solution_dim == 1) {
        std::vector<Poly> vec;
        for (const auto& c : out.nullspace_basis[0]) vec.push_back(Poly(c));
        // prefer the closed form when it is a valid nonzero representative
        bool cf_nonzero = false;
        for (const auto& g : out.closed_form)
            if (!g.is_zero()) cf_nonzero = true;
        if (out.closed_form_valid && cf_nonzero) {
            if (!proportional(out.closed_form, vec))
                throw std::logic_error("closed form not proportional to the nullspace");
            out.coefficients = out.closed_form;
        } else {
            out.coefficients = normalize_poly_vector(vec);
        }
    }
    return out;
}

inline GammaVector gamma_coefficients(long M, const Rat& q, const Rat& qp) {
    return gamma_coefficients(M, Poly(q), Poly(qp));
}

// ---------------------------------------------------------------------------
// Ricci-corrected derivative words
// ---------------------------------------------------------------------------

enum class Letter { Nabla, Gamma };
using DWord = std::vector<Letter>;  // leftmost letter = outermost operator

struct DTerm {
    DWord word;
    Poly constant;
};

inline int word_grade(const DWord& w) {
    int g = 0;
    for (Letter x : w) g += (x == Letter::Nabla) ? 1 : 2;
    return g;
}

/// Closed-form curvature-correction constant: Gammas sit at positions
/// i_1, ..., i_j counted from the right with each Gamma counting twice and
/// i_m the leftmost of its two positions; the constant is
/// prod_m (i_m - 1)(q - i_m + 2).
inline Poly cct_constant(const DWord& word, const Poly& q) {
    Poly out(1);
    int pos = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it == Letter::Nabla) {
            pos += 1;
        } else {
            int im = pos + 2;
            out *= Poly(im - 1) * (q - Poly(im) + Poly(2));
            pos += 2;
        }
    }
    return out;
}

/// D_k s = nabla D_{k-1} s + (k-1)(q-k+2) Gamma D_{k-2} s, fully expanded.
/// Term order: the nabla branch first (in D_{k-1} order), then the Gamma
/// branch (in D_{k-2} order); this is the canonical rendering order.
inline std::vector<DTerm> ricci_expand(int k, const Poly& q) {
    if (k < 0) throw Error("DegreeCap", "negative order");
    std::vector<std::vector<DTerm>> d(std::max(2, k + 1));
    d[0] = {DTerm{{}, Poly(1)}};
    d[1] = {DTerm{{Letter::Nabla}, Poly(1)}};
    for (int m = 2; m <= k; ++m) {
        std::vector<DTerm> cur;
        for (const auto& t : d[m - 1]) {
            DWord w;
            w.push_back(Letter::Nabla);
            w.insert(w.end(), t.word.begin(), t.word.end());
            cur.push_back({std::move(w), t.constant});
        }
        Poly factor = Poly(m - 1) * (q - Poly(m) + Poly(2));
        for (const auto& t : d[m - 2]) {
            DWord w;
            w.push_back(Letter::Gamma);
            w.insert(w.end(), t.word.begin(), t.word.end());
            cur.push_back({std::move(w), factor * t.constant});
        }
        d[m] = std::move(cur);
    }
    return d[k];
}

inline std::vector<DTerm> ricci_expand(int k, const std::string& qname) {
    return ricci_expand(k, Poly::var(qname));
}

inline long ricci_term_count(int k) {
    long n = 0;
    for (long j = 0; 2 * j <= k; ++j) n += static_cast<long>(to_long(binomial(k - j, j)));
    return n;
}

inline std::string word_str(const DWord& w, const std::string& target) {
    std::string out;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        out += (w[i] == Letter::Nabla) ? "∇" : "Γ";
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    out += target;
    return out;
}

inline std::string word_latex(const DWord& w, const std::string& target) {
    std::string out;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        out += (w[i] == Letter::Nabla) ? "\\nabla" : "\\Gamma";
        if (j - i > 1) out += "^{" + std::to_string(j - i) + "}";
        i = j;
    }
    out += " " + target;
    return out;
}

// ---------------------------------------------------------------------------
// The full pairing formula
// ---------------------------------------------------------------------------

struct PairingTerm {
    long j = 0;
    Poly gamma;
    std::vector<DTerm> ds;  // D_j s, constants in q
    std::vector<DTerm> dt;  // D_{M-j} t, constants in q'
};

/// Collected form: outermost Gamma factors pool across the two slots, so a
/// term is keyed by the pooled Gamma power and the two stripped inner words.
struct CollectedTerm {
    int gamma_power = 0;
    DWord ws, wt;
    Poly coeff;
};

struct PairingFormula {
    long M = 0;
    Poly q, qp;
    GammaVector gamma;
    std::vector<PairingTerm> terms;
    std::vector<CollectedTerm> collected;
};

namespace detail {
inline std::pair<int, DWord> strip_gamma_prefix(const DWord& w) {
    size_t i = 0;
    while (i < w.size() && w[i] == Letter::Gamma) ++i;
    return {static_cast<int>(i), DWord(w.begin() + i, w.end())};
}
}  // namespace detail

/// Expands sum_j gamma_j D_j s (x) D_{M-j} t with an explicit gamma vector.
inline PairingFormula pairing_formula_with(long M, const Poly& q, const Poly& qp,
                                           const std::vector<Poly>& gam) {
    PairingFormula out;
    out.M = M;
    out.q = q;
    out.qp = qp;
    for (long j = 0; j <= M; ++j) {
        PairingTerm t;
        t.j = j;
        t.gamma = gam[j];
        t.ds = ricci_expand(static_cast<int>(j), q);
        t.dt = ricci_expand(static_cast<int>(M - j), qp);
        out.terms.push_back(std::move(t));
    }
    // collect
    std::map<std::tuple<int, DWord, DWord>, Poly> acc;
    for (const auto& t : out.terms)
        for (const auto& us : t.ds)
            for (const auto& vt : t.dt) {
                auto [g1, ws] = detail::strip_gamma_prefix(us.word);
                auto [g2, wt] = detail::strip_gamma_prefix(vt.word);
                acc[{g1 + g2, ws, wt}] += t.gamma * us.constant * vt.constant;
            }
    for (auto& [key, coeff] : acc) {
        if (coeff.is_zero()) continue;
        auto [g, ws, wt] = key;
        out.collected.push_back({g, ws, wt, coeff});
    }
    std::sort(out.collected.begin(), out.collected.end(), [](const CollectedTerm& a, const CollectedTerm& b) {
        if (a.gamma_power != b.gamma_power) return a.gamma_power < b.gamma_power;
        int ga = word_grade(a.ws), gb = word_grade(b.ws);
        if (ga != gb) return ga > gb;
        if (a.ws != b.ws) return a.ws < b.ws;
        return a.wt < b.wt;
    });
    return out;
}

/// The boxed formula of the order-M pairing: gamma from the linear system,
/// each slot expanded through the Ricci-corrected derivatives.
inline PairingFormula pairing_formula(long M, const Poly& q, const Poly& qp) {
    GammaVector gv = gamma_coefficients(M, q, qp);
    if (gv.solution_dim != 1)
        throw Error("DegenerateWeights",
                    "two-dimensional solution space; expand each basis vector separately");
    PairingFormula out = pairing_formula_with(M, q, qp, gv.coefficients);
    out.gamma = std::move(gv);
    return out;
}

/// Degenerate case: one formula per nullspace basis vector.
inline std::vector<PairingFormula> pairing_formula_basis(long M, const Rat& q, const Rat& qp) {
    GammaVector gv = gamma_coefficients(M, Poly(q), Poly(qp));
    std::vector<PairingFormula> out;
    for (const auto& vec : gv.nullspace_basis) {
        std::vector<Poly> gam;
        for (const auto& c : vec) gam.push_back(Poly(c));
        PairingFormula f = pairing_formula_with(M, Poly(q), Poly(qp), gam);
        f.gamma = gv;
        out.push_back(std::move(f));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Factored coefficient rendering (for reports)
// ---------------------------------------------------------------------------

/// Renders a polynomial as content * (linear factors in the given variables)
/// * residual, e.g. "qq'(q+q'-2)".  Purely cosmetic; falls back to the
/// expanded form when nothing divides.
inline std::string factored_str(const Poly& p, const std::vector<std::string>& vars, long root_span) {
    if (p.is_zero()) return "0";
    Rat content = p.content();
    Poly rest = p * Poly(Rat(1) / content);
    std::string out;
    if (content == -1) out += "-";
    else if (content != 1) out += rat_str(content);
    std::string factors;
    for (const auto& v : vars) {
        for (long r = -root_span; r <= root_span; ++r) {
            while (true) {
                auto d = rest.divide_linear(v, Rat(r));
                if (!d.has_value()) break;
                rest = *d;
                if (r == 0) factors += v;
                else {
                    std::string rs = (r > 0) ? "-" + std::to_string(r) : "+" + std::to_string(-r);
                    factors += "(" + v + rs + ")";
                }
            }
        }
    }
    out += factors;
    if (!rest.is_constant() || rest.constant_value() != 1 || factors.empty()) {
        std::string inner;
        for (char ch : rest.str())
            if (ch != ' ' && ch != '*') inner += ch;
        if (!rest.is_constant() && !factors.empty()) out += "(" + inner + ")";
        else out += inner;
    }
    return out;
}

}  // namespace bipair
