#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bipair/central.hpp"
#include "bipair/repthy.hpp"

namespace bipair {

// ---------------------------------------------------------------------------
// First-order classification
// ---------------------------------------------------------------------------

/// One tensor-slot entry of the obstruction data: a component tau of
/// g_1^i (x) V (dual bookkeeping) that contains the target, together with
/// its Casimir constant.
struct CSlot {
    int node = 0;             // crossed node i
    SymWeight target_weight;  // tau (V side) or sigma (W side)
    long mult_in_pair = 0;    // multiplicity of E_mu inside V_tau (x) W resp. V (x) W_sigma
    Poly c;                   // c_{lambda tau} resp. c_{nu sigma} (Killing form)
};

struct DegeneracyWitness {
    std::string side;       // "V" or "W"
    SymWeight target;       // the tau / sigma carrying c = 0
    std::string condition;  // "" when identically zero, else e.g. "w = 0"
    std::string op;         // description of the invariant linear operator
};

enum class FirstOrderVerdict { x_parameter_family, degenerate };

struct FirstOrderReport {
    SymWeight lambda, nu, mu;
    long x = 0;  // copies of E_mu in g_1 (x) V (x) W
    std::vector<CSlot> v_side, w_side;
    FirstOrderVerdict verdict = FirstOrderVerdict::x_parameter_family;
    std::vector<DegeneracyWitness> witnesses;
    /// multiplicity-one case: coefficients proportional to (c_{nu sigma}, -c_{lambda tau})
    /// on the (nabla V, nabla W) slots
    std::vector<Poly> coefficients;
};

namespace detail {
inline std::string vanishing_condition(const Poly& c) {
    auto vars = c.vars();
    if (vars.size() == 1) {
        const std::string& v = *vars.begin();
        auto cs = c.coeffs_in(v);
        if (cs.size() == 2 && cs[1].is_constant()) {
            Rat root = -cs[0].constant_value() / cs[1].constant_value();
            return v + " = " + rat_str(root);
        }
    }
    return c.str() + " = 0";
}

inline void check_symbolic_shape(const RootSystem& rs, const ParabolicStructure& p, const SymWeight& w,
                                 const char* name) {
    for (int j : p.uncrossed()) {
        if (!is_nonneg_integer(rs.label(w.base, j)))
            throw Error("NotDominant", std::string(name) + " must be dominant over uncrossed nodes");
        for (const auto& [s, d] : w.dirs)
            if (rs.label(d, j) != 0)
                throw Error("ParseError", std::string(name) + ": symbols must sit over crossed nodes");
    }
}
}  // namespace detail

/// Classifies first-order invariant bilinear differential pairings
/// Gamma(V) x Gamma(W) -> Gamma(E_mu) for every component E_mu of
/// g_1 (x) V (x) W whose Levi labels match `target_levi` (one report per
/// matching full weight).  Pass an empty optional to classify all targets.
inline std::vector<FirstOrderReport> first_order_classify(
    const RootSystem& rs, const ParabolicStructure& p, const SymWeight& lambda, const SymWeight& nu,
    const std::optional<Vec>& target_levi, long long dim_cap = kDefaultDimCap) {
    detail::check_symbolic_shape(rs, p, lambda, "lambda");
    detail::check_symbolic_shape(rs, p, nu, "nu");

    auto comps = g1_components(rs, p);
    auto J = p.uncrossed();

    struct Candidate {
        int node;
        Weight slot_base;  // tau or sigma numeric part
        long slot_mult;    // multiplicity of the slot inside g_{-1}^i (x) module
        IrrepDecomposition pair;  // decomposition of V_slot (x) other
    };

    // V side: tau over each crossed node, then tau (x) W
    std::vector<Candidate> v_cands, w_cands;
    for (const auto& comp : comps) {
        for (const auto& tau : tensor_decompose(rs, p, lambda.base, comp.dual_highest, dim_cap)) {
            Candidate c;
            c.node = comp.node;
            c.slot_base = tau.highest;
            c.slot_mult = tau.mult;
            c.pair = tensor_decompose(rs, p, tau.highest, nu.base, dim_cap);
            v_cands.push_back(std::move(c));
        }
        for (const auto& sig : tensor_decompose(rs, p, nu.base, comp.dual_highest, dim_cap)) {
            Candidate c;
            c.node = comp.node;
            c.slot_base = sig.highest;
            c.slot_mult = sig.mult;
            c.pair = tensor_decompose(rs, p, sig.highest, lambda.base, dim_cap);
            w_cands.push_back(std::move(c));
        }
    }

    // all full target weights present on the V side (== W side)
    std::map<Vec, long> targets;
    for (const auto& c : v_cands)
        for (const auto& e : c.pair) targets[e.highest.coords] += c.slot_mult * e.mult;
    {
        std::map<Vec, long> check;
        for (const auto& c : w_cands)
            for (const auto& e : c.pair) check[e.highest.coords] += c.slot_mult * e.mult;
        if (check != targets) throw std::logic_error("first_order_classify: side counts disagree");
    }

    auto matches = [&](const Weight& mu) {
        if (!target_levi) return true;
        size_t t = 0;
        for (int j : J)
            if (rs.label(mu, j) != (*target_levi)[t++]) return false;
        return true;
    };

    std::vector<FirstOrderReport> out;
    for (const auto& [mu_coords, count] : targets) {
        Weight mu_base(rs.type(), WBasis::epsilon, mu_coords);
        if (!matches(mu_base)) continue;

        FirstOrderReport rep;
        rep.lambda = lambda;
        rep.nu = nu;
        rep.mu = SymWeight(mu_base);
        rep.mu.dirs = sym_add(rs, lambda, nu).dirs;
        rep.x = count;

        auto fill_side = [&](const std::vector<Candidate>& cands, const SymWeight& source,
                             std::vector<CSlot>& side) {
            for (const auto& c : cands) {
                long m = 0;
                for (const auto& e : c.pair)
                    if (e.highest.coords == mu_coords) m = c.slot_mult * e.mult;
                if (m == 0) continue;
                CSlot slot;
                slot.node = c.node;
                slot.target_weight = SymWeight(c.slot_base);
                slot.target_weight.dirs = source.dirs;
                slot.mult_in_pair = m;
                slot.c = pairing_constant_c(rs, source, slot.target_weight);
                side.push_back(std::move(slot));
            }
        };
        fill_side(v_cands, lambda, rep.v_side);
        fill_side(w_cands, nu, rep.w_side);

        bool v_clean = true, w_clean = true;
        auto scan = [&](const std::vector<CSlot>& side, const char* name, bool& clean) {
            for (const auto& s : side) {
                if (s.c.is_zero()) {
                    clean = false;
                    rep.witnesses.push_back({name, s.target_weight, "",
                                             std::string("first-order invariant linear differential operator "
                                                         "Gamma(") + name + ") -> Gamma(" + name + "_tau)"});
                } else if (!s.c.is_constant()) {
                    rep.witnesses.push_back({name, s.target_weight, detail::vanishing_condition(s.c),
                                             std::string("first-order invariant linear differential operator "
                                                         "Gamma(") + name + ") -> Gamma(" + name + "_tau)"});
                }
            }
        };
        scan(rep.v_side, "V", v_clean);
        scan(rep.w_side, "W", w_clean);
        rep.verdict = (v_clean || w_clean) ? FirstOrderVerdict::x_parameter_family
                                           : FirstOrderVerdict::degenerate;

        if (rep.x == 1 && rep.v_side.size() == 1 && rep.w_side.size() == 1) {
            // a = c_{nu sigma} on the nabla-V slot, b = -c_{lambda tau} on the nabla-W slot
            rep.coefficients = normalize_poly_vector({rep.w_side[0].c, -rep.v_side[0].c});
        }
        out.push_back(std::move(rep));
    }
    if (target_levi && out.empty())
        throw Error("TargetAbsent", "no component of g_1 (x) V (x) W matches the requested target");
    return out;
}

// ---------------------------------------------------------------------------
// Higher-order setup (extremal-root pairings)
// ---------------------------------------------------------------------------

struct SetupCheck {
    std::string name;
    std::string status;  // "pass" | "assumed" | "unchecked"
    std::string detail;
};

struct HigherOrderSetup {
    Poly q, qp;
    std::vector<SetupCheck> checks;
};

/// Verifies the preconditions of the order-M extremal-root construction and
/// returns q = -B(lambda+rho, alpha^vee) - 1 and q' = -B(nu+rho, beta^vee) - 1.
/// Violations of the hard preconditions throw (NotExtremal, OrbitMismatch,
/// DominanceFails); density twists and symbolic labels are recorded as
/// "assumed", and multiplicity checks beyond the dimension cap as "unchecked".
inline HigherOrderSetup higher_order_setup(const RootSystem& rs, const ParabolicStructure& p,
                                           const SymWeight& lambda, const SymWeight& nu,
                                           const Weight& alpha, const Weight& beta, long M,
                                           std::optional<SymWeight> mu_opt = std::nullopt,
                                           long long dim_cap = kDefaultDimCap) {
    HigherOrderSetup out;
    if (!is_extremal(rs, p, alpha)) throw Error("NotExtremal", "alpha is not extremal");
    if (!is_extremal(rs, p, beta)) throw Error("NotExtremal", "beta is not extremal");
    out.checks.push_back({"alpha extremal", "pass", ""});
    out.checks.push_back({"beta extremal", "pass", ""});
    if (!same_orbit(rs, alpha, beta)) throw Error("OrbitMismatch", "alpha and beta lie in different Weyl orbits");
    out.checks.push_back({"same orbit", "pass", ""});

    SymWeight lr = sym_add(rs, lambda, rs.rho());
    SymWeight nr = sym_add(rs, nu, rs.rho());
    Rat a2 = rs.norm2(alpha), b2 = rs.norm2(beta);
    auto coroot_poly = [&](const SymWeight& w, const Weight& root, const Rat& n2) {
        Poly num(rs.bilinear(w.base, root));
        for (const auto& [s, d] : w.dirs) num += Poly::var(s) * Poly(rs.bilinear(d, root));
        return num * Poly(Rat(2) / n2);
    };
    out.q = -coroot_poly(lr, alpha, a2) - Poly(1);
    out.qp = -coroot_poly(nr, beta, b2) - Poly(1);

    // p-dominance of lambda + j alpha and nu + j beta for j = 1..M
    auto dominance = [&](const SymWeight& w, const Weight& root, const char* name) {
        for (long j = 1; j <= M; ++j) {
            Weight base = rs.add(w.base, rs.scale(root, Rat(j)));
            for (int u : p.uncrossed())
                if (!is_nonneg_integer(rs.label(base, u)))
                    throw Error("DominanceFails",
                                std::string(name) + " + " + std::to_string(j) + " alpha is not p-dominant");
            bool assumed = !w.dirs.empty();
            for (int i : p.crossed)
                if (w.dirs.empty() && !is_integer(rs.label(base, i))) assumed = true;
            out.checks.push_back({std::string(name) + " + " + std::to_string(j) + " alpha p-dominant",
                                  assumed ? "assumed" : "pass",
                                  assumed ? "crossed labels taken as generic density weights" : ""});
        }
    };
    dominance(lambda, alpha, "lambda");
    dominance(nu, beta, "nu");

    // multiplicity-one ladder (PRV): lambda + j alpha inside the previous rung
    auto ladder = [&](const SymWeight& w, const Weight& root, const char* name) {
        Vec e = rs.simple_expansion(root);
        int node = 0;
        for (int i : p.crossed)
            if (e[i - 1] == -1) node = i;
        Weight dual_h = rs.negate(rs.simple_roots()[node - 1]);
        for (long j = 1; j <= M; ++j) {
            Weight prev = rs.add(w.base, rs.scale(root, Rat(j - 1)));
            Weight next = rs.add(w.base, rs.scale(root, Rat(j)));
            try {
                long m = 0;
                for (const auto& c : tensor_decompose(rs, p, prev, dual_h, dim_cap))
                    if (c.highest == next) m = c.mult;
                if (m != 1)
                    throw Error("DominanceFails", std::string(name) + " + " + std::to_string(j) +
                                                      " alpha has multiplicity " + std::to_string(m));
                out.checks.push_back(
                    {std::string(name) + " ladder step " + std::to_string(j) + " multiplicity one", "pass", ""});
            } catch (const Error& err) {
                if (err.code() == "DimensionCap") {
                    out.checks.push_back({std::string(name) + " ladder step " + std::to_string(j),
                                          "unchecked", "dimension cap"});
                } else {
                    throw;
                }
            }
        }
    };
    ladder(lambda, alpha, "lambda");
    ladder(nu, beta, "nu");

    // multiplicity one of the target in V_{lambda+j alpha} (x) W_{nu+(M-j) beta}
    SymWeight mu = mu_opt ? *mu_opt
                          : sym_add(rs, sym_add(rs, lambda, nu), rs.scale(alpha, Rat(M)));
    {
        SymWeight sum = sym_add(rs, lambda, nu);
        if (mu.dirs.size() != sum.dirs.size())
            throw Error("ParseError", "target symbols must match lambda + nu");
    }
    for (long j = 0; j <= M; ++j) {
        Weight vj = rs.add(lambda.base, rs.scale(alpha, Rat(j)));
        Weight wj = rs.add(nu.base, rs.scale(beta, Rat(M - j)));
        try {
            long m = 0;
            for (const auto& c : tensor_decompose(rs, p, vj, wj, dim_cap))
                if (c.highest == mu.base) m = c.mult;
            out.checks.push_back({"target multiplicity in slot j=" + std::to_string(j),
                                  m == 1 ? "pass" : "fail",
                                  m == 1 ? "" : "multiplicity " + std::to_string(m)});
        } catch (const Error& err) {
            if (err.code() == "DimensionCap")
                out.checks.push_back({"target multiplicity in slot j=" + std::to_string(j), "unchecked",
                                      "dimension cap"});
            else
                throw;
        }
    }
    return out;
}

}  // namespace bipair
