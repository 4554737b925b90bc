#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bipair/rational.hpp"

namespace bipair {

/// Sparse multivariate polynomial over Rat with named indeterminates
/// (q, q', n, v, w, ...). Symbol sets stay tiny, so simplicity beats speed.
class Poly {
public:
    // monomial: sorted (variable, exponent>0) pairs
    using Mono = std::vector<std::pair<std::string, int>>;

    Poly() = default;
    Poly(const Rat& c) { if (c != 0) terms_[{}] = c; }
    Poly(long c) : Poly(Rat(c)) {}
    Poly(int c) : Poly(Rat(c)) {}

    static Poly var(const std::string& name) {
        Poly p;
        p.terms_[{{name, 1}}] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw std::logic_error("Poly: not a constant: " + str());
        return terms_.begin()->second;
    }

    std::set<std::string> vars() const {
        std::set<std::string> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m) out.insert(v);
        return out;
    }

    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, total_deg(m));
        return d;
    }

    int degree_in(const std::string& v) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, exp_of(m, v));
        return d;
    }

    Poly operator-() const {
        Poly out(*this);
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
        return out;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b) { return a.terms_ < b.terms_; }

    Poly pow(int e) const {
        if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
        Poly out(1);
        for (int i = 0; i < e; ++i) out *= *this;
        return out;
    }

    /// Substitute some variables by rationals; unbound variables remain.
    Poly subst(const std::map<std::string, Rat>& bind) const {
        Poly out;
        for (const auto& [m, c] : terms_) {
            Rat coeff = c;
            Mono rest;
            for (const auto& [v, e] : m) {
                auto it = bind.find(v);
                if (it == bind.end()) { rest.emplace_back(v, e); continue; }
                Rat p(1);
                for (int i = 0; i < e; ++i) p *= it->second;
                coeff *= p;
            }
            out.add_term(rest, coeff);
        }
        return out;
    }

    /// Full evaluation; every variable must be bound.
    Rat eval(const std::map<std::string, Rat>& bind) const {
        Poly s = subst(bind);
        return s.constant_value();
    }

    /// Coefficient polynomials of this viewed as univariate in `v`.
    std::vector<Poly> coeffs_in(const std::string& v) const {
        std::vector<Poly> out(degree_in(v) + 1);
        for (const auto& [m, c] : terms_) {
            int e = exp_of(m, v);
            Mono rest;
            for (const auto& [w, f] : m)
                if (w != v) rest.emplace_back(w, f);
            out[e].add_term(rest, c);
        }
        return out;
    }

    /// Exact division by (v - root); returns nullopt if the remainder is nonzero.
    std::optional<Poly> divide_linear(const std::string& v, const Rat& root) const {
        auto cs = coeffs_in(v);
        if (cs.size() < 2) return std::nullopt;
        // synthetic division from the top coefficient down
        std::vector<Poly> q(cs.size() - 1);
        Poly carry = cs.back();
        for (int i = static_cast<int>(cs.size()) - 2; i >= 0; --i) {
            q[i] = carry;
            carry = cs[i] + carry * Poly(root);
        }
        if (!carry.is_zero()) return std::nullopt;
        Poly out;
        for (size_t e = 0; e < q.size(); ++e) out += q[e] * Poly::var(v).pow(static_cast<int>(e));
        return out;
    }

    /// gcd of all coefficients with the sign of the leading term; 0 for the zero poly.
    Rat content() const {
        if (terms_.empty()) return Rat(0);
        Int num(0), den(1);
        for (const auto& [m, c] : terms_) {
            num = boost::multiprecision::gcd(num, numerator(c));
            den = boost::multiprecision::lcm(den, denominator(c));
        }
        Rat g(num, den);
        if (leading_coeff() < 0) g = -g;
        return g;
    }

    /// Coefficient of the graded-lex-leading monomial.
    Rat leading_coeff() const {
        if (terms_.empty()) return Rat(0);
        const auto* best = &*terms_.begin();
        for (const auto& t : terms_)
            if (mono_before(t.first, best->first)) best = &t;
        return best->second;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<const std::pair<const Mono, Rat>*> ts;
        for (const auto& t : terms_) ts.push_back(&t);
        std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) { return mono_before(a->first, b->first); });
        std::string out;
        bool first = true;
        for (auto* t : ts) {
            Rat c = t->second;
            std::string sign = (c < 0) ? "-" : "+";
            if (first) { out += (c < 0 ? "-" : ""); first = false; }
            else out += " " + sign + " ";
            Rat a = abs(c);
            std::string ms = mono_str(t->first);
            if (ms.empty()) out += rat_str(a);
            else out += (a == 1 ? ms : rat_str(a) + "*" + ms);
        }
        return out;
    }

    const std::map<Mono, Rat>& terms() const { return terms_; }

private:
    std::map<Mono, Rat> terms_;

    void add_term(const Mono& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) terms_.emplace(m, c);
        else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static int total_deg(const Mono& m) {
        int d = 0;
        for (const auto& [v, e] : m) d += e;
        return d;
    }

    static int exp_of(const Mono& m, const std::string& v) {
        for (const auto& [w, e] : m)
            if (w == v) return e;
        return 0;
    }

    static Mono mono_mul(const Mono& a, const Mono& b) {
        Mono out = a;
        for (const auto& [v, e] : b) {
            bool found = false;
            for (auto& [w, f] : out)
                if (w == v) { f += e; found = true; break; }
            if (!found) out.emplace_back(v, e);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // graded lex, higher degree first; ties broken by higher power of the
    // alphabetically earliest variable
    static bool mono_before(const Mono& a, const Mono& b) {
        if (total_deg(a) != total_deg(b)) return total_deg(a) > total_deg(b);
        for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
            if (a[i].first != b[i].first) return a[i].first < b[i].first;
            if (a[i].second != b[i].second) return a[i].second > b[i].second;
        }
        return a.size() > b.size();
    }

    static std::string mono_str(const Mono& m) {
        std::string out;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i) out += "*";
            out += m[i].first;
            if (m[i].second > 1) out += "^" + std::to_string(m[i].second);
        }
        return out;
    }
};

/// True iff b == c*a for a single rational c (both zero also counts).
inline bool proportional(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

/// Divide the vector by its joint content so entries are coprime integer
/// polynomials and the first nonzero entry has positive leading coefficient.
inline std::vector<Poly> normalize_poly_vector(std::vector<Poly> v) {
    Rat g(0);
    Int num(0), den(1);
    for (const auto& p : v)
        for (const auto& [m, c] : p.terms()) {
            num = boost::multiprecision::gcd(num, numerator(c));
            den = boost::multiprecision::lcm(den, denominator(c));
        }
    if (num == 0) return v;
    g = Rat(num, den);
    for (const auto& p : v) {
        if (p.is_zero()) continue;
        if (p.leading_coeff() < 0) g = -g;
        break;
    }
    for (auto& p : v) p *= Poly(Rat(1) / g);
    return v;
}

/// Linear polynomial parser for CLI labels: "w", "1+v", "-3", "2*w-1", "5/2".
inline Poly poly_parse_linear(const std::string& input) {
    std::string s;
    for (char ch : input)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty label");
    Poly out;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= s.size()) throw std::invalid_argument("dangling sign in '" + input + "'");
        std::string numtok;
        while (i < s.size() && (isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) numtok += s[i++];
        bool star = (i < s.size() && s[i] == '*');
        if (star) ++i;
        std::string vartok;
        if (i < s.size() && (isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
            while (i < s.size() && (isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\'')) vartok += s[i++];
        } else if (star) {
            throw std::invalid_argument("expected variable after '*' in '" + input + "'");
        }
        if (numtok.empty() && vartok.empty())
            throw std::invalid_argument("bad token in label '" + input + "'");
        Rat coeff = numtok.empty() ? Rat(1) : rat_parse(numtok);
        if (sign < 0) coeff = -coeff;
        Poly term = vartok.empty() ? Poly(coeff) : Poly(coeff) * Poly::var(vartok);
        out += term;
    }
    return out;
}

}  // namespace bipair
