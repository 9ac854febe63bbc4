// Polynomials in z, w, zb (= conj z), wb (= conj w) over the Gaussian
// rationals, in canonical form: a graded-lex ordered term map with no zero
// coefficients. These represent complex polynomials on C^2 together with
// their conjugates, which is enough to restrict to the unit sphere S^3.
#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "crsphere/rational.hpp"

namespace crsphere {

enum class Var { Z = 0, W = 1, Zb = 2, Wb = 3 };

// Exponents of z^a w^b zb^c wb^d. Bidegree (p,q) = (a+b, c+d).
struct Monomial {
    int a = 0, b = 0, c = 0, d = 0;

    int total_degree() const { return a + b + c + d; }
    std::pair<int, int> bidegree() const { return {a + b, c + d}; }
    Monomial conj() const { return {c, d, a, b}; }

    int exponent(Var v) const {
        switch (v) {
            case Var::Z: return a;
            case Var::W: return b;
            case Var::Zb: return c;
            default: return d;
        }
    }

    Monomial with_exponent(Var v, int e) const {
        Monomial m = *this;
        switch (v) {
            case Var::Z: m.a = e; break;
            case Var::W: m.b = e; break;
            case Var::Zb: m.c = e; break;
            default: m.d = e; break;
        }
        return m;
    }

    friend Monomial operator*(const Monomial& x, const Monomial& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend bool operator==(const Monomial& x, const Monomial& y) = default;

    // graded lexicographic: total degree first, then (a,b,c,d)
    friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
        if (auto c0 = x.total_degree() <=> y.total_degree(); c0 != 0) return c0;
        if (auto c1 = x.a <=> y.a; c1 != 0) return c1;
        if (auto c2 = x.b <=> y.b; c2 != 0) return c2;
        if (auto c3 = x.c <=> y.c; c3 != 0) return c3;
        return x.d <=> y.d;
    }
};

class Polynomial {
  public:
    using TermMap = std::map<Monomial, GaussianRational>;

    Polynomial() = default;

    static Polynomial zero() { return {}; }

    static Polynomial constant(GaussianRational c) {
        Polynomial p;
        if (!c.is_zero()) p.terms_.emplace(Monomial{}, std::move(c));
        return p;
    }

    static Polynomial monomial(const Monomial& m, GaussianRational c = GaussianRational(1)) {
        Polynomial p;
        if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
        return p;
    }

    static Polynomial variable(Var v) {
        Monomial m;
        switch (v) {
            case Var::Z: m.a = 1; break;
            case Var::W: m.b = 1; break;
            case Var::Zb: m.c = 1; break;
            default: m.d = 1; break;
        }
        return monomial(m);
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    int degree() const {  // max total degree, -1 for the zero polynomial
        if (terms_.empty()) return -1;
        return terms_.rbegin()->first.total_degree();
    }

    GaussianRational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    void add_term(const Monomial& m, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
        Polynomial h = f;
        for (const auto& [m, c] : g.terms_) h.add_term(m, c);
        return h;
    }
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
        Polynomial h = f;
        for (const auto& [m, c] : g.terms_) h.add_term(m, -c);
        return h;
    }
    Polynomial operator-() const {
        Polynomial h;
        for (const auto& [m, c] : terms_) h.terms_.emplace(m, -c);
        return h;
    }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        Polynomial h;
        for (const auto& [mf, cf] : f.terms_)
            for (const auto& [mg, cg] : g.terms_) h.add_term(mf * mg, cf * cg);
        return h;
    }
    friend Polynomial operator*(const GaussianRational& c, const Polynomial& f) {
        Polynomial h;
        if (c.is_zero()) return h;
        for (const auto& [m, fc] : f.terms_) h.terms_.emplace(m, c * fc);
        return h;
    }
    Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
    Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }

    friend bool operator==(const Polynomial& f, const Polynomial& g) = default;

    Polynomial conj() const {
        Polynomial h;
        for (const auto& [m, c] : terms_) h.terms_.emplace(m.conj(), c.conj());
        return h;
    }

    // formal partial derivative
    Polynomial derive(Var v) const {
        Polynomial h;
        for (const auto& [m, c] : terms_) {
            const int e = m.exponent(v);
            if (e == 0) continue;
            h.add_term(m.with_exponent(v, e - 1), GaussianRational(Rational(e)) * c);
        }
        return h;
    }

    // Splits into homogeneous bidegree components, ordered by (p,q).
    std::vector<std::pair<std::pair<int, int>, Polynomial>> bidegree_split() const {
        std::map<std::pair<int, int>, Polynomial> parts;
        for (const auto& [m, c] : terms_) parts[m.bidegree()].add_term(m, c);
        return {parts.begin(), parts.end()};
    }

    // True if every term has bidegree (p,q).
    bool is_homogeneous(int p, int q) const {
        return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
            return t.first.bidegree() == std::pair<int, int>{p, q};
        });
    }

    std::string to_text() const;
    static Polynomial parse_text(const std::string& text);

  private:
    TermMap terms_;
};

// Text format: terms joined by " + " / " - ", each term
//   <coeff>*z^a*w^b*zb^c*wb^d
// with zero exponents omitted; coeff is "p/q", "r/si", or "(p/q+r/si)"
// (complex coefficients with both parts are always parenthesized). The zero
// polynomial prints as "0". Round-trips exactly.
inline std::string Polynomial::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        GaussianRational coeff = c;
        if (!first) {
            if (coeff.is_real() && coeff.re < 0) {
                os << " - ";
                coeff = -coeff;
            } else if (coeff.re == 0 && coeff.im < 0) {
                os << " - ";
                coeff = -coeff;
            } else {
                os << " + ";
            }
        }
        first = false;
        if (coeff.re != 0 && coeff.im != 0)
            os << "(" << to_string(coeff) << ")";
        else
            os << to_string(coeff);
        const char* names[4] = {"z", "w", "zb", "wb"};
        const int exps[4] = {m.a, m.b, m.c, m.d};
        for (int v = 0; v < 4; ++v)
            if (exps[v] > 0) os << "*" << names[v] << "^" << exps[v];
    }
    return os.str();
}

namespace detail {

inline GaussianRational parse_coefficient(const std::string& tok) {
    std::string s = tok;
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw std::invalid_argument("empty coefficient");
    if (s.back() == 'i') {
        s.pop_back();
        // split "re+im" / "re-im" at the sign separating the two rationals
        for (size_t pos = s.size(); pos-- > 1;) {
            if ((s[pos] == '+' || s[pos] == '-') && s[pos - 1] != '/' && s[pos - 1] != '+' &&
                s[pos - 1] != '-') {
                const std::string re = s.substr(0, pos);
                std::string im = s.substr(pos);
                if (im == "+") im = "1";
                else if (im == "-") im = "-1";
                return {parse_rational(re), parse_rational(im)};
            }
        }
        if (s.empty() || s == "+") return GaussianRational::i();
        if (s == "-") return -GaussianRational::i();
        return {Rational(0), parse_rational(s)};
    }
    return {parse_rational(s), Rational(0)};
}

}  // namespace detail

inline Polynomial Polynomial::parse_text(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty() || s == "0") return Polynomial::zero();

    Polynomial out;
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sign = -sign;
            ++pos;
        }
        // term extends to the next top-level '+' or '-'
        size_t end = pos;
        int depth = 0;
        for (; end < s.size(); ++end) {
            if (s[end] == '(') ++depth;
            else if (s[end] == ')') --depth;
            else if ((s[end] == '+' || s[end] == '-') && depth == 0)
                break;
        }
        const std::string term = s.substr(pos, end - pos);
        pos = end;
        if (term.empty()) throw std::invalid_argument("empty term in polynomial text");

        Monomial m;
        GaussianRational coeff(sign);
        size_t tp = 0;
        bool saw_coeff = false;
        while (tp < term.size()) {
            size_t star = term.find('*', tp);
            if (star == std::string::npos) star = term.size();
            const std::string factor = term.substr(tp, star - tp);
            tp = star + 1;
            if (factor.empty()) throw std::invalid_argument("empty factor in term: " + term);
            if (factor[0] == 'z' || factor[0] == 'w') {
                const size_t caret = factor.find('^');
                const std::string name = factor.substr(0, caret);
                int e = 1;
                if (caret != std::string::npos) e = std::stoi(factor.substr(caret + 1));
                if (e < 0) throw std::invalid_argument("negative exponent: " + factor);
                Var v;
                if (name == "z") v = Var::Z;
                else if (name == "w") v = Var::W;
                else if (name == "zb") v = Var::Zb;
                else if (name == "wb") v = Var::Wb;
                else throw std::invalid_argument("unknown variable: " + name);
                m = m.with_exponent(v, m.exponent(v) + e);
            } else {
                if (saw_coeff) throw std::invalid_argument("two coefficients in term: " + term);
                coeff = coeff * detail::parse_coefficient(factor);
                saw_coeff = true;
            }
        }
        out.add_term(m, coeff);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_text(); }

// Convenience spellings used throughout tests and tools.
inline Polynomial poly_z() { return Polynomial::variable(Var::Z); }
inline Polynomial poly_w() { return Polynomial::variable(Var::W); }
inline Polynomial poly_zb() { return Polynomial::variable(Var::Zb); }
inline Polynomial poly_wb() { return Polynomial::variable(Var::Wb); }
inline Polynomial poly_one() { return Polynomial::constant(GaussianRational(1)); }

// |z|^2 + |w|^2, the generator of the sphere ideal (equals 1 on S^3)
inline Polynomial sphere_radius_square() {
    Polynomial r;
    r.add_term(Monomial{1, 0, 1, 0}, GaussianRational(1));
    r.add_term(Monomial{0, 1, 0, 1}, GaussianRational(1));
    return r;
}

}  // namespace crsphere
