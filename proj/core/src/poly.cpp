#include "backstable/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace backstable {

int Monomial::degree() const {
    int d = 0;
    for (auto& [v, k] : e) d += k;
    return d;
}

Monomial mono_mul(const Monomial& m1, const Monomial& m2) {
    Monomial out;
    auto i = m1.e.begin(), j = m2.e.begin();
    while (i != m1.e.end() || j != m2.e.end()) {
        if (j == m2.e.end() || (i != m1.e.end() && i->first < j->first))
            out.e.push_back(*i++);
        else if (i == m1.e.end() || j->first < i->first)
            out.e.push_back(*j++);
        else {
            out.e.push_back({i->first, i->second + j->second});
            ++i, ++j;
        }
    }
    return out;
}

Poly::Poly(Rat c) {
    if (c != 0) terms_[Monomial{}] = std::move(c);
}

Poly Poly::var(Alpha alpha, int idx, int exp) {
    Poly f;
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp == 0) return Poly(Rat(1));
    f.terms_[Monomial{{{VarRef{alpha, idx}, exp}}}] = 1;
    return f;
}

int Poly::degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rat Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::set<VarRef> Poly::vars() const {
    std::set<VarRef> out;
    for (auto& [m, c] : terms_)
        for (auto& [v, k] : m.e) out.insert(v);
    return out;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& f, const Poly& g) {
    Poly out;
    for (auto& [m1, c1] : f.terms_)
        for (auto& [m2, c2] : g.terms_) out.add_term(mono_mul(m1, m2), c1 * c2);
    return out;
}

Poly operator*(const Rat& c, const Poly& f) {
    Poly out;
    if (c == 0) return out;
    for (auto& [m, k] : f.terms_) out.terms_[m] = c * k;
    return out;
}

Poly Poly::operator-() const { return Rat(-1) * *this; }

Poly Poly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power");
    Poly out{Rat(1)};
    for (int i = 0; i < n; ++i) out = out * *this;
    return out;
}

Poly act_permutation(Alpha alpha, const Perm& w, const Poly& f) {
    Poly out;
    for (auto& [m, c] : f.terms()) {
        Monomial img;
        for (auto& [v, k] : m.e)
            img.e.push_back({v.alpha == alpha && v.idx != kDeltaIndex
                                 ? VarRef{v.alpha, w(v.idx)}
                                 : v,
                             k});
        std::sort(img.e.begin(), img.e.end());
        out.add_term(img, c);
    }
    return out;
}

Poly divided_difference(Alpha alpha, int i, const Poly& f) {
    // termwise: rest * (u^p v^q - u^q v^p) / (u - v), u = var i, v = var i+1
    VarRef u{alpha, i}, v{alpha, i + 1};
    Poly out;
    for (auto& [m, c] : f.terms()) {
        int p = 0, q = 0;
        Monomial rest;
        for (auto& [vr, k] : m.e) {
            if (vr == u)
                p = k;
            else if (vr == v)
                q = k;
            else
                rest.e.push_back({vr, k});
        }
        if (p == q) continue;
        int sgn = p > q ? 1 : -1;
        int a = std::min(p, q), b = std::max(p, q);
        // sgn * u^a v^a * sum_{t=0}^{b-a-1} u^t v^{b-a-1-t}
        for (int t = 0; t < b - a; ++t) {
            Monomial term = rest;
            int eu = a + t, ev = a + (b - a - 1 - t);
            if (eu) term.e.push_back({u, eu});
            if (ev) term.e.push_back({v, ev});
            std::sort(term.e.begin(), term.e.end());
            out.add_term(term, sgn > 0 ? c : -c);
        }
    }
    return out;
}

Poly shift_vars(const std::set<Alpha>& alphabets, int n, const Poly& f) {
    Poly out;
    for (auto& [m, c] : f.terms()) {
        Monomial img;
        for (auto& [v, k] : m.e)
            img.e.push_back({alphabets.count(v.alpha) && v.idx != kDeltaIndex
                                 ? VarRef{v.alpha, v.idx + n}
                                 : v,
                             k});
        std::sort(img.e.begin(), img.e.end());
        out.add_term(img, c);
    }
    return out;
}

Poly omega_vars(const Poly& f) {
    Poly out;
    for (auto& [m, c] : f.terms()) {
        Monomial img;
        int sgn = 1;
        for (auto& [v, k] : m.e) {
            if ((v.alpha == Alpha::X || v.alpha == Alpha::A) && v.idx != kDeltaIndex) {
                img.e.push_back({VarRef{v.alpha, 1 - v.idx}, k});
                if (k % 2) sgn = -sgn;
            } else {
                img.e.push_back({v, k});
            }
        }
        std::sort(img.e.begin(), img.e.end());
        out.add_term(img, sgn > 0 ? c : -c);
    }
    return out;
}

Poly substitute(const Poly& f,
                const std::function<std::optional<Poly>(const VarRef&)>& assign) {
    Poly out;
    for (auto& [m, c] : f.terms()) {
        Poly term{c};
        for (auto& [v, k] : m.e) {
            auto img = assign(v);
            if (!img) throw std::invalid_argument("substitute: unassigned variable");
            term = term * img->pow(k);
        }
        out += term;
    }
    return out;
}

Poly rename_alphabet(const Poly& f, Alpha from, Alpha to) {
    Poly out;
    for (auto& [m, c] : f.terms()) {
        // exponents can collide when both alphabets share an index
        std::map<VarRef, int> exps;
        for (auto& [v, k] : m.e) exps[v.alpha == from ? VarRef{to, v.idx} : v] += k;
        Monomial img;
        for (auto& [v, k] : exps) img.e.push_back({v, k});
        out.add_term(img, c);
    }
    return out;
}

Poly eta_delta(const Poly& f) {
    return substitute(f, [](const VarRef& v) -> std::optional<Poly> {
        if (v.alpha != Alpha::A) return std::nullopt;
        if (v.idx == kDeltaIndex) return Poly::delta();
        return v.idx > 0 ? Poly::delta() : Poly(Rat(0));
    });
}

// graded lex order for division (map order is not multiplication-compatible)
static bool mono_less_gradedlex(const Monomial& m1, const Monomial& m2) {
    if (m1.degree() != m2.degree()) return m1.degree() < m2.degree();
    auto i = m1.e.begin(), j = m2.e.begin();
    while (i != m1.e.end() && j != m2.e.end()) {
        if (i->first != j->first)
            // earlier variable with positive exponent is larger under lex
            return j->first < i->first;
        if (i->second != j->second) return i->second < j->second;
        ++i, ++j;
    }
    return i == m1.e.end() && j != m2.e.end() ? false : false;
}

static std::pair<Monomial, Rat> leading_term(const Poly& f) {
    auto best = f.terms().begin();
    for (auto it = std::next(f.terms().begin()); it != f.terms().end(); ++it)
        if (mono_less_gradedlex(best->first, it->first)) best = it;
    return {best->first, best->second};
}

// m1 / m2, or nullopt
static std::optional<Monomial> mono_div(const Monomial& m1, const Monomial& m2) {
    Monomial out;
    auto i = m1.e.begin();
    for (auto& [v, k] : m2.e) {
        while (i != m1.e.end() && i->first < v) out.e.push_back(*i++);
        if (i == m1.e.end() || i->first != v || i->second < k) return std::nullopt;
        if (i->second > k) out.e.push_back({v, i->second - k});
        ++i;
    }
    while (i != m1.e.end()) out.e.push_back(*i++);
    return out;
}

Poly exact_divide(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Poly rem = f, quot;
    auto [gm, gc] = leading_term(g);
    while (!rem.is_zero()) {
        auto [rm, rc] = leading_term(rem);
        auto q = mono_div(rm, gm);
        if (!q)
            throw std::invalid_argument("exact_divide: not divisible, remainder leading term " +
                                        to_string(Rat(rc)) + " * [monomial]");
        Poly t;
        t.add_term(*q, rc / gc);
        rem -= t * g;
        quot += t;
    }
    return quot;
}

std::string to_string(const Rat& c) {
    std::string s = c.str();
    return s;
}

static std::string var_name(const VarRef& v) {
    if (v.alpha == Alpha::A && v.idx == kDeltaIndex) return "d";
    static const char* names[] = {"x", "a", "b", "y"};
    return std::string(names[static_cast<int>(v.alpha)]) + "_" + std::to_string(v.idx);
}

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : f.terms()) {
        std::string t = to_string(c);
        if (!m.e.empty() && c == 1) t.clear();
        if (!m.e.empty() && c == -1) t = "-";
        for (auto& [v, k] : m.e) {
            if (!t.empty() && t != "-") t += "*";
            t += var_name(v);
            if (k > 1) t += "^" + std::to_string(k);
        }
        if (!first && t[0] != '-') out += "+";
        out += t;
        first = false;
    }
    return out;
}

}  // namespace backstable
