#include "backstable/gkm.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace backstable {

Poly simple_root(int i) { return Poly::a(i) - Poly::a(i + 1); }

void NilHeckeElement::add_term(const Perm& w, const Poly& c) {
    auto it = terms.find(w);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

void NilHeckeTensor::add_term(const Perm& u, const Perm& v, const Poly& c) {
    auto key = std::make_pair(u, v);
    auto it = terms.find(key);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

static Word least_word(const Perm& w) {
    auto words = reduced_words(w);
    return *std::min_element(words.begin(), words.end());
}

static Word descent_word(const Perm& w) {
    Word out;
    Perm cur = w;
    while (!cur.is_identity()) {
        for (int i = cur.lo(); i < cur.hi(); ++i)
            if (has_left_descent(cur, i)) {
                out.push_back(i);
                cur = Perm::s(i) * cur;
                break;
            }
    }
    return out;
}

static void billey_rec(const Word& word, const std::vector<Poly>& beta, size_t pos,
                       const Perm& cur, long remaining, const Perm& v, const Poly& prod,
                       Poly& acc) {
    if (remaining == 0) {
        if (cur == v) acc += prod;
        return;
    }
    if (static_cast<long>(word.size() - pos) < remaining) return;
    if (pos == word.size()) return;
    billey_rec(word, beta, pos + 1, cur, remaining, v, prod, acc);
    Perm next = cur * Perm::s(word[pos]);
    if (length(next) == length(cur) + 1)
        billey_rec(word, beta, pos + 1, next, remaining - 1, v, prod * beta[pos], acc);
}

Poly billey_localization(const Perm& v, const Perm& w) {
    if (v.is_identity()) return Poly(Rat(1));
    Word word = least_word(w);
    std::vector<Poly> beta;
    Perm prefix;
    for (int i : word) {
        beta.push_back(act_permutation(Alpha::A, prefix, Poly::a(i + 1) - Poly::a(i)));
        prefix = prefix * Perm::s(i);
    }
    Poly acc;
    billey_rec(word, beta, 0, Perm(), length(v), v, Poly(Rat(1)), acc);
    return acc;
}

Poly localization_recurrence(const Perm& v, const Perm& w) {
    static std::map<std::pair<Perm, Perm>, Poly> memo;
    static std::mutex mtx;
    if (w.is_identity()) return v.is_identity() ? Poly(Rat(1)) : Poly();
    if (length(v) > length(w)) return Poly();
    auto key = std::make_pair(v, w);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    int i = w.lo();
    for (int j = w.lo(); j < w.hi(); ++j)
        if (has_right_descent(w, j)) i = j;
    Perm wsi = w * Perm::s(i);
    Poly out = localization_recurrence(v, wsi);
    Perm vsi = v * Perm::s(i);
    if (length(vsi) < length(v))
        out += (Poly::a(w(i)) - Poly::a(w(i + 1))) * localization_recurrence(vsi, wsi);
    {
        std::lock_guard<std::mutex> lock(mtx);
        memo.emplace(key, out);
    }
    return out;
}

Poly localization_recurrence_left(const Perm& v, const Perm& w) {
    if (w.is_identity()) return v.is_identity() ? Poly(Rat(1)) : Poly();
    if (length(v) > length(w)) return Poly();
    int i = w.lo();
    for (int j = w.lo(); j < w.hi(); ++j)
        if (has_left_descent(w, j)) i = j;
    Perm siw = Perm::s(i) * w;
    Poly out = act_permutation(Alpha::A, Perm::s(i), localization_recurrence_left(v, siw));
    Perm siv = Perm::s(i) * v;
    if (length(siv) < length(v))
        out -= simple_root(i) *
               act_permutation(Alpha::A, Perm::s(i), localization_recurrence_left(siv, siw));
    return out;
}

Poly localize_schubert(const Perm& v, const Perm& w) {
    int p = std::min({1, v.lo(), w.lo()});
    int q = std::max({1, v.hi(), w.hi()});
    Poly f = backstable_window(v, p, q, true);
    return substitute(f, [&](const VarRef& r) -> std::optional<Poly> {
        if (r.alpha == Alpha::X) return Poly::a(w(r.idx));
        return Poly::var(r.alpha, r.idx);
    });
}

LocalizedClass schubert_class(const Perm& v, const std::vector<Perm>& support) {
    LocalizedClass out;
    out.label = v;
    for (auto& w : support) out.entries[w] = billey_localization(v, w);
    return out;
}

bool gkm_check(const LocalizedClass& c, int i, int j, const Perm& w) {
    Perm other = Perm::transposition(i, j) * w;
    Poly diff = c.entries.at(other) - c.entries.at(w);
    if (diff.is_zero()) return true;
    try {
        exact_divide(diff, Poly::a(i) - Poly::a(j));
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

NilHeckeElement nilhecke_one() { return nilhecke_a(Perm()); }

NilHeckeElement nilhecke_a(const Perm& w, const Poly& c) {
    NilHeckeElement out;
    out.add_term(w, c);
    return out;
}

// left multiplication by A_i, using A_i f = A_i(f) + s_i(f) A_i
static NilHeckeElement apply_a(int i, const NilHeckeElement& x) {
    NilHeckeElement out;
    for (auto& [v, c] : x.terms) {
        out.add_term(v, divided_difference(Alpha::A, i, c));
        Perm siv = Perm::s(i) * v;
        if (length(siv) == length(v) + 1)
            out.add_term(siv, act_permutation(Alpha::A, Perm::s(i), c));
    }
    return out;
}

NilHeckeElement nilhecke_mul(const NilHeckeElement& x, const NilHeckeElement& y) {
    NilHeckeElement out;
    for (auto& [u, c] : x.terms) {
        NilHeckeElement cur = y;
        Word word = descent_word(u);
        for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply_a(*it, cur);
        for (auto& [v, d] : cur.terms) out.add_term(v, c * d);
    }
    return out;
}

static NilHeckeElement truncate_length(const NilHeckeElement& x, long cap) {
    if (cap < 0) return x;
    NilHeckeElement out;
    for (auto& [v, c] : x.terms)
        if (length(v) <= cap) out.add_term(v, c);
    return out;
}

NilHeckeElement expand_group_element(const Perm& w, long cap) {
    NilHeckeElement out = nilhecke_one();
    for (int i : descent_word(w)) {
        NilHeckeElement factor = nilhecke_one();
        factor.add_term(Perm::s(i), -simple_root(i));
        out = truncate_length(nilhecke_mul(out, factor), cap);
    }
    return out;
}

// flatten a pure tensor; scalars commute across the tensor sign, so the
// coefficients multiply without pushing past the basis elements
static void flatten_into(const NilHeckeElement& left, const NilHeckeElement& right,
                         NilHeckeTensor& out) {
    for (auto& [u, f] : left.terms)
        for (auto& [v, g] : right.terms) out.add_term(u, v, f * g);
}

NilHeckeTensor nilhecke_coproduct(const NilHeckeElement& x) {
    NilHeckeTensor out;
    for (auto& [w, c] : x.terms) {
        // product of (A_i x 1 + s_i x A_i) over a reduced word of w
        std::vector<std::pair<NilHeckeElement, NilHeckeElement>> cur{
            {nilhecke_a(Perm(), c), nilhecke_one()}};
        for (int i : descent_word(w)) {
            std::vector<std::pair<NilHeckeElement, NilHeckeElement>> next;
            NilHeckeElement ai = nilhecke_a(Perm::s(i));
            NilHeckeElement si = nilhecke_one();
            si.add_term(Perm::s(i), -simple_root(i));
            for (auto& [l, r] : cur) {
                next.emplace_back(nilhecke_mul(l, ai), r);
                next.emplace_back(nilhecke_mul(l, si), nilhecke_mul(r, ai));
            }
            cur = std::move(next);
        }
        for (auto& [l, r] : cur) flatten_into(l, r, out);
    }
    return out;
}

static Rat eval_poly(const Poly& f, const std::map<int, Rat>& avals) {
    Poly num = substitute(f, [&](const VarRef& r) -> std::optional<Poly> {
        if (r.alpha != Alpha::A) throw std::invalid_argument("expected an a variable");
        return Poly(avals.at(r.idx));
    });
    return num.constant_term();
}

// values of A_{i_1} ... A_{i_l} in the group basis at the point p; the
// coefficients of the tail transform under s_i, which moves the point
static std::map<Perm, Rat> group_rec(const Word& word, size_t pos,
                                     const std::map<int, Rat>& p) {
    if (pos == word.size()) return {{Perm(), Rat(1)}};
    int i = word[pos];
    Rat alpha = p.at(i) - p.at(i + 1);
    std::map<int, Rat> swapped = p;
    std::swap(swapped.at(i), swapped.at(i + 1));
    std::map<Perm, Rat> out;
    for (auto& [v, d] : group_rec(word, pos + 1, p)) out[v] += d / alpha;
    for (auto& [v, d] : group_rec(word, pos + 1, swapped))
        out[Perm::s(i) * v] -= d / alpha;
    return out;
}

std::map<Perm, Rat> nilhecke_group_expansion(const NilHeckeElement& x,
                                             const std::map<int, Rat>& avals) {
    std::map<Perm, Rat> out;
    for (auto& [w, c] : x.terms) {
        Rat cv = eval_poly(c, avals);
        for (auto& [v, d] : group_rec(descent_word(w), 0, avals)) out[v] += cv * d;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Rat nilhecke_pairing(const LocalizedClass& psi, const NilHeckeElement& x,
                     const std::map<int, Rat>& avals) {
    Rat out(0);
    for (auto& [w, d] : nilhecke_group_expansion(x, avals))
        out += d * eval_poly(psi.entries.at(w), avals);
    return out;
}

}  // namespace backstable
