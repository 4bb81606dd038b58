#include "backstable/schubert.hpp"

#include <algorithm>
#include <climits>
#include <mutex>
#include <stdexcept>

namespace backstable {

void BackStableRep::add_term(const Partition& la, const Perm& v, const Rat& c) {
    auto key = std::make_pair(la, v);
    Rat& slot = terms[key];
    slot += c;
    if (slot == 0) terms.erase(key);
}

void DoubleBackStableRep::add_term(const Partition& la, const Perm& v, const Poly& c) {
    auto key = std::make_pair(la, v);
    Poly& slot = terms[key];
    slot += c;
    if (slot.is_zero()) terms.erase(key);
}

static bool is_staircase_top(const Perm& w, int n) {
    for (int i = 1; i <= n; ++i)
        if (w(i) != n + 1 - i) return false;
    return true;
}

Poly schubert_single(const Perm& w) {
    if (!in_s_plus(w)) throw std::invalid_argument("schubert_single: w must fix all i <= 0");
    static std::map<Perm, Poly> memo;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
    }
    Poly out;
    if (w.is_identity()) {
        out = Poly(Rat(1));
    } else {
        int n = w.hi();
        long colen = static_cast<long>(n) * (n - 1) / 2 - length(w);
        if (is_staircase_top(w, n)) {
            out = Poly(Rat(1));
            for (int i = 1; i < n; ++i) out = out * Poly::var(Alpha::X, i, n - i);
        } else if (n <= 7 || colen <= 4) {
            // transition toward the staircase top stays cheap here
            int i = n - 1;
            while (w(i) > w(i + 1)) --i;  // largest ascent below n
            out = divided_difference(Alpha::X, i, schubert_single(w * Perm::s(i)));
        } else {
            // short permutation deep inside a large S_n: monomial enumeration wins
            out = schubert_bjs(w);
        }
    }
    std::lock_guard<std::mutex> lk(mtx);
    memo.emplace(w, out);
    return out;
}

Poly schubert_bjs(const Perm& w) {
    if (!in_s_plus(w)) throw std::invalid_argument("schubert_bjs: w must fix all i <= 0");
    Poly out;
    if (w.is_identity()) return Poly(Rat(1));
    for (auto& word : reduced_words(w)) {
        int m = static_cast<int>(word.size());
        Monomial mono;
        std::function<void(int, int)> rec = [&](int pos, int minb) {
            if (pos == m) {
                out.add_term(mono, Rat(1));
                return;
            }
            for (int b = minb; b <= word[pos]; ++b) {
                Monomial saved = mono;
                mono = mono_mul(mono, Monomial{{{VarRef{Alpha::X, b}, 1}}});
                rec(pos + 1, pos + 1 < m && word[pos] < word[pos + 1] ? b + 1 : b);
                mono = saved;
            }
        };
        rec(0, 1);
    }
    return out;
}

Poly schubert_double(const Perm& w) {
    if (!in_s_plus(w)) throw std::invalid_argument("schubert_double: w must fix all i <= 0");
    static std::map<Perm, Poly> memo;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
    }
    Poly out;
    if (w.is_identity()) {
        out = Poly(Rat(1));
    } else {
        int n = w.hi();
        long colen = static_cast<long>(n) * (n - 1) / 2 - length(w);
        if (is_staircase_top(w, n)) {
            out = Poly(Rat(1));
            for (int i = 1; i < n; ++i)
                for (int j = 1; i + j <= n; ++j) out = out * (Poly::x(i) - Poly::a(j));
        } else if (n <= 6 || colen <= 2) {
            int i = n - 1;
            while (w(i) > w(i + 1)) --i;
            out = divided_difference(Alpha::X, i, schubert_double(w * Perm::s(i)));
        } else {
            out = double_via_single(w);
        }
    }
    std::lock_guard<std::mutex> lk(mtx);
    memo.emplace(w, out);
    return out;
}

Poly double_via_single(const Perm& w) {
    Poly out;
    for (auto& t : length_additive_factorizations(w, 2)) {
        Poly p = rename_alphabet(schubert_single(t[0].inverse()), Alpha::X, Alpha::A) *
                 schubert_single(t[1]);
        out += length(t[0]) % 2 ? -p : p;
    }
    return out;
}

Poly schubert_negative(const Perm& w, bool doubled) {
    if (!in_s_minus(w)) throw std::invalid_argument("schubert_negative: w must fix all i > 0");
    return omega_vars(doubled ? schubert_double(omega(w)) : schubert_single(omega(w)));
}

Poly schubert_nonzero(const Perm& w, bool doubled) {
    if (!in_s_nonzero(w)) throw std::invalid_argument("schubert_nonzero: bad subgroup");
    auto [u, v] = split_nonzero(w);
    return schubert_negative(u, doubled) * (doubled ? schubert_double(v) : schubert_single(v));
}

Poly backstable_window(const Perm& w, int p, int q, bool doubled) {
    if (!w.is_identity() && (w.lo() < p || w.hi() > q))
        throw std::invalid_argument("backstable_window: support escapes the window");
    Perm wp = shift(w, 1 - p);
    Poly f = doubled ? schubert_double(wp) : schubert_single(wp);
    std::set<Alpha> al{Alpha::X};
    if (doubled) al.insert(Alpha::A);
    return shift_vars(al, p - 1, f);
}

SymFunc stanley(const Perm& w) {
    static std::map<Perm, SymFunc> memo;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
    }
    int m = static_cast<int>(length(w));
    SymFunc out;
    if (m == 0) {
        out = SymFunc::one();
    } else {
        Poly f;
        for (auto& word : reduced_words(w)) {
            Monomial mono;
            std::function<void(int, int)> rec = [&](int pos, int minb) {
                if (pos == m) {
                    f.add_term(mono, Rat(1));
                    return;
                }
                for (int b = minb; b <= 0; ++b) {
                    Monomial saved = mono;
                    mono = mono_mul(mono, Monomial{{{VarRef{Alpha::X, b}, 1}}});
                    rec(pos + 1, pos + 1 < m && word[pos] < word[pos + 1] ? b + 1 : b);
                    mono = saved;
                }
            };
            rec(0, 1 - m);
        }
        out = schur_expand_finite(f, m);
    }
    std::lock_guard<std::mutex> lk(mtx);
    memo.emplace(w, out);
    return out;
}

BackStableRep backstable_canonical(const Perm& w) {
    BackStableRep rep;
    std::vector<PermPredicate> cons{{}, [](const Perm& v) { return in_s_nonzero(v); }};
    for (auto& t : length_additive_factorizations(w, 2, cons)) {
        SymFunc fu = stanley(t[0]);
        for (auto& [la, c] : fu.coeffs()) rep.add_term(la, t[1], c.constant_term());
    }
    return rep;
}

Poly rep_window(const BackStableRep& rep, int p, int q) {
    if (p > 1) throw std::invalid_argument("rep_window: p must not exceed 1");
    Poly out;
    for (auto& [key, c] : rep.terms) {
        auto& [la, v] = key;
        if (!v.is_identity() && (v.lo() < p || v.hi() > q)) continue;
        out += c * (truncate(SymFunc::basis_elem(Basis::Schur, la), 1 - p) *
                    schubert_nonzero(v, false));
    }
    return out;
}

static bool revlex_less(const std::vector<std::pair<int, int>>& a,
                        const std::vector<std::pair<int, int>>& b) {
    auto ia = a.rbegin();
    auto ib = b.rbegin();
    while (ia != a.rend() || ib != b.rend()) {
        int idxa = ia != a.rend() ? ia->first : INT_MIN;
        int idxb = ib != b.rend() ? ib->first : INT_MIN;
        if (idxa != idxb) return idxa < idxb;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return false;
}

std::map<Perm, Poly> schubert_expand(const Poly& f, bool doubled) {
    for (auto& [m, c] : f.terms())
        for (auto& [vr, e] : m.e)
            if (vr.alpha == Alpha::X && vr.idx <= 0)
                throw std::invalid_argument("schubert_expand: x index must be positive");
    std::map<Perm, Poly> out;
    Poly rem = f;
    while (!rem.is_zero()) {
        std::map<std::vector<std::pair<int, int>>, Poly> groups;
        for (auto& [m, c] : rem.terms()) {
            std::vector<std::pair<int, int>> xp;
            Monomial rest;
            for (auto& [vr, e] : m.e) {
                if (vr.alpha == Alpha::X)
                    xp.emplace_back(vr.idx, e);
                else
                    rest.e.emplace_back(vr, e);
            }
            groups[xp].add_term(rest, c);
        }
        auto best = groups.begin();
        for (auto it = std::next(groups.begin()); it != groups.end(); ++it)
            if (revlex_less(best->first, it->first)) best = it;
        std::map<int, int> cmap(best->first.begin(), best->first.end());
        Perm w = perm_from_code(cmap);
        Poly coeff = best->second;
        rem -= coeff * (doubled ? schubert_double(w) : schubert_single(w));
        Poly& slot = out[w];
        slot += coeff;
        if (slot.is_zero()) out.erase(w);
    }
    return out;
}

std::map<Perm, Rat> structure_constants(const Perm& u, const Perm& v) {
    long L = length(u) + length(v);
    int lo_min = INT_MAX;
    if (!u.is_identity()) lo_min = std::min(lo_min, u.lo());
    if (!v.is_identity()) lo_min = std::min(lo_min, v.lo());
    if (lo_min == INT_MAX) lo_min = 1;
    int N = static_cast<int>(std::max<long>(0, L + 1 - lo_min));
    auto run = [&](int n) {
        Poly f = schubert_single(shift(u, n)) * schubert_single(shift(v, n));
        std::map<Perm, Rat> res;
        for (auto& [w, c] : schubert_expand(f)) res[shift(w, -n)] = c.constant_term();
        return res;
    };
    auto r1 = run(N);
    auto r2 = run(N + 1);
    if (r1 != r2) throw std::logic_error("structure_constants: window failed to stabilize");
    return r1;
}

bool cancellation_check(const Perm& w) {
    if (!in_s_plus(w)) throw std::invalid_argument("cancellation_check: w must fix all i <= 0");
    Poly sum;
    for (auto& t : length_additive_factorizations(w, 2)) {
        Poly p = rename_alphabet(schubert_single(t[0].inverse()), Alpha::X, Alpha::A) *
                 rename_alphabet(schubert_single(t[1]), Alpha::X, Alpha::A);
        sum += length(t[0]) % 2 ? -p : p;
    }
    return sum == (w.is_identity() ? Poly(Rat(1)) : Poly());
}

}  // namespace backstable
