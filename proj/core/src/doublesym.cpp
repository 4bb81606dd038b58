#include "backstable/doublesym.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <random>
#include <stdexcept>

namespace backstable {

void DoubleSymFunc::add_term(const Partition& la, const Poly& c) {
    if (c.is_zero()) return;
    Poly& slot = coeffs[la];
    slot += c;
    if (slot.is_zero()) coeffs.erase(la);
}

Poly DoubleSymFunc::coeff(const Partition& la) const {
    auto it = coeffs.find(la);
    return it == coeffs.end() ? Poly() : it->second;
}

void TensorDoubleSymFunc::add_term(const Partition& la, const Partition& mu, const Poly& c) {
    if (c.is_zero()) return;
    Poly& slot = coeffs[{la, mu}];
    slot += c;
    if (slot.is_zero()) coeffs.erase({la, mu});
}

DoubleSymFunc double_schur(const Partition& la) {
    DoubleSymFunc f;
    f.add_term(la, Poly(Rat(1)));
    return f;
}

static Poly schubert_in_a(const Perm& w) {
    return rename_alphabet(schubert_nonzero(w, false), Alpha::X, Alpha::A);
}

static Poly schubert_in_b(const Perm& w) {
    return rename_alphabet(schubert_nonzero(w, false), Alpha::X, Alpha::B);
}

static std::vector<Partition> subpartitions(const Partition& la) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int cap) {
        if (row == la.rows()) {
            std::vector<int> p;
            for (int v : cur)
                if (v) p.push_back(v);
            out.push_back(Partition(p));
            return;
        }
        for (int v = 0; v <= std::min(cap, la.part(row + 1)); ++v) {
            cur.push_back(v);
            rec(row + 1, v);
            cur.pop_back();
        }
    };
    rec(0, la.rows() ? la.part(1) : 0);
    return out;
}

// s_la(x||a) = sum over mu in la with equal Durfee square of
// (-1)^{|la/mu|} Schubert_{w_{la/mu}^{-1}}(a) s_mu(x/a)
static const SymFunc& double_basis_in_super(const Partition& la) {
    static std::map<Partition, SymFunc> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = memo.find(la);
    if (it != memo.end()) return it->second;
    SymFunc out(Basis::Schur);
    for (auto& mu : subpartitions(la)) {
        if (durfee(mu) != durfee(la)) continue;
        Poly c = schubert_in_a(skew_perm(la, mu).inverse());
        int sgn = (la.size() - mu.size()) % 2 ? -1 : 1;
        out.add_term(mu, Rat(sgn) * c);
    }
    return memo.emplace(la, out).first->second;
}

// s_la(x/a) = sum over the same mu of Schubert_{w_{la/mu}}(a) s_mu(x||a)
static const DoubleSymFunc& super_basis_in_double(const Partition& la) {
    static std::map<Partition, DoubleSymFunc> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = memo.find(la);
    if (it != memo.end()) return it->second;
    DoubleSymFunc out;
    for (auto& mu : subpartitions(la)) {
        if (durfee(mu) != durfee(la)) continue;
        out.add_term(mu, schubert_in_a(skew_perm(la, mu)));
    }
    return memo.emplace(la, out).first->second;
}

SymFunc double_to_super(const DoubleSymFunc& f) {
    SymFunc out(Basis::Schur);
    for (auto& [la, c] : f.coeffs) out += c * double_basis_in_super(la);
    return out;
}

DoubleSymFunc super_to_double(const SymFunc& f) {
    if (f.basis() != Basis::Schur)
        throw std::invalid_argument("super_to_double: expected Schur basis");
    DoubleSymFunc out;
    for (auto& [la, c] : f.coeffs())
        for (auto& [mu, k] : super_basis_in_double(la).coeffs) out.add_term(mu, c * k);
    return out;
}

Poly super_to_power(const SymFunc& f) {
    SymFunc fp = convert(f, Basis::P);
    Poly out;
    for (auto& [nu, c] : fp.coeffs()) {
        Monomial m;
        std::map<int, int> mult;
        for (int k : nu.parts) ++mult[k];
        for (auto& [k, e] : mult) m.e.push_back({VarRef{Alpha::Y, k}, e});
        Poly mono;
        mono.add_term(m, Rat(1));
        out += c * mono;
    }
    return out;
}

SymFunc power_to_super(const Poly& f) {
    SymFunc out(Basis::P);
    for (auto& [m, c] : f.terms()) {
        std::vector<int> parts;
        Monomial rest;
        for (auto& [v, e] : m.e) {
            if (v.alpha == Alpha::Y) {
                if (v.idx < 1) throw std::invalid_argument("power_to_super: bad generator index");
                for (int t = 0; t < e; ++t) parts.push_back(v.idx);
            } else {
                rest.e.push_back({v, e});
            }
        }
        std::sort(parts.rbegin(), parts.rend());
        Poly cp;
        cp.add_term(rest, c);
        out.add_term(Partition(parts), cp);
    }
    return convert(out, Basis::Schur);
}

Poly to_power(const DoubleSymFunc& f) { return super_to_power(double_to_super(f)); }

DoubleSymFunc from_power(const Poly& f) { return super_to_double(power_to_super(f)); }

Poly gamma_a_power(const Poly& f, int t, bool positive) {
    return substitute(f, [&](const VarRef& v) -> std::optional<Poly> {
        if (v.alpha == Alpha::A) {
            if (v.idx == kDeltaIndex) throw std::logic_error("gamma_a_power: delta variable");
            return Poly::a(v.idx + t);
        }
        if (v.alpha != Alpha::Y) return Poly::var(v.alpha, v.idx);
        Poly corr;
        for (int i = std::min(1, t + 1); i <= std::max(0, t); ++i)
            corr += Poly::var(Alpha::A, i, v.idx);
        if (t > 0) corr = -corr;
        if (positive) corr = -corr;
        return Poly::y(v.idx) + corr;
    });
}

static Poly eps_power(const Poly& f, int n) {
    return substitute(f, [&](const VarRef& v) -> std::optional<Poly> {
        if (v.alpha != Alpha::Y) return Poly::var(v.alpha, v.idx);
        Poly s;
        for (int i = 1 - n; i <= 0; ++i)
            s += Poly::var(Alpha::X, i, v.idx) - Poly::var(Alpha::A, i, v.idx);
        return s;
    });
}

static Poly eps_image(const DoubleSymFunc& f, int n) {
    return superize(double_to_super(f), Alpha::X, 1 - n, 0, Alpha::A, 1 - n, 0);
}

Poly eps_truncate(const DoubleSymFunc& f, int n) {
    for (auto& [la, c] : f.coeffs)
        if (la.rows() > n || la.part(1) > n)
            throw std::invalid_argument("eps_truncate: partition exceeds the window");
    return eps_image(f, n);
}

static Poly det_poly(const std::vector<std::vector<Poly>>& m) {
    int r = static_cast<int>(m.size());
    if (r == 0) return Poly(Rat(1));
    if (r == 1) return m[0][0];
    Poly out;
    for (int i = 0; i < r; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (int k = 0; k < r; ++k) {
            if (k == i) continue;
            minor.emplace_back(m[k].begin() + 1, m[k].end());
        }
        Poly term = m[i][0] * det_poly(minor);
        out += i % 2 ? -term : term;
    }
    return out;
}

static Poly h_power(int m) {
    if (m < 0) return Poly();
    return super_to_power(SymFunc::basis_elem(Basis::Schur, Partition(m ? std::vector<int>{m}
                                                                       : std::vector<int>{})));
}

Poly jacobi_trudi(const Partition& la, int n) {
    int r = la.rows();
    std::vector<std::vector<Poly>> m(r, std::vector<Poly>(r));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            int d = la.part(i) - i + j;
            if (d >= 0) m[i - 1][j - 1] = gamma_a_power(h_power(d), la.part(i) - i);
        }
    return eps_power(det_poly(m), n);
}

Poly ssyt_formula(const Partition& la, int n) {
    if (la.rows() == 0) return Poly(Rat(1));
    if (la.rows() > n) return Poly();
    std::vector<std::vector<int>> t(la.rows());
    for (int i = 0; i < la.rows(); ++i) t[i].assign(la.parts[i], 0);
    Poly acc;
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == la.rows()) {
            Poly term(Rat(1));
            for (int i = 0; i < la.rows(); ++i)
                for (int j = 0; j < la.parts[i]; ++j)
                    term = term * (Poly::x(t[i][j]) - Poly::a(t[i][j] + j - i));
            acc += term;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == la.parts[r]) nr = r + 1, nc = 0;
        int lo = 1 - n;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0 && c < la.parts[r - 1]) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= 0; ++v) {
            t[r][c] = v;
            rec(nr, nc);
        }
    };
    rec(0, 0);
    return acc;
}

DoubleSymFunc double_stanley(const Perm& w) {
    static std::map<Perm, DoubleSymFunc> memo;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
    }
    std::vector<PermPredicate> cons{[](const Perm& v) { return in_s_nonzero(v); },
                                    {},
                                    [](const Perm& v) { return in_s_nonzero(v); }};
    SymFunc acc(Basis::Schur);
    for (auto& t : length_additive_factorizations(w, 3, cons)) {
        Poly c = schubert_in_a(t[0].inverse()) * schubert_in_a(t[2]);
        if (length(t[0]) % 2) c = -c;
        acc += c * stanley(t[1]);
    }
    DoubleSymFunc out = super_to_double(acc);
    std::lock_guard<std::mutex> lk(mtx);
    memo.emplace(w, out);
    return out;
}

std::map<Partition, Poly> double_eg(const Perm& w) { return double_stanley(w).coeffs; }

bool positivity_spot_check(const Perm& w, int samples, unsigned seed) {
    auto js = double_eg(w);
    std::set<int> idx;
    for (auto& [la, c] : js)
        for (auto& v : c.vars()) {
            if (v.alpha != Alpha::A) throw std::logic_error("positivity_spot_check: bad alphabet");
            idx.insert(v.idx);
        }
    // positive indices ascending, then nonpositive ascending
    std::vector<int> order;
    for (int i : idx)
        if (i >= 1) order.push_back(i);
    for (int i : idx)
        if (i <= 0) order.push_back(i);
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::map<int, Rat> val;
        long cur = 0;
        for (int i : order) {
            cur -= static_cast<long>(rng() % 4);
            val[i] = Rat(cur);
        }
        for (auto& [la, c] : js) {
            Poly e = substitute(c, [&](const VarRef& v) -> std::optional<Poly> {
                return Poly(val.at(v.idx));
            });
            if (e.constant_term() < 0) return false;
        }
    }
    return true;
}

Poly coproduct_structure_constant(const Partition& la, const Partition& mu, const Partition& nu) {
    if (!contains(la, mu)) return Poly();
    auto js = double_eg(skew_perm(la, mu));
    auto it = js.find(nu);
    return it == js.end() ? Poly() : it->second;
}

Poly triple_eg(const Perm& w, const Partition& mu) {
    Poly out;
    for (auto& [la, j] : double_eg(w)) {
        if (!contains(la, mu) || durfee(la) != durfee(mu)) continue;
        for (auto& rho : subpartitions(la)) {
            if (!contains(rho, mu) || durfee(rho) != durfee(mu)) continue;
            Poly term = j * schubert_in_a(skew_perm(la, rho).inverse()) *
                        schubert_in_b(skew_perm(rho, mu));
            out += (la.size() - rho.size()) % 2 ? -term : term;
        }
    }
    return out;
}

Poly hook_triple_eg(const Perm& w, int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("hook_triple_eg: negative arm or leg");
    auto facts = lambda_factorizations(w);
    if (facts.empty() || w.is_identity()) return Poly();
    int m = max_support(w);
    std::set<std::pair<std::set<int>, std::set<int>>> pairs;
    for (auto& [J, K] : facts) {
        auto Jp = J, Kp = K;
        Jp.erase(m);
        Kp.erase(m);
        pairs.insert({Jp, Kp});
    }
    Poly out;
    for (auto& [Jp, Kp] : pairs) {
        int nj = static_cast<int>(Jp.size()), nk = static_cast<int>(Kp.size());
        if (nj < p || nk < q) continue;
        std::vector<int> js(Jp.begin(), Jp.end()), ks(Kp.begin(), Kp.end());
        // positive factor: decreasing word from nk down to q+1, alphabets b and a_{K'+1}
        std::vector<int> upw;
        for (int i = nk; i > q; --i) upw.push_back(i);
        Poly fpos = substitute(
            schubert_double(Perm::from_word(upw)), [&](const VarRef& v) -> std::optional<Poly> {
                if (v.alpha == Alpha::X) return Poly::b(v.idx);
                if (v.idx < 1 || v.idx > nk) throw std::logic_error("hook_triple_eg: a index");
                return Poly::a(ks[v.idx - 1] + 1);
            });
        // negative factor: increasing word from -nj up to -1-p, alphabets b and a_{J'+1}
        std::vector<int> dww;
        for (int i = -nj; i <= -1 - p; ++i) dww.push_back(i);
        Poly fneg = substitute(
            schubert_negative(Perm::from_word(dww), true),
            [&](const VarRef& v) -> std::optional<Poly> {
                if (v.alpha == Alpha::X) return Poly::b(v.idx);
                int i = 1 - v.idx;
                if (i < 1 || i > nj) throw std::logic_error("hook_triple_eg: a index");
                return Poly::a(js[i - 1] + 1);
            });
        out += fpos * fneg;
    }
    return out;
}

Poly localize_sym(const DoubleSymFunc& f, const Perm& w) {
    auto [ip, im] = grassmannian_descent_sets(w);
    return substitute(to_power(f), [&](const VarRef& v) -> std::optional<Poly> {
        if (v.alpha != Alpha::Y) return Poly::var(v.alpha, v.idx);
        Poly s;
        for (int i : ip) s += Poly::var(Alpha::A, i, v.idx);
        for (int i : im) s -= Poly::var(Alpha::A, i, v.idx);
        return s;
    });
}

Poly positive_double_schur_power(const Partition& la) {
    int r = la.rows();
    std::vector<std::vector<Poly>> m(r, std::vector<Poly>(r));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            int d = la.part(i) - i + j;
            if (d >= 0) m[i - 1][j - 1] = gamma_a_power(h_power(d), i - la.part(i), true);
        }
    return det_poly(m);
}

Poly localize_positive_power(const Poly& f, const Perm& w) {
    std::set<int> moved;
    if (!w.is_identity())
        for (int i = std::max(1, w.lo()); i <= w.hi(); ++i) moved.insert(i);
    return substitute(f, [&](const VarRef& v) -> std::optional<Poly> {
        if (v.alpha != Alpha::Y) return Poly::var(v.alpha, v.idx);
        Poly s;
        for (int i : moved)
            s += Poly::var(Alpha::A, w(i), v.idx) - Poly::var(Alpha::A, i, v.idx);
        return s;
    });
}

DoubleSymFunc phi_dictionary(const SymFunc& f) {
    if (f.basis() != Basis::Schur)
        throw std::invalid_argument("phi_dictionary: expected Schur basis");
    Poly acc;
    for (auto& [la, c] : f.coeffs()) acc += c * positive_double_schur_power(la);
    Poly flipped = substitute(acc, [&](const VarRef& v) -> std::optional<Poly> {
        return v.alpha == Alpha::Y ? -Poly::y(v.idx) : Poly::var(v.alpha, v.idx);
    });
    return from_power(flipped);
}

DoubleSymFunc multiply_double(const DoubleSymFunc& f, const DoubleSymFunc& g) {
    return from_power(to_power(f) * to_power(g));
}

TensorDoubleSymFunc coproduct_double(const DoubleSymFunc& f) {
    TensorSymFunc t = coproduct(double_to_super(f));
    TensorDoubleSymFunc out;
    for (auto& [key, c] : t.coeffs) {
        auto& l = super_basis_in_double(key.first);
        auto& r = super_basis_in_double(key.second);
        for (auto& [la, cl] : l.coeffs)
            for (auto& [mu, cr] : r.coeffs) out.add_term(la, mu, c * cl * cr);
    }
    return out;
}

DoubleSymFunc omega_double(const DoubleSymFunc& f) {
    // transpose the super basis and send a_i to -a_{1-i} in the coefficients
    SymFunc sup = double_to_super(f);
    SymFunc out(Basis::Schur);
    for (auto& [mu, c] : sup.coeffs()) out.add_term(conjugate(mu), omega_vars(c));
    return super_to_double(out);
}

// remaining pieces of the Schubert canonical forms that need the double
// Stanley expansion

DoubleBackStableRep backstable_double_canonical(const Perm& w) {
    DoubleBackStableRep rep;
    std::vector<PermPredicate> cons{{}, [](const Perm& v) { return in_s_nonzero(v); }};
    for (auto& t : length_additive_factorizations(w, 2, cons))
        for (auto& [la, j] : double_eg(t[0])) rep.add_term(la, t[1], j);
    return rep;
}

DoubleBackStableRep delta_schubert(const Perm& w) {
    DoubleBackStableRep out;
    for (auto& [key, c] : backstable_double_canonical(w).terms)
        out.add_term(key.first, key.second, eta_delta(c));
    return out;
}

Poly rep_window(const DoubleBackStableRep& rep, int p, int q) {
    if (p > 1) throw std::invalid_argument("rep_window: p must not exceed 1");
    Poly out;
    for (auto& [key, c] : rep.terms) {
        auto& [la, v] = key;
        if (!v.is_identity() && (v.lo() < p || v.hi() > q)) continue;
        out += c * (eps_image(double_schur(la), 1 - p) * schubert_nonzero(v, true));
    }
    return out;
}

}  // namespace backstable
