#include "backstable/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace backstable {

using RMap = std::map<Partition, Rat>;

SymFunc SymFunc::one(Basis b) { return basis_elem(b, Partition()); }

SymFunc SymFunc::basis_elem(Basis b, const Partition& la, const Poly& c) {
    SymFunc f(b);
    f.add_term(la, c);
    return f;
}

Poly SymFunc::coeff(const Partition& la) const {
    auto it = coeffs_.find(la);
    return it == coeffs_.end() ? Poly() : it->second;
}

void SymFunc::add_term(const Partition& la, const Poly& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(la);
    if (it == coeffs_.end()) {
        coeffs_[la] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (o.basis_ != basis_ && !o.coeffs_.empty() && !coeffs_.empty())
        throw std::invalid_argument("basis mismatch in +=");
    for (auto& [la, c] : o.coeffs_) add_term(la, c);
    return *this;
}

SymFunc operator*(const Poly& c, const SymFunc& f) {
    SymFunc out(f.basis_);
    for (auto& [la, k] : f.coeffs_) out.add_term(la, c * k);
    return out;
}

SymFunc SymFunc::operator-() const { return Poly(Rat(-1)) * *this; }

void TensorSymFunc::add_term(const Partition& la, const Partition& mu, const Poly& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(la, mu);
    auto it = coeffs.find(key);
    if (it == coeffs.end()) {
        coeffs[key] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

static Partition merge_parts(const Partition& la, const Partition& mu) {
    std::vector<int> p(la.parts);
    p.insert(p.end(), mu.parts.begin(), mu.parts.end());
    std::sort(p.rbegin(), p.rend());
    return Partition(p);
}

// product in a multiplicative basis (P, H, E)
static RMap rmul(const RMap& f, const RMap& g) {
    RMap out;
    for (auto& [la, c1] : f)
        for (auto& [mu, c2] : g) out[merge_parts(la, mu)] += c1 * c2;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

static void radd(RMap& f, const RMap& g, const Rat& scale = Rat(1)) {
    for (auto& [la, c] : g) {
        auto it = f.find(la);
        if (it == f.end()) {
            if (scale * c != 0) f[la] = scale * c;
        } else {
            it->second += scale * c;
            if (it->second == 0) f.erase(it);
        }
    }
}

// guards every memo table below; tables call into each other, hence recursive
static std::recursive_mutex table_mtx;

static RMap h_in_p(int n) {
    std::lock_guard<std::recursive_mutex> lk(table_mtx);
    static std::vector<RMap> memo{{{Partition(), Rat(1)}}};
    while (static_cast<int>(memo.size()) <= n) {
        int m = static_cast<int>(memo.size());
        RMap out;
        for (int k = 1; k <= m; ++k)
            radd(out, rmul({{Partition({k}), Rat(1)}}, memo[m - k]), Rat(1) / m);
        memo.push_back(out);
    }
    return memo[n];
}

static RMap e_in_p(int n) {
    std::lock_guard<std::recursive_mutex> lk(table_mtx);
    static std::vector<RMap> memo{{{Partition(), Rat(1)}}};
    while (static_cast<int>(memo.size()) <= n) {
        int m = static_cast<int>(memo.size());
        RMap out;
        for (int k = 1; k <= m; ++k)
            radd(out, rmul({{Partition({k}), Rat(1)}}, memo[m - k]),
                 (k % 2 ? Rat(1) : Rat(-1)) / m);
        memo.push_back(out);
    }
    return memo[n];
}

static RMap p_in_h(int n) {
    std::lock_guard<std::recursive_mutex> lk(table_mtx);
    static std::vector<RMap> memo{{{Partition(), Rat(1)}}};
    while (static_cast<int>(memo.size()) <= n) {
        int m = static_cast<int>(memo.size());
        RMap out{{Partition({m}), Rat(m)}};
        for (int i = 1; i < m; ++i)
            radd(out, rmul(memo[i], {{Partition({m - i}), Rat(1)}}), Rat(-1));
        memo.push_back(out);
    }
    return memo[n];
}

static RMap p_in_e(int n) {
    std::lock_guard<std::recursive_mutex> lk(table_mtx);
    static std::vector<RMap> memo{{{Partition(), Rat(1)}}};
    while (static_cast<int>(memo.size()) <= n) {
        int m = static_cast<int>(memo.size());
        Rat sgn = (m % 2 ? Rat(1) : Rat(-1));
        RMap out{{Partition({m}), sgn * m}};
        for (int i = 1; i < m; ++i)
            radd(out, rmul(memo[i], {{Partition({m - i}), Rat(1)}}),
                 -sgn * (i % 2 ? Rat(1) : Rat(-1)));
        memo.push_back(out);
    }
    return memo[n];
}

static RMap schur_in_h(const Partition& la) {
    std::lock_guard<std::recursive_mutex> lk(table_mtx);
    static std::map<Partition, RMap> memo;
    auto it = memo.find(la);
    if (it != memo.end()) return it->second;
    int r = la.rows();
    RMap out;
    std::vector<int> perm(r);
    for (int i = 0; i < r; ++i) perm[i] = i;
    do {
        int sgn = 1;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (perm[i] > perm[j]) sgn = -sgn;
        std::vector<int> parts;
        bool ok = true;
        for (int i = 0; i < r && ok; ++i) {
            int m = la.part(i + 1) - (i + 1) + (perm[i] + 1);
            if (m < 0) ok = false;
            if (m > 0) parts.push_back(m);
        }
        if (ok) {
            std::sort(parts.rbegin(), parts.rend());
            out[Partition(parts)] += sgn;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto i2 = out.begin(); i2 != out.end();)
        i2 = i2->second == 0 ? out.erase(i2) : std::next(i2);
    memo[la] = out;
    return out;
}

std::map<Partition, Rat> schur_in_p(const Partition& la) {
    std::lock_guard<std::recursive_mutex> lk(table_mtx);
    static std::map<Partition, RMap> memo;
    auto it = memo.find(la);
    if (it != memo.end()) return it->second;
    RMap out;
    for (auto& [mu, c] : schur_in_h(la)) {
        RMap prod{{Partition(), Rat(1)}};
        for (int k : mu.parts) prod = rmul(prod, h_in_p(k));
        radd(out, prod, c);
    }
    memo[la] = out;
    return out;
}

std::map<Partition, Rat> schur_mult_p(const std::map<Partition, Rat>& f, int r) {
    RMap out;
    for (auto& [la, c] : f) {
        // add all border strips of size r to la
        int rows = la.rows();
        for (int t = 1; t <= rows + 1; ++t) {
            for (int b = t; b <= t + r - 1; ++b) {
                std::vector<int> mu(std::max(rows, b), 0);
                for (int i = 1; i <= static_cast<int>(mu.size()); ++i) mu[i - 1] = la.part(i);
                long used = 0;
                for (int i = t + 1; i <= b; ++i) {
                    int ni = la.part(i - 1) + 1;
                    used += ni - la.part(i);
                    mu[i - 1] = ni;
                }
                long top = r - used;
                if (top <= 0) continue;
                mu[t - 1] = la.part(t) + static_cast<int>(top);
                if (t > 1 && mu[t - 1] > mu[t - 2]) continue;
                bool dec = true;
                for (size_t i = 1; i < mu.size(); ++i)
                    if (mu[i] > mu[i - 1]) dec = false;
                if (!dec) continue;
                Rat sgn = ((b - t) % 2 ? Rat(-1) : Rat(1));
                out[Partition(mu)] += sgn * c;
            }
        }
    }
    for (auto it2 = out.begin(); it2 != out.end();)
        it2 = it2->second == 0 ? out.erase(it2) : std::next(it2);
    return out;
}

std::map<Partition, Rat> p_in_schur(const Partition& nu) {
    std::lock_guard<std::recursive_mutex> lk(table_mtx);
    static std::map<Partition, RMap> memo;
    auto it = memo.find(nu);
    if (it != memo.end()) return it->second;
    RMap out{{Partition(), Rat(1)}};
    for (int r : nu.parts) out = schur_mult_p(out, r);
    memo[nu] = out;
    return out;
}

// Kostka number: SSYT of shape la, content mu
static long kostka(const Partition& la, const Partition& mu) {
    // fill cells in column-reading order with backtracking
    auto cl = cells(la);
    std::sort(cl.begin(), cl.end(),
              [](auto& p, auto& q) { return p.second != q.second ? p.second < q.second : p.first < q.first; });
    int n = la.size();
    std::map<std::pair<int, int>, int> fill;
    std::vector<int> remaining(mu.rows() + 1, 0);
    for (int i = 1; i <= mu.rows(); ++i) remaining[i] = mu.part(i);
    long count = 0;
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == cl.size()) {
            ++count;
            return;
        }
        auto [r, c] = cl[pos];
        int lo = 1;
        if (c > 1) lo = std::max(lo, fill[{r, c - 1}]);
        if (r > 1) lo = std::max(lo, fill[{r - 1, c}] + 1);
        for (int v = lo; v <= mu.rows(); ++v) {
            if (!remaining[v]) continue;
            --remaining[v];
            fill[{r, c}] = v;
            rec(pos + 1);
            ++remaining[v];
        }
    };
    (void)n;
    rec(0);
    return count;
}

static RMap schur_in_m(const Partition& la) {
    std::lock_guard<std::recursive_mutex> lk(table_mtx);
    static std::map<Partition, RMap> memo;
    auto it = memo.find(la);
    if (it != memo.end()) return it->second;
    RMap out;
    for (auto& mu : all_partitions(la.size())) {
        long k = kostka(la, mu);
        if (k) out[mu] = k;
    }
    memo[la] = out;
    return out;
}

// linear extension of an RMap basis change to Poly coefficients
static std::map<Partition, Poly> apply_table(const std::map<Partition, Poly>& f,
                                             RMap (*table)(const Partition&)) {
    std::map<Partition, Poly> out;
    for (auto& [la, c] : f)
        for (auto& [mu, r] : table(la)) {
            auto it = out.find(mu);
            if (it == out.end())
                out[mu] = r * c;
            else {
                it->second += r * c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

static RMap mult_basis_in_p(const Partition& la, RMap (*gen)(int)) {
    RMap prod{{Partition(), Rat(1)}};
    for (int k : la.parts) prod = rmul(prod, gen(k));
    return prod;
}

static RMap h_table(const Partition& la) { return mult_basis_in_p(la, h_in_p); }
static RMap e_table(const Partition& la) { return mult_basis_in_p(la, e_in_p); }
static RMap p_to_h_table(const Partition& nu) {
    RMap prod{{Partition(), Rat(1)}};
    for (int k : nu.parts) prod = rmul(prod, p_in_h(k));
    return prod;
}
static RMap p_to_e_table(const Partition& nu) {
    RMap prod{{Partition(), Rat(1)}};
    for (int k : nu.parts) prod = rmul(prod, p_in_e(k));
    return prod;
}
static RMap schur_table(const Partition& la) { return schur_in_p(la); }
static RMap p_to_schur_table(const Partition& nu) { return p_in_schur(nu); }

static std::map<Partition, Poly> monomial_to_schur(const std::map<Partition, Poly>& f) {
    std::map<Partition, Poly> rem = f, out;
    while (!rem.empty()) {
        // lex-largest key dominates all others appearing in its m-expansion
        auto it = std::prev(rem.end());
        Partition la = it->first;
        Poly c = it->second;
        out[la] = c;
        for (auto& [mu, r] : schur_in_m(la)) {
            auto jt = rem.find(mu);
            Poly upd = (jt == rem.end() ? Poly() : jt->second) - r * c;
            if (upd.is_zero())
                rem.erase(mu);
            else
                rem[mu] = upd;
        }
    }
    return out;
}

static std::map<Partition, Poly> schur_to_monomial(const std::map<Partition, Poly>& f) {
    std::map<Partition, Poly> out;
    for (auto& [la, c] : f)
        for (auto& [mu, r] : schur_in_m(la)) {
            auto it = out.find(mu);
            if (it == out.end())
                out[mu] = r * c;
            else {
                it->second += r * c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

static SymFunc to_p(const SymFunc& f) {
    SymFunc out(Basis::P);
    std::map<Partition, Poly> res;
    switch (f.basis()) {
        case Basis::P: return f;
        case Basis::H: res = apply_table(f.coeffs(), h_table); break;
        case Basis::E: res = apply_table(f.coeffs(), e_table); break;
        case Basis::Schur: res = apply_table(f.coeffs(), schur_table); break;
        case Basis::Monomial:
            res = apply_table(monomial_to_schur(f.coeffs()), schur_table);
            break;
    }
    for (auto& [la, c] : res) out.add_term(la, c);
    return out;
}

static SymFunc from_p(const SymFunc& f, Basis target) {
    SymFunc out(target);
    std::map<Partition, Poly> res;
    switch (target) {
        case Basis::P: return f;
        case Basis::H: res = apply_table(f.coeffs(), p_to_h_table); break;
        case Basis::E: res = apply_table(f.coeffs(), p_to_e_table); break;
        case Basis::Schur: res = apply_table(f.coeffs(), p_to_schur_table); break;
        case Basis::Monomial:
            res = schur_to_monomial(apply_table(f.coeffs(), p_to_schur_table));
            break;
    }
    for (auto& [la, c] : res) out.add_term(la, c);
    return out;
}

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    return from_p(to_p(f), target);
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = to_p(f), gp = to_p(g);
    SymFunc prod(Basis::P);
    for (auto& [la, c1] : fp.coeffs())
        for (auto& [mu, c2] : gp.coeffs()) prod.add_term(merge_parts(la, mu), c1 * c2);
    return convert(prod, f.basis());
}

static long binom(int n, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

TensorSymFunc coproduct(const SymFunc& f) {
    SymFunc fp = to_p(f);
    TensorSymFunc tp;
    tp.basis = Basis::P;
    for (auto& [nu, c] : fp.coeffs()) {
        // distinct parts with multiplicities
        std::map<int, int> mult;
        for (int k : nu.parts) ++mult[k];
        std::vector<std::pair<int, int>> dm(mult.begin(), mult.end());
        std::function<void(size_t, std::vector<int>&, long)> rec =
            [&](size_t pos, std::vector<int>& left, long ways) {
                if (pos == dm.size()) {
                    std::vector<int> l = left, r;
                    for (auto& [k, m] : dm) {
                        int taken = 0;
                        for (int x : left) taken += (x == k);
                        for (int t = 0; t < m - taken; ++t) r.push_back(k);
                    }
                    std::sort(l.rbegin(), l.rend());
                    std::sort(r.rbegin(), r.rend());
                    tp.add_term(Partition(l), Partition(r), Rat(ways) * c);
                    return;
                }
                auto [k, m] = dm[pos];
                for (int j = 0; j <= m; ++j) {
                    for (int t = 0; t < j; ++t) left.push_back(k);
                    rec(pos + 1, left, ways * binom(m, j));
                    for (int t = 0; t < j; ++t) left.pop_back();
                }
            };
        std::vector<int> left;
        rec(0, left, 1);
    }
    if (f.basis() == Basis::P) return tp;
    // convert both tensor factors to the original basis
    TensorSymFunc out;
    out.basis = f.basis();
    for (auto& [key, c] : tp.coeffs) {
        SymFunc l = from_p(SymFunc::basis_elem(Basis::P, key.first), f.basis());
        SymFunc r = from_p(SymFunc::basis_elem(Basis::P, key.second), f.basis());
        for (auto& [la, cl] : l.coeffs())
            for (auto& [mu, cr] : r.coeffs()) out.add_term(la, mu, c * cl * cr);
    }
    return out;
}

SymFunc antipode(const SymFunc& f) {
    SymFunc fp = to_p(f);
    SymFunc out(Basis::P);
    for (auto& [nu, c] : fp.coeffs())
        out.add_term(nu, (nu.rows() % 2 ? Poly(Rat(-1)) : Poly(Rat(1))) * c);
    return convert(out, f.basis());
}

SymFunc omega_sym(const SymFunc& f) {
    SymFunc fp = to_p(f);
    SymFunc out(Basis::P);
    for (auto& [nu, c] : fp.coeffs()) {
        int sgn = (nu.size() - nu.rows()) % 2 ? -1 : 1;
        out.add_term(nu, Poly(Rat(sgn)) * c);
    }
    return convert(out, f.basis());
}

Poly superize(const SymFunc& f, Alpha a1, int lo1, int hi1, Alpha a2, int lo2, int hi2) {
    SymFunc fp = to_p(f);
    Poly out;
    for (auto& [nu, c] : fp.coeffs()) {
        Poly term = c;
        for (int k : nu.parts) {
            Poly pk;
            for (int i = lo1; i <= hi1; ++i) pk += Poly::var(a1, i, k);
            for (int i = lo2; i <= hi2; ++i) pk -= Poly::var(a2, i, k);
            term = term * pk;
        }
        out += term;
    }
    return out;
}

Poly truncate(const SymFunc& f, int n) {
    SymFunc fp = to_p(f);
    Poly out;
    for (auto& [nu, c] : fp.coeffs()) {
        Poly term = c;
        for (int k : nu.parts) {
            Poly pk;
            for (int i = 1 - n; i <= 0; ++i) pk += Poly::var(Alpha::X, i, k);
            term = term * pk;
        }
        out += term;
    }
    return out;
}

static const Poly& schur_poly_cache(const Partition& la, int n) {
    static std::map<std::pair<Partition, int>, Poly> memo;
    auto key = std::make_pair(la, n);
    {
        std::lock_guard<std::recursive_mutex> lk(table_mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    Poly val = truncate(SymFunc::basis_elem(Basis::Schur, la), n);
    std::lock_guard<std::recursive_mutex> lk(table_mtx);
    return memo.emplace(key, std::move(val)).first->second;
}

SymFunc schur_expand_finite(const Poly& p, int n) {
    for (int i = 1 - n; i <= -1; ++i)
        if (act_permutation(Alpha::X, Perm::s(i), p) != p)
            throw std::invalid_argument("schur_expand_finite: not symmetric at transposition " +
                                        std::to_string(i));
    Poly rem = p;
    SymFunc out(Basis::Schur);
    while (!rem.is_zero()) {
        // leading x-exponent vector, lex on (x_0, x_{-1}, ..., x_{1-n})
        std::vector<int> best;
        bool have = false;
        for (auto& [m, c] : rem.terms()) {
            std::vector<int> e(n, 0);
            for (auto& [v, k] : m.e)
                if (v.alpha == Alpha::X) {
                    if (v.idx > 0 || v.idx < 1 - n)
                        throw std::invalid_argument("schur_expand_finite: variable out of window");
                    e[-v.idx] = k;
                }
            if (!have || e > best) {
                best = e;
                have = true;
            }
        }
        for (size_t i = 1; i < best.size(); ++i)
            if (best[i] > best[i - 1])
                throw std::logic_error("schur_expand_finite: leading exponent not a partition");
        Partition la{std::vector<int>(best.begin(), best.end())};
        // coefficient of the leading x-monomial
        Monomial lead;
        for (int i = 0; i < n; ++i)
            if (best[i]) lead.e.push_back({VarRef{Alpha::X, -i}, best[i]});
        std::sort(lead.e.begin(), lead.e.end());
        Poly c;
        for (auto& [m, k] : rem.terms()) {
            Monomial xpart, rest;
            for (auto& [v, e] : m.e)
                (v.alpha == Alpha::X ? xpart : rest).e.push_back({v, e});
            if (xpart == lead) c.add_term(rest, k);
        }
        out.add_term(la, c);
        rem -= c * schur_poly_cache(la, n);
    }
    return out;
}

long syt_count(const Partition& la) {
    long num = 1;
    for (int i = 1; i <= la.size(); ++i) num *= i;
    Partition lap = conjugate(la);
    for (auto& [r, c] : cells(la)) num /= (la.part(r) - c) + (lap.part(c) - r) + 1;
    return num;
}

std::vector<Tableau> enumerate_syt(const Partition& la) {
    std::vector<Tableau> out;
    int n = la.size();
    Tableau t(la.rows());
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            out.push_back(t);
            return;
        }
        for (int r = 0; r < la.rows(); ++r) {
            int c = static_cast<int>(t[r].size());
            if (c >= la.part(r + 1)) continue;
            if (r > 0 && static_cast<int>(t[r - 1].size()) <= c) continue;
            t[r].push_back(v);
            rec(v + 1);
            t[r].pop_back();
        }
    };
    rec(1);
    return out;
}

std::set<int> des_set(const Tableau& t) {
    std::map<int, int> row_of;
    for (size_t r = 0; r < t.size(); ++r)
        for (int v : t[r]) row_of[v] = static_cast<int>(r);
    std::set<int> out;
    for (auto& [v, r] : row_of)
        if (row_of.count(v + 1) && row_of[v + 1] > r) out.insert(v);
    return out;
}

}  // namespace backstable
