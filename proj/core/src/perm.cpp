#include "backstable/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace backstable {

Perm::Perm(int base, std::vector<int> window) : base_(base), window_(std::move(window)) {
    std::vector<int> sorted(window_);
    std::sort(sorted.begin(), sorted.end());
    for (size_t k = 0; k < sorted.size(); ++k)
        if (sorted[k] != base_ + static_cast<int>(k))
            throw std::invalid_argument("window is not a rearrangement of its index range");
    normalize();
}

void Perm::normalize() {
    size_t lo = 0, hi = window_.size();
    while (hi > lo && window_[hi - 1] == base_ + static_cast<int>(hi - 1)) --hi;
    while (lo < hi && window_[lo] == base_ + static_cast<int>(lo)) ++lo;
    window_ = std::vector<int>(window_.begin() + lo, window_.begin() + hi);
    if (window_.empty())
        base_ = 0;
    else
        base_ += static_cast<int>(lo);
}

Perm Perm::s(int i) { return Perm(i, {i + 1, i}); }

Perm Perm::transposition(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i == j) return Perm();
    std::vector<int> win;
    for (int k = i; k <= j; ++k) win.push_back(k);
    std::swap(win.front(), win.back());
    return Perm(i, std::move(win));
}

Perm Perm::from_word(const std::vector<int>& letters) {
    Perm w;
    for (int i : letters) w = w * s(i);
    return w;
}

int Perm::operator()(int i) const {
    if (window_.empty() || i < base_ || i > hi()) return i;
    return window_[i - base_];
}

Perm Perm::inverse() const {
    if (window_.empty()) return Perm();
    std::vector<int> win(window_.size());
    for (size_t k = 0; k < window_.size(); ++k) win[window_[k] - base_] = base_ + static_cast<int>(k);
    return Perm(base_, std::move(win));
}

Perm operator*(const Perm& u, const Perm& v) {
    if (u.is_identity()) return v;
    if (v.is_identity()) return u;
    int lo = std::min(u.lo(), v.lo()), hi = std::max(u.hi(), v.hi());
    std::vector<int> win;
    win.reserve(hi - lo + 1);
    for (int i = lo; i <= hi; ++i) win.push_back(u(v(i)));
    return Perm(lo, std::move(win));
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("partition not weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::part(int i) const {
    return (i >= 1 && i <= rows()) ? parts[i - 1] : 0;
}

Partition conjugate(const Partition& la) {
    std::vector<int> c;
    for (int j = 1; j <= la.part(1); ++j) {
        int n = 0;
        for (int p : la.parts) n += (p >= j);
        c.push_back(n);
    }
    return Partition(c);
}

bool contains(const Partition& la, const Partition& mu) {
    for (int i = 1; i <= mu.rows(); ++i)
        if (mu.part(i) > la.part(i)) return false;
    return true;
}

int durfee(const Partition& la) {
    int d = 0;
    while (la.part(d + 1) >= d + 1) ++d;
    return d;
}

Partition add_part(const Partition& la, int row, int amount) {
    std::vector<int> p(la.parts);
    if (row > static_cast<int>(p.size()) + 1) throw std::invalid_argument("row gap in add_part");
    if (row == static_cast<int>(p.size()) + 1) p.push_back(0);
    p[row - 1] += amount;
    return Partition(p);
}

static void partitions_rec(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int d = 0; d <= n; ++d)
        for (auto& la : all_partitions(d)) out.push_back(la);
    return out;
}

std::vector<std::pair<int, int>> cells(const Partition& la) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= la.rows(); ++i)
        for (int j = 1; j <= la.part(i); ++j) out.push_back({i, j});
    return out;
}

long length(const Perm& w) {
    const auto& win = w.window();
    long inv = 0;
    for (size_t i = 0; i < win.size(); ++i)
        for (size_t j = i + 1; j < win.size(); ++j) inv += (win[i] > win[j]);
    return inv;
}

std::vector<Word> reduced_words(const Perm& w) {
    if (w.is_identity()) return {Word{}};
    std::set<Word> out;
    for (int i : right_descents(w)) {
        for (auto word : reduced_words(w * Perm::s(i))) {
            word.push_back(i);
            out.insert(std::move(word));
        }
    }
    return std::vector<Word>(out.begin(), out.end());
}

bool is_reduced(const Word& word) {
    return length(Perm::from_word(word)) == static_cast<long>(word.size());
}

std::map<int, int> code(const Perm& w) {
    std::map<int, int> c;
    const auto& win = w.window();
    for (size_t i = 0; i < win.size(); ++i) {
        int ci = 0;
        for (size_t j = i + 1; j < win.size(); ++j) ci += (win[j] < win[i]);
        if (ci) c[w.lo() + static_cast<int>(i)] = ci;
    }
    return c;
}

Perm perm_from_code(const std::map<int, int>& c) {
    if (c.empty()) return Perm();
    for (auto& [i, ci] : c)
        if (ci < 0) throw std::invalid_argument("code entries must be nonnegative");
    int lo = c.begin()->first;
    int hi = c.rbegin()->first;
    int slack = 0;
    for (auto& [i, ci] : c) slack += ci;
    int end = hi + slack + 1;  // enough room: all values land in [lo, end]
    std::vector<int> avail;
    for (int v = lo; v <= end; ++v) avail.push_back(v);
    std::vector<int> win;
    for (int i = lo; i <= end; ++i) {
        auto it = c.find(i);
        int ci = (it == c.end()) ? 0 : it->second;
        if (ci >= static_cast<int>(avail.size()))
            throw std::invalid_argument("code does not define a finite permutation");
        win.push_back(avail[ci]);
        avail.erase(avail.begin() + ci);
    }
    return Perm(lo, std::move(win));
}

Perm grassmannian_from_partition(const Partition& la) {
    if (la.rows() == 0) return Perm();
    Partition lap = conjugate(la);
    int lo = 1 - la.rows(), hi = la.part(1);
    std::vector<int> win;
    for (int i = lo; i <= hi; ++i)
        win.push_back(i <= 0 ? i + la.part(1 - i) : i - lap.part(i));
    return Perm(lo, std::move(win));
}

Partition partition_from_grassmannian(const Perm& w) {
    if (w.is_identity()) return Partition();
    if (!is_zero_grassmannian(w)) throw std::invalid_argument("not 0-Grassmannian");
    std::vector<int> parts;
    for (int i = std::min(0, w.lo()); i <= 0; ++i) {
        int p = w(i) - i;
        if (p > 0) parts.push_back(p);
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(parts);
}

Perm skew_perm(const Partition& la, const Partition& mu) {
    if (!contains(la, mu)) throw std::invalid_argument("mu not contained in la");
    return grassmannian_from_partition(la) * grassmannian_from_partition(mu).inverse();
}

bool is_321_avoiding(const Perm& w) {
    const auto& win = w.window();
    int n = static_cast<int>(win.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (win[i] > win[j] && win[j] > win[k]) return false;
    return true;
}

std::pair<std::vector<int>, std::vector<int>> grassmannian_descent_sets(const Perm& w) {
    std::vector<int> ip, im;
    for (int i = std::min(w.lo(), 1); i <= std::max(w.hi(), 0); ++i) {
        int v = w(i);
        if (i <= 0 && v > 0) ip.push_back(v);
        if (i > 0 && v <= 0) im.push_back(v);
    }
    std::sort(ip.begin(), ip.end());
    std::sort(im.begin(), im.end());
    return {ip, im};
}

// all (u, v) with w = u v and lengths adding
static std::set<std::pair<Perm, Perm>> additive_pairs(const Perm& w) {
    std::set<std::pair<Perm, Perm>> out;
    out.insert({Perm(), w});
    if (w.is_identity()) return out;
    Perm wi = w.inverse();
    for (int i : right_descents(wi)) {  // left descents of w
        for (auto& [u, v] : additive_pairs(Perm::s(i) * w)) out.insert({Perm::s(i) * u, v});
    }
    return out;
}

static void factor_rec(const Perm& w, int k, std::vector<Perm>& cur,
                       std::vector<std::vector<Perm>>& out) {
    if (k == 1) {
        cur.push_back(w);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (auto& [u, v] : additive_pairs(w)) {
        cur.push_back(u);
        factor_rec(v, k - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<Perm>> length_additive_factorizations(
    const Perm& w, int k, const std::vector<PermPredicate>& constraints) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::vector<std::vector<Perm>> raw;
    std::vector<Perm> cur;
    factor_rec(w, k, cur, raw);
    std::vector<std::vector<Perm>> out;
    for (auto& tup : raw) {
        bool ok = true;
        for (size_t i = 0; i < constraints.size() && i < tup.size(); ++i)
            if (constraints[i] && !constraints[i](tup[i])) {
                ok = false;
                break;
            }
        if (ok) out.push_back(tup);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Perm shift(const Perm& w, int n) {
    if (w.is_identity()) return w;
    std::vector<int> win;
    for (int v : w.window()) win.push_back(v + n);
    return Perm(w.lo() + n, std::move(win));
}

Perm omega(const Perm& w) {
    if (w.is_identity()) return w;
    // omega(w)(i) = 1 - w(1 - i)
    std::vector<int> win;
    for (int i = 1 - w.hi(); i <= 1 - w.lo(); ++i) win.push_back(1 - w(1 - i));
    return Perm(1 - w.hi(), std::move(win));
}

Perm increasing_perm(const std::set<int>& J) {
    Word word(J.begin(), J.end());
    return Perm::from_word(word);
}

Perm decreasing_perm(const std::set<int>& K) {
    Word word(K.rbegin(), K.rend());
    return Perm::from_word(word);
}

std::vector<std::pair<std::set<int>, std::set<int>>> lambda_factorizations(const Perm& w) {
    std::vector<std::pair<std::set<int>, std::set<int>>> out;
    if (w.is_identity()) {
        out.push_back({{}, {}});
        return out;
    }
    std::set<int> supp = support(w);
    std::vector<int> letters(supp.begin(), supp.end());
    int m = static_cast<int>(letters.size());
    long lw = length(w);
    // assign each letter to J, K, or both; J union K = support
    std::vector<int> assign(m, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == m) {
            std::set<int> J, K;
            for (int t = 0; t < m; ++t) {
                if (assign[t] != 1) J.insert(letters[t]);
                if (assign[t] != 0) K.insert(letters[t]);
            }
            if (static_cast<long>(J.size() + K.size()) != lw) return;
            if (increasing_perm(J) * decreasing_perm(K) == w) out.push_back({J, K});
            return;
        }
        for (int a = 0; a < 3; ++a) {
            assign[pos] = a;
            rec(pos + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::set<int> support(const Perm& w) {
    std::set<int> out;
    Perm v = w;
    while (!v.is_identity()) {
        int i = *right_descents(v).begin();
        out.insert(i);
        v = v * Perm::s(i);
    }
    return out;
}

int max_support(const Perm& w) {
    auto s = support(w);
    return s.empty() ? 0 : *s.rbegin();
}

bool bruhat_leq(const Perm& v, const Perm& w) {
    if (v.is_identity()) return true;
    if (length(v) > length(w)) return false;
    Perm wi = w.inverse();
    int i = *right_descents(wi).begin();  // left descent of w
    Perm siw = Perm::s(i) * w;
    Perm siv = Perm::s(i) * v;
    if (length(siv) < length(v)) return bruhat_leq(siv, siw);
    return bruhat_leq(v, siw);
}

bool has_right_descent(const Perm& w, int i) { return w(i) > w(i + 1); }

bool has_left_descent(const Perm& w, int i) { return w.inverse()(i) > w.inverse()(i + 1); }

std::set<int> right_descents(const Perm& w) {
    std::set<int> out;
    for (int i = w.lo() - 1; i <= w.hi(); ++i)
        if (has_right_descent(w, i)) out.insert(i);
    return out;
}

bool is_k_grassmannian(const Perm& w, int k) {
    for (int i : right_descents(w))
        if (i != k) return false;
    return true;
}

bool is_zero_grassmannian(const Perm& w) { return is_k_grassmannian(w, 0); }

bool in_s_plus(const Perm& w) { return w.is_identity() || w.lo() >= 1; }

bool in_s_minus(const Perm& w) { return w.is_identity() || w.hi() <= 0; }

bool in_s_nonzero(const Perm& w) {
    for (int i = w.lo(); i <= w.hi(); ++i)
        if ((i <= 0) != (w(i) <= 0)) return false;
    return true;
}

std::pair<Perm, Perm> split_nonzero(const Perm& w) {
    if (!in_s_nonzero(w)) throw std::invalid_argument("not in S!=0");
    if (w.is_identity()) return {Perm(), Perm()};
    std::vector<int> neg, pos;
    for (int i = std::min(w.lo(), 0); i <= 0; ++i) neg.push_back(w(i));
    for (int i = 1; i <= std::max(w.hi(), 1); ++i) pos.push_back(w(i));
    return {Perm(std::min(w.lo(), 0), std::move(neg)), Perm(1, std::move(pos))};
}

std::string to_string(const Perm& w) {
    if (w.is_identity()) return "id";
    std::string out = std::to_string(w.lo()) + ":";
    for (size_t i = 0; i < w.window().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w.window()[i]);
    }
    return out;
}

std::string to_string(const Partition& la) {
    if (la.rows() == 0) return "[]";
    std::string out = "[";
    for (int i = 0; i < la.rows(); ++i) {
        if (i) out += ",";
        out += std::to_string(la.parts[i]);
    }
    return out + "]";
}

}  // namespace backstable
