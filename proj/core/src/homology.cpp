#include "backstable/homology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "backstable/schubert.hpp"

namespace backstable {

void DualSeries::add_term(const Partition& la, const Poly& c) {
    if (la.size() > cap) return;
    auto it = coeffs.find(la);
    if (it == coeffs.end()) {
        if (!c.is_zero()) coeffs.emplace(la, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
}

Poly DualSeries::coeff(const Partition& la) const {
    auto it = coeffs.find(la);
    return it == coeffs.end() ? Poly() : it->second;
}

static Poly schubert_in_a(const Perm& w) {
    return rename_alphabet(schubert_nonzero(w, false), Alpha::X, Alpha::A);
}

DualSeries dual_schur(const Partition& mu, int cap) {
    DualSeries out;
    out.cap = cap;
    for (auto& la : partitions_up_to(cap)) {
        if (!contains(la, mu) || durfee(la) != durfee(mu)) continue;
        out.add_term(la, schubert_in_a(skew_perm(la, mu)));
    }
    return out;
}

static DualSeries from_sym(const SymFunc& f, int cap) {
    DualSeries out;
    out.cap = cap;
    SymFunc schur = convert(f, Basis::Schur);
    for (auto& [la, c] : schur.coeffs()) out.add_term(la, c);
    return out;
}

DualSeries omega_kernel(int j, int i, int cap) {
    SymFunc hs(Basis::H), es(Basis::E);
    for (int r = 0; r <= cap; ++r) {
        Partition row(r ? std::vector<int>{r} : std::vector<int>{});
        hs.add_term(row, Poly::a(j).pow(r));
        es.add_term(row, (-Poly::a(i)).pow(r));
    }
    return from_sym(multiply(hs, es), cap);
}

DualSeries multiply_dual(const DualSeries& f, const DualSeries& g) {
    int cap = std::min(f.cap, g.cap);
    SymFunc fs(Basis::Schur), gs(Basis::Schur);
    for (auto& [la, c] : f.coeffs) fs.add_term(la, c);
    for (auto& [la, c] : g.coeffs) gs.add_term(la, c);
    return from_sym(multiply(fs, gs), cap);
}

DualSeries homology_dd(int i, const DualSeries& f) {
    DualSeries out;
    out.cap = f.cap;
    if (i != 0) {
        for (auto& [la, c] : f.coeffs) out.add_term(la, divided_difference(Alpha::A, i, c));
        return out;
    }
    DualSeries swapped;
    swapped.cap = f.cap;
    for (auto& [la, c] : f.coeffs)
        swapped.add_term(la, act_permutation(Alpha::A, Perm::s(0), c));
    DualSeries conj = multiply_dual(omega_kernel(1, 0, f.cap), swapped);
    Poly alpha0 = Poly::a(0) - Poly::a(1);
    for (auto& la : partitions_up_to(f.cap)) {
        Poly num = f.coeff(la) - conj.coeff(la);
        if (!num.is_zero()) out.add_term(la, exact_divide(num, alpha0));
    }
    return out;
}

DualSeries create_dual_schur(const Partition& la, int cap) {
    DualSeries out;
    out.cap = cap;
    out.add_term(Partition(), Poly(Rat(1)));
    Perm w = grassmannian_from_partition(la);
    Word word;
    while (!w.is_identity())
        for (int i = w.lo(); i < w.hi(); ++i)
            if (has_left_descent(w, i)) {
                word.push_back(i);
                w = Perm::s(i) * w;
                break;
            }
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = homology_dd(*it, out);
    return out;
}

Poly cauchy_pairing(const DoubleSymFunc& f, const DualSeries& g) {
    SymFunc sup = double_to_super(f);
    Poly out;
    for (auto& [la, c] : sup.coeffs()) out += c * g.coeff(la);
    return out;
}

using Cell = std::pair<int, int>;

static std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner) {
    std::vector<Cell> out;
    for (int i = 1; i <= outer.rows(); ++i)
        for (int j = inner.part(i) + 1; j <= outer.part(i); ++j) out.push_back({i, j});
    return out;
}

std::vector<LambdaDecomposition> lambda_decompositions(const Partition& outer,
                                                       const Partition& inner) {
    if (!contains(outer, inner)) return {};
    std::vector<LambdaDecomposition> out;
    int rows = outer.rows();
    std::vector<int> mid(rows);
    auto rec = [&](auto&& self, int r) -> void {
        if (r == rows) {
            std::vector<int> parts;
            for (int v : mid)
                if (v) parts.push_back(v);
            out.push_back({outer, Partition(parts), inner});
            return;
        }
        // outer/middle vertical: at most one box per row; middle/inner
        // horizontal: at most one box per column
        int lo = std::max(inner.part(r + 1), outer.part(r + 1) - 1);
        int hi = outer.part(r + 1);
        if (r > 0) {
            hi = std::min(hi, inner.part(r));  // horizontal strip condition
            hi = std::min(hi, mid[r - 1]);     // weakly decreasing
        }
        for (int v = lo; v <= hi; ++v) {
            mid[r] = v;
            self(self, r + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// weakly increasing fillings with 1..q+1 covering 2..q+1; boxes in column order
static void horizontal_fillings(const std::vector<Cell>& boxes, int q, size_t pos, int minval,
                                const Poly& acc, std::vector<int>& vals, Poly& total) {
    if (pos == boxes.size()) {
        bool covered = true;
        std::set<int> used(vals.begin(), vals.end());
        for (int v = 2; v <= q + 1; ++v)
            if (!used.count(v)) covered = false;
        if (covered) total += acc;
        return;
    }
    auto [i, j] = boxes[pos];
    for (int v = minval; v <= q + 1; ++v) {
        bool leftmost = pos == 0 || vals[pos - 1] != v;
        Poly factor = (v != 1 && leftmost) ? Poly(Rat(1))
                                           : Poly::a(v) - Poly::a(j - i + 1);
        vals[pos] = v;
        horizontal_fillings(boxes, q, pos + 1, v, acc * factor, vals, total);
    }
}

// weakly decreasing fillings with 0..-p covering -1..-p; boxes in row order
static void vertical_fillings(const std::vector<Cell>& boxes, int p, size_t pos, int maxval,
                              const Poly& acc, std::vector<int>& vals, Poly& total) {
    if (pos == boxes.size()) {
        bool covered = true;
        std::set<int> used(vals.begin(), vals.end());
        for (int v = -1; v >= -p; --v)
            if (!used.count(v)) covered = false;
        if (covered) total += acc;
        return;
    }
    auto [i, j] = boxes[pos];
    for (int v = maxval; v >= -p; --v) {
        bool topmost = pos == 0 || vals[pos - 1] != v;
        Poly factor = (v != 0 && topmost) ? Poly(Rat(1))
                                          : Poly::a(j - i + 1) - Poly::a(v);
        vals[pos] = v;
        vertical_fillings(boxes, p, pos + 1, v, acc * factor, vals, total);
    }
}

static Poly strip_weight(const std::vector<Cell>& vert, const std::vector<Cell>& horiz,
                         int p, int q) {
    Poly hw, vw;
    std::vector<int> vals(horiz.size());
    if (horiz.empty())
        hw = q == 0 ? Poly(Rat(1)) : Poly();
    else
        horizontal_fillings(horiz, q, 0, 1, Poly(Rat(1)), vals, hw);
    std::vector<int> vvals(vert.size());
    if (vert.empty())
        vw = p == 0 ? Poly(Rat(1)) : Poly();
    else
        vertical_fillings(vert, p, 0, 0, Poly(Rat(1)), vvals, vw);
    return hw * vw;
}

std::map<Partition, Poly> hook_pieri(const Partition& mu, int p, int q, int cap) {
    if (cap < 0) cap = mu.size() + p + q + 4;
    std::map<Partition, Poly> out;
    for (auto& la : partitions_up_to(cap)) {
        if (la == mu || !contains(la, mu)) continue;
        auto decomps = lambda_decompositions(la, mu);
        if (decomps.empty()) continue;
        // northeast most box of the skew shape
        int r0 = 1;
        while (la.part(r0) == mu.part(r0)) ++r0;
        Cell ne{r0, la.part(r0)};
        std::set<std::pair<std::vector<Cell>, std::vector<Cell>>> reduced;
        for (auto& d : decomps) {
            std::vector<Cell> vert = skew_cells(d.outer, d.middle);
            std::vector<Cell> horiz = skew_cells(d.middle, d.inner);
            std::erase(vert, ne);
            std::erase(horiz, ne);
            std::sort(vert.begin(), vert.end());
            std::sort(horiz.begin(), horiz.end(),
                      [](const Cell& a, const Cell& b) { return a.second < b.second; });
            reduced.insert({vert, horiz});
        }
        Poly c;
        for (auto& [vert, horiz] : reduced) c += strip_weight(vert, horiz, p, q);
        if (!c.is_zero()) out[la] = c;
    }
    return out;
}

std::map<Partition, Poly> monk_rule(const Partition& mu, int cap) {
    return hook_pieri(mu, 0, 0, cap);
}

DualSeries delta_dual_schur(const Partition& mu, int cap) {
    DualSeries full = dual_schur(mu, cap);
    DualSeries out;
    out.cap = cap;
    for (auto& [la, c] : full.coeffs) out.add_term(la, eta_delta(c));
    return out;
}

static DualSeries restrict_rect(const DualSeries& f, int rows, int cols) {
    DualSeries out;
    out.cap = f.cap;
    for (auto& [la, c] : f.coeffs)
        if (la.rows() <= rows && la.part(1) <= cols) out.add_term(la, c);
    return out;
}

std::map<Partition, Poly> kl_product(const Partition& la, const Partition& mu, int rows,
                                     int cols, int cap) {
    DualSeries prod = restrict_rect(
        multiply_dual(delta_dual_schur(la, cap), delta_dual_schur(mu, cap)), rows, cols);
    std::map<Partition, Poly> out;
    while (!prod.coeffs.empty()) {
        // the dual Schurs are unitriangular by degree
        auto it = std::min_element(prod.coeffs.begin(), prod.coeffs.end(),
                                   [](const auto& x, const auto& y) {
                                       return std::make_pair(x.first.size(), x.first) <
                                              std::make_pair(y.first.size(), y.first);
                                   });
        Partition nu = it->first;
        Poly c = it->second;
        out[nu] = c;
        DualSeries sub = restrict_rect(delta_dual_schur(nu, cap), rows, cols);
        for (auto& [ka, d] : sub.coeffs) prod.add_term(ka, -(c * d));
    }
    return out;
}

}  // namespace backstable
