#include "backstable/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "backstable/gkm.hpp"
#include "backstable/homology.hpp"
#include "backstable/pipedream.hpp"

namespace backstable {

namespace {

struct Case {
    std::string key;  // sorts smaller windows, then smaller lengths, first
    std::function<bool()> check;
};

int thread_budget() {
    if (const char* env = std::getenv("BACKSTABLE_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void run_cases(std::vector<Case>& cases, SuiteReport& report) {
    report.cases = static_cast<long>(cases.size());
    std::atomic<size_t> next{0};
    std::mutex mtx;
    std::vector<std::string> fails;
    auto work = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            std::string msg;
            try {
                if (!cases[i].check()) msg = cases[i].key;
            } catch (const std::exception& e) {
                msg = cases[i].key + " threw: " + e.what();
            }
            if (!msg.empty()) {
                std::lock_guard<std::mutex> lk(mtx);
                fails.push_back(msg);
            }
        }
    };
    int n = std::min<size_t>(thread_budget(), cases.size());
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    std::sort(fails.begin(), fails.end());
    report.failures = fails;
}

std::string pad2(long v) {
    std::string s = std::to_string(v);
    return s.size() < 2 ? "0" + s : s;
}

std::vector<Perm> perms_of_window(int lo, int hi) {
    std::vector<int> vals;
    for (int i = lo; i <= hi; ++i) vals.push_back(i);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(lo, vals));
    } while (std::next_permutation(vals.begin(), vals.end()));
    return out;
}

std::vector<Perm> sym_group(int n) { return perms_of_window(1, n); }

std::string perm_key(const Perm& w) { return pad2(length(w)) + " w=" + to_string(w); }

Partition hook_shape(int p, int q) {
    std::vector<int> parts{q + 1};
    parts.insert(parts.end(), p, 1);
    return Partition(parts);
}

Poly at_zero(const Poly& f) {
    return substitute(f, [](const VarRef&) { return std::optional<Poly>(Poly()); });
}

// 1: BJS monomial formula against the divided difference definition
void suite_bjs(int n, std::vector<Case>& cases) {
    for (auto& w : sym_group(n))
        cases.push_back({perm_key(w), [w] { return schubert_bjs(w) == schubert_single(w); }});
    std::mt19937 rng(12345);
    std::vector<Perm> big = sym_group(n + 1);
    std::shuffle(big.begin(), big.end(), rng);
    for (int i = 0; i < 20 && i < static_cast<int>(big.size()); ++i) {
        Perm w = big[i];
        cases.push_back(
            {pad2(99) + " " + perm_key(w), [w] { return schubert_bjs(w) == schubert_single(w); }});
    }
}

// 2: droop closure of the Rothe dream computes the double Schubert
void suite_square(int n, std::vector<Case>& cases) {
    for (auto& w : sym_group(n))
        cases.push_back({perm_key(w), [w, n] {
                             Poly sum;
                             for (auto& d : enumerate_square(w, 1, n)) sum += weight(d);
                             return sum == schubert_double(w);
                         }});
}

// 3: rectangle dreams expand the windowed back stable double Schubert
void suite_decomp(int n, std::vector<Case>& cases) {
    for (auto& w : sym_group(n))
        cases.push_back({perm_key(w), [w, n] {
                             Poly sum;
                             for (auto& d : enumerate_rect(w, n))
                                 sum += weight(d) * eps_truncate(double_schur(lambda_of(d)), n);
                             return sum == backstable_window(w, 1 - n, n, true);
                         }});
}

// 4: alternating double Schubert sum telescopes to the delta at the identity
void suite_cancellation(int n, std::vector<Case>& cases) {
    for (auto& w : sym_group(n))
        cases.push_back({perm_key(w), [w] { return cancellation_check(w); }});
}

// 5: coproduct expansion into Stanley times finite Schubert parts
void suite_coproduct(int n, std::vector<Case>& cases) {
    int m = n - 2;
    PermPredicate any = [](const Perm&) { return true; };
    PermPredicate nonzero = [](const Perm& v) { return in_s_nonzero(v); };
    for (auto& w : perms_of_window(-m, m)) {
        if (length(w) > 5) continue;
        cases.push_back({perm_key(w), [w, m, any, nonzero] {
                             Poly sum;
                             for (auto& t : length_additive_factorizations(w, 2, {any, nonzero}))
                                 sum += truncate(stanley(t[0]), 2 * m + 1) *
                                        schubert_nonzero(t[1], false);
                             return sum == backstable_window(w, -2 * m, 2 * m, false);
                         }});
    }
}

// 6: EG dream counts, insertion classes, Stanley coefficients, word counts
void suite_eg(int n, std::vector<Case>& cases) {
    for (auto& w : sym_group(n))
        cases.push_back({perm_key(w), [w] {
            std::map<Partition, long> counts = eg_shape_counts(w);
            SymFunc fw = stanley(w);
            for (auto& [la, c] : fw.coeffs())
                if (c != Poly(Rat(counts.count(la) ? counts.at(la) : 0))) return false;
            for (auto& [la, k] : counts)
                if (fw.coeff(la) != Poly(Rat(k))) return false;
            std::vector<Word> words = reduced_words(w);
            std::map<Partition, std::set<BumplessPipedream>> classes;
            long total = 0;
            for (auto& word : words) {
                auto [p, q] = eg_pq(word);
                classes[lambda_of(p)].insert(p);
                std::set<int> des;
                int l = static_cast<int>(word.size());
                for (int j = 0; j + 1 < l; ++j)
                    if (word[j] < word[j + 1]) des.insert(l - 1 - j);
                if (des != des_set(q)) return false;
            }
            for (auto& [la, k] : counts) {
                if (static_cast<long>(classes[la].size()) != k) return false;
                total += k * syt_count(la);
            }
            return total == static_cast<long>(words.size());
        }});
}

// 7: subword formula, descent recurrence, and window substitution agree
void suite_localization(int n, std::vector<Case>& cases) {
    for (auto& v : sym_group(n))
        for (auto& w : sym_group(n))
            cases.push_back({perm_key(w) + " v=" + to_string(v), [v, w] {
                                 Poly b = billey_localization(v, w);
                                 return b == localization_recurrence(v, w) &&
                                        b == localize_schubert(v, w);
                             }});
    if (n >= 3)
        cases.push_back({"00 examples", [] {
                             Perm s1 = Perm::s(1), s2 = Perm::s(2);
                             return billey_localization(s1, s1 * s2) ==
                                        Poly::a(2) - Poly::a(1) &&
                                    billey_localization(s2, s1 * s2) ==
                                        Poly::a(3) - Poly::a(1) &&
                                    billey_localization(s2 * s1, s2 * s1) ==
                                        (Poly::a(3) - Poly::a(2)) * (Poly::a(3) - Poly::a(1));
                         }});
}

// 8: Jacobi-Trudi, tableaux, halfplane dreams, and the window agree
void suite_double_schur(int n, std::vector<Case>& cases) {
    for (auto& la : partitions_up_to(n * n)) {
        if (la.rows() > n || la.part(1) > n) continue;
        cases.push_back({pad2(la.size()) + " la=" + to_string(la), [la, n] {
                             Poly jt = jacobi_trudi(la, n);
                             if (jt != ssyt_formula(la, n)) return false;
                             Poly sum;
                             for (auto& d : enumerate_halfplane(la, n)) sum += weight(d);
                             if (jt != sum) return false;
                             Perm w = grassmannian_from_partition(la);
                             return jt == backstable_window(w, 1 - n, n, true);
                         }});
    }
}

// 9: degree two double Stanley expansions across the shift family
void suite_double_stanley(int n, std::vector<Case>& cases) {
    for (int k = -(n - 1); k <= n - 1; ++k) {
        cases.push_back({"00 k=" + std::to_string(k) + " up", [k] {
                             DoubleSymFunc expect;
                             expect.add_term(Partition({2}), Poly(Rat(1)));
                             expect.add_term(Partition({1}), Poly::a(1) - Poly::a(k + 1));
                             return double_stanley(Perm::from_word({k + 1, k})) == expect;
                         }});
        cases.push_back({"00 k=" + std::to_string(k) + " down", [k] {
                             DoubleSymFunc expect;
                             expect.add_term(Partition({1, 1}), Poly(Rat(1)));
                             expect.add_term(Partition({1}), Poly::a(k) - Poly::a(0));
                             return double_stanley(Perm::from_word({k - 1, k})) == expect;
                         }});
    }
}

std::map<Partition, Poly> monk_example_one() {
    Poly a0 = Poly::a(0), a1 = Poly::a(1), a2 = Poly::a(2), a3 = Poly::a(3);
    Poly am1 = Poly::a(-1), am2 = Poly::a(-2);
    return {{Partition({2}), Poly(Rat(1))},
            {Partition({1, 1}), Poly(Rat(1))},
            {Partition({3}), a1 - a2},
            {Partition({2, 1}), a1 - a0},
            {Partition({1, 1, 1}), am1 - a0},
            {Partition({4}), (a1 - a2) * (a1 - a3)},
            {Partition({3, 1}), (a1 - a0) * (a1 - a2)},
            {Partition({2, 2}), (a1 - a0) * (a1 - a0)},
            {Partition({2, 1, 1}), (am1 - a0) * (a1 - a0)},
            {Partition({1, 1, 1, 1}), (am1 - a0) * (am2 - a0)}};
}

std::map<Partition, Poly> monk_example_two() {
    Poly a0 = Poly::a(0), a1 = Poly::a(1), a2 = Poly::a(2), a3 = Poly::a(3);
    Poly am2 = Poly::a(-2), am3 = Poly::a(-3);
    return {{Partition({2, 1}), Poly(Rat(1))},
            {Partition({1, 1, 1}), Poly(Rat(1))},
            {Partition({3, 1}), a1 - a2},
            {Partition({2, 2}), a1 - a0},
            {Partition({2, 1, 1}), a1 - a0},
            {Partition({1, 1, 1, 1}), am2 - a0},
            {Partition({4, 1}), (a1 - a2) * (a1 - a3)},
            {Partition({3, 2}), (a1 - a0) * (a1 - a2)},
            {Partition({3, 1, 1}), (a1 - a0) * (a1 - a2)},
            {Partition({2, 2, 1}), (a1 - a0) * (a1 - a0)},
            {Partition({2, 1, 1, 1}), (am2 - a0) * (a1 - a0)},
            {Partition({1, 1, 1, 1, 1}), (am2 - a0) * (am3 - a0)}};
}

// 10: strip rule against the coproduct structure constant oracle
void suite_monk(int n, std::vector<Case>& cases) {
    for (auto& mu : partitions_up_to(n))
        cases.push_back({pad2(mu.size()) + " mu=" + to_string(mu), [mu, n] {
                             int cap = mu.size() + n - 1;
                             auto prod = monk_rule(mu, cap);
                             for (auto& la : partitions_up_to(cap)) {
                                 if (la == mu || !contains(la, mu)) continue;
                                 auto dm = double_eg(skew_perm(la, mu));
                                 auto it = dm.find(Partition({1}));
                                 Poly expect = it == dm.end() ? Poly() : it->second;
                                 auto jt = prod.find(la);
                                 if ((jt == prod.end() ? Poly() : jt->second) != expect)
                                     return false;
                             }
                             return true;
                         }});
    if (n >= 2) {
        cases.push_back(
            {"00 example one", [] { return monk_rule(Partition({1}), 4) == monk_example_one(); }});
        cases.push_back({"00 example two",
                         [] { return monk_rule(Partition({1, 1}), 5) == monk_example_two(); }});
    }
}

// 11: hook strip rule against the oracle and its a = 0 limit
void suite_pieri(int n, std::vector<Case>& cases) {
    for (auto& mu : partitions_up_to(n - 1))
        for (int p = 0; p <= n - 2; ++p)
            for (int q = 0; q <= n - 2; ++q)
                cases.push_back({pad2(p + q) + " mu=" + to_string(mu) + " p=" +
                                     std::to_string(p) + " q=" + std::to_string(q),
                                 [mu, p, q] {
                                     int cap = mu.size() + p + q + 2;
                                     auto prod = hook_pieri(mu, p, q, cap);
                                     Partition nu = hook_shape(p, q);
                                     SymFunc lr = multiply(
                                         SymFunc::basis_elem(Basis::Schur, nu),
                                         SymFunc::basis_elem(Basis::Schur, mu));
                                     for (auto& la : partitions_up_to(cap)) {
                                         if (la == mu || !contains(la, mu)) continue;
                                         auto dm = double_eg(skew_perm(la, mu));
                                         auto it = dm.find(nu);
                                         Poly expect = it == dm.end() ? Poly() : it->second;
                                         auto jt = prod.find(la);
                                         Poly got = jt == prod.end() ? Poly() : jt->second;
                                         if (got != expect) return false;
                                         if (at_zero(got) != lr.coeff(la)) return false;
                                     }
                                     return true;
                                 }});
}

// 12: creation operators rebuild the dual Schur series
void suite_create(int n, std::vector<Case>& cases) {
    for (auto& la : partitions_up_to(n))
        cases.push_back({pad2(la.size()) + " la=" + to_string(la), [la, n] {
                             return create_dual_schur(la, 2 * n) == dual_schur(la, 2 * n);
                         }});
}

// 13: rectangle-restricted product of delta dual Schurs, both expansions
void suite_kl(int n, std::vector<Case>& cases) {
    if (n < 4) return;
    cases.push_back({"00 hs expansion", [] {
                         Poly d = Poly::delta();
                         std::map<Partition, Poly> expect{{Partition({1, 1, 1}), Poly(Rat(1))},
                                                          {Partition({2, 1}), Poly(Rat(1))},
                                                          {Partition({2, 1, 1}), d},
                                                          {Partition({2, 2}), d},
                                                          {Partition({2, 2, 1}), d * d}};
                         return kl_product(Partition({1}), Partition({1, 1}), 4, 3, 12) == expect;
                     }});
    cases.push_back({"00 schur expansion", [] {
        Poly d = Poly::delta();
        DualSeries prod = multiply_dual(delta_dual_schur(Partition({1}), 12),
                                        delta_dual_schur(Partition({1, 1}), 12));
        std::map<Partition, Poly> expect{
            {Partition({1, 1, 1}), Poly(Rat(1))},       {Partition({2, 1}), Poly(Rat(1))},
            {Partition({2, 1, 1}), Rat(2) * d},         {Partition({2, 2}), d},
            {Partition({3, 1}), Rat(2) * d},            {Partition({2, 2, 1}), d * d},
            {Partition({3, 1, 1}), Rat(3) * (d * d)},   {Partition({3, 2}), Rat(2) * (d * d)},
            {Partition({3, 2, 1}), Rat(2) * d.pow(3)},  {Partition({3, 3}), d.pow(3)},
            {Partition({3, 3, 1}), d.pow(4)}};
        for (auto& [la, c] : expect)
            if (prod.coeff(la) != c) return false;
        return true;
    }});
}

// 14: triple hook formula, Lambda factorization route, and b = a limit
void suite_j_hook(int n, std::vector<Case>& cases) {
    for (int i = -(n - 2); i <= n - 1; ++i)
        for (int k = i + 1; k <= n - 1; ++k)
            cases.push_back({pad2(k - i) + " chain i=" + std::to_string(i) + " k=" +
                                 std::to_string(k),
                             [i, k] {
                                 Word word;
                                 for (int j = i; j <= k; ++j) word.push_back(j);
                                 Poly expect(Rat(1));
                                 for (int j = i + 1; j <= k; ++j)
                                     expect = expect * (Poly::a(j) - Poly::b(0));
                                 return triple_eg(Perm::from_word(word), Partition({1})) ==
                                        expect;
                             }});
    for (auto& w : sym_group(n)) {
        if (!lambda_factorizations(w).empty())
            cases.push_back({perm_key(w) + " hook", [w] {
                                 for (int p = 0; p <= 1; ++p)
                                     for (int q = 0; q <= 1; ++q)
                                         if (hook_triple_eg(w, p, q) !=
                                             triple_eg(w, hook_shape(p, q)))
                                             return false;
                                 return true;
                             }});
        cases.push_back({perm_key(w) + " b=a", [w] {
                             auto dm = double_eg(w);
                             for (auto& la : partitions_up_to(static_cast<int>(length(w)))) {
                                 auto it = dm.find(la);
                                 Poly expect = it == dm.end() ? Poly() : it->second;
                                 if (rename_alphabet(triple_eg(w, la), Alpha::B, Alpha::A) !=
                                     expect)
                                     return false;
                             }
                             return true;
                         }});
    }
}

// 15: product expansion examples, shift consistency, integrality
void suite_structure(int n, std::vector<Case>& cases) {
    cases.push_back({"00 example", [] {
                         std::map<Perm, Rat> expect{{Perm::from_word({2, 1}), Rat(1)},
                                                    {Perm::from_word({0, 1}), Rat(1)}};
                         if (structure_constants(Perm::s(1), Perm::s(1)) != expect) return false;
                         std::map<Perm, Rat> shifted;
                         for (auto& [w, c] : expect) shifted[shift(w, 1)] = c;
                         return structure_constants(Perm::s(2), Perm::s(2)) == shifted;
                     }});
    std::vector<Perm> pool;
    for (auto& w : perms_of_window(-(n - 2), n - 2))
        if (length(w) >= 1 && length(w) <= 3) pool.push_back(w);
    if (pool.empty()) return;
    std::mt19937 rng(7);
    std::vector<std::pair<Perm, Perm>> pairs;
    while (pairs.size() < 25) {
        Perm u = pool[rng() % pool.size()];
        Perm v = pool[rng() % pool.size()];
        if (length(u) + length(v) <= 5) pairs.push_back({u, v});
    }
    for (auto& [u, v] : pairs)
        cases.push_back({pad2(length(u) + length(v)) + " u=" + to_string(u) +
                             " v=" + to_string(v),
                         [u, v] {
                             for (auto& [w, c] : structure_constants(u, v))
                                 if (c < 0 || denominator(c) != 1) return false;
                             return true;
                         }});
}

// 16: coefficients stay nonnegative under order-monotone substitutions
void suite_positivity(int n, std::vector<Case>& cases) {
    for (auto& w : perms_of_window(-(n - 2), n - 1)) {
        if (length(w) > 5) continue;
        cases.push_back({perm_key(w), [w] { return positivity_spot_check(w, 10, 99); }});
    }
}

// 17: divisibility of entry differences at reflected points
void suite_gkm(int n, std::vector<Case>& cases) {
    if (n < 2) return;
    std::mt19937 rng(20240823);
    int lo = -(n - 1), hi = n - 1;
    auto rand_perm = [&](int maxlen) {
        Word word;
        int l = static_cast<int>(rng() % (maxlen + 1));
        for (int t = 0; t < l; ++t)
            word.push_back(lo + static_cast<int>(rng() % (hi - lo)));
        return Perm::from_word(word);
    };
    for (int s = 0; s < 100; ++s) {
        Perm v = rand_perm(4);
        Perm w = rand_perm(5);
        int i = lo + static_cast<int>(rng() % (hi - lo + 1));
        int j = lo + static_cast<int>(rng() % (hi - lo + 1));
        while (j == i) j = lo + static_cast<int>(rng() % (hi - lo + 1));
        if (i > j) std::swap(i, j);
        cases.push_back({pad2(s) + " v=" + to_string(v) + " w=" + to_string(w) + " root=a_" +
                             std::to_string(i) + "-a_" + std::to_string(j),
                         [v, w, i, j] {
                             Perm other = Perm::transposition(i, j) * w;
                             LocalizedClass cls = schubert_class(v, {w, other});
                             return gkm_check(cls, i, j, w);
                         }});
    }
}

struct Suite {
    const char* name;
    int size;
    void (*build)(int, std::vector<Case>&);
};

const Suite kSuites[] = {
    {"bjs", 4, suite_bjs},
    {"square", 4, suite_square},
    {"decomp", 3, suite_decomp},
    {"cancellation", 4, suite_cancellation},
    {"coproduct", 4, suite_coproduct},
    {"eg", 4, suite_eg},
    {"localization", 3, suite_localization},
    {"double-schur", 3, suite_double_schur},
    {"double-stanley", 3, suite_double_stanley},
    {"monk", 4, suite_monk},
    {"pieri", 4, suite_pieri},
    {"create", 3, suite_create},
    {"kl", 4, suite_kl},
    {"j-hook", 4, suite_j_hook},
    {"structure", 4, suite_structure},
    {"positivity", 4, suite_positivity},
    {"gkm", 4, suite_gkm},
};

const Suite& find_suite(const std::string& name) {
    for (auto& s : kSuites)
        if (name == s.name) return s;
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (auto& s : kSuites) out.push_back(s.name);
    return out;
}

int default_suite_size(const std::string& name) { return find_suite(name).size; }

SuiteReport run_suite(const std::string& name, int size) {
    const Suite& s = find_suite(name);
    SuiteReport report;
    report.name = name;
    auto start = std::chrono::steady_clock::now();
    std::vector<Case> cases;
    if (size > 0) s.build(std::min(size, s.size), cases);
    run_cases(cases, report);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace backstable
