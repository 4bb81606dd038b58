#include <doctest.h>

#include <algorithm>
#include <optional>

#include "backstable/pipedream.hpp"
#include "backstable/schubert.hpp"

using namespace backstable;

static std::vector<Perm> sym_group(int n) {
    std::vector<int> win;
    for (int i = 1; i <= n; ++i) win.push_back(i);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(1, win));
    } while (std::next_permutation(win.begin(), win.end()));
    return out;
}

TEST_CASE("rothe dreams") {
    BumplessPipedream d0 = d0_dream(3);
    CHECK(is_eg(d0));
    CHECK(lambda_of(d0) == Partition());
    CHECK(weight(d0) == Poly(Rat(1)));
    Perm w(1, {2, 1, 4, 3});
    BumplessPipedream r = rothe_dream(w, 1, 4);
    CHECK(weight(r) == (Poly::x(1) - Poly::a(1)) * (Poly::x(3) - Poly::a(3)));
    CHECK(validate(r));
}

TEST_CASE("square dreams sum to double schuberts") {
    for (auto& w : sym_group(4)) {
        Poly sum;
        for (auto& d : enumerate_square(w, 1, 4)) sum += weight(d);
        CHECK(sum == schubert_double(w));
    }
    CHECK(enumerate_square(Perm(1, {4, 3, 2, 1}), 1, 4).size() == 1);
}

TEST_CASE("square dreams on a shifted window") {
    Perm w = Perm::s(3) * Perm::s(0) * Perm::s(1);
    auto dreams = enumerate_square(w, -1, 4);
    Poly sum;
    bool found = false;
    Poly target = (Poly::x(-1) - Poly::a(-1)) * (Poly::x(1) - Poly::a(0)) *
                  (Poly::x(1) - Poly::a(2));
    for (auto& d : dreams) {
        sum += weight(d);
        if (weight(d) == target) found = true;
    }
    CHECK(found);
    CHECK(sum == backstable_window(w, -1, 4, true));
}

TEST_CASE("rect dreams") {
    for (auto& w : sym_group(3)) {
        auto dreams = enumerate_rect(w, 3);
        CHECK(!dreams.empty());
        long flat = 0;
        Poly flat_sum;
        for (auto& d : dreams) {
            Partition la = lambda_of(d);
            CHECK(length(w) == la.size() + weight(d).degree());
            if (la == Partition()) {
                ++flat;
                flat_sum += weight(d);
            }
        }
        CHECK(flat == static_cast<long>(enumerate_square(w, 1, 3).size()));
        CHECK(flat_sum == schubert_double(w));
    }
}

// column strict tableaux with nonpositive entries bounded below by 1-n
static void ssyt_rec(const Partition& la, int n, Tableau& t, int r, int c, Poly& acc) {
    if (r == la.rows()) {
        Poly term(Rat(1));
        for (int i = 0; i < la.rows(); ++i)
            for (int j = 0; j < la.parts[i]; ++j) {
                int v = t[i][j];
                term = term * (Poly::x(v) - Poly::a(v + (j + 1) - (i + 1)));
            }
        acc += term;
        return;
    }
    int nr = r, nc = c + 1;
    if (nc == la.parts[r]) nr = r + 1, nc = 0;
    int lo = 1 - n;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);          // rows weakly increase
    if (r > 0 && c < la.parts[r - 1]) lo = std::max(lo, t[r - 1][c] + 1);  // columns strict
    for (int v = lo; v <= 0; ++v) {
        t[r][c] = v;
        ssyt_rec(la, n, t, nr, nc, acc);
    }
}

static Poly ssyt_sum(const Partition& la, int n) {
    Tableau t(la.rows());
    for (int i = 0; i < la.rows(); ++i) t[i].assign(la.parts[i], 0);
    Poly acc;
    if (la.rows() == 0) return Poly(Rat(1));
    ssyt_rec(la, n, t, 0, 0, acc);
    return acc;
}

TEST_CASE("halfplane dreams") {
    auto one = enumerate_halfplane(Partition({1}), 1);
    REQUIRE(one.size() == 1);
    CHECK(weight(*one.begin()) == Poly::x(0) - Poly::a(0));

    auto big = enumerate_halfplane(Partition({2, 1, 1}), 4);
    CHECK(big.size() == 15);
    Poly target = (Poly::x(-3) - Poly::a(-3)) * (Poly::x(-2) - Poly::a(-3)) *
                  (Poly::x(-1) - Poly::a(0)) * (Poly::x(0) - Poly::a(-2));
    bool found = false;
    Poly sum;
    for (auto& d : big) {
        sum += weight(d);
        if (weight(d) == target) found = true;
    }
    CHECK(found);
    CHECK(sum == ssyt_sum(Partition({2, 1, 1}), 4));

    for (int n : {2, 3})
        for (auto& la : partitions_up_to(3)) {
            if (la.rows() > n || la.part(1) > n) continue;
            Poly hp;
            for (auto& d : enumerate_halfplane(la, n)) hp += weight(d);
            CHECK(hp == ssyt_sum(la, n));
        }
}

TEST_CASE("eg dreams count stanley coefficients") {
    for (auto& w : sym_group(4)) {
        auto counts = eg_shape_counts(w);
        std::map<Partition, long> expect;
        SymFunc fw = stanley(w);
        for (auto& [la, c] : fw.coeffs())
            expect[la] = static_cast<long>(c.constant_term().convert_to<long>());
        CHECK(counts == expect);
        long total = 0;
        for (auto& [la, c] : counts) total += c * syt_count(la);
        CHECK(total == static_cast<long>(reduced_words(w).size()));
    }
}

TEST_CASE("insertion bijection") {
    for (auto& w : sym_group(4)) {
        auto words = reduced_words(w);
        std::set<std::pair<BumplessPipedream, Tableau>> pairs;
        std::map<Partition, long> q_shapes;
        for (auto& word : words) {
            auto [p, q] = eg_pq(word);
            CHECK(p.perm == w);
            CHECK(is_eg(p));
            Partition shape = lambda_of(p);
            std::vector<int> qrows;
            for (auto& row : q) qrows.push_back(static_cast<int>(row.size()));
            CHECK(Partition(qrows) == shape);
            // rows and columns of the recording tableau increase
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < q[i].size(); ++j) {
                    if (j) CHECK(q[i][j] > q[i][j - 1]);
                    if (i && j < q[i - 1].size()) CHECK(q[i][j] > q[i - 1][j]);
                }
            pairs.insert({p, q});
            ++q_shapes[shape];
        }
        CHECK(pairs.size() == words.size());
        // counts match (#EG dreams of shape) x (#SYT of shape)
        std::map<Partition, long> expect;
        for (auto& [la, c] : eg_shape_counts(w)) expect[la] = c * syt_count(la);
        CHECK(q_shapes == expect);
    }
}

TEST_CASE("descent sets transfer to the recording tableau") {
    for (auto& w : sym_group(4))
        for (auto& word : reduced_words(w)) {
            auto [p, q] = eg_pq(word);
            // descents of the word in insertion order (right to left)
            std::set<int> des;
            int l = static_cast<int>(word.size());
            for (int j = 0; j + 1 < l; ++j)
                if (word[j] < word[j + 1]) des.insert(l - 1 - j);
            CHECK(des == des_set(q));
        }
}

TEST_CASE("insertion can be reversed from the final box") {
    std::map<std::pair<BumplessPipedream, Box>, std::pair<BumplessPipedream, int>> seen;
    for (auto& w : sym_group(4))
        for (auto& d : enumerate_eg(w, 4))
            for (int i = 1; i <= 3; ++i) {
                if (has_left_descent(w, i)) continue;
                std::vector<Box> path;
                BumplessPipedream r = eg_insert(d, i, &path);
                auto key = std::make_pair(r, path.back());
                CHECK(seen.find(key) == seen.end());
                seen[key] = {d, i};
            }
}

TEST_CASE("knuth and coxeter moves commute with insertion") {
    auto try_insert = [](const BumplessPipedream& d, std::initializer_list<int> letters)
        -> std::optional<BumplessPipedream> {
        BumplessPipedream cur = d;
        for (int i : letters) {
            if (has_left_descent(cur.perm, i)) return std::nullopt;
            cur = eg_insert(cur, i);
        }
        return cur;
    };
    int checked = 0;
    for (auto& w : sym_group(4)) {
        if (length(w) > 3) continue;
        for (auto& d : enumerate_eg(w)) {
            // knuth relations for i < j < k
            auto l = try_insert(d, {2, 1, 3}), r = try_insert(d, {2, 3, 1});
            if (l && r) { CHECK(*l == *r); ++checked; }
            auto l2 = try_insert(d, {1, 3, 2}), r2 = try_insert(d, {3, 1, 2});
            if (l2 && r2) { CHECK(*l2 == *r2); ++checked; }
            // coxeter relation
            for (int i : {1, 2}) {
                auto a = try_insert(d, {i, i + 1, i}), b = try_insert(d, {i + 1, i, i + 1});
                if (a && b) { CHECK(*a == *b); ++checked; }
            }
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("render and parse round trip") {
    BumplessPipedream eg213 = parse_pipedream("square;1:2;1:2;1:2,1\n.┌\n┌┼");
    CHECK(eg213 == rothe_dream(Perm::s(1), 1, 2));
    CHECK(is_eg(eg213));
    CHECK(lambda_of(eg213) == Partition({1}));

    std::vector<BumplessPipedream> samples;
    samples.push_back(rothe_dream(Perm(1, {3, 1, 4, 2}), 1, 4));
    samples.push_back(*enumerate_rect(Perm(1, {2, 1}), 2).begin());
    samples.push_back(*enumerate_halfplane(Partition({2, 1}), 2).begin());
    for (auto& d : samples) CHECK(parse_pipedream(render(d)) == d);
    CHECK_THROWS(parse_pipedream("square;1:1;1:1;id\n│"));
}

TEST_CASE("column moves reject bad strips") {
    BumplessPipedream d0 = d0_dream(3);
    CHECK_THROWS(column_move(d0, 1, 2, 1));
    CHECK_THROWS(eg_insert(eg_pq({1}).first, 1));  // pipes already cross
    CHECK(eg_insert(d0, 5).perm == Perm::s(5));    // window grows as needed
    CHECK_THROWS(eg_pq({1, 1}));
}
