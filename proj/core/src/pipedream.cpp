#include "backstable/pipedream.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace backstable {

using namespace tile;

bool tile_valid(uint8_t m) {
    return m == Empty || m == SE || m == NW || m == EW || m == NS || m == Cross;
}

static uint8_t opposite(uint8_t e) { return e <= E ? e << 2 : e >> 2; }

BumplessPipedream rothe_dream(const Perm& w, int lo, int hi) {
    BumplessPipedream d;
    d.variant = BumplessPipedream::Variant::Square;
    d.rlo = d.clo = lo;
    d.rhi = d.chi = hi;
    d.perm = w;
    d.grid.assign(d.height() * d.width(), Empty);
    Perm wi = w.inverse();
    for (int r = lo; r <= hi; ++r)
        for (int c = lo; c <= hi; ++c) {
            uint8_t m = Empty;
            if (r == wi(c)) m |= SE;
            if (r > wi(c)) m |= NS;
            if (c > w(r)) m |= EW;
            d.set(r, c, m);
        }
    std::string why;
    if (!validate(d, &why)) throw std::invalid_argument("rothe_dream: " + why);
    return d;
}

BumplessPipedream d0_dream(int n) { return rothe_dream(Perm(), 1, n); }

// south boundary occupancy for a halfplane dream of shape la with n rows
static std::vector<bool> halfplane_entries(const Partition& la, int n) {
    auto [ip, im] = grassmannian_descent_sets(grassmannian_from_partition(la));
    std::set<int> iplus(ip.begin(), ip.end()), iminus(im.begin(), im.end());
    std::vector<bool> south(2 * n, false);  // columns 1-n .. n
    for (int c = 1 - n; c <= n; ++c) {
        bool in = c <= 0 ? !iminus.count(c) : iplus.count(c) != 0;
        south[c - (1 - n)] = in;
    }
    return south;
}

bool validate(const BumplessPipedream& d, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    using V = BumplessPipedream::Variant;
    if (d.height() <= 0 || d.width() <= 0 ||
        static_cast<int>(d.grid.size()) != d.height() * d.width())
        return fail("bad region");
    for (uint8_t m : d.grid)
        if (!tile_valid(m)) return fail("invalid tile");

    // interior edges must match; boundary occupancy per variant
    for (int r = d.rlo; r <= d.rhi; ++r)
        for (int c = d.clo; c <= d.chi; ++c) {
            uint8_t m = d.at(r, c);
            if (c < d.chi && bool(m & E) != bool(d.at(r, c + 1) & W))
                return fail("east edge mismatch");
            if (r < d.rhi && bool(m & S) != bool(d.at(r + 1, c) & N))
                return fail("south edge mismatch");
        }
    std::vector<bool> south(d.width(), true);
    if (d.variant == V::Halfplane) south = halfplane_entries(d.shape, d.height());
    for (int c = d.clo; c <= d.chi; ++c) {
        if (bool(d.at(d.rhi, c) & S) != south[c - d.clo]) return fail("south boundary");
        if (d.variant != V::Rect && (d.at(d.rlo, c) & N)) return fail("north boundary");
    }
    for (int r = d.rlo; r <= d.rhi; ++r) {
        if (d.at(r, d.clo) & W) return fail("west boundary");
        if (!(d.at(r, d.chi) & E)) return fail("east boundary");
    }
    if (d.variant == V::Halfplane)
        for (uint8_t m : d.grid)
            if (m == Cross) return fail("halfplane crossing");

    // trace every pipe from its south entry
    long passes = 0;
    std::map<Box, std::pair<int, int>> cross_pipes;  // cell -> (horizontal, vertical)
    std::vector<std::pair<int, int>> east_exits;     // (entry column, exit row)
    std::vector<int> north_exits;                    // entry columns
    std::vector<int> entries;
    for (int c = d.clo; c <= d.chi; ++c)
        if (south[c - d.clo]) entries.push_back(c);
    for (int c0 : entries) {
        int r = d.rhi, c = c0;
        uint8_t enter = S;
        while (true) {
            ++passes;
            uint8_t m = d.at(r, c);
            if (!(m & enter)) return fail("broken pipe");
            uint8_t exit;
            if (m == Cross) {
                exit = opposite(enter);
                auto& slot = cross_pipes[{r, c}];
                (enter == W || enter == E ? slot.first : slot.second) = c0;
            } else {
                exit = m ^ enter;
            }
            if (exit == N) {
                if (r == d.rlo) {
                    north_exits.push_back(c0);
                    break;
                }
                --r;
                enter = S;
            } else if (exit == E) {
                if (c == d.chi) {
                    east_exits.emplace_back(c0, r);
                    break;
                }
                ++c;
                enter = W;
            } else if (exit == S) {
                if (r == d.rhi) return fail("pipe exits south");
                ++r;
                enter = N;
            } else {
                if (c == d.clo) return fail("pipe exits west");
                --c;
                enter = E;
            }
        }
    }
    long edge_slots = 0;
    for (uint8_t m : d.grid) edge_slots += __builtin_popcount(m);
    if (2 * passes != edge_slots) return fail("unreached edges");

    // each pair of pipes crosses at most once
    std::map<std::pair<int, int>, int> pair_count;
    for (auto& [cell, pq] : cross_pipes) {
        auto key = std::minmax(pq.first, pq.second);
        if (++pair_count[{key.first, key.second}] > 1) return fail("pipes cross twice");
        if (d.variant == V::Rect && (pq.first <= 0 || pq.second <= 0))
            return fail("nonpositive pipe crossing");
    }

    long empties = std::count(d.grid.begin(), d.grid.end(), Empty);
    Perm wi = d.perm.inverse();
    if (d.variant == V::Square || d.variant == V::Rect) {
        for (auto& [c0, r] : east_exits) {
            if (d.variant == V::Rect && c0 <= 0) return fail("nonpositive pipe exits east");
            if (wi(c0) != r) return fail("wrong east exit row");
        }
    }
    if (d.variant == V::Square) {
        if (!north_exits.empty()) return fail("pipe exits north");
        if (empties != length(d.perm)) return fail("wrong empty count");
    } else if (d.variant == V::Rect) {
        for (int c0 : north_exits)
            if (c0 > 0) return fail("positive pipe exits north");
        if (static_cast<int>(north_exits.size()) != d.height()) return fail("wrong exit split");
        Partition la;
        try {
            la = lambda_of(d);
        } catch (const std::exception&) {
            return fail("bad north boundary shape");
        }
        if (empties != length(d.perm) - la.size()) return fail("wrong empty count");
    } else {
        // the i-th eastmost south pipe leaves east in row 1-i
        std::map<int, int> exit_row(east_exits.begin(), east_exits.end());
        if (!north_exits.empty()) return fail("pipe exits north");
        int k = 0;
        for (auto it = entries.rbegin(); it != entries.rend(); ++it, ++k)
            if (!exit_row.count(*it) || exit_row[*it] != -k) return fail("wrong east exit row");
        if (empties != d.shape.size()) return fail("wrong empty count");
    }
    return true;
}

Poly weight(const BumplessPipedream& d) {
    Poly out(Rat(1));
    for (int r = d.rlo; r <= d.rhi; ++r)
        for (int c = d.clo; c <= d.chi; ++c)
            if (d.at(r, c) == Empty) out = out * (Poly::x(r) - Poly::a(c));
    return out;
}

Partition lambda_of(const BumplessPipedream& d) {
    if (d.variant == BumplessPipedream::Variant::Rect) {
        int n = d.height();
        std::vector<int> parts;
        int lefts = 0;
        for (int c = d.chi; c >= d.clo; --c) {
            if (d.at(d.rlo, c) & N)
                parts.push_back(n - lefts);
            else
                ++lefts;
        }
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        return Partition(parts);
    }
    // Square: shape of the empties, which must be top left justified
    std::vector<int> parts;
    for (int r = d.rlo; r <= d.rhi; ++r) {
        int k = 0;
        while (k < d.width() && d.at(r, d.clo + k) == Empty) ++k;
        for (int c = d.clo + k; c <= d.chi; ++c)
            if (d.at(r, c) == Empty)
                throw std::invalid_argument("lambda_of: empties not justified");
        if (k) parts.push_back(k);
        if (k == 0) {
            for (int r2 = r + 1; r2 <= d.rhi; ++r2)
                for (int c = d.clo; c <= d.chi; ++c)
                    if (d.at(r2, c) == Empty)
                        throw std::invalid_argument("lambda_of: empties not justified");
            break;
        }
    }
    return Partition(parts);
}

static bool rm_bits(BumplessPipedream& d, int r, int c, uint8_t bits) {
    uint8_t m = d.at(r, c);
    if ((m & bits) != bits) return false;
    d.set(r, c, m & ~bits);
    return true;
}

static bool add_bits(BumplessPipedream& d, int r, int c, uint8_t bits) {
    uint8_t m = d.at(r, c);
    if (m & bits) return false;
    d.set(r, c, m | bits);
    return true;
}

static std::optional<BumplessPipedream> try_droop(const BumplessPipedream& d, int r1, int c1,
                                                  int r2, int c2) {
    if (d.at(r1, c1) != SE || d.at(r2, c2) != Empty) return std::nullopt;
    // the pipe must run along the whole west column and north row of the rectangle
    for (int r = r1 + 1; r < r2; ++r)
        if ((d.at(r, c1) & NS) != NS) return std::nullopt;
    if (!(d.at(r2, c1) & N)) return std::nullopt;
    for (int c = c1 + 1; c < c2; ++c)
        if ((d.at(r1, c) & EW) != EW) return std::nullopt;
    if (!(d.at(r1, c2) & W)) return std::nullopt;
    // no other elbow inside the rectangle
    for (int r = r1; r <= r2; ++r)
        for (int c = c1; c <= c2; ++c) {
            uint8_t m = d.at(r, c);
            if ((r != r1 || c != c1) && (m == SE || m == NW)) return std::nullopt;
        }
    BumplessPipedream out = d;
    bool ok = rm_bits(out, r1, c1, SE);
    for (int c = c1 + 1; c < c2 && ok; ++c) ok = rm_bits(out, r1, c, EW);
    ok = ok && rm_bits(out, r1, c2, W) && add_bits(out, r1, c2, S);
    for (int r = r1 + 1; r < r2 && ok; ++r) ok = rm_bits(out, r, c1, NS);
    ok = ok && rm_bits(out, r2, c1, N) && add_bits(out, r2, c1, E);
    for (int c = c1 + 1; c < c2 && ok; ++c) ok = add_bits(out, r2, c, EW);
    ok = ok && add_bits(out, r2, c2, NW);
    for (int r = r1 + 1; r < r2 && ok; ++r) ok = add_bits(out, r, c2, NS);
    if (!ok || !validate(out)) return std::nullopt;
    return out;
}

std::vector<BumplessPipedream> droops(const BumplessPipedream& d) {
    std::vector<BumplessPipedream> out;
    for (int r1 = d.rlo; r1 <= d.rhi; ++r1)
        for (int c1 = d.clo; c1 <= d.chi; ++c1) {
            if (d.at(r1, c1) != SE) continue;
            for (int r2 = r1 + 1; r2 <= d.rhi; ++r2)
                for (int c2 = c1 + 1; c2 <= d.chi; ++c2)
                    if (auto nd = try_droop(d, r1, c1, r2, c2)) out.push_back(*nd);
        }
    return out;
}

std::set<BumplessPipedream> enumerate_square(const Perm& w, int lo, int hi) {
    std::set<BumplessPipedream> seen;
    std::queue<BumplessPipedream> todo;
    todo.push(rothe_dream(w, lo, hi));
    seen.insert(todo.front());
    while (!todo.empty()) {
        BumplessPipedream cur = todo.front();
        todo.pop();
        for (auto& nd : droops(cur))
            if (seen.insert(nd).second) todo.push(nd);
    }
    return seen;
}

// fill the region bottom to top, left to right; south and west edges of each
// cell are forced, leaving at most two tile choices
static void backtrack_dreams(BumplessPipedream& d, const std::vector<bool>& south,
                             bool allow_cross, bool top_closed, long max_empties,
                             const std::function<void(const BumplessPipedream&)>& emit) {
    long empties = 0;
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r < d.rlo) {
            emit(d);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc > d.chi) nr = r - 1, nc = d.clo;
        bool need_s = r == d.rhi ? south[c - d.clo] : (d.at(r + 1, c) & N) != 0;
        bool need_w = c > d.clo && (d.at(r, c - 1) & E) != 0;
        uint8_t cands[2];
        int ncand = 0;
        if (need_s && need_w) {
            if (allow_cross) cands[ncand++] = Cross;
        } else if (need_s) {
            cands[ncand++] = SE;
            cands[ncand++] = NS;
        } else if (need_w) {
            cands[ncand++] = NW;
            cands[ncand++] = EW;
        } else {
            cands[ncand++] = Empty;
        }
        for (int k = 0; k < ncand; ++k) {
            uint8_t m = cands[k];
            if (c == d.chi && !(m & E)) continue;
            if (top_closed && r == d.rlo && (m & N)) continue;
            if (m == Empty && empties == max_empties) continue;
            if (m == Empty) ++empties;
            d.set(r, c, m);
            rec(nr, nc);
            if (m == Empty) --empties;
        }
        d.set(r, c, Empty);
    };
    rec(d.rhi, d.clo);
}

std::set<BumplessPipedream> enumerate_rect(const Perm& w, int n) {
    if (!in_s_plus(w) || w.hi() > n)
        throw std::invalid_argument("enumerate_rect: w must lie in S_n");
    BumplessPipedream d;
    d.variant = BumplessPipedream::Variant::Rect;
    d.rlo = 1, d.rhi = n, d.clo = 1 - n, d.chi = n;
    d.perm = w;
    d.grid.assign(d.height() * d.width(), Empty);
    std::vector<bool> south(d.width(), true);
    std::set<BumplessPipedream> out;
    backtrack_dreams(d, south, true, false, length(w), [&](const BumplessPipedream& cand) {
        if (validate(cand)) out.insert(cand);
    });
    return out;
}

std::set<BumplessPipedream> enumerate_halfplane(const Partition& la, int n) {
    if (la.rows() > n || la.part(1) > n)
        throw std::invalid_argument("enumerate_halfplane: shape exceeds n x n");
    BumplessPipedream d;
    d.variant = BumplessPipedream::Variant::Halfplane;
    d.rlo = 1 - n, d.rhi = 0, d.clo = 1 - n, d.chi = n;
    d.shape = la;
    d.grid.assign(d.height() * d.width(), Empty);
    std::set<BumplessPipedream> out;
    backtrack_dreams(d, halfplane_entries(la, n), false, true, la.size(),
                     [&](const BumplessPipedream& cand) {
                         if (validate(cand)) out.insert(cand);
                     });
    return out;
}

std::vector<Box> floating_tiles(const BumplessPipedream& d) {
    // prefix scan: has any nonempty tile appeared weakly northwest
    std::vector<Box> out;
    std::vector<bool> above(d.width(), false);
    for (int r = d.rlo; r <= d.rhi; ++r) {
        bool left = false;
        for (int c = d.clo; c <= d.chi; ++c) {
            bool occupied = d.at(r, c) != Empty;
            bool nw = occupied || above[c - d.clo] || left;
            if (!occupied && nw) out.push_back({r, c});
            above[c - d.clo] = nw;
            left = nw;
        }
    }
    return out;
}

bool is_eg(const BumplessPipedream& d) {
    return d.variant == BumplessPipedream::Variant::Square && floating_tiles(d).empty();
}

// inactive pipes crossing the strip west to east; returns (entry row, exit row)
static std::vector<std::pair<int, int>> strip_traversals(const BumplessPipedream& d, int r1,
                                                         int r2, int c) {
    std::vector<std::pair<int, int>> out;
    for (int r0 = r1 + 1; r0 < r2; ++r0) {
        if (!(d.at(r0, c) & W)) continue;
        int r = r0, cc = c;
        uint8_t enter = W;
        while (true) {
            uint8_t m = d.at(r, cc);
            if (!(m & enter)) throw std::invalid_argument("strip: broken inactive pipe");
            uint8_t exit = m == Cross ? opposite(enter) : uint8_t(m ^ enter);
            if (exit == E) {
                if (cc == c + 1) {
                    out.push_back({r0, r});
                    break;
                }
                ++cc, enter = W;
            } else if (exit == N) {
                if (r == r1) throw std::invalid_argument("strip: pipe escapes north");
                --r, enter = S;
            } else {
                throw std::invalid_argument("strip: pipe heads the wrong way");
            }
        }
    }
    return out;
}

static void place_traversals(BumplessPipedream& d, int c,
                             const std::vector<std::pair<int, int>>& trav) {
    bool ok = true;
    for (auto& [rw, re] : trav) {
        if (re == rw) {
            ok = ok && add_bits(d, rw, c, EW) && add_bits(d, rw, c + 1, EW);
        } else {
            ok = ok && add_bits(d, rw, c, NW);
            for (int r = re + 1; r < rw && ok; ++r) ok = add_bits(d, r, c, NS);
            ok = ok && add_bits(d, re, c, SE) && add_bits(d, re, c + 1, EW);
        }
    }
    if (!ok) throw std::invalid_argument("strip: rerouted pipes collide");
}

BumplessPipedream column_move(const BumplessPipedream& d, int r1, int r2, int c) {
    if (!d.in_region(r1, c) || !d.in_region(r2, c + 1) || r1 >= r2)
        throw std::invalid_argument("column_move: bad strip");
    if (d.at(r1, c) != SE || d.at(r2, c + 1) != Empty)
        throw std::invalid_argument("column_move: strip corners are wrong");
    for (int r = r1; r <= r2; ++r)
        for (int cc = c; cc <= c + 1; ++cc)
            if ((r != r2 || cc != c + 1) && d.at(r, cc) == Empty)
                throw std::invalid_argument("column_move: extra empty tile");
    uint8_t entry = d.at(r2, c), exit = d.at(r1, c + 1);
    if (entry != NS && entry != NW) throw std::invalid_argument("column_move: bad entry tile");
    if (exit != EW && exit != NW) throw std::invalid_argument("column_move: bad exit tile");
    for (int r = r1 + 1; r < r2; ++r)
        if ((d.at(r, c) & NS) != NS)
            throw std::invalid_argument("column_move: pipe must fill the west column");
    auto trav = strip_traversals(d, r1, r2, c);
    BumplessPipedream out = d;
    out.set(r1, c, Empty);
    for (int r = r1 + 1; r < r2; ++r) out.set(r, c, Empty), out.set(r, c + 1, NS);
    out.set(r2, c, entry == NS ? SE : EW);
    out.set(r1, c + 1, exit == EW ? SE : NS);
    out.set(r2, c + 1, NW);
    place_traversals(out, c, trav);
    std::string why;
    if (!validate(out, &why)) throw std::invalid_argument("column_move: " + why);
    return out;
}

BumplessPipedream rectify(const BumplessPipedream& d, std::vector<Box>* path) {
    BumplessPipedream cur = d;
    while (true) {
        auto ft = floating_tiles(cur);
        if (ft.empty()) return cur;
        if (ft.size() != 1)
            throw std::invalid_argument("rectify: more than one floating tile");
        auto [re, ce] = ft[0];
        if (ce == cur.clo) throw std::invalid_argument("rectify: floating tile on west edge");
        uint8_t wm = cur.at(re, ce - 1);
        if (wm != NS && wm != NW)
            throw std::invalid_argument("rectify: no pipe west of the floating tile");
        int r1 = re - 1;
        while (cur.in_region(r1, ce - 1) && cur.at(r1, ce - 1) != SE) {
            if ((cur.at(r1, ce - 1) & NS) != NS)
                throw std::invalid_argument("rectify: pipe does not turn above");
            --r1;
        }
        if (!cur.in_region(r1, ce - 1))
            throw std::invalid_argument("rectify: pipe does not turn above");
        cur = column_move(cur, r1, re, ce - 1);
        if (path) path->push_back({r1, ce - 1});
    }
}

// re-embed a square dream on the larger window [lo', hi'], keeping the perm
static BumplessPipedream extend_square(const BumplessPipedream& d, int lo, int hi) {
    BumplessPipedream out;
    out.variant = BumplessPipedream::Variant::Square;
    out.rlo = out.clo = lo;
    out.rhi = out.chi = hi;
    out.perm = d.perm;
    out.grid.assign(out.height() * out.width(), Empty);
    Perm wi = d.perm.inverse();
    for (int r = lo; r <= hi; ++r)
        for (int c = lo; c <= hi; ++c) {
            if (d.in_region(r, c)) {
                out.set(r, c, d.at(r, c));
            } else {
                uint8_t m = Empty;
                if (r == wi(c)) m |= SE;
                if (r > wi(c)) m |= NS;
                if (c > d.perm(r)) m |= EW;
                out.set(r, c, m);
            }
        }
    std::string why;
    if (!validate(out, &why)) throw std::invalid_argument("extend_square: " + why);
    return out;
}

BumplessPipedream eg_insert(const BumplessPipedream& din, int i, std::vector<Box>* path) {
    if (!is_eg(din)) throw std::invalid_argument("eg_insert: not an EG dream");
    if (i < 1) throw std::invalid_argument("eg_insert: letter out of range");
    BumplessPipedream d =
        i + 1 > din.chi ? extend_square(din, din.clo, std::max(din.chi, i + 1)) : din;
    if (has_left_descent(d.perm, i))
        throw std::invalid_argument("eg_insert: pipes already cross");
    auto first_turn = [&](int c) {
        int r = d.rhi;
        while (d.at(r, c) != SE) {
            if ((d.at(r, c) & NS) != NS)
                throw std::invalid_argument("eg_insert: pipe leaves its column");
            --r;
        }
        return r;
    };
    int ai = first_turn(i), ai1 = first_turn(i + 1);
    if (ai >= ai1) throw std::invalid_argument("eg_insert: turns out of order");
    uint8_t exit = d.at(ai, i + 1);
    if (exit != EW && exit != NW) throw std::invalid_argument("eg_insert: bad exit tile");
    auto trav = strip_traversals(d, ai, ai1, i);
    BumplessPipedream dp = d;
    dp.perm = Perm::s(i) * d.perm;
    dp.set(ai, i, Empty);
    dp.set(ai, i + 1, exit == EW ? SE : NS);
    for (int r = ai + 1; r < ai1; ++r) dp.set(r, i, Empty), dp.set(r, i + 1, NS);
    dp.set(ai1, i, SE);
    dp.set(ai1, i + 1, Cross);
    place_traversals(dp, i, trav);
    std::string why;
    if (!validate(dp, &why)) throw std::invalid_argument("eg_insert: " + why);
    if (path) path->push_back({ai, i});
    return rectify(dp, path);
}

std::pair<BumplessPipedream, Tableau> eg_pq(const Word& word) {
    if (!is_reduced(word)) throw std::invalid_argument("eg_pq: word is not reduced");
    int n = 1;
    for (int a : word) {
        if (a < 1) throw std::invalid_argument("eg_pq: letters must be positive");
        n = std::max(n, a + 1);
    }
    BumplessPipedream p = d0_dream(n);
    Tableau q;
    int steps = static_cast<int>(word.size());
    for (int k = 1; k <= steps; ++k) {
        std::vector<Box> path;
        p = eg_insert(p, word[steps - k], &path);
        auto [r, c] = path.back();
        if (r - 1 == static_cast<int>(q.size())) q.push_back({});
        q[r - 1].push_back(k);
    }
    return {p, q};
}

std::set<BumplessPipedream> enumerate_eg(const Perm& w, int n) {
    if (!in_s_plus(w)) throw std::invalid_argument("enumerate_eg: w must fix all i <= 0");
    std::set<BumplessPipedream> out;
    if (n == 0) n = std::max(1, w.hi());
    if (n < w.hi()) throw std::invalid_argument("enumerate_eg: window too small");
    for (auto& d : enumerate_square(w, 1, n))
        if (is_eg(d)) out.insert(d);
    return out;
}

std::map<Partition, long> eg_shape_counts(const Perm& w) {
    std::map<Partition, long> out;
    for (auto& d : enumerate_eg(w)) ++out[lambda_of(d)];
    return out;
}

static const char* tile_char(uint8_t m) {
    switch (m) {
        case Empty: return ".";
        case SE: return "┌";
        case NW: return "┘";
        case EW: return "─";
        case NS: return "│";
        default: return "┼";
    }
}

std::string render(const BumplessPipedream& d) {
    using V = BumplessPipedream::Variant;
    std::ostringstream os;
    os << (d.variant == V::Square ? "square" : d.variant == V::Rect ? "rect" : "halfplane");
    os << ";" << d.rlo << ":" << d.rhi << ";" << d.clo << ":" << d.chi << ";";
    if (d.variant == V::Halfplane) {
        if (d.shape.rows() == 0) os << "-";
        for (int i = 0; i < d.shape.rows(); ++i) os << (i ? "," : "") << d.shape.parts[i];
    } else {
        os << to_string(d.perm);
    }
    for (int r = d.rlo; r <= d.rhi; ++r) {
        os << "\n";
        for (int c = d.clo; c <= d.chi; ++c) os << tile_char(d.at(r, c));
    }
    return os.str();
}

static std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

static std::pair<int, int> parse_range(const std::string& s) {
    auto parts = split(s, ':');
    if (parts.size() != 2) throw std::invalid_argument("parse: bad range " + s);
    return {std::stoi(parts[0]), std::stoi(parts[1])};
}

static Perm parse_perm_text(const std::string& s) {
    if (s == "id") return Perm();
    auto parts = split(s, ':');
    if (parts.size() != 2) throw std::invalid_argument("parse: bad permutation " + s);
    std::vector<int> win;
    for (auto& v : split(parts[1], ',')) win.push_back(std::stoi(v));
    return Perm(std::stoi(parts[0]), win);
}

BumplessPipedream parse_pipedream(const std::string& text) {
    auto lines = split(text, '\n');
    if (lines.empty()) throw std::invalid_argument("parse: empty input");
    auto head = split(lines[0], ';');
    if (head.size() != 4) throw std::invalid_argument("parse: bad header");
    using V = BumplessPipedream::Variant;
    BumplessPipedream d;
    if (head[0] == "square")
        d.variant = V::Square;
    else if (head[0] == "rect")
        d.variant = V::Rect;
    else if (head[0] == "halfplane")
        d.variant = V::Halfplane;
    else
        throw std::invalid_argument("parse: unknown variant");
    std::tie(d.rlo, d.rhi) = parse_range(head[1]);
    std::tie(d.clo, d.chi) = parse_range(head[2]);
    if (d.variant == V::Halfplane) {
        std::vector<int> parts;
        if (head[3] != "-")
            for (auto& v : split(head[3], ',')) parts.push_back(std::stoi(v));
        d.shape = Partition(parts);
    } else {
        d.perm = parse_perm_text(head[3]);
    }
    if (static_cast<int>(lines.size()) != d.height() + 1)
        throw std::invalid_argument("parse: wrong number of rows");
    d.grid.assign(d.height() * d.width(), Empty);
    static const std::vector<std::pair<std::string, uint8_t>> glyphs = {
        {".", Empty},      {"┌", SE}, {"┘", NW},
        {"─", EW},    {"│", NS}, {"┼", Cross}};
    for (int r = d.rlo; r <= d.rhi; ++r) {
        const std::string& line = lines[r - d.rlo + 1];
        size_t pos = 0;
        for (int c = d.clo; c <= d.chi; ++c) {
            bool found = false;
            for (auto& [g, m] : glyphs)
                if (line.compare(pos, g.size(), g) == 0) {
                    d.set(r, c, m);
                    pos += g.size();
                    found = true;
                    break;
                }
            if (!found) throw std::invalid_argument("parse: bad tile character");
        }
        if (pos != line.size()) throw std::invalid_argument("parse: row too long");
    }
    std::string why;
    if (!validate(d, &why)) throw std::invalid_argument("parse: " + why);
    return d;
}

}  // namespace backstable
