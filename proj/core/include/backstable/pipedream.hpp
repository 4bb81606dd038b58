#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "backstable/perm.hpp"
#include "backstable/poly.hpp"
#include "backstable/symfunc.hpp"

namespace backstable {

// tiles as edge occupancy bitmasks
namespace tile {
constexpr uint8_t N = 1, E = 2, S = 4, W = 8;
constexpr uint8_t Empty = 0;
constexpr uint8_t SE = S | E;  // pipe turns from south to east
constexpr uint8_t NW = N | W;  // pipe turns from west to north
constexpr uint8_t EW = E | W;
constexpr uint8_t NS = N | S;
constexpr uint8_t Cross = N | E | S | W;
}  // namespace tile

bool tile_valid(uint8_t m);

// grid of tiles on a rectangular region; rows grow downward
struct BumplessPipedream {
    enum class Variant { Square, Rect, Halfplane };
    Variant variant = Variant::Square;
    int rlo = 1, rhi = 0, clo = 1, chi = 0;  // inclusive bounds
    Perm perm;                               // Square and Rect
    Partition shape;                         // Halfplane
    std::vector<uint8_t> grid;               // row major

    int width() const { return chi - clo + 1; }
    int height() const { return rhi - rlo + 1; }
    uint8_t at(int r, int c) const { return grid[(r - rlo) * width() + (c - clo)]; }
    void set(int r, int c, uint8_t m) { grid[(r - rlo) * width() + (c - clo)] = m; }
    bool in_region(int r, int c) const {
        return r >= rlo && r <= rhi && c >= clo && c <= chi;
    }

    auto operator<=>(const BumplessPipedream&) const = default;
};

using Box = std::pair<int, int>;  // (row, col)

BumplessPipedream rothe_dream(const Perm& w, int lo, int hi);  // Square on [lo,hi]^2
BumplessPipedream d0_dream(int n);                             // identity EG dream on [1,n]^2

// full structural check: tiles, edge matching, boundary conditions, pipe
// destinations, crossing multiplicities, empty tile count
bool validate(const BumplessPipedream& d, std::string* why = nullptr);

Poly weight(const BumplessPipedream& d);  // product of x_i - a_j over empties

std::vector<BumplessPipedream> droops(const BumplessPipedream& d);
std::set<BumplessPipedream> enumerate_square(const Perm& w, int lo, int hi);
std::set<BumplessPipedream> enumerate_rect(const Perm& w, int n);
std::set<BumplessPipedream> enumerate_halfplane(const Partition& la, int n);

// Rect: partition read off the north boundary; Square: shape of the empties
// when they are justified into a partition
Partition lambda_of(const BumplessPipedream& d);

bool is_eg(const BumplessPipedream& d);
std::vector<Box> floating_tiles(const BumplessPipedream& d);

// move the empty tile from (r2, c+1) to (r1, c) along the turn of the pipe
// occupying column c of the strip
BumplessPipedream column_move(const BumplessPipedream& d, int r1, int r2, int c);

// repeated column moves sending a dream with one floating tile to an EG dream;
// appends each new empty position to path when given
BumplessPipedream rectify(const BumplessPipedream& d, std::vector<Box>* path = nullptr);

// insertion of a letter into an EG dream; defined when s_i w > w
BumplessPipedream eg_insert(const BumplessPipedream& d, int i, std::vector<Box>* path = nullptr);

// insert a reduced word right to left into the identity dream; returns the
// resulting EG dream and the recording tableau of the shape chain
std::pair<BumplessPipedream, Tableau> eg_pq(const Word& word);

std::set<BumplessPipedream> enumerate_eg(const Perm& w, int n = 0);
std::map<Partition, long> eg_shape_counts(const Perm& w);

std::string render(const BumplessPipedream& d);
BumplessPipedream parse_pipedream(const std::string& text);

}  // namespace backstable
