#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "schubertkit/perm.hpp"

namespace schubertkit {

// Cell-edge midpoints.
enum class Edge : uint8_t { N = 0, S = 1, E = 2, W = 3 };

// A tile is a set of pipe segments, each joining two edge midpoints of the
// cell. Encoded as a bitmask over the six unordered edge pairs.
enum Conn : uint8_t {
    ConnNS = 1u << 0,
    ConnWE = 1u << 1,
    ConnNE = 1u << 2,
    ConnNW = 1u << 3,
    ConnSE = 1u << 4,
    ConnSW = 1u << 5,
};

class Tile {
  public:
    constexpr Tile() = default;
    constexpr explicit Tile(uint8_t mask) : mask_(mask) {}

    static constexpr Tile blank() { return Tile(0); }
    static constexpr Tile vertical() { return Tile(ConnNS); }
    static constexpr Tile horizontal() { return Tile(ConnWE); }
    static constexpr Tile crossing() { return Tile(ConnNS | ConnWE); }
    static constexpr Tile elbow_ne() { return Tile(ConnNE); }
    static constexpr Tile elbow_nw() { return Tile(ConnNW); }
    static constexpr Tile elbow_se() { return Tile(ConnSE); }
    static constexpr Tile elbow_sw() { return Tile(ConnSW); }
    static constexpr Tile bump_main() { return Tile(ConnNW | ConnSE); }  // pipe dream / almost-BPD bump
    static constexpr Tile bump_anti() { return Tile(ConnNE | ConnSW); }  // co-pipe dream bump

    uint8_t mask() const { return mask_; }
    bool has(Conn c) const { return mask_ & c; }
    Tile with(Conn c) const { return Tile(mask_ | c); }
    Tile without(Conn c) const { return Tile(mask_ & ~c); }

    bool uses(Edge e) const;
    // The other endpoint of the segment entered at edge e (requires uses(e)).
    Edge exit_from(Edge e) const;
    // No edge endpoint used twice and each segment a valid pair.
    bool well_formed() const;

    std::string to_string() const;             // "" blank, "NS|WE" crossing, ...
    static Tile from_string(const std::string& s);

    bool operator==(const Tile&) const = default;
    auto operator<=>(const Tile&) const = default;

  private:
    uint8_t mask_ = 0;
};

enum class Orientation { NE, NW, SE, SW };

std::string to_string(Orientation o);
Orientation orientation_from_string(const std::string& s);

// An n x n tiling interpreted as a planar history of the given orientation.
// NE: pipes enter the bottom edge, exit the right edge, travel north/east.
// NW: enter bottom, exit left. SW: enter top, exit left. SE: enter top,
// exit right.
class TileGrid {
  public:
    TileGrid(int n, Orientation orientation);

    int n() const { return n_; }
    Orientation orientation() const { return orientation_; }

    Tile at(int row, int col) const { return tiles_[index(row, col)]; }
    void set(int row, int col, Tile t) { tiles_[index(row, col)] = t; }

    bool edge_used(int row, int col, Edge e) const { return at(row, col).uses(e); }

    // Full planar-history validation: edge consistency, boundary pattern of
    // the orientation, orientation-consistent tile alphabet.
    bool valid() const;
    std::string validity_error() const;  // empty when valid

    bool operator==(const TileGrid&) const = default;
    auto operator<=>(const TileGrid&) const = default;

  private:
    int index(int row, int col) const;
    int n_;
    Orientation orientation_;
    std::vector<Tile> tiles_;  // row-major
};

// Traced pipes: per pipe the ordered list of visited cells, plus the
// multiset of crossing pairs.
struct PipeTrace {
    std::vector<std::vector<Cell>> paths;            // by pipe id (entry order)
    std::map<std::pair<int, int>, int> crossings;    // {min,max} pipe ids -> count
    std::map<Cell, std::pair<int, int>> crossing_cells;  // cell -> pipe pair
    std::vector<int> bends;                          // elbow count per pipe
};

PipeTrace trace_pipes(const TileGrid& g);

// Label-propagation reading of the permutation of a planar history.
Permutation read_permutation(const TileGrid& g);

// Word of a NE planar history: crossings ordered so labels increase along
// every pipe (topological order, preferring the northernmost available
// crossing), letter = number of pipes passing above-right of the crossing.
Word crossing_word_ne(const TileGrid& g);

bool is_reduced(const TileGrid& g);

TileGrid reflect_to_ne(const TileGrid& g);

// Permutation-preserving local moves of 2x1 / 1x2 / 2x2 blocks; used for
// invariant testing.
struct LocalMove {
    int rows = 0, cols = 0;
    std::vector<Tile> before, after;  // row-major
};
// All move patterns applicable to the given orientation, both directions.
std::vector<LocalMove> local_moves(Orientation o);
// Every grid obtained by applying one applicable local move somewhere.
std::vector<TileGrid> apply_local_moves(const TileGrid& g);

std::string render_ascii(const TileGrid& g);
std::string render_tikz(const TileGrid& g);

}  // namespace schubertkit
