#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "schubertkit/perm.hpp"
#include "schubertkit/pipedream.hpp"
#include "schubertkit/poly.hpp"
#include "schubertkit/tilegrid.hpp"

namespace schubertkit {

// A bumpless pipe dream: NE planar history over the six BPD tiles
// (blank, vertical, horizontal, crossing, SE elbow, NW elbow).
class Bpd {
  public:
    explicit Bpd(TileGrid grid);

    int n() const { return grid_.n(); }
    const TileGrid& grid() const { return grid_; }

    CellSet blanks() const;
    CellSet nw_elbows() const;
    Permutation delta() const { return read_permutation(grid_); }
    bool reduced() const { return is_reduced(grid_); }
    std::vector<int> blank_column_weights() const;

    MultiPoly weight() const;    // prod x_i over blanks
    MultiPoly weight_k() const;  // prod beta x_i over blanks, prod (1 + beta x_i) over NW elbows

    // Same tiling inside BPD_{n+1}, fixing a new last pipe.
    Bpd embedded() const;

    bool operator==(const Bpd&) const = default;
    auto operator<=>(const Bpd&) const = default;

  private:
    TileGrid grid_;
};

// Co-BPD: SE planar history over blank, vertical, horizontal, crossing,
// NE elbow, SW elbow.
class CoBpd {
  public:
    explicit CoBpd(TileGrid grid);

    int n() const { return grid_.n(); }
    const TileGrid& grid() const { return grid_; }
    Permutation delta() const { return read_permutation(grid_); }
    bool reduced() const { return is_reduced(grid_); }

    bool operator==(const CoBpd&) const = default;
    auto operator<=>(const CoBpd&) const = default;

  private:
    TileGrid grid_;
};

// Tile-by-tile companion map.
CoBpd co_bpd(const Bpd& b);
Tile co_bpd_tile(Tile t);

Bpd rothe_bpd(const Permutation& w, int n);

// Exhaustive generation of all valid n x n BPD tilings by row sweep.
// Default cap keeps the row-sweep search at desk scale.
inline constexpr int kDefaultBpdCap = 7;
std::vector<Bpd> all_bpds(int n, int cap = kDefaultBpdCap);
std::map<Permutation, std::vector<Bpd>> all_bpds_by_delta(int n, int cap = kDefaultBpdCap);
std::vector<Bpd> bpds_of(const Permutation& w, int n, bool reduced, int cap = kDefaultBpdCap);

// ---- local moves ----

// Droop rectangle [a,b] x [c,d] of the pipe turning at (a,c). Works on raw
// NE tile arrays so almost-BPDs and cropped patches are accepted.
bool can_droop(const TileGrid& g, int a, int b, int c, int d);
TileGrid droop(const TileGrid& g, int a, int b, int c, int d);

struct MindroopResult {
    TileGrid grid;
    int a, b, c, d;  // the rectangle used
};
// Droop with the minimal rectangle: b and d are the first non-crossing
// offsets below / right of the active elbow at (a,c).
MindroopResult mindroop(const TileGrid& g, Cell active_elbow);

// Exchange the unique bump tile with the crossing of the same two pipes.
TileGrid cross_bump_swap(const TileGrid& g);

// A grid is an almost BPD when it satisfies the BPD conditions except for
// exactly one bump tile.
bool is_almost_bpd(const TileGrid& g);

// Closure of {b} under droop moves with blank destination cells.
std::set<Bpd> droop_closure(const Bpd& b);

// ---- column insertion ----

struct InsertionResult {
    Bpd result;
    std::vector<std::array<int, 4>> mindroops;  // rectangles in order
    std::vector<Cell> swaps;                    // crossing cells swapped into bumps
};
// Huang's column insertion of a blank into column j of a reduced BPD.
InsertionResult column_insert(const Bpd& b, int j);
// Insertion into an arbitrary column: stays at size n for the co-transition
// column alpha(w), otherwise works inside the embedding into size n+1.
InsertionResult column_insert_general(const Bpd& b, int j);

// ---- the canonical bijection ----

// kappa matches reduced pipe dreams with reduced BPDs through the insertion
// recursion; inverse single steps are found by search over BPD(w) with an
// insertion-result match, memoized per (w, column).
class KappaSolver {
  public:
    Bpd kappa(const PipeDream& p);
    PipeDream kappa_inverse(const Bpd& b);

  private:
    const std::map<Bpd, Bpd>& inverse_insertion_table(const Permutation& w, int n, int j);
    std::map<PipeDream, Bpd> memo_;
    std::map<std::tuple<Permutation, int, int>, std::map<Bpd, Bpd>> inverse_tables_;
};

Bpd kappa(const PipeDream& p);
PipeDream kappa_inverse(const Bpd& b);

// ---- windowed (back stable) BPDs ----

// An S_Z BPD supported on [lo, lo + n - 1], stored as its restriction to
// that window. Hooks fill the complement.
class WindowedBpd {
  public:
    WindowedBpd(int lo, Bpd inner);

    int lo() const { return lo_; }
    int hi() const { return lo_ + inner_.n() - 1; }
    const Bpd& inner() const { return inner_; }

    Permutation delta() const;     // as a permutation of Z
    Permutation co_delta() const;  // co-permutation, window independent
    bool reduced() const { return inner_.reduced(); }
    bool co_reduced() const;

    WindowedBpd widened_left() const;
    WindowedBpd widened_right() const;
    // Re-express on a window [new_lo, new_hi] containing the current one.
    WindowedBpd shifted_to(int new_lo, int new_hi) const;

    bool operator==(const WindowedBpd&) const = default;
    auto operator<=>(const WindowedBpd&) const = default;

  private:
    int lo_;
    Bpd inner_;
};

// Rothe S_Z BPD of w on a given window (must contain the support).
WindowedBpd windowed_rothe_bpd(const Permutation& w, int lo, int hi);

// ---- diagram sums ----

// beta-Grothendieck polynomial as beta^{-l(w)} sum of wt_K over all BPDs.
MultiPoly grothendieck_from_bpds(const Permutation& w, int n);
MultiPoly schubert_from_bpds(const Permutation& w, int n);
// And the pipe dream counterparts.
MultiPoly grothendieck_from_pipe_dreams(const Permutation& w, int n);
MultiPoly schubert_from_pipe_dreams(const Permutation& w, int n);

}  // namespace schubertkit
