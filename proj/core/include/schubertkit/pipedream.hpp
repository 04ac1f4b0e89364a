#pragma once

#include <map>
#include <set>
#include <vector>

#include "schubertkit/perm.hpp"
#include "schubertkit/poly.hpp"
#include "schubertkit/tilegrid.hpp"

namespace schubertkit {

// Staircase region of pipe dream crossings.
inline bool in_staircase(int n, int row, int col) { return row + col <= n; }

// A pipe dream of size n, identified with its set of crossing cells inside
// T_n = {(i,j) : i + j <= n}. The tile realization is a SW planar history.
class PipeDream {
  public:
    PipeDream(int n, CellSet crossings);

    int n() const { return n_; }
    const CellSet& crossings() const { return crossings_; }
    bool contains(const Cell& c) const { return crossings_.count(c) > 0; }
    int size() const { return static_cast<int>(crossings_.size()); }

    PipeDream with(const Cell& c) const;
    PipeDream without(const Cell& c) const;

    TileGrid grid() const;
    Word word() const;                 // right-to-left, top-down in columns, letter i+j-1
    Permutation delta() const;
    bool reduced() const;              // #crossings == length of delta
    MultiPoly weight() const;          // prod x_i over crossings
    std::vector<int> column_weights() const;

    bool operator==(const PipeDream&) const = default;
    auto operator<=>(const PipeDream&) const = default;

  private:
    int n_;
    CellSet crossings_;
};

// Co-pipe dreams live in the lower staircase; the tile realization is a NW
// planar history with crossings inside {(i,j) : i - j >= 1}.
class CoPipeDream {
  public:
    CoPipeDream(int n, CellSet crossings);

    int n() const { return n_; }
    const CellSet& crossings() const { return crossings_; }

    TileGrid grid() const;
    Word word() const;                 // right-to-left, bottom-up in columns, letter n-i+j
    Permutation delta() const;         // NW reading; equals demazure(word) * w0
    bool reduced() const;

    bool operator==(const CoPipeDream&) const = default;
    auto operator<=>(const CoPipeDream&) const = default;

  private:
    int n_;
    CellSet crossings_;
};

// The change-of-basis companion: complement within T_n, pushed down columns.
CoPipeDream co_pipe_dream(const PipeDream& p);

PipeDream bottom_pipe_dream(const Permutation& w, int n);

enum class LadderKind { Ladder, KTheoretic };
std::set<PipeDream> ladder_successors(const PipeDream& p, LadderKind kind);

// Pipes(w) as a ladder-move closure of the bottom pipe dream; with
// reduced=false the closure under both move kinds, which is obar Pipes(w).
std::set<PipeDream> enumerate_pipe_dreams(const Permutation& w, int n, bool reduced);

// All 2^|T_n| subsets grouped by Demazure product. Test oracle.
std::map<Permutation, std::set<PipeDream>> all_pipe_dreams_by_delta(int n);

// Co-transition on pipe dreams: every P in obar Pipes(w) maps to
// P + alpha-cell; the returned map records the image and its permutation.
std::map<PipeDream, std::pair<PipeDream, Permutation>> pd_cotransition(const Permutation& w,
                                                                       int n);

}  // namespace schubertkit
