#include "schubertkit/pipedream.hpp"

#include <algorithm>
#include <deque>

namespace schubertkit {

PipeDream::PipeDream(int n, CellSet crossings) : n_(n), crossings_(std::move(crossings)) {
    for (const Cell& c : crossings_)
        if (c.row < 1 || c.col < 1 || !in_staircase(n_, c.row, c.col))
            throw std::domain_error("crossing outside the staircase region");
}

PipeDream PipeDream::with(const Cell& c) const {
    CellSet s = crossings_;
    s.insert(c);
    return PipeDream(n_, std::move(s));
}

PipeDream PipeDream::without(const Cell& c) const {
    CellSet s = crossings_;
    s.erase(c);
    return PipeDream(n_, std::move(s));
}

TileGrid PipeDream::grid() const {
    TileGrid g(n_, Orientation::SW);
    for (int r = 1; r <= n_; ++r)
        for (int c = 1; c <= n_; ++c) {
            if (r + c <= n_)
                g.set(r, c, contains({r, c}) ? Tile::crossing() : Tile::bump_main());
            else if (r + c == n_ + 1)
                g.set(r, c, Tile::elbow_nw());
            else
                g.set(r, c, Tile::blank());
        }
    return g;
}

Word PipeDream::word() const {
    std::vector<Cell> cells(crossings_.begin(), crossings_.end());
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        if (a.col != b.col) return a.col > b.col;
        return a.row < b.row;
    });
    Word w;
    for (const Cell& c : cells) w.push_back(c.row + c.col - 1);
    return w;
}

Permutation PipeDream::delta() const { return demazure_product(word()); }

bool PipeDream::reduced() const { return delta().length() == size(); }

MultiPoly PipeDream::weight() const {
    MultiPoly out = MultiPoly::constant(1);
    for (const Cell& c : crossings_) out = out * MultiPoly::variable(c.row);
    return out;
}

std::vector<int> PipeDream::column_weights() const {
    std::vector<int> w(n_, 0);
    for (const Cell& c : crossings_) ++w[c.col - 1];
    return w;
}

CoPipeDream::CoPipeDream(int n, CellSet crossings) : n_(n), crossings_(std::move(crossings)) {
    for (const Cell& c : crossings_)
        if (c.col < 1 || c.row > n_ || c.row - c.col < 1)
            throw std::domain_error("crossing outside the lower staircase");
}

TileGrid CoPipeDream::grid() const {
    TileGrid g(n_, Orientation::NW);
    for (int r = 1; r <= n_; ++r)
        for (int c = 1; c <= n_; ++c) {
            if (r == c)
                g.set(r, c, Tile::elbow_sw());
            else if (r > c)
                g.set(r, c, crossings_.count({r, c}) ? Tile::crossing() : Tile::bump_anti());
            else
                g.set(r, c, Tile::blank());
        }
    return g;
}

Word CoPipeDream::word() const {
    std::vector<Cell> cells(crossings_.begin(), crossings_.end());
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        if (a.col != b.col) return a.col > b.col;
        return a.row > b.row;
    });
    Word w;
    for (const Cell& c : cells) w.push_back(n_ - c.row + c.col);
    return w;
}

Permutation CoPipeDream::delta() const { return read_permutation(grid()); }

bool CoPipeDream::reduced() const {
    return demazure_product(word()).length() == static_cast<long long>(crossings_.size());
}

CoPipeDream co_pipe_dream(const PipeDream& p) {
    CellSet cells;
    int n = p.n();
    for (int r = 1; r <= n; ++r)
        for (int c = 1; r + c <= n; ++c)
            if (!p.contains({r, c})) cells.insert({r + c, c});
    return CoPipeDream(n, std::move(cells));
}

PipeDream bottom_pipe_dream(const Permutation& w, int n) {
    std::vector<int> code = lehmer_code(w, n);
    CellSet cells;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= code[i - 1]; ++j) cells.insert({i, j});
    return PipeDream(n, std::move(cells));
}

std::set<PipeDream> ladder_successors(const PipeDream& p, LadderKind kind) {
    std::set<PipeDream> out;
    int n = p.n();
    for (int k = 1; k + 1 <= n; ++k) {
        for (int j = 1; j + 1 + k <= n; ++j) {
            if (!p.contains({j + 1, k})) continue;
            if (p.contains({j + 1, k + 1})) continue;
            for (int i = j; i >= 1; --i) {
                // rungs [i+1, j] x [k, k+1] must all be crossings
                if (i < j && !(p.contains({i + 1, k}) && p.contains({i + 1, k + 1}))) break;
                if (p.contains({i, k}) || p.contains({i, k + 1})) continue;
                PipeDream q = kind == LadderKind::Ladder
                                  ? p.without({j + 1, k}).with({i, k + 1})
                                  : p.with({i, k + 1});
                out.insert(std::move(q));
            }
        }
    }
    return out;
}

std::set<PipeDream> enumerate_pipe_dreams(const Permutation& w, int n, bool reduced) {
    PipeDream bottom = bottom_pipe_dream(w, n);
    std::set<PipeDream> seen{bottom};
    std::deque<PipeDream> frontier{bottom};
    while (!frontier.empty()) {
        PipeDream p = std::move(frontier.front());
        frontier.pop_front();
        auto expand = [&](const std::set<PipeDream>& succs) {
            for (const PipeDream& q : succs)
                if (seen.insert(q).second) frontier.push_back(q);
        };
        expand(ladder_successors(p, LadderKind::Ladder));
        if (!reduced) expand(ladder_successors(p, LadderKind::KTheoretic));
    }
    return seen;
}

std::map<Permutation, std::set<PipeDream>> all_pipe_dreams_by_delta(int n) {
    std::vector<Cell> cells;
    for (int r = 1; r <= n; ++r)
        for (int c = 1; r + c <= n; ++c) cells.push_back({r, c});
    if (cells.size() > 24) throw std::runtime_error("staircase too large to enumerate");
    std::map<Permutation, std::set<PipeDream>> out;
    for (uint32_t mask = 0; mask < (1u << cells.size()); ++mask) {
        CellSet s;
        for (size_t b = 0; b < cells.size(); ++b)
            if (mask & (1u << b)) s.insert(cells[b]);
        PipeDream p(n, std::move(s));
        out[p.delta()].insert(std::move(p));
    }
    return out;
}

std::map<PipeDream, std::pair<PipeDream, Permutation>> pd_cotransition(const Permutation& w,
                                                                       int n) {
    std::optional<Cell> cell = alpha_cell(w, n);
    if (!cell) throw std::domain_error("alpha(w) undefined: w is the longest permutation");
    std::map<PipeDream, std::pair<PipeDream, Permutation>> out;
    for (const PipeDream& p : enumerate_pipe_dreams(w, n, false)) {
        PipeDream q = p.with(*cell);
        Permutation u = q.delta();
        out.emplace(p, std::make_pair(std::move(q), std::move(u)));
    }
    return out;
}

}  // namespace schubertkit
