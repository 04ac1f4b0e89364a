#include "schubertkit/bpd.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>

namespace schubertkit {

namespace {

constexpr uint8_t kBpdMask = ConnNS | ConnWE | ConnSE | ConnNW;

bool bpd_alphabet_ok(const TileGrid& g, bool allow_one_bump) {
    int bumps = 0;
    for (int r = 1; r <= g.n(); ++r)
        for (int c = 1; c <= g.n(); ++c) {
            Tile t = g.at(r, c);
            if (t == Tile::bump_main()) {
                ++bumps;
                continue;
            }
            if (t.mask() & ~kBpdMask) return false;
            if (t.has(ConnSE) && t.has(ConnNW)) return false;
        }
    return allow_one_bump ? bumps == 1 : bumps == 0;
}

}  // namespace

Bpd::Bpd(TileGrid grid) : grid_(std::move(grid)) {
    if (grid_.orientation() != Orientation::NE)
        throw std::domain_error("BPD grids have NE orientation");
    std::string err = grid_.validity_error();
    if (!err.empty()) throw std::domain_error("invalid BPD: " + err);
    if (!bpd_alphabet_ok(grid_, false)) throw std::domain_error("invalid BPD: bump tile");
}

CellSet Bpd::blanks() const {
    CellSet out;
    for (int r = 1; r <= n(); ++r)
        for (int c = 1; c <= n(); ++c)
            if (grid_.at(r, c) == Tile::blank()) out.insert({r, c});
    return out;
}

CellSet Bpd::nw_elbows() const {
    CellSet out;
    for (int r = 1; r <= n(); ++r)
        for (int c = 1; c <= n(); ++c)
            if (grid_.at(r, c) == Tile::elbow_nw()) out.insert({r, c});
    return out;
}

std::vector<int> Bpd::blank_column_weights() const {
    std::vector<int> w(n(), 0);
    for (const Cell& c : blanks()) ++w[c.col - 1];
    return w;
}

MultiPoly Bpd::weight() const {
    MultiPoly out = MultiPoly::constant(1);
    for (const Cell& c : blanks()) out = out * MultiPoly::variable(c.row);
    return out;
}

MultiPoly Bpd::weight_k() const {
    MultiPoly out = MultiPoly::constant(1);
    for (const Cell& c : blanks()) out = out * MultiPoly::beta() * MultiPoly::variable(c.row);
    for (const Cell& c : nw_elbows())
        out = out * (MultiPoly::constant(1) + MultiPoly::beta() * MultiPoly::variable(c.row));
    return out;
}

Bpd Bpd::embedded() const {
    int m = n() + 1;
    TileGrid g(m, Orientation::NE);
    for (int r = 1; r <= n(); ++r)
        for (int c = 1; c <= n(); ++c) g.set(r, c, grid_.at(r, c));
    for (int r = 1; r <= n(); ++r) g.set(r, m, Tile::horizontal());
    for (int c = 1; c <= n(); ++c) g.set(m, c, Tile::vertical());
    g.set(m, m, Tile::elbow_se());
    return Bpd(std::move(g));
}

CoBpd::CoBpd(TileGrid grid) : grid_(std::move(grid)) {
    if (grid_.orientation() != Orientation::SE)
        throw std::domain_error("co-BPD grids have SE orientation");
    std::string err = grid_.validity_error();
    if (!err.empty()) throw std::domain_error("invalid co-BPD: " + err);
}

Tile co_bpd_tile(Tile t) {
    if (t == Tile::elbow_se()) return Tile::elbow_ne();
    if (t == Tile::elbow_nw()) return Tile::elbow_sw();
    if (t == Tile::horizontal()) return Tile::crossing();
    if (t == Tile::vertical()) return Tile::blank();
    if (t == Tile::crossing()) return Tile::horizontal();
    if (t == Tile::blank()) return Tile::vertical();
    throw std::domain_error("tile has no co-BPD companion");
}

CoBpd co_bpd(const Bpd& b) {
    TileGrid g(b.n(), Orientation::SE);
    for (int r = 1; r <= b.n(); ++r)
        for (int c = 1; c <= b.n(); ++c) g.set(r, c, co_bpd_tile(b.grid().at(r, c)));
    return CoBpd(std::move(g));
}

Bpd rothe_bpd(const Permutation& w, int n) {
    if (!w.supported_on(1, n)) throw std::domain_error("support exceeds [1,n]");
    Permutation winv = w.inverse();
    TileGrid g(n, Orientation::NE);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            bool right = c > w(r);   // east of the dot in this row
            bool below = r > winv(c);  // south of the dot in this column
            Tile t;
            if (c == w(r)) t = Tile::elbow_se();
            else if (right && below) t = Tile::crossing();
            else if (right) t = Tile::horizontal();
            else if (below) t = Tile::vertical();
            else t = Tile::blank();
            g.set(r, c, t);
        }
    return Bpd(std::move(g));
}

std::vector<Bpd> all_bpds(int n, int cap) {
    if (n > cap) throw std::runtime_error("BPD enumeration size exceeds cap");
    std::vector<Bpd> out;
    TileGrid g(n, Orientation::NE);
    std::vector<bool> north_used(n + 1, false);
    // Row sweep: given the used state of the north and west edges, the tile
    // is forced except at (0,0) inputs, where blank / SE-elbow branch.
    std::function<void(int, int, bool)> rec = [&](int r, int c, bool west_used) {
        if (r > n) {
            out.emplace_back(g);
            return;
        }
        int nr = c == n ? r + 1 : r;
        int nc = c == n ? 1 : c + 1;
        bool north = north_used[c];
        auto place = [&](Tile t) {
            if (r == n && !t.uses(Edge::S)) return;
            if (c == n && !t.uses(Edge::E)) return;
            g.set(r, c, t);
            bool old_north = north_used[c];
            north_used[c] = t.uses(Edge::S);
            rec(nr, nc, c == n ? false : t.uses(Edge::E));
            north_used[c] = old_north;
        };
        if (!north && !west_used) {
            place(Tile::blank());
            place(Tile::elbow_se());
        } else if (!north && west_used) {
            place(Tile::horizontal());
        } else if (north && !west_used) {
            place(Tile::vertical());
        } else {
            place(Tile::crossing());
            place(Tile::elbow_nw());
        }
    };
    rec(1, 1, false);
    return out;
}

std::map<Permutation, std::vector<Bpd>> all_bpds_by_delta(int n, int cap) {
    std::map<Permutation, std::vector<Bpd>> out;
    for (Bpd& b : all_bpds(n, cap)) {
        Permutation w = b.delta();
        out[std::move(w)].push_back(std::move(b));
    }
    return out;
}

std::vector<Bpd> bpds_of(const Permutation& w, int n, bool reduced, int cap) {
    if (!w.supported_on(1, n)) throw std::domain_error("support exceeds [1,n]");
    std::vector<Bpd> out;
    for (Bpd& b : all_bpds(n, cap)) {
        if (b.delta() != w) continue;
        if (reduced && !b.reduced()) continue;
        out.push_back(std::move(b));
    }
    return out;
}

// ---- droop machinery ----

bool can_droop(const TileGrid& g, int a, int b, int c, int d) {
    if (a >= b || c >= d || a < 1 || c < 1 || b > g.n() || d > g.n()) return false;
    Tile tac = g.at(a, c);
    if (!tac.has(ConnSE)) return false;  // active elbow (plain or bump)
    Tile tbc = g.at(b, c);
    if (!(tbc == Tile::vertical() || tbc == Tile::elbow_nw())) return false;
    Tile tad = g.at(a, d);
    if (!(tad == Tile::horizontal() || tad == Tile::elbow_nw())) return false;
    Tile tbd = g.at(b, d);
    if (!(tbd == Tile::blank() || tbd == Tile::elbow_se())) return false;
    for (int r = a + 1; r < b; ++r) {
        Tile t = g.at(r, c);
        if (!(t == Tile::vertical() || t == Tile::crossing())) return false;
        Tile u = g.at(r, d);
        if (!(u == Tile::blank() || u == Tile::horizontal())) return false;
    }
    for (int k = c + 1; k < d; ++k) {
        Tile t = g.at(a, k);
        if (!(t == Tile::horizontal() || t == Tile::crossing())) return false;
        Tile u = g.at(b, k);
        if (!(u == Tile::blank() || u == Tile::vertical())) return false;
    }
    // no other pipe bends strictly inside the rectangle
    for (int r = a + 1; r < b; ++r)
        for (int k = c + 1; k < d; ++k) {
            Tile t = g.at(r, k);
            if (!(t == Tile::blank() || t == Tile::vertical() || t == Tile::horizontal() ||
                  t == Tile::crossing()))
                return false;
        }
    return true;
}

TileGrid droop(const TileGrid& g, int a, int b, int c, int d) {
    if (!can_droop(g, a, b, c, d)) throw std::domain_error("droop preconditions unmet");
    TileGrid h = g;
    auto swap_tile = [&](int r, int k, Tile from, Tile to) {
        if (h.at(r, k) == from) h.set(r, k, to);
    };
    // active elbow leaves (a,c)
    h.set(a, c, h.at(a, c) == Tile::bump_main() ? Tile::elbow_nw() : Tile::blank());
    for (int r = a + 1; r < b; ++r) {
        swap_tile(r, c, Tile::crossing(), Tile::horizontal());
        swap_tile(r, c, Tile::vertical(), Tile::blank());
        swap_tile(r, d, Tile::blank(), Tile::vertical());
        swap_tile(r, d, Tile::horizontal(), Tile::crossing());
    }
    for (int k = c + 1; k < d; ++k) {
        swap_tile(a, k, Tile::crossing(), Tile::vertical());
        swap_tile(a, k, Tile::horizontal(), Tile::blank());
        swap_tile(b, k, Tile::blank(), Tile::horizontal());
        swap_tile(b, k, Tile::vertical(), Tile::crossing());
    }
    swap_tile(b, c, Tile::vertical(), Tile::elbow_se());
    swap_tile(b, c, Tile::elbow_nw(), Tile::horizontal());
    swap_tile(a, d, Tile::horizontal(), Tile::elbow_se());
    swap_tile(a, d, Tile::elbow_nw(), Tile::vertical());
    swap_tile(b, d, Tile::blank(), Tile::elbow_nw());
    swap_tile(b, d, Tile::elbow_se(), Tile::bump_main());
    return h;
}

MindroopResult mindroop(const TileGrid& g, Cell active_elbow) {
    int a = active_elbow.row, c = active_elbow.col;
    if (!g.at(a, c).has(ConnSE)) throw std::domain_error("no active elbow at the given cell");
    int b = a + 1;
    while (b <= g.n() && g.at(b, c) == Tile::crossing()) ++b;
    int d = c + 1;
    while (d <= g.n() && g.at(a, d) == Tile::crossing()) ++d;
    if (b > g.n() || d > g.n()) throw std::domain_error("mindroop leaves the grid");
    return {droop(g, a, b, c, d), a, b, c, d};
}

bool is_almost_bpd(const TileGrid& g) {
    return g.orientation() == Orientation::NE && g.valid() && bpd_alphabet_ok(g, true);
}

TileGrid cross_bump_swap(const TileGrid& g) {
    std::optional<Cell> bump;
    for (int r = 1; r <= g.n(); ++r)
        for (int c = 1; c <= g.n(); ++c)
            if (g.at(r, c) == Tile::bump_main()) {
                if (bump) throw std::domain_error("more than one bump tile");
                bump = Cell{r, c};
            }
    if (!bump) throw std::domain_error("no bump tile");
    PipeTrace tr = trace_pipes(g);
    std::vector<int> through;
    for (int id = 0; id < static_cast<int>(tr.paths.size()); ++id)
        for (const Cell& cell : tr.paths[id])
            if (cell == *bump) through.push_back(id);
    if (through.size() != 2) throw std::logic_error("bump tile without two pipes");
    auto pair = std::minmax(through[0], through[1]);
    std::optional<Cell> cross;
    for (const auto& [cell, pr] : tr.crossing_cells)
        if (pr == std::pair<int, int>(pair)) {
            if (cross) throw std::domain_error("bump pipes cross more than once");
            cross = cell;
        }
    if (!cross) throw std::domain_error("bump pipes do not cross");
    TileGrid h = g;
    h.set(bump->row, bump->col, Tile::crossing());
    h.set(cross->row, cross->col, Tile::bump_main());
    return h;
}

std::set<Bpd> droop_closure(const Bpd& start) {
    std::set<Bpd> seen{start};
    std::deque<Bpd> frontier{start};
    int n = start.n();
    while (!frontier.empty()) {
        Bpd b = std::move(frontier.front());
        frontier.pop_front();
        for (int a = 1; a <= n; ++a)
            for (int c = 1; c <= n; ++c) {
                if (b.grid().at(a, c) != Tile::elbow_se()) continue;
                for (int bb = a + 1; bb <= n; ++bb)
                    for (int dd = c + 1; dd <= n; ++dd) {
                        if (b.grid().at(bb, dd) != Tile::blank()) continue;
                        if (!can_droop(b.grid(), a, bb, c, dd)) continue;
                        Bpd next(droop(b.grid(), a, bb, c, dd));
                        if (seen.insert(next).second) frontier.push_back(std::move(next));
                    }
            }
    }
    return seen;
}

// ---- column insertion ----

InsertionResult column_insert(const Bpd& b, int j) {
    if (!b.reduced()) throw std::domain_error("column insertion requires a reduced BPD");
    if (j < 1 || j > b.n()) throw std::domain_error("column outside grid");
    TileGrid g = b.grid();
    InsertionResult out{b, {}, {}};

    std::optional<Cell> active;
    for (int r = 1; r <= g.n(); ++r)
        if (g.at(r, j) == Tile::elbow_se()) {
            active = Cell{r, j};
            break;
        }
    if (!active) throw std::domain_error("column has no SE elbow to droop");

    int guard = 4 * g.n() * g.n() + 8;
    while (guard-- > 0) {
        MindroopResult mr = mindroop(g, *active);
        g = std::move(mr.grid);
        out.mindroops.push_back({mr.a, mr.b, mr.c, mr.d});
        if (g.at(mr.b, mr.d) == Tile::elbow_nw()) {
            // keep drooping the next elbow up in the destination column
            active.reset();
            for (int r = mr.b - 1; r >= 1; --r)
                if (g.at(r, mr.d).has(ConnSE)) {
                    active = Cell{r, mr.d};
                    break;
                }
            if (!active) throw std::logic_error("insertion lost its active pipe");
            continue;
        }
        // destination became a bump
        TileGrid resolved = g;
        resolved.set(mr.b, mr.d, Tile::crossing());
        if (is_reduced(resolved)) {
            out.result = Bpd(std::move(resolved));
            return out;
        }
        TileGrid swapped = cross_bump_swap(g);
        // the bump moved to the old crossing cell; its SE part is active
        active.reset();
        for (int r = 1; r <= g.n() && !active; ++r)
            for (int c = 1; c <= g.n() && !active; ++c)
                if (swapped.at(r, c) == Tile::bump_main()) active = Cell{r, c};
        out.swaps.push_back(*active);
        g = std::move(swapped);
    }
    throw std::logic_error("column insertion did not terminate");
}

InsertionResult column_insert_general(const Bpd& b, int j) {
    std::optional<Cell> cell = alpha_cell(b.delta(), b.n());
    if (cell && cell->col == j) return column_insert(b, j);
    return column_insert(b.embedded(), j);
}

// ---- kappa ----

const std::map<Bpd, Bpd>& KappaSolver::inverse_insertion_table(const Permutation& w, int n,
                                                               int j) {
    auto key = std::make_tuple(w, n, j);
    auto it = inverse_tables_.find(key);
    if (it != inverse_tables_.end()) return it->second;
    std::map<Bpd, Bpd> table;
    for (const Bpd& b : bpds_of(w, n, /*reduced=*/true)) {
        Bpd image = column_insert(b, j).result;
        table.emplace(std::move(image), b);
    }
    return inverse_tables_.emplace(key, std::move(table)).first->second;
}

Bpd KappaSolver::kappa(const PipeDream& p) {
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
    if (!p.reduced()) throw std::domain_error("kappa requires a reduced pipe dream");
    int n = p.n();
    Permutation w = p.delta();
    std::optional<Cell> cell = alpha_cell(w, n);
    Bpd result = [&] {
        if (!cell) return rothe_bpd(w, n);  // w = w0, the unique BPD
        Bpd image = kappa(p.with(*cell));
        const auto& table = inverse_insertion_table(w, n, cell->col);
        auto found = table.find(image);
        if (found == table.end())
            throw std::logic_error("kappa: no BPD inserts to the required image");
        return found->second;
    }();
    memo_.emplace(p, result);
    return result;
}

PipeDream KappaSolver::kappa_inverse(const Bpd& b) {
    if (!b.reduced()) throw std::domain_error("kappa inverse requires a reduced BPD");
    Permutation w = b.delta();
    int n = b.n();
    std::optional<Cell> cell = alpha_cell(w, n);
    if (!cell) {
        CellSet all;
        for (int r = 1; r <= n; ++r)
            for (int c = 1; r + c <= n; ++c) all.insert({r, c});
        return PipeDream(n, std::move(all));
    }
    PipeDream image = kappa_inverse(column_insert(b, cell->col).result);
    return image.without(*cell);
}

Bpd kappa(const PipeDream& p) {
    KappaSolver solver;
    return solver.kappa(p);
}

PipeDream kappa_inverse(const Bpd& b) {
    KappaSolver solver;
    return solver.kappa_inverse(b);
}

// ---- windowed BPDs ----

WindowedBpd::WindowedBpd(int lo, Bpd inner) : lo_(lo), inner_(std::move(inner)) {}

Permutation WindowedBpd::delta() const {
    std::vector<int> img = inner_.delta().one_line(1, inner_.n());
    for (int& v : img) v += lo_ - 1;
    return Permutation::from_one_line(std::move(img), lo_);
}

Permutation WindowedBpd::co_delta() const {
    std::vector<int> img = co_bpd(inner_).delta().one_line(1, inner_.n());
    for (int& v : img) v += lo_ - 1;
    return Permutation::from_one_line(std::move(img), lo_);
}

bool WindowedBpd::co_reduced() const { return co_bpd(inner_).reduced(); }

WindowedBpd WindowedBpd::widened_left() const {
    int m = inner_.n() + 1;
    TileGrid g(m, Orientation::NE);
    g.set(1, 1, Tile::elbow_se());
    for (int c = 2; c <= m; ++c) g.set(1, c, Tile::horizontal());
    for (int r = 2; r <= m; ++r) g.set(r, 1, Tile::vertical());
    for (int r = 1; r <= inner_.n(); ++r)
        for (int c = 1; c <= inner_.n(); ++c) g.set(r + 1, c + 1, inner_.grid().at(r, c));
    return WindowedBpd(lo_ - 1, Bpd(std::move(g)));
}

WindowedBpd WindowedBpd::widened_right() const { return WindowedBpd(lo_, inner_.embedded()); }

WindowedBpd WindowedBpd::shifted_to(int new_lo, int new_hi) const {
    if (new_lo > lo_ || new_hi < hi())
        throw std::domain_error("target window must contain the current one");
    WindowedBpd out = *this;
    while (out.lo() > new_lo) out = out.widened_left();
    while (out.hi() < new_hi) out = out.widened_right();
    return out;
}

WindowedBpd windowed_rothe_bpd(const Permutation& w, int lo, int hi) {
    if (!w.supported_on(lo, hi)) throw std::domain_error("w not supported on window");
    std::vector<int> img = w.one_line(lo, hi);
    for (int& v : img) v -= lo - 1;
    Permutation shifted = Permutation::from_one_line(std::move(img));
    return WindowedBpd(lo, rothe_bpd(shifted, hi - lo + 1));
}

// ---- diagram sums ----

MultiPoly grothendieck_from_bpds(const Permutation& w, int n) {
    long long len = w.length();
    MultiPoly out;
    for (const Bpd& b : bpds_of(w, n, /*reduced=*/false)) {
        MultiPoly wk = b.weight_k();
        // divide by beta^{l(w)}: every term has beta exponent >= l(w)
        for (auto& [m, c] : wk.terms()) {
            Monomial m2 = m;
            m2.beta -= static_cast<int>(len);
            if (m2.beta < 0) throw std::logic_error("K-weight with low beta degree");
            out.add_term(std::move(m2), c);
        }
    }
    return out;
}

MultiPoly schubert_from_bpds(const Permutation& w, int n) {
    MultiPoly out;
    for (const Bpd& b : bpds_of(w, n, /*reduced=*/true)) out = out + b.weight();
    return out;
}

MultiPoly grothendieck_from_pipe_dreams(const Permutation& w, int n) {
    long long len = w.length();
    MultiPoly out;
    for (const PipeDream& p : enumerate_pipe_dreams(w, n, /*reduced=*/false)) {
        Monomial m;
        m.beta = p.size() - static_cast<int>(len);
        if (m.beta < 0) throw std::logic_error("pipe dream smaller than length");
        MultiPoly term;
        term.add_term(std::move(m), 1);
        out = out + term * p.weight();
    }
    return out;
}

MultiPoly schubert_from_pipe_dreams(const Permutation& w, int n) {
    MultiPoly out;
    for (const PipeDream& p : enumerate_pipe_dreams(w, n, /*reduced=*/true))
        out = out + p.weight();
    return out;
}

}  // namespace schubertkit
