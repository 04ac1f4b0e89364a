#include "schubertkit/tilegrid.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace schubertkit {

namespace {

struct ConnInfo {
    Conn conn;
    Edge a, b;
    const char* name;
};

constexpr ConnInfo kConns[] = {
    {ConnNS, Edge::N, Edge::S, "NS"}, {ConnWE, Edge::W, Edge::E, "WE"},
    {ConnNE, Edge::N, Edge::E, "NE"}, {ConnNW, Edge::N, Edge::W, "NW"},
    {ConnSE, Edge::S, Edge::E, "SE"}, {ConnSW, Edge::S, Edge::W, "SW"},
};

}  // namespace

bool Tile::uses(Edge e) const {
    for (const auto& ci : kConns)
        if (has(ci.conn) && (ci.a == e || ci.b == e)) return true;
    return false;
}

Edge Tile::exit_from(Edge e) const {
    for (const auto& ci : kConns) {
        if (!has(ci.conn)) continue;
        if (ci.a == e) return ci.b;
        if (ci.b == e) return ci.a;
    }
    throw std::logic_error("no pipe segment at this edge");
}

bool Tile::well_formed() const {
    if (mask_ >= 64) return false;
    int edge_count[4] = {0, 0, 0, 0};
    for (const auto& ci : kConns)
        if (has(ci.conn)) {
            ++edge_count[static_cast<int>(ci.a)];
            ++edge_count[static_cast<int>(ci.b)];
        }
    return std::all_of(std::begin(edge_count), std::end(edge_count),
                       [](int c) { return c <= 1; });
}

std::string Tile::to_string() const {
    std::string out;
    for (const auto& ci : kConns)
        if (has(ci.conn)) {
            if (!out.empty()) out += '|';
            out += ci.name;
        }
    return out;
}

Tile Tile::from_string(const std::string& s) {
    Tile t;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '|')) {
        if (part.empty() || part == ".") continue;
        bool found = false;
        for (const auto& ci : kConns)
            if (part == ci.name) {
                t = t.with(ci.conn);
                found = true;
            }
        if (!found) throw std::domain_error("unknown tile segment: " + part);
    }
    if (!t.well_formed()) throw std::domain_error("malformed tile: " + s);
    return t;
}

std::string to_string(Orientation o) {
    switch (o) {
        case Orientation::NE: return "NE";
        case Orientation::NW: return "NW";
        case Orientation::SE: return "SE";
        case Orientation::SW: return "SW";
    }
    throw std::logic_error("bad orientation");
}

Orientation orientation_from_string(const std::string& s) {
    if (s == "NE") return Orientation::NE;
    if (s == "NW") return Orientation::NW;
    if (s == "SE") return Orientation::SE;
    if (s == "SW") return Orientation::SW;
    throw std::domain_error("unknown orientation: " + s);
}

TileGrid::TileGrid(int n, Orientation orientation)
    : n_(n), orientation_(orientation), tiles_(static_cast<size_t>(n) * n) {
    if (n < 1) throw std::domain_error("grid size must be positive");
}

int TileGrid::index(int row, int col) const {
    if (row < 1 || row > n_ || col < 1 || col > n_)
        throw std::domain_error("cell outside grid");
    return (row - 1) * n_ + (col - 1);
}

namespace {

// Travel directions per orientation: pipes enter on `entry` side, exit on
// `exit` side. Allowed connections follow from the two travel directions.
struct OrientationInfo {
    Edge entry;           // boundary side where pipes start
    Edge exit;            // boundary side where pipes end
    uint8_t alphabet;     // allowed connection bits
};

OrientationInfo info(Orientation o) {
    switch (o) {
        case Orientation::NE:
            return {Edge::S, Edge::E, ConnNS | ConnWE | ConnSE | ConnNW};
        case Orientation::NW:
            return {Edge::S, Edge::W, ConnNS | ConnWE | ConnSW | ConnNE};
        case Orientation::SW:
            return {Edge::N, Edge::W, ConnNS | ConnWE | ConnSE | ConnNW};
        case Orientation::SE:
            return {Edge::N, Edge::E, ConnNS | ConnWE | ConnNE | ConnSW};
    }
    throw std::logic_error("bad orientation");
}

}  // namespace

std::string TileGrid::validity_error() const {
    OrientationInfo oi = info(orientation_);
    for (int r = 1; r <= n_; ++r)
        for (int c = 1; c <= n_; ++c) {
            Tile t = at(r, c);
            if (!t.well_formed()) return "malformed tile";
            if (t.mask() & ~oi.alphabet) return "tile not in orientation alphabet";
        }
    // interior edge consistency
    for (int r = 1; r <= n_; ++r)
        for (int c = 1; c < n_; ++c)
            if (edge_used(r, c, Edge::E) != edge_used(r, c + 1, Edge::W))
                return "horizontal edge mismatch";
    for (int r = 1; r < n_; ++r)
        for (int c = 1; c <= n_; ++c)
            if (edge_used(r, c, Edge::S) != edge_used(r + 1, c, Edge::N))
                return "vertical edge mismatch";
    // boundary pattern: entry and exit sides fully used, others empty
    auto boundary = [&](Edge side, int k) {
        switch (side) {
            case Edge::N: return edge_used(1, k, Edge::N);
            case Edge::S: return edge_used(n_, k, Edge::S);
            case Edge::W: return edge_used(k, 1, Edge::W);
            case Edge::E: return edge_used(k, n_, Edge::E);
        }
        throw std::logic_error("bad side");
    };
    for (Edge side : {Edge::N, Edge::S, Edge::E, Edge::W}) {
        bool should = (side == oi.entry || side == oi.exit);
        for (int k = 1; k <= n_; ++k)
            if (boundary(side, k) != should)
                return should ? "missing boundary pipe" : "stray boundary pipe";
    }
    return "";
}

bool TileGrid::valid() const { return validity_error().empty(); }

namespace {

// Directed walk one step: from cell (r,c) leaving through edge `out`,
// yields the neighbor cell and the edge through which it is entered.
bool step(const TileGrid& g, int& r, int& c, Edge out, Edge& in) {
    switch (out) {
        case Edge::N: --r; in = Edge::S; break;
        case Edge::S: ++r; in = Edge::N; break;
        case Edge::E: ++c; in = Edge::W; break;
        case Edge::W: --c; in = Edge::E; break;
    }
    return r >= 1 && r <= g.n() && c >= 1 && c <= g.n();
}

}  // namespace

PipeTrace trace_pipes(const TileGrid& g) {
    PipeTrace out;
    OrientationInfo oi = info(g.orientation());
    // (cell, entry edge) pairs already consumed
    std::set<std::tuple<int, int, Edge>> seen;
    std::map<Cell, std::vector<int>> pipes_at_cell;

    auto run = [&](int r0, int c0, Edge in0) {
        int id = static_cast<int>(out.paths.size());
        out.paths.emplace_back();
        out.bends.push_back(0);
        int r = r0, c = c0;
        Edge in = in0;
        while (true) {
            seen.insert({r, c, in});
            out.paths[id].push_back({r, c});
            pipes_at_cell[{r, c}].push_back(id);
            Edge ex = g.at(r, c).exit_from(in);
            seen.insert({r, c, ex});
            if ((in == Edge::N || in == Edge::S) != (ex == Edge::N || ex == Edge::S) &&
                !(g.at(r, c).has(ConnNS) && g.at(r, c).has(ConnWE)))
                ++out.bends[id];
            if (!step(g, r, c, ex, in)) break;
        }
    };

    // seed entry-side boundary edges in label order, then any other used
    // boundary edges (cropped patches)
    auto seed_side = [&](Edge side) {
        for (int k = 1; k <= g.n(); ++k) {
            int r, c;
            switch (side) {
                case Edge::N: r = 1; c = k; break;
                case Edge::S: r = g.n(); c = k; break;
                case Edge::W: r = k; c = 1; break;
                case Edge::E: r = k; c = g.n(); break;
            }
            if (g.at(r, c).uses(side) && !seen.count({r, c, side})) run(r, c, side);
        }
    };
    seed_side(oi.entry);
    for (Edge side : {Edge::N, Edge::S, Edge::W, Edge::E})
        if (side != oi.entry) seed_side(side);

    for (const auto& [cell, ids] : pipes_at_cell) {
        Tile t = g.at(cell.row, cell.col);
        if (t.has(ConnNS) && t.has(ConnWE) && ids.size() == 2) {
            auto pr = std::minmax(ids[0], ids[1]);
            out.crossings[pr] += 1;
            out.crossing_cells[cell] = pr;
        }
    }
    return out;
}

bool is_reduced(const TileGrid& g) {
    PipeTrace t = trace_pipes(g);
    for (const auto& [pair, count] : t.crossings)
        if (count > 1) return false;
    return true;
}

Permutation read_permutation(const TileGrid& g) {
    std::string err = g.validity_error();
    if (!err.empty()) throw std::domain_error("invalid planar history: " + err);
    int n = g.n();
    Orientation o = g.orientation();
    // labels on the two incoming edge families, swept in dependency order
    std::vector<int> col_labels(n + 2, 0);  // label entering vertically per column
    std::vector<int> exit_labels(n + 1, 0);

    bool from_south = (o == Orientation::NE || o == Orientation::NW);
    bool to_west = (o == Orientation::NW || o == Orientation::SW);

    for (int c = 1; c <= n; ++c) col_labels[c] = c;  // entry labels left-to-right

    for (int step = 0; step < n; ++step) {
        int r = from_south ? n - step : 1 + step;
        int row_label = 0;  // label travelling horizontally within this row
        for (int hstep = 0; hstep < n; ++hstep) {
            int c = to_west ? n - hstep : 1 + hstep;
            Tile t = g.at(r, c);
            Edge vin = from_south ? Edge::S : Edge::N;
            Edge hin = to_west ? Edge::E : Edge::W;
            int vlab = t.uses(vin) ? col_labels[c] : 0;
            int hlab = t.uses(hin) ? row_label : 0;
            int vout = 0, hout = 0;
            if (t.has(ConnNS) && t.has(ConnWE)) {
                // crossing: vertical continues with max for N*/S* travel to
                // the side named in the orientation rules
                bool vertical_gets_max = (o == Orientation::NE || o == Orientation::SW)
                                             ? true
                                             : false;
                // NE: top<-max right<-min; SW: bottom<-min left<-max  (vertical gets max? no)
                // handled explicitly below
                (void)vertical_gets_max;
                int mn = std::min(vlab, hlab), mx = std::max(vlab, hlab);
                switch (o) {
                    case Orientation::NE: vout = mx; hout = mn; break;  // N<-max, E<-min
                    case Orientation::SW: vout = mn; hout = mx; break;  // S<-min, W<-max
                    case Orientation::NW: vout = mn; hout = mx; break;  // N<-min, W<-max
                    case Orientation::SE: vout = mx; hout = mn; break;  // S<-max, E<-min
                }
            } else {
                for (const auto& ci : kConns) {
                    if (!t.has(ci.conn)) continue;
                    Edge a = ci.a, b = ci.b;
                    auto route = [&](Edge from, Edge to) {
                        int lab = (from == vin) ? vlab : hlab;
                        if (to == Edge::N || to == Edge::S) vout = lab;
                        else hout = lab;
                    };
                    if (a == vin || b == vin) route(vin, a == vin ? b : a);
                    else if (a == hin || b == hin) route(hin, a == hin ? b : a);
                }
            }
            col_labels[c] = vout;
            row_label = hout;
        }
        exit_labels[r] = row_label;
    }
    std::vector<int> img(exit_labels.begin() + 1, exit_labels.end());
    return Permutation::from_one_line(std::move(img));
}

Word crossing_word_ne(const TileGrid& g) {
    if (g.orientation() != Orientation::NE)
        throw std::domain_error("crossing word requires a NE planar history");
    PipeTrace tr = trace_pipes(g);
    // collect crossings and the order they occur along each pipe
    std::vector<Cell> cells;
    std::map<Cell, int> index_of;
    for (const auto& [cell, pr] : tr.crossing_cells) {
        index_of[cell] = static_cast<int>(cells.size());
        cells.push_back(cell);
    }
    int m = static_cast<int>(cells.size());
    std::vector<std::vector<int>> succ(m);
    std::vector<int> indeg(m, 0);
    for (const auto& path : tr.paths) {
        int prev = -1;
        for (const Cell& cell : path) {
            auto it = index_of.find(cell);
            if (it == index_of.end()) continue;
            if (prev >= 0) {
                succ[prev].push_back(it->second);
                ++indeg[it->second];
            }
            prev = it->second;
        }
    }
    // topological order preferring the northernmost (then westmost) crossing
    auto cmp = [&](int a, int b) {
        return std::make_pair(cells[a].row, cells[a].col) >
               std::make_pair(cells[b].row, cells[b].col);
    };
    std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
    for (int i = 0; i < m; ++i)
        if (indeg[i] == 0) ready.push(i);
    Word word;
    while (!ready.empty()) {
        int i = ready.top();
        ready.pop();
        const Cell& cell = cells[i];
        int letter = 0;
        for (int r = 1; r < cell.row; ++r)
            if (g.edge_used(r, cell.col, Edge::E)) ++letter;
        word.push_back(letter);
        for (int j : succ[i])
            if (--indeg[j] == 0) ready.push(j);
    }
    if (static_cast<int>(word.size()) != m)
        throw std::logic_error("crossing order is cyclic");
    return word;
}

namespace {

Tile mirror_h(Tile t) {  // swap E <-> W
    uint8_t m = 0;
    if (t.has(ConnNS)) m |= ConnNS;
    if (t.has(ConnWE)) m |= ConnWE;
    if (t.has(ConnNE)) m |= ConnNW;
    if (t.has(ConnNW)) m |= ConnNE;
    if (t.has(ConnSE)) m |= ConnSW;
    if (t.has(ConnSW)) m |= ConnSE;
    return Tile(m);
}

Tile mirror_v(Tile t) {  // swap N <-> S
    uint8_t m = 0;
    if (t.has(ConnNS)) m |= ConnNS;
    if (t.has(ConnWE)) m |= ConnWE;
    if (t.has(ConnNE)) m |= ConnSE;
    if (t.has(ConnSE)) m |= ConnNE;
    if (t.has(ConnNW)) m |= ConnSW;
    if (t.has(ConnSW)) m |= ConnNW;
    return Tile(m);
}

}  // namespace

TileGrid reflect_to_ne(const TileGrid& g) {
    int n = g.n();
    bool flip_cols = g.orientation() == Orientation::NW || g.orientation() == Orientation::SW;
    bool flip_rows = g.orientation() == Orientation::SE || g.orientation() == Orientation::SW;
    TileGrid out(n, Orientation::NE);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            Tile t = g.at(r, c);
            int rr = flip_rows ? n + 1 - r : r;
            int cc = flip_cols ? n + 1 - c : c;
            if (flip_cols) t = mirror_h(t);
            if (flip_rows) t = mirror_v(t);
            out.set(rr, cc, t);
        }
    return out;
}

std::vector<LocalMove> local_moves(Orientation o) {
    auto T = [](const char* s) { return Tile::from_string(s); };
    std::vector<LocalMove> base;
    // elbow slides past a vertical strand / horizontal strand / crossing
    base.push_back({2, 3,
                    {T("SE"), T("NS|WE"), T("WE"), T("NS"), T("NS"), T("")},
                    {T(""), T("NS"), T("SE"), T("SE"), T("NS|WE"), T("NW")}});
    base.push_back({3, 2,
                    {T("SE"), T("WE"), T("NS|WE"), T("WE"), T("NS"), T("")},
                    {T(""), T("SE"), T("WE"), T("NS|WE"), T("SE"), T("NW")}});
    base.push_back({3, 3,
                    {T("SE"), T("NS|WE"), T("WE"), T("NS|WE"), T("NS|WE"), T("WE"),
                     T("NS"), T("NS"), T("")},
                    {T(""), T("NS"), T("SE"), T("WE"), T("NS|WE"), T("NS|WE"),
                     T("SE"), T("NS|WE"), T("NW")}});
    // bump/cross exchanges between two pipes that meet twice; the corners may
    // carry further strands, so both plain-elbow and bump corners appear
    for (Tile tl : {T("SE"), T("NW|SE")})
        for (Tile br : {T("NW"), T("NW|SE")}) {
            std::vector<Tile> X = {tl, T("NS|WE"), T("NW|SE"), br};
            std::vector<Tile> Y = {tl, T("NS|WE"), T("NS|WE"), br};
            std::vector<Tile> Z = {tl, T("NW|SE"), T("NS|WE"), br};
            base.push_back({2, 2, X, Y});
            base.push_back({2, 2, Y, Z});
            base.push_back({2, 2, X, Z});
        }

    // both directions
    std::vector<LocalMove> out;
    for (const LocalMove& mv : base) {
        out.push_back(mv);
        out.push_back({mv.rows, mv.cols, mv.after, mv.before});
    }
    if (o == Orientation::NW || o == Orientation::SE) {
        // mirror every pattern horizontally
        for (LocalMove& mv : out) {
            LocalMove m{mv.rows, mv.cols, {}, {}};
            m.before.resize(mv.before.size());
            m.after.resize(mv.after.size());
            for (int r = 0; r < mv.rows; ++r)
                for (int c = 0; c < mv.cols; ++c) {
                    m.before[r * mv.cols + (mv.cols - 1 - c)] = mirror_h(mv.before[r * mv.cols + c]);
                    m.after[r * mv.cols + (mv.cols - 1 - c)] = mirror_h(mv.after[r * mv.cols + c]);
                }
            mv = m;
        }
    }
    return out;
}

std::vector<TileGrid> apply_local_moves(const TileGrid& g) {
    std::vector<TileGrid> out;
    for (const LocalMove& mv : local_moves(g.orientation())) {
        for (int r0 = 1; r0 + mv.rows - 1 <= g.n(); ++r0)
            for (int c0 = 1; c0 + mv.cols - 1 <= g.n(); ++c0) {
                bool match = true;
                for (int r = 0; r < mv.rows && match; ++r)
                    for (int c = 0; c < mv.cols && match; ++c)
                        if (g.at(r0 + r, c0 + c) != mv.before[r * mv.cols + c]) match = false;
                if (!match) continue;
                TileGrid h = g;
                for (int r = 0; r < mv.rows; ++r)
                    for (int c = 0; c < mv.cols; ++c)
                        h.set(r0 + r, c0 + c, mv.after[r * mv.cols + c]);
                if (h.valid()) out.push_back(std::move(h));
            }
    }
    return out;
}

std::string render_ascii(const TileGrid& g) {
    // One character per tile:
    //   .  blank      |  NS        -  WE        +  crossing
    //   L  NE elbow   J  NW elbow  r  SE elbow  7  SW elbow
    //   %  NW|SE bump S  NE|SW bump
    std::string out;
    for (int r = 1; r <= g.n(); ++r) {
        for (int c = 1; c <= g.n(); ++c) {
            Tile t = g.at(r, c);
            char ch = '?';
            if (t == Tile::blank()) ch = '.';
            else if (t == Tile::vertical()) ch = '|';
            else if (t == Tile::horizontal()) ch = '-';
            else if (t == Tile::crossing()) ch = '+';
            else if (t == Tile::elbow_ne()) ch = 'L';
            else if (t == Tile::elbow_nw()) ch = 'J';
            else if (t == Tile::elbow_se()) ch = 'r';
            else if (t == Tile::elbow_sw()) ch = '7';
            else if (t == Tile::bump_main()) ch = '%';
            else if (t == Tile::bump_anti()) ch = 'S';
            out += ch;
        }
        out += '\n';
    }
    return out;
}

std::string render_tikz(const TileGrid& g) {
    std::ostringstream os;
    int n = g.n();
    os << "\\begin{tikzpicture}[x=1.25em,y=1.25em]\n";
    os << "  \\draw[step=1,gray,very thin] (0,0) grid (" << n << "," << -n << ");\n";
    os << "  \\draw[thick] (0,0) rectangle (" << n << "," << -n << ");\n";
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            Tile t = g.at(r, c);
            double cx = c - 0.5, cy = -(r - 0.5);
            auto pt = [&](Edge e) {
                switch (e) {
                    case Edge::N: return std::make_pair(cx, cy + 0.5);
                    case Edge::S: return std::make_pair(cx, cy - 0.5);
                    case Edge::E: return std::make_pair(cx + 0.5, cy);
                    case Edge::W: return std::make_pair(cx - 0.5, cy);
                }
                throw std::logic_error("bad edge");
            };
            for (const auto& ci : kConns) {
                if (!t.has(ci.conn)) continue;
                auto [ax, ay] = pt(ci.a);
                auto [bx, by] = pt(ci.b);
                bool straight = ci.conn == ConnNS || ci.conn == ConnWE;
                if (straight)
                    os << "  \\draw[thick] (" << ax << "," << ay << ")--(" << bx << "," << by
                       << ");\n";
                else
                    os << "  \\draw[thick,rounded corners] (" << ax << "," << ay << ")--(" << cx
                       << "," << cy << ")--(" << bx << "," << by << ");\n";
            }
        }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace schubertkit
