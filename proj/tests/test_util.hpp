#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "schubertkit/perm.hpp"
#include "schubertkit/tilegrid.hpp"

namespace schubertkit::testing {

inline Permutation perm(std::initializer_list<int> img, int lo = 1) {
    return Permutation::from_one_line(std::vector<int>(img), lo);
}

// Rows are space-separated tile tokens: "." for blank, otherwise the
// edge-pair strings ("NS", "WE", "SE", "NW|SE", ...).
inline TileGrid grid_rows(Orientation o, const std::vector<std::string>& rows) {
    int n = static_cast<int>(rows.size());
    TileGrid g(n, o);
    for (int r = 1; r <= n; ++r) {
        std::istringstream ss(rows[r - 1]);
        std::string tok;
        for (int c = 1; c <= n; ++c) {
            if (!(ss >> tok)) throw std::runtime_error("short grid row");
            g.set(r, c, Tile::from_string(tok == "." ? "" : tok));
        }
    }
    return g;
}

inline CellSet cells(std::initializer_list<std::pair<int, int>> list) {
    CellSet out;
    for (auto& [r, c] : list) out.insert({r, c});
    return out;
}

}  // namespace schubertkit::testing
