#include "schubertkit/json_io.hpp"

#include <json.hpp>

namespace schubertkit {

using nlohmann::json;

namespace {

json perm_json(const Permutation& w) {
    json j;
    j["window_lo"] = w.lo();
    j["one_line"] = w.is_identity() ? std::vector<int>{} : w.one_line(w.lo(), w.hi());
    return j;
}

Permutation perm_from(const json& j) {
    if (j.is_array()) return Permutation::from_one_line(j.get<std::vector<int>>());
    int lo = j.value("window_lo", 1);
    return Permutation::from_one_line(j.at("one_line").get<std::vector<int>>(), lo);
}

json grid_json(const TileGrid& g) {
    json tiles = json::array();
    for (int r = 1; r <= g.n(); ++r) {
        json row = json::array();
        for (int c = 1; c <= g.n(); ++c) row.push_back(g.at(r, c).to_string());
        tiles.push_back(std::move(row));
    }
    return json{{"n", g.n()}, {"orientation", to_string(g.orientation())}, {"tiles", tiles}};
}

TileGrid grid_from(const json& j) {
    int n = j.at("n").get<int>();
    TileGrid g(n, orientation_from_string(j.at("orientation").get<std::string>()));
    const json& tiles = j.at("tiles");
    if (static_cast<int>(tiles.size()) != n) throw std::domain_error("bad tile row count");
    for (int r = 1; r <= n; ++r) {
        if (static_cast<int>(tiles[r - 1].size()) != n)
            throw std::domain_error("bad tile column count");
        for (int c = 1; c <= n; ++c)
            g.set(r, c, Tile::from_string(tiles[r - 1][c - 1].get<std::string>()));
    }
    return g;
}

json crossings_json(int n, const CellSet& cells) {
    json arr = json::array();
    for (const Cell& c : cells) arr.push_back({c.row, c.col});
    return json{{"n", n}, {"crossings", arr}};
}

}  // namespace

std::string to_json(const Permutation& w) { return perm_json(w).dump(); }

std::string to_json(const Word& word) { return json(word).dump(); }

std::string to_json(const TileGrid& g) { return grid_json(g).dump(); }

std::string to_json(const PipeDream& p) { return crossings_json(p.n(), p.crossings()).dump(); }

std::string to_json(const CoPipeDream& p) { return crossings_json(p.n(), p.crossings()).dump(); }

std::string to_json(const WindowedBpd& b) {
    json j = grid_json(b.inner().grid());
    j["window"] = {b.lo(), b.hi()};
    return j.dump();
}

std::string to_json(const ExpansionMap& e) {
    json terms = json::array();
    std::vector<std::pair<Permutation, long long>> sorted(e.coeffs.begin(), e.coeffs.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.length() != b.first.length()) return a.first.length() < b.first.length();
        return a.first < b.first;
    });
    for (auto& [v, c] : sorted) terms.push_back({{"perm", perm_json(v)}, {"coeff", c}});
    json j{{"source", perm_json(e.source)},
           {"base", e.base == ExpansionBase::Schubert ? "schubert" : "grothendieck"},
           {"terms", terms}};
    return j.dump();
}

std::string to_json(const MultiPoly& f) {
    json terms = json::array();
    for (auto& [m, c] : f.terms()) {
        json vars = json::array();
        for (auto& [v, e] : m.xs) vars.push_back({v, e});
        terms.push_back({{"coeff", c}, {"beta", m.beta}, {"vars", vars}});
    }
    return json{{"terms", terms}}.dump();
}

Permutation permutation_from_json(const std::string& text) {
    return perm_from(json::parse(text));
}

Word word_from_json(const std::string& text) {
    return json::parse(text).get<std::vector<int>>();
}

TileGrid tilegrid_from_json(const std::string& text) { return grid_from(json::parse(text)); }

std::vector<TileGrid> tilegrids_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<TileGrid> out;
    if (j.is_array())
        for (const json& item : j) out.push_back(grid_from(item));
    else
        out.push_back(grid_from(j));
    return out;
}

PipeDream pipedream_from_json(const std::string& text) {
    json j = json::parse(text);
    CellSet cells;
    for (const auto& rc : j.at("crossings")) cells.insert({rc[0].get<int>(), rc[1].get<int>()});
    return PipeDream(j.at("n").get<int>(), std::move(cells));
}

WindowedBpd windowed_bpd_from_json(const std::string& text) {
    json j = json::parse(text);
    int lo = j.contains("window") ? j["window"][0].get<int>() : 1;
    return WindowedBpd(lo, Bpd(grid_from(j)));
}

}  // namespace schubertkit
