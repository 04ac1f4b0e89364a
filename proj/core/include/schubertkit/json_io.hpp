#pragma once

#include <string>

#include "schubertkit/basis.hpp"
#include "schubertkit/bpd.hpp"
#include "schubertkit/perm.hpp"
#include "schubertkit/pipedream.hpp"
#include "schubertkit/poly.hpp"
#include "schubertkit/tilegrid.hpp"

namespace schubertkit {

// Serializations. Permutations carry their window; grids follow the tiles
// schema {"n", "orientation", "tiles"}; pipe dreams are crossing lists.
std::string to_json(const Permutation& w);
std::string to_json(const Word& word);
std::string to_json(const TileGrid& g);
std::string to_json(const PipeDream& p);
std::string to_json(const CoPipeDream& p);
std::string to_json(const WindowedBpd& b);
std::string to_json(const ExpansionMap& e);
std::string to_json(const MultiPoly& f);

Permutation permutation_from_json(const std::string& text);
Word word_from_json(const std::string& text);
TileGrid tilegrid_from_json(const std::string& text);
// Accepts a single grid object or an array of them.
std::vector<TileGrid> tilegrids_from_json(const std::string& text);
PipeDream pipedream_from_json(const std::string& text);
WindowedBpd windowed_bpd_from_json(const std::string& text);

}  // namespace schubertkit
