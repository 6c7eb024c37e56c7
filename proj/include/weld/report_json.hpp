// JSON views of the library types. All objects use insertion-ordered keys so
// identical inputs produce byte-identical reports.

#pragma once

#include <json.hpp>

#include "weld/finite_algebra.hpp"
#include "weld/invariants.hpp"
#include "weld/knot_group.hpp"
#include "weld/moves.hpp"
#include "weld/spun.hpp"

namespace weld {

using Json = nlohmann::ordered_json;

Json laurent_json(const LaurentPoly& p);   // sorted [exponent, coefficient] pairs
Json word_json(const Word& w);             // [generator index, exponent] pairs
Json presentation_json(const Presentation& p);
Json peripheral_json(const PeripheralStructure& ps);
Json battery_json(const InvariantBattery& b);
Json palette_json(const Palette& palette);
Json move_json(const Move& m);
Json move_path_json(const MovePath& p);
Move move_from_json(const Json& j);        // throws InvalidMove on bad shape
Json verdict_json(const Verdict& v);
Json search_json(const SearchResult& r);

}  // namespace weld
