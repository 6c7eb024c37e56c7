// Built-in knot corpus: small classical knots with frozen Alexander
// polynomials, used as fixtures by tests and by `weld corpus verify`.

#pragma once

#include <string>
#include <vector>

#include "weld/gauss_code.hpp"
#include "weld/laurent.hpp"

namespace weld {

struct CorpusEntry {
    std::string name;
    GaussCode code;
    LaurentPoly expected_alexander;
    bool classical_origin = false;
    bool chiral_classical = false;
};

const std::vector<CorpusEntry>& corpus();

// Entry lookup by name; throws std::out_of_range for unknown names.
const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace weld
