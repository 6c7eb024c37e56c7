#include "weld/corpus.hpp"

#include <stdexcept>

namespace weld {

namespace {

CorpusEntry make(std::string name, std::string_view code, LaurentPoly alex, bool classical,
                 bool chiral) {
    return CorpusEntry{std::move(name), parse_gauss_code(code), std::move(alex), classical, chiral};
}

}  // namespace

// Codes are transcribed from closed-braid forms of the table knots
// (3_1 = closure of s1^3, 4_1 = (s1 s2^-1)^2, 5_1 = s1^5,
// 5_2 = s1^3 s2 s1^-1 s2) and frozen after passing `corpus verify`.
const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = {
        make("unknot", "", LaurentPoly::constant(1), true, false),
        make("3_1", "O1+U2+O3+U1+O2+U3+",
             LaurentPoly::from_terms({{2, 1}, {1, -1}, {0, 1}}), true, true),
        make("3_1m", "U1-O2-U3-O1-U2-O3-",
             LaurentPoly::from_terms({{2, 1}, {1, -1}, {0, 1}}), true, true),
        make("4_1", "O1+U2-O3-U1+O4+U3-O2-U4+",
             LaurentPoly::from_terms({{2, 1}, {1, -3}, {0, 1}}), true, false),
        make("5_1", "O1+U2+O3+U4+O5+U1+O2+U3+O4+U5+",
             LaurentPoly::from_terms({{4, 1}, {3, -1}, {2, 1}, {1, -1}, {0, 1}}), true, true),
        make("5_2", "O1+U2+O3+O4+U5+U1+O2+U3+U6-O5+U4+O6-",
             LaurentPoly::from_terms({{2, 2}, {1, -3}, {0, 2}}), true, true),
    };
    return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
    for (const CorpusEntry& e : corpus())
        if (e.name == name) return e;
    throw std::out_of_range("no corpus entry named " + name);
}

}  // namespace weld
