// Wirtinger presentation, combinatorial longitude and peripheral structure of
// a welded knot, computed from its Gauss code.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weld/gauss_code.hpp"

namespace weld {

struct Letter {
    int gen = 0;
    int exp = 0;  // +1 or -1
    bool operator==(const Letter&) const = default;
};

// Freely reduced word in the presentation generators.
using Word = std::vector<Letter>;

Word reduce(Word w);
Word concat(const Word& a, const Word& b);  // reduces
Word inverse(const Word& w);
int exponent_sum(const Word& w);
std::string word_str(const Word& w, const std::vector<std::string>& labels);

// One classical crossing seen from its under-pass. Arc indices refer to the
// arc decomposition below.
struct CrossingRelation {
    int position = 0;  // word index of the Under symbol
    int crossing_id = 0;
    CrossingSign sign = CrossingSign::Plus;
    int incoming = 0;  // under-arc entering the crossing
    int outgoing = 0;  // under-arc leaving the crossing
    int over = 0;      // arc carrying the Over occurrence
};

// Arcs are the maximal segments between consecutive Under symbols in traversal
// order; arc j begins just after the j-th Under symbol. n Under symbols yield
// n arcs; with no crossings there is a single arc.
struct ArcStructure {
    int arc_count = 1;
    int basepoint_arc = 0;  // arc containing symbol index 0
    std::vector<int> arc_of_position;
    std::vector<CrossingRelation> crossings;  // one per Under symbol, traversal order
};

ArcStructure arc_structure(const GaussCode& code);

struct Presentation {
    int generator_count = 1;
    std::vector<Word> relations;  // freely reduced relators, exponent sum 0
    std::vector<std::string> generator_labels;
    // Structured origin of `relations`; empty for hand-built presentations.
    std::vector<CrossingRelation> crossings;
};

// One generator per arc, one relation per classical crossing: with incoming
// under-arc a, outgoing b, over-arc o and sign e, the relator is
// b^-1 o^-e a o^e.
Presentation wirtinger(const GaussCode& code);

struct PeripheralStructure {
    Presentation group;
    int meridian_gen = 0;  // generator of the basepoint arc
    Word meridian;         // single positive letter
    Word longitude;        // exponent sum 0
    int writhe = 0;
};

// Over-arc letters collected at each under-pass in traversal order, with the
// crossing sign as exponent, times meridian^-writhe; freely reduced.
std::pair<Word, int> longitude(const GaussCode& code);

PeripheralStructure peripheral(const GaussCode& code);

}  // namespace weld
