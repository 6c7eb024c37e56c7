#include "weld/knot_group.hpp"

#include <cassert>
#include <map>
#include <sstream>

namespace weld {

Word reduce(Word w) {
    Word out;
    for (const Letter& l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return reduce(std::move(w));
}

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
    return out;
}

int exponent_sum(const Word& w) {
    int s = 0;
    for (const Letter& l : w) s += l.exp;
    return s;
}

std::string word_str(const Word& w, const std::vector<std::string>& labels) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ";
        os << labels[w[i].gen];
        if (w[i].exp < 0) os << "^-1";
    }
    return os.str();
}

ArcStructure arc_structure(const GaussCode& code) {
    ArcStructure as;
    const auto symbols = code.symbols();
    std::vector<int> under_positions;
    std::map<int, int> over_position;
    for (size_t p = 0; p < symbols.size(); ++p) {
        if (symbols[p].role == Role::Under)
            under_positions.push_back(static_cast<int>(p));
        else
            over_position[symbols[p].crossing_id] = static_cast<int>(p);
    }
    const int n = static_cast<int>(under_positions.size());
    as.arc_of_position.assign(symbols.size(), 0);
    if (n == 0) {
        as.arc_count = 1;
        as.basepoint_arc = 0;
        return as;
    }
    as.arc_count = n;
    // Arc j covers positions u_j+1 .. u_{j+1} (cyclically, inclusive).
    const int len_total = static_cast<int>(symbols.size());
    for (int j = 0; j < n; ++j) {
        const int from = (under_positions[j] + 1) % len_total;
        const int to = under_positions[(j + 1) % n];
        const int len = ((to - from + len_total) % len_total) + 1;
        for (int k = 0; k < len; ++k) as.arc_of_position[(from + k) % len_total] = j;
    }
    as.basepoint_arc = as.arc_of_position[0];
    for (int j = 0; j < n; ++j) {
        const int pos = under_positions[j];
        const GaussSymbol& sym = symbols[pos];
        CrossingRelation rel;
        rel.position = pos;
        rel.crossing_id = sym.crossing_id;
        rel.sign = sym.sign;
        rel.incoming = (j + n - 1) % n;
        rel.outgoing = j;
        rel.over = as.arc_of_position[over_position.at(sym.crossing_id)];
        as.crossings.push_back(rel);
    }
    return as;
}

Presentation wirtinger(const GaussCode& code) {
    const ArcStructure as = arc_structure(code);
    Presentation p;
    p.generator_count = as.arc_count;
    p.crossings = as.crossings;
    for (int i = 0; i < p.generator_count; ++i)
        p.generator_labels.push_back("g" + std::to_string(i + 1));
    for (const CrossingRelation& c : as.crossings) {
        const int e = sign_value(c.sign);
        Word relator{{c.outgoing, -1}, {c.over, -e}, {c.incoming, +1}, {c.over, +e}};
        p.relations.push_back(reduce(std::move(relator)));
    }
    return p;
}

std::pair<Word, int> longitude(const GaussCode& code) {
    const ArcStructure as = arc_structure(code);
    Word w;
    int writhe = 0;
    for (const CrossingRelation& c : as.crossings) {
        const int e = sign_value(c.sign);
        w.push_back({c.over, e});
        writhe += e;
    }
    const int m = as.basepoint_arc;
    for (int i = 0; i < (writhe < 0 ? -writhe : writhe); ++i)
        w.push_back({m, writhe > 0 ? -1 : +1});
    return {reduce(std::move(w)), writhe};
}

PeripheralStructure peripheral(const GaussCode& code) {
    PeripheralStructure ps;
    ps.group = wirtinger(code);
    const ArcStructure as = arc_structure(code);
    ps.meridian_gen = as.basepoint_arc;
    ps.meridian = {{ps.meridian_gen, +1}};
    auto [l, k] = longitude(code);
    ps.longitude = std::move(l);
    ps.writhe = k;
    assert(exponent_sum(ps.longitude) == 0);
    return ps;
}

}  // namespace weld
