// Independent Alexander-polynomial oracle, deliberately separate from the
// library implementation path.
//
// Two-bridge knots b(p, q) have the one-relator presentation
// < a, b | a w b^-1 w^-1 >, w = b^e1 a^e2 b^e3 ... (p-1 letters),
// e_i = (-1)^(floor(i*q/p)). The Alexander polynomial is the Fox derivative
// of the relator with respect to a, abelianized (a single 1x1 minor, checked
// by hand for the trefoil). Everything here uses a bare exponent->coefficient
// map, no library polynomial type.

#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

namespace weld::testing {

// Letters: 'a', 'b' generators, 'A', 'B' their inverses.
using OracleWord = std::string;
using OraclePoly = std::map<int, long long>;

inline void oracle_add(OraclePoly& p, int exp, long long c) {
    p[exp] += c;
    if (p[exp] == 0) p.erase(exp);
}

inline OracleWord two_bridge_relator(int p, int q) {
    OracleWord w;
    for (int i = 1; i <= p - 1; ++i) {
        const bool positive = ((i * q) / p) % 2 == 0;
        const bool is_b = i % 2 == 1;
        w.push_back(is_b ? (positive ? 'b' : 'B') : (positive ? 'a' : 'A'));
    }
    OracleWord winv(w.rbegin(), w.rend());
    for (char& c : winv)
        c = std::isupper(static_cast<unsigned char>(c))
                ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
                : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return "a" + w + "B" + winv;  // a w b^-1 w^-1
}

// Fox derivative with respect to 'a', abelianized to t, then normalized so
// the lowest exponent is 0 and the lowest coefficient is positive.
inline OraclePoly oracle_alexander(const OracleWord& relator) {
    OraclePoly row;
    int prefix = 0;  // abelianized exponent of the prefix
    for (char c : relator) {
        switch (c) {
            case 'a':
                oracle_add(row, prefix, 1);
                ++prefix;
                break;
            case 'A':
                oracle_add(row, prefix - 1, -1);
                --prefix;
                break;
            case 'b':
                ++prefix;
                break;
            case 'B':
                --prefix;
                break;
        }
    }
    if (row.empty()) return row;
    const int low = row.begin()->first;
    OraclePoly shifted;
    for (auto [e, c] : row) shifted[e - low] = c;
    if (shifted.begin()->second < 0)
        for (auto& [e, c] : shifted) c = -c;
    return shifted;
}

inline OraclePoly oracle_two_bridge_alexander(int p, int q) {
    return oracle_alexander(two_bridge_relator(p, q));
}

}  // namespace weld::testing
