#include "weld/finite_algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace weld {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
    const int n = static_cast<int>(table_.size());
    if (n == 0) throw std::invalid_argument(name_ + ": empty group table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument(name_ + ": table not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument(name_ + ": table entry out of range");
    }
    identity_ = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (table_[e][a] != a || table_[a][e] != a) {
                ok = false;
                break;
            }
        if (ok) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) throw std::invalid_argument(name_ + ": no identity element");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverse_[a] = b;
                break;
            }
        if (inverse_[a] < 0) throw std::invalid_argument(name_ + ": missing inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw std::invalid_argument(name_ + ": not associative");
    // Conjugacy classes, ordered by least member.
    std::vector<bool> seen(n, false);
    for (int a = 0; a < n; ++a) {
        if (seen[a]) continue;
        std::set<int> orbit;
        for (int h = 0; h < n; ++h) orbit.insert(conjugate(a, h));
        std::vector<int> cls(orbit.begin(), orbit.end());
        for (int x : cls) seen[x] = true;
        classes_.push_back(std::move(cls));
    }
}

int FiniteGroup::power(int a, int e) const {
    int x = a;
    if (e < 0) {
        x = inverse_[a];
        e = -e;
    }
    int r = identity_;
    for (int i = 0; i < e; ++i) r = mul(r, x);
    return r;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group: n must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup("Z" + std::to_string(n), std::move(t));
}

FiniteGroup dihedral_group(int n) {
    if (n < 3) throw std::invalid_argument("dihedral_group: n must be >= 3");
    // Element a*n + i encodes s^a r^i with s r s = r^-1.
    const int order = 2 * n;
    auto enc = [n](int a, int i) { return a * n + ((i % n) + n) % n; };
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < n; ++i)
            for (int b = 0; b < 2; ++b)
                for (int j = 0; j < n; ++j)
                    t[enc(a, i)][enc(b, j)] = b == 0 ? enc(a, i + j) : enc(1 - a, j - i);
    return FiniteGroup("D" + std::to_string(n), std::move(t));
}

namespace {

std::vector<std::vector<int>> permutations_lex(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

int perm_parity(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2;
}

FiniteGroup permutation_group(std::string name, std::vector<std::vector<int>> elems) {
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    const int n = static_cast<int>(elems.size());
    const int k = static_cast<int>(elems[0].size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> ab(k);
            for (int x = 0; x < k; ++x) ab[x] = elems[a][elems[b][x]];  // apply b, then a
            t[a][b] = index.at(ab);
        }
    return FiniteGroup(std::move(name), std::move(t));
}

}  // namespace

FiniteGroup symmetric_group(int k) {
    if (k != 3 && k != 4) throw std::invalid_argument("symmetric_group: only S3 and S4 are built in");
    return permutation_group("S" + std::to_string(k), permutations_lex(k));
}

FiniteGroup alternating_group_4() {
    std::vector<std::vector<int>> evens;
    for (auto& p : permutations_lex(4))
        if (perm_parity(p) == 0) evens.push_back(p);
    return permutation_group("A4", std::move(evens));
}

FiniteQuandle::FiniteQuandle(std::string name, std::vector<std::vector<int>> op)
    : name_(std::move(name)), op_(std::move(op)) {
    const int n = static_cast<int>(op_.size());
    if (n == 0) throw std::invalid_argument(name_ + ": empty quandle table");
    for (const auto& row : op_) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument(name_ + ": table not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument(name_ + ": entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (op_[a][a] != a) throw std::invalid_argument(name_ + ": not idempotent");
    // a -> a*b must be a bijection for each b; record its inverse.
    inv_.assign(n, std::vector<int>(n, -1));
    for (int b = 0; b < n; ++b) {
        std::vector<int> seen(n, 0);
        for (int a = 0; a < n; ++a) {
            const int c = op_[a][b];
            if (seen[c]++) throw std::invalid_argument(name_ + ": right translation not bijective");
            inv_[c][b] = a;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (op_[op_[a][b]][c] != op_[op_[a][c]][op_[b][c]])
                    throw std::invalid_argument(name_ + ": not self-distributive");
}

FiniteQuandle dihedral_quandle(int n) {
    if (n < 1) throw std::invalid_argument("dihedral_quandle: n must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = ((2 * b - a) % n + n) % n;
    return FiniteQuandle("R" + std::to_string(n), std::move(t));
}

const Palette& Palette::default_palette() {
    static const Palette p = [] {
        Palette pal;
        pal.version = "weld-palette-1";
        for (int n = 2; n <= 12; ++n) pal.groups.push_back(cyclic_group(n));
        for (int n = 3; n <= 6; ++n) pal.groups.push_back(dihedral_group(n));
        pal.groups.push_back(symmetric_group(3));
        pal.groups.push_back(symmetric_group(4));
        pal.groups.push_back(alternating_group_4());
        for (int n = 3; n <= 9; ++n) pal.quandles.push_back(dihedral_quandle(n));
        return pal;
    }();
    return p;
}

Palette Palette::subset(const std::vector<std::string>& group_names,
                        const std::vector<std::string>& quandle_names) const {
    Palette out;
    out.version = version;
    for (const auto& gn : group_names) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const FiniteGroup& g) { return g.name() == gn; });
        if (it == groups.end()) throw std::invalid_argument("unknown group: " + gn);
        out.groups.push_back(*it);
    }
    for (const auto& qn : quandle_names) {
        auto it = std::find_if(quandles.begin(), quandles.end(),
                               [&](const FiniteQuandle& q) { return q.name() == qn; });
        if (it == quandles.end()) throw std::invalid_argument("unknown quandle: " + qn);
        out.quandles.push_back(*it);
    }
    return out;
}

}  // namespace weld
