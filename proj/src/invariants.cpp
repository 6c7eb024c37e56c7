#include "weld/invariants.hpp"

#include <stdexcept>

namespace weld {

std::string level_name(Level level) {
    switch (level) {
        case Level::Virtual: return "virtual";
        case Level::Welded: return "welded";
        case Level::Tube: return "tube";
    }
    return "?";
}

namespace {

// Fox derivative row of a relator, abelianized (every generator -> t).
// d(uv) = du + u dv, dg = 1, dg^-1 = -g^-1.
std::vector<LaurentPoly> fox_row(const Word& relator, int generator_count) {
    std::vector<LaurentPoly> row(generator_count);
    int prefix_exp = 0;
    for (const Letter& l : relator) {
        if (l.exp > 0) {
            row[l.gen] += LaurentPoly::monomial(1, prefix_exp);
            ++prefix_exp;
        } else {
            row[l.gen] -= LaurentPoly::monomial(1, prefix_exp - 1);
            --prefix_exp;
        }
    }
    return row;
}

}  // namespace

LaurentPoly alexander(const Presentation& p) {
    const int g = p.generator_count;
    if (g <= 1) return LaurentPoly::constant(1);
    const int m = g - 1;
    const int rows = static_cast<int>(p.relations.size());
    if (rows < m) return {};  // degenerate, reported as 0
    std::vector<std::vector<LaurentPoly>> fox(rows);
    for (int i = 0; i < rows; ++i) fox[i] = fox_row(p.relations[i], g);
    // Column deletion is free (the abelianized columns sum to zero); delete
    // generator column 0. For classical diagrams one relation is redundant
    // and any single row-deleted minor is the answer; a welded Wirtinger
    // presentation has no redundant relation, so take the gcd over the row
    // choices (the principal closure of the first elementary ideal), which
    // agrees with the single minor on classical inputs and is what the
    // welded moves preserve.
    auto minor_without_row = [&](int dropped) {
        std::vector<std::vector<LaurentPoly>> minor;
        minor.reserve(m);
        for (int i = 0; i < rows; ++i) {
            if (i == dropped) continue;
            std::vector<LaurentPoly> row(m);
            for (int j = 0; j < m; ++j) row[j] = fox[i][j + 1];
            minor.push_back(std::move(row));
        }
        return det_laurent(std::move(minor));
    };
    if (rows == m) {
        std::vector<std::vector<LaurentPoly>> minor(m, std::vector<LaurentPoly>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) minor[i][j] = fox[i][j + 1];
        return det_laurent(std::move(minor)).normalized_units();
    }
    if (rows != m + 1)
        throw std::logic_error("alexander: unsupported relation count");
    LaurentPoly g_all;
    const LaurentPoly one = LaurentPoly::constant(1);
    for (int dropped = 0; dropped < rows; ++dropped) {
        g_all = laurent_gcd(g_all, minor_without_row(dropped));
        if (g_all == one) break;
    }
    return g_all.normalized_units();
}

std::int64_t count_homs(const Presentation& p, const FiniteGroup& h) {
    return kernels::homs_parallel(p, {}, {}, h).count;
}

std::int64_t quandle_colorings(const GaussCode& code, const FiniteQuandle& q) {
    return kernels::quandle_colorings_parallel(code, q);
}

namespace {

std::pair<int, int> canonical_pair(int x, int y, const FiniteGroup& h, bool fold_inverse) {
    std::pair<int, int> best{h.order(), h.order()};
    for (int c = 0; c < h.order(); ++c) {
        const std::pair<int, int> cand{h.conjugate(x, c), h.conjugate(y, c)};
        if (cand < best) best = cand;
        if (fold_inverse) {
            const std::pair<int, int> inv{cand.first, h.inverse(cand.second)};
            if (inv < best) best = inv;
        }
    }
    return best;
}

PairMultiset normalize_images(const std::map<std::pair<int, int>, std::int64_t>& raw,
                              const FiniteGroup& h, Level normalize) {
    if (normalize == Level::Virtual)
        throw std::logic_error("peripheral multisets normalize at Welded or Tube level");
    const bool fold = normalize == Level::Tube;
    PairMultiset out;
    for (const auto& [pair, count] : raw)
        out.counts[canonical_pair(pair.first, pair.second, h, fold)] += count;
    return out;
}

}  // namespace

PairMultiset peripheral_multiset(const PeripheralStructure& ps, const FiniteGroup& h,
                                 Level normalize) {
    const auto images = kernels::homs_parallel(ps.group, ps.meridian, ps.longitude, h);
    return normalize_images(images.meridian_longitude, h, normalize);
}

LaurentPoly f_polynomial(const GaussCode& code) {
    const int w = code.writhe();
    // (-A^3)^{-w} <K>
    const LaurentPoly norm = LaurentPoly::monomial((w % 2 == 0) ? 1 : -1, -3 * w);
    return norm * kernels::bracket_parallel(code);
}

InvariantBattery battery(const GaussCode& code, Level level, const Palette& palette) {
    InvariantBattery b;
    b.level = level;
    b.palette_version = palette.version;
    const PeripheralStructure ps = peripheral(code);
    b.alexander = alexander(ps.group);
    const Level norm = level == Level::Tube ? Level::Tube : Level::Welded;
    for (const FiniteGroup& g : palette.groups) {
        const auto images = kernels::homs_parallel(ps.group, ps.meridian, ps.longitude, g);
        b.hom_counts[g.name()] = images.count;
        b.peripheral_multisets[g.name()] = normalize_images(images.meridian_longitude, g, norm);
    }
    for (const FiniteQuandle& q : palette.quandles)
        b.quandle_counts[q.name()] = kernels::quandle_colorings_parallel(code, q);
    if (level == Level::Virtual) b.f_polynomial = f_polynomial(code);
    return b;
}

std::optional<std::string> first_battery_difference(const InvariantBattery& a,
                                                    const InvariantBattery& b) {
    if (a.level != b.level || a.palette_version != b.palette_version)
        throw std::logic_error("batteries compare only at equal level and palette");
    if (a.alexander != b.alexander) return "alexander";
    if (a.hom_counts.size() != b.hom_counts.size() ||
        a.quandle_counts.size() != b.quandle_counts.size() ||
        a.peripheral_multisets.size() != b.peripheral_multisets.size())
        throw std::logic_error("batteries compare only over one palette");
    for (const auto& [name, count] : a.hom_counts)
        if (b.hom_counts.at(name) != count) return "hom_counts[" + name + "]";
    for (const auto& [name, count] : a.quandle_counts)
        if (b.quandle_counts.at(name) != count) return "quandle_counts[" + name + "]";
    for (const auto& [name, ms] : a.peripheral_multisets)
        if (!(b.peripheral_multisets.at(name) == ms)) return "peripheral_multisets[" + name + "]";
    if (a.f_polynomial.has_value() != b.f_polynomial.has_value())
        throw std::logic_error("batteries compare only at equal level");
    if (a.f_polynomial && !(*a.f_polynomial == *b.f_polynomial)) return "f_polynomial";
    return std::nullopt;
}

}  // namespace weld
