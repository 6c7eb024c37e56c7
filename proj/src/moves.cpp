#include "weld/moves.hpp"

#include <deque>
#include <map>
#include <unordered_set>

namespace weld {

std::string move_kind_name(MoveKind kind) {
    switch (kind) {
        case MoveKind::R1Insert: return "R1Insert";
        case MoveKind::R1Delete: return "R1Delete";
        case MoveKind::R2Insert: return "R2Insert";
        case MoveKind::R2Delete: return "R2Delete";
        case MoveKind::R3: return "R3";
        case MoveKind::OC: return "OC";
    }
    return "?";
}

std::optional<MoveKind> move_kind_from_name(const std::string& name) {
    for (MoveKind k : {MoveKind::R1Insert, MoveKind::R1Delete, MoveKind::R2Insert,
                       MoveKind::R2Delete, MoveKind::R3, MoveKind::OC})
        if (move_kind_name(k) == name) return k;
    return std::nullopt;
}

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

struct Occurrences {
    int over_pos = -1;
    int under_pos = -1;
};

std::map<int, Occurrences> occurrences(const GaussCode& code) {
    std::map<int, Occurrences> occ;
    for (size_t p = 0; p < code.size(); ++p) {
        const GaussSymbol& s = code.at(p);
        (s.role == Role::Over ? occ[s.crossing_id].over_pos : occ[s.crossing_id].under_pos) =
            static_cast<int>(p);
    }
    return occ;
}

CrossingSign variant_sign(bool reversed_pair) {
    return reversed_pair ? CrossingSign::Minus : CrossingSign::Plus;
}

// R3 pattern data derived from (site, variant); empty when no match.
struct R3Match {
    int x = 0, y = 0, z = 0;  // crossing slots 1, 2, 3
};

std::optional<R3Match> match_r3(const GaussCode& code, const std::vector<int>& site, int mask) {
    const int L = static_cast<int>(code.size());
    if (site.size() != 3 || L < 6) return std::nullopt;
    const int pa = site[0], pb = site[1], pc = site[2];
    for (int p : site)
        if (p < 0 || p >= L) return std::nullopt;
    const bool ra = mask & 1, rb = mask & 2, rc = mask & 4;
    const GaussSymbol& a0 = code.at(pa);
    const GaussSymbol& a1 = code.at(wrap(pa + 1, L));
    if (a0.role != Role::Over || a1.role != Role::Over) return std::nullopt;
    R3Match m;
    m.x = ra ? a1.crossing_id : a0.crossing_id;
    m.y = ra ? a0.crossing_id : a1.crossing_id;
    // B-pair: (U_x, O_z), reversed if rb.
    const GaussSymbol& b0 = code.at(pb);
    const GaussSymbol& b1 = code.at(wrap(pb + 1, L));
    const GaussSymbol& bu = rb ? b1 : b0;
    const GaussSymbol& bo = rb ? b0 : b1;
    if (bu.role != Role::Under || bu.crossing_id != m.x || bo.role != Role::Over)
        return std::nullopt;
    m.z = bo.crossing_id;
    if (m.z == m.x || m.z == m.y || m.x == m.y) return std::nullopt;
    // C-pair: (U_y, U_z), reversed if rc.
    const GaussSymbol& c0 = code.at(pc);
    const GaussSymbol& c1 = code.at(wrap(pc + 1, L));
    const GaussSymbol& cy = rc ? c1 : c0;
    const GaussSymbol& cz = rc ? c0 : c1;
    if (cy.role != Role::Under || cy.crossing_id != m.y) return std::nullopt;
    if (cz.role != Role::Under || cz.crossing_id != m.z) return std::nullopt;
    // Sign pattern from the strand-reversal rule.
    const CrossingSign sx = variant_sign(ra != rb);
    const CrossingSign sy = variant_sign(ra != rc);
    const CrossingSign sz = variant_sign(rb != rc);
    if (a0.sign != (ra ? sy : sx) || a1.sign != (ra ? sx : sy)) return std::nullopt;
    if (bu.sign != sx || bo.sign != sz || cy.sign != sy || cz.sign != sz) return std::nullopt;
    // Six distinct positions.
    std::vector<int> pos{pa, wrap(pa + 1, L), pb, wrap(pb + 1, L), pc, wrap(pc + 1, L)};
    for (size_t i = 0; i < pos.size(); ++i)
        for (size_t j = i + 1; j < pos.size(); ++j)
            if (pos[i] == pos[j]) return std::nullopt;
    return m;
}

bool match_r1_delete(const GaussCode& code, int i) {
    const int L = static_cast<int>(code.size());
    if (L < 2 || i < 0 || i >= L) return false;
    return code.at(i).crossing_id == code.at(wrap(i + 1, L)).crossing_id;
}

// Over pair at (i, i+1), Under pair at (j, j+1), same crossings, opposite
// signs. Returns the (c, d) ids in Over-pair order.
std::optional<std::pair<int, int>> match_r2_delete(const GaussCode& code, int i, int j) {
    const int L = static_cast<int>(code.size());
    if (L < 4 || i < 0 || i >= L || j < 0 || j >= L) return std::nullopt;
    const GaussSymbol& o0 = code.at(i);
    const GaussSymbol& o1 = code.at(wrap(i + 1, L));
    const GaussSymbol& u0 = code.at(j);
    const GaussSymbol& u1 = code.at(wrap(j + 1, L));
    if (o0.role != Role::Over || o1.role != Role::Over) return std::nullopt;
    if (u0.role != Role::Under || u1.role != Role::Under) return std::nullopt;
    const int c = o0.crossing_id, d = o1.crossing_id;
    if (c == d) return std::nullopt;
    if (!((u0.crossing_id == c && u1.crossing_id == d) ||
          (u0.crossing_id == d && u1.crossing_id == c)))
        return std::nullopt;
    if (o0.sign == o1.sign) return std::nullopt;
    return std::make_pair(c, d);
}

std::vector<GaussSymbol> symbols_vector(const GaussCode& code) {
    return {code.symbols().begin(), code.symbols().end()};
}

GaussCode delete_positions(const GaussCode& code, std::vector<int> positions) {
    std::vector<bool> drop(code.size(), false);
    for (int p : positions) drop[p] = true;
    std::vector<GaussSymbol> out;
    for (size_t p = 0; p < code.size(); ++p)
        if (!drop[p]) out.push_back(code.at(p));
    return GaussCode::from_symbols(std::move(out));
}

// Insert blocks of symbols before the given gaps (gap g = before position g).
GaussCode insert_blocks(const GaussCode& code,
                        const std::vector<std::pair<int, std::vector<GaussSymbol>>>& blocks) {
    const int L = static_cast<int>(code.size());
    std::vector<GaussSymbol> out;
    if (L == 0) {
        for (const auto& [gap, block] : blocks) out.insert(out.end(), block.begin(), block.end());
        return GaussCode::from_symbols(std::move(out));
    }
    for (int p = 0; p < L; ++p) {
        for (const auto& [gap, block] : blocks)
            if (gap == p) out.insert(out.end(), block.begin(), block.end());
        out.push_back(code.at(p));
    }
    return GaussCode::from_symbols(std::move(out));
}

}  // namespace

std::vector<Move> enumerate_moves(const GaussCode& code) {
    const int L = static_cast<int>(code.size());
    const int fresh = code.max_crossing_id() + 1;
    std::vector<Move> moves;

    // Kind order: non-growing rewrites first, insertions last, so the
    // breadth-first search expands shrinking branches of a layer before the
    // insertion fan-out. Within a kind, sites ascend.

    // R1Delete.
    for (int i = 0; i < L; ++i)
        if (match_r1_delete(code, i)) moves.push_back({MoveKind::R1Delete, {i}, 0, {}});

    // R2Delete.
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
            auto cd = match_r2_delete(code, i, j);
            if (!cd) continue;
            const auto [c, d] = *cd;
            const int order_bit = code.at(j).crossing_id == c ? 0 : 1;
            const int sign_bit = code.at(i).sign == CrossingSign::Plus ? 0 : 1;
            moves.push_back({MoveKind::R2Delete, {i, j}, order_bit | (sign_bit << 1), {}});
        }

    // R3: anchor on the Over-Over pair of strand A.
    if (L >= 6) {
        const auto occ = occurrences(code);
        for (int pa = 0; pa < L; ++pa) {
            if (code.at(pa).role != Role::Over || code.at(wrap(pa + 1, L)).role != Role::Over)
                continue;
            for (int mask = 0; mask < 8; ++mask) {
                const bool ra = mask & 1, rb = mask & 2, rc = mask & 4;
                const int x = ra ? code.at(wrap(pa + 1, L)).crossing_id : code.at(pa).crossing_id;
                const int y = ra ? code.at(pa).crossing_id : code.at(wrap(pa + 1, L)).crossing_id;
                const int ux = occ.at(x).under_pos;
                const int pb = rb ? wrap(ux - 1, L) : ux;
                // z is read off the Over slot of the B-pair, then pc is the
                // position of the C-pair fixed by the Under occurrences.
                const GaussSymbol& bo = code.at(wrap(pb + (rb ? 0 : 1), L));
                if (bo.role != Role::Over) continue;
                const int z = bo.crossing_id;
                if (z == x || z == y) continue;
                const int uy = occ.at(y).under_pos;
                const int uz = occ.at(z).under_pos;
                const int pc = rc ? uz : uy;
                if (match_r3(code, {pa, pb, pc}, mask))
                    moves.push_back({MoveKind::R3, {pa, pb, pc}, mask, {}});
            }
        }
    }

    // OC: adjacent Over-Over transposition.
    for (int i = 0; i < L; ++i) {
        if (code.at(i).role == Role::Over && code.at(wrap(i + 1, L)).role == Role::Over &&
            code.at(i).crossing_id != code.at(wrap(i + 1, L)).crossing_id)
            moves.push_back({MoveKind::OC, {i}, 0, {}});
    }

    // R1Insert: every gap, either order, either sign.
    const int gap_count = std::max(L, 1);
    for (int g = 0; g < gap_count; ++g)
        for (int v = 0; v < 4; ++v)
            moves.push_back({MoveKind::R1Insert, {g}, v, {fresh}});

    // R2Insert: ordered pairs of distinct gaps.
    for (int go = 0; go < L; ++go)
        for (int gu = 0; gu < L; ++gu) {
            if (go == gu) continue;
            for (int v = 0; v < 4; ++v)
                moves.push_back({MoveKind::R2Insert, {go, gu}, v, {fresh, fresh + 1}});
        }

    return moves;
}

GaussCode apply_move(const GaussCode& code, const Move& move) {
    const int L = static_cast<int>(code.size());
    switch (move.kind) {
        case MoveKind::R1Insert: {
            if (move.site.size() != 1 || move.payload.size() != 1)
                throw InvalidMove("R1Insert: bad site/payload");
            const int g = move.site[0];
            if (g < 0 || g >= std::max(L, 1)) throw InvalidMove("R1Insert: bad gap");
            const int id = move.payload[0];
            if (id <= code.max_crossing_id()) throw InvalidMove("R1Insert: id not fresh");
            const CrossingSign s =
                (move.variant & 2) ? CrossingSign::Minus : CrossingSign::Plus;
            std::vector<GaussSymbol> block;
            if (move.variant & 1)
                block = {{id, Role::Under, s}, {id, Role::Over, s}};
            else
                block = {{id, Role::Over, s}, {id, Role::Under, s}};
            return insert_blocks(code, {{g, block}});
        }
        case MoveKind::R1Delete: {
            if (move.site.size() != 1) throw InvalidMove("R1Delete: bad site");
            const int i = move.site[0];
            if (!match_r1_delete(code, i)) throw InvalidMove("R1Delete: no kink at site");
            return delete_positions(code, {i, wrap(i + 1, L)});
        }
        case MoveKind::R2Insert: {
            if (move.site.size() != 2 || move.payload.size() != 2)
                throw InvalidMove("R2Insert: bad site/payload");
            const int go = move.site[0], gu = move.site[1];
            if (go < 0 || go >= L || gu < 0 || gu >= L || go == gu)
                throw InvalidMove("R2Insert: bad gaps");
            const int c = move.payload[0], d = move.payload[1];
            if (c <= code.max_crossing_id() || d <= code.max_crossing_id() || c == d)
                throw InvalidMove("R2Insert: ids not fresh");
            const CrossingSign sc =
                (move.variant & 2) ? CrossingSign::Minus : CrossingSign::Plus;
            const CrossingSign sd = opposite(sc);
            const std::vector<GaussSymbol> over_block{{c, Role::Over, sc}, {d, Role::Over, sd}};
            std::vector<GaussSymbol> under_block;
            if (move.variant & 1)
                under_block = {{d, Role::Under, sd}, {c, Role::Under, sc}};  // antiparallel
            else
                under_block = {{c, Role::Under, sc}, {d, Role::Under, sd}};  // parallel
            return insert_blocks(code, {{go, over_block}, {gu, under_block}});
        }
        case MoveKind::R2Delete: {
            if (move.site.size() != 2) throw InvalidMove("R2Delete: bad site");
            const int i = move.site[0], j = move.site[1];
            if (!match_r2_delete(code, i, j)) throw InvalidMove("R2Delete: no bigon at site");
            return delete_positions(code, {i, wrap(i + 1, L), j, wrap(j + 1, L)});
        }
        case MoveKind::R3: {
            if (!match_r3(code, move.site, move.variant))
                throw InvalidMove("R3: pattern does not match");
            std::vector<GaussSymbol> out = symbols_vector(code);
            for (int p : move.site) std::swap(out[p], out[wrap(p + 1, L)]);
            return GaussCode::from_symbols(std::move(out));
        }
        case MoveKind::OC: {
            if (move.site.size() != 1) throw InvalidMove("OC: bad site");
            const int i = move.site[0];
            if (L < 2 || i < 0 || i >= L) throw InvalidMove("OC: bad site");
            const int i1 = wrap(i + 1, L);
            if (code.at(i).role != Role::Over || code.at(i1).role != Role::Over ||
                code.at(i).crossing_id == code.at(i1).crossing_id)
                throw InvalidMove("OC: needs two adjacent Over symbols");
            std::vector<GaussSymbol> out = symbols_vector(code);
            std::swap(out[i], out[i1]);
            return GaussCode::from_symbols(std::move(out));
        }
    }
    throw InvalidMove("unknown move kind");
}

GaussCode replay(const MovePath& path) {
    GaussCode c = path.start;
    for (const Move& m : path.steps) c = apply_move(c, m);
    return c;
}

SearchResult search(const GaussCode& a, const GaussCode& b, const SearchBudget& budget) {
    SearchResult result;
    const std::string goal = to_string(canonical(b));

    struct Node {
        GaussCode code;
        int parent = -1;
        Move via;
        int depth = 0;
    };
    std::deque<Node> nodes;
    std::unordered_set<std::string> visited;

    auto path_to = [&](int idx) {
        MovePath path;
        path.start = a;
        std::vector<Move> rev;
        for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent) rev.push_back(nodes[i].via);
        path.steps.assign(rev.rbegin(), rev.rend());
        return path;
    };

    nodes.push_back({a, -1, {}, 0});
    visited.insert(to_string(canonical(a)));
    if (to_string(canonical(a)) == goal) {
        result.path = path_to(0);
        result.stats.states_visited = 1;
        return result;
    }

    size_t qi = 0;
    bool exhausted = false;
    while (qi < nodes.size() && !exhausted) {
        const int depth = nodes[qi].depth;
        if (depth >= budget.max_depth) break;  // BFS: all later nodes are as deep
        const GaussCode current = nodes[qi].code;
        ++result.stats.states_expanded;
        for (const Move& m : enumerate_moves(current)) {
            GaussCode child = apply_move(current, m);
            std::string key = to_string(canonical(child));
            const bool is_goal = key == goal;
            if (!visited.insert(std::move(key)).second) continue;
            nodes.push_back({std::move(child), static_cast<int>(qi), m, depth + 1});
            if (is_goal) {
                result.path = path_to(static_cast<int>(nodes.size()) - 1);
                result.stats.states_visited = static_cast<long long>(visited.size());
                result.stats.frontier_size = static_cast<long long>(nodes.size() - qi - 1);
                return result;
            }
            if (static_cast<long long>(visited.size()) >= budget.max_states) {
                exhausted = true;
                break;
            }
        }
        ++qi;
    }
    result.stats.states_visited = static_cast<long long>(visited.size());
    result.stats.frontier_size = static_cast<long long>(nodes.size() - qi);
    result.stats.budget_exhausted = exhausted;
    return result;
}

}  // namespace weld
