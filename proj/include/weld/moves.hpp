// Welded Reidemeister calculus on Gauss codes: local rewrites (R1, R2, R3 and
// the overcrossings-commute move), deterministic enumeration, application and
// bounded breadth-first equivalence search.
//
// The R2/R3 oriented variant tables are generated from one canonical variant
// by a formal strand-reversal rule: reversing a strand's local reading
// reverses that strand's pair order and negates the signs of its two
// crossings. Canonical R3: crossings 1 (A over B), 2 (A over C), 3 (B over C),
// all Plus, pairs (O1 O2) on A, (U1 O3) on B, (U2 U3) on C; the move reverses
// the order within each pair. Canonical R2: opposite signs, pairs (Oc Od) and
// (Ud Uc). A wrong table entry changes the Alexander polynomial and is caught
// by the battery-invariance fuzz suite.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weld/gauss_code.hpp"

namespace weld {

class InvalidMove : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class MoveKind { R1Insert, R1Delete, R2Insert, R2Delete, R3, OC };
std::string move_kind_name(MoveKind kind);
std::optional<MoveKind> move_kind_from_name(const std::string& name);

// Site semantics by kind (positions and gaps are cyclic word indices):
//   R1Insert  site=[gap]        variant bit0: U before O, bit1: Minus sign;
//                               payload=[fresh id]
//   R1Delete  site=[i]          pair (i, i+1) carries both occurrences of one
//                               crossing
//   R2Insert  site=[gapO,gapU]  distinct gaps; variant bit0: U-pair reversed
//                               (antiparallel), bit1: first crossing Minus;
//                               payload=[fresh c, fresh d]
//   R2Delete  site=[i,j]        Over pair at (i, i+1), Under pair at (j, j+1),
//                               same two crossings, opposite signs
//   R3        site=[pa,pb,pc]   first positions of the strand pairs A, B, C;
//                               variant = strand reversal mask (bit0 A,
//                               bit1 B, bit2 C); the move swaps each pair
//   OC        site=[i]          two adjacent Over symbols, swapped in place
struct Move {
    MoveKind kind = MoveKind::OC;
    std::vector<int> site;
    int variant = 0;
    std::vector<int> payload;
    bool operator==(const Move&) const = default;
};

struct MovePath {
    GaussCode start;
    std::vector<Move> steps;
};

// All applicable moves, in deterministic order: by kind, then site, then
// variant. Insertions use fresh ids above the current maximum.
std::vector<Move> enumerate_moves(const GaussCode& code);

// Rewritten code; throws InvalidMove when the move does not match.
GaussCode apply_move(const GaussCode& code, const Move& move);

// Applies the steps in order starting from path.start.
GaussCode replay(const MovePath& path);

struct SearchBudget {
    int max_depth = 6;
    long long max_states = 100000;
};

struct SearchStats {
    long long states_visited = 0;   // distinct canonical forms seen
    long long states_expanded = 0;  // nodes whose moves were enumerated
    long long frontier_size = 0;
    bool budget_exhausted = false;
};

// Breadth-first search over canonical forms. Codes are considered equal when
// their canonical forms coincide; a found path replays from `a` to a code
// canonically equal to `b`. NotFound (nullopt path) is a value, not an error.
struct SearchResult {
    std::optional<MovePath> path;
    SearchStats stats;
};

SearchResult search(const GaussCode& a, const GaussCode& b, const SearchBudget& budget);

}  // namespace weld
