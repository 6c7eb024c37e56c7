// Signed Gauss codes for 1-component welded knot diagrams: data model, text
// format, diagram symmetries and the canonical form used as a search key.

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weld {

// Malformed token in the text format.
class SyntaxError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed tokens that do not assemble into a valid double-occurrence word.
class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Role : std::uint8_t { Over, Under };
enum class CrossingSign : std::int8_t { Plus = 1, Minus = -1 };

inline CrossingSign opposite(CrossingSign s) {
    return s == CrossingSign::Plus ? CrossingSign::Minus : CrossingSign::Plus;
}
inline int sign_value(CrossingSign s) { return static_cast<int>(s); }

struct GaussSymbol {
    int crossing_id = 0;  // positive; both occurrences carry the same sign
    Role role = Role::Over;
    CrossingSign sign = CrossingSign::Plus;

    bool operator==(const GaussSymbol&) const = default;
};

// Cyclic word; basepoint is symbol index 0. The empty code is the unknot.
class GaussCode {
public:
    GaussCode() = default;

    // Validates the double-occurrence invariants, throws StructureError.
    static GaussCode from_symbols(std::vector<GaussSymbol> symbols);

    std::span<const GaussSymbol> symbols() const { return symbols_; }
    const GaussSymbol& at(size_t i) const { return symbols_[i]; }
    size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    size_t crossing_count() const { return symbols_.size() / 2; }
    int max_crossing_id() const;

    // Sum of crossing signs.
    int writhe() const;

    bool operator==(const GaussCode&) const = default;

private:
    explicit GaussCode(std::vector<GaussSymbol> symbols) : symbols_(std::move(symbols)) {}
    std::vector<GaussSymbol> symbols_;
};

// Grammar: code := symbol*, symbol := ("O"|"U") digits ("+"|"-"), optional
// whitespace between symbols. Ids are kept as written.
GaussCode parse_gauss_code(std::string_view text);
std::string to_string(const GaussCode& code);

enum class SymmetryOp {
    Reverse,     // -K: reverse symbol order, keep roles and signs
    MirrorStar,  // K*: keep order, swap Over/Under, negate signs
    VReflect,    // K^: keep order and roles, negate signs
};

GaussCode apply_symmetry(const GaussCode& code, SymmetryOp op);

// Reverse(VReflect(code)), the welded knot -K^ of the non-injectivity theorem.
GaussCode reverse_vreflect(const GaussCode& code);
// Reverse(MirrorStar(code)), the classical -K*.
GaussCode reverse_mirror(const GaussCode& code);

// Lexicographically minimal representative over all basepoint rotations
// combined with first-appearance relabeling. Symbol order: role Over < Under,
// then id, then sign Plus < Minus. Idempotent.
GaussCode canonical(const GaussCode& code);

}  // namespace weld
