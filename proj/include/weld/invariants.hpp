// Comparison invariants of welded knots: Fox-calculus Alexander polynomial,
// finite group/quandle coloring counts, conjugation-normalized peripheral
// multisets and the writhe-normalized Kauffman bracket, assembled into
// level-tagged batteries.
//
// The heavy enumerations (bracket state sum, homomorphism search, quandle
// colorings) come in two implementations: a plain serial reference and an
// OpenMP kernel. Results are exact integers, so both are bit-identical; the
// test suite asserts this and tools/bench compares their throughput.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "weld/finite_algebra.hpp"
#include "weld/gauss_code.hpp"
#include "weld/knot_group.hpp"
#include "weld/laurent.hpp"

namespace weld {

enum class Level { Virtual, Welded, Tube };
std::string level_name(Level level);

// Multiset of canonical (meridian image, longitude image) orbit
// representatives, keyed by element index pairs of the target group.
struct PairMultiset {
    std::map<std::pair<int, int>, std::int64_t> counts;
    bool operator==(const PairMultiset&) const = default;
};

struct InvariantBattery {
    Level level = Level::Welded;
    std::string palette_version;
    LaurentPoly alexander;
    std::map<std::string, std::int64_t> hom_counts;
    std::map<std::string, std::int64_t> quandle_counts;
    std::map<std::string, PairMultiset> peripheral_multisets;
    std::optional<LaurentPoly> f_polynomial;  // Virtual level only
    bool operator==(const InvariantBattery&) const = default;
};

// Fox-calculus Alexander polynomial of a Wirtinger presentation, normalized
// so the lowest exponent is 0 and the lowest coefficient positive. The unknot
// convention (single generator, no relations) yields 1. A genuinely singular
// Alexander matrix yields the zero polynomial, reported as-is.
LaurentPoly alexander(const Presentation& p);

// Number of homomorphisms to H: assignments of H-elements to the generators
// satisfying every relator.
std::int64_t count_homs(const Presentation& p, const FiniteGroup& h);

// Number of arc colorings: outgoing = incoming * over at positive crossings,
// *^-1 at negative ones. Always >= |Q| (constant colorings).
std::int64_t quandle_colorings(const GaussCode& code, const FiniteQuandle& q);

// For every homomorphism rho, the pair (rho(meridian), rho(longitude)),
// quotiented by simultaneous conjugation (Welded) or additionally by
// longitude inversion (Tube). Orbit representatives are the lexicographically
// least pair in the orbit.
PairMultiset peripheral_multiset(const PeripheralStructure& ps, const FiniteGroup& h,
                                 Level normalize);

// Writhe-normalized Kauffman bracket in the variable A. Not a welded
// invariant; used as the chirality certificate at the Virtual level.
LaurentPoly f_polynomial(const GaussCode& code);

InvariantBattery battery(const GaussCode& code, Level level,
                         const Palette& palette = Palette::default_palette());

// Name of the first differing entry ("alexander", "hom_counts[S4]", ...), or
// nullopt when equal. Both batteries must share level and palette version.
std::optional<std::string> first_battery_difference(const InvariantBattery& a,
                                                    const InvariantBattery& b);

namespace kernels {

// Kauffman bracket state sum over all 2^n smoothings.
LaurentPoly bracket_reference(const GaussCode& code);
LaurentPoly bracket_parallel(const GaussCode& code);

// Hom enumeration results: count plus the raw (meridian, longitude) image
// multiset before orbit normalization.
struct HomImages {
    std::int64_t count = 0;
    std::map<std::pair<int, int>, std::int64_t> meridian_longitude;
};

// Reference: propagation walk over the crossing relations, seeding the
// basepoint generator with every element of H.
HomImages homs_reference(const Presentation& p, const Word& meridian, const Word& longitude,
                         const FiniteGroup& h);
// Kernel: one conjugacy class at a time with the basepoint generator pinned
// to the class representative and multiplicity |class|; OpenMP over seeds.
HomImages homs_parallel(const Presentation& p, const Word& meridian, const Word& longitude,
                        const FiniteGroup& h);

std::int64_t quandle_colorings_reference(const GaussCode& code, const FiniteQuandle& q);
std::int64_t quandle_colorings_parallel(const GaussCode& code, const FiniteQuandle& q);

}  // namespace kernels

}  // namespace weld
