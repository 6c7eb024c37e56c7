#include <doctest.h>

#include <random>

#include "test_helpers.hpp"
#include "weld/corpus.hpp"
#include "weld/spun.hpp"

using namespace weld;

namespace {

const Palette& small_palette() {
    static const Palette p = Palette::default_palette().subset({"S3", "S4", "Z5"}, {"R3", "R5"});
    return p;
}

}  // namespace

TEST_CASE("tube certificate of the unknot is trivial") {
    const TubeCertificate c = tube_certificate(parse_gauss_code(""), small_palette());
    CHECK(c.tube_battery.alexander == LaurentPoly::constant(1));
    CHECK(c.tube_battery.level == Level::Tube);
    CHECK(c.peripheral.longitude.empty());
}

TEST_CASE("tube certificates: trefoil equals its reversed vertical reflection") {
    const GaussCode t = corpus_entry("3_1").code;
    const TubeCertificate a = tube_certificate(t, small_palette());
    const TubeCertificate b = tube_certificate(reverse_vreflect(t), small_palette());
    CHECK(first_battery_difference(a.tube_battery, b.tube_battery) == std::nullopt);
}

TEST_CASE("tube certificates: trefoil differs from figure-eight at alexander") {
    const TubeCertificate a = tube_certificate(corpus_entry("3_1").code, small_palette());
    const TubeCertificate b = tube_certificate(corpus_entry("4_1").code, small_palette());
    const auto diff = first_battery_difference(a.tube_battery, b.tube_battery);
    REQUIRE(diff.has_value());
    CHECK(*diff == "alexander");
}

TEST_CASE("spun_compare verdicts") {
    const GaussCode t = corpus_entry("3_1").code;
    const GaussCode f8 = corpus_entry("4_1").code;

    const Verdict same = spun_compare(t, t, small_palette());
    CHECK(same.outcome == Outcome::NotDistinguished);

    const Verdict dichotomy = spun_compare(t, reverse_mirror(t), small_palette());
    CHECK(dichotomy.outcome == Outcome::NotDistinguished);
    CHECK(dichotomy.notes.size() >= 3);

    const Verdict distinct = spun_compare(t, f8, small_palette());
    CHECK(distinct.outcome == Outcome::Distinguished);
    CHECK(distinct.witness == "alexander");
}

TEST_CASE("welded_compare verdicts and the classical escalation") {
    const GaussCode t = corpus_entry("3_1").code;
    const GaussCode f8 = corpus_entry("4_1").code;

    CHECK(welded_compare(t, t, true, true, small_palette()).outcome ==
          Outcome::NotDistinguished);

    const Verdict chirality = welded_compare(t, reverse_vreflect(t), true, true, small_palette());
    CHECK(chirality.outcome == Outcome::DistinguishedClassically);
    CHECK(chirality.witness == "f_polynomial");

    // without the classical flags the escalation is forbidden
    const Verdict unflagged = welded_compare(t, reverse_vreflect(t), false, true, small_palette());
    CHECK(unflagged.outcome == Outcome::NotDistinguished);

    const Verdict distinct = welded_compare(t, f8, false, false, small_palette());
    CHECK(distinct.outcome == Outcome::Distinguished);
    CHECK(distinct.witness == "alexander");
}

TEST_CASE("verdict outcomes are symmetric in their arguments") {
    const std::vector<std::string> names{"unknot", "3_1", "3_1m", "4_1", "5_2"};
    for (const auto& n1 : names)
        for (const auto& n2 : names) {
            const GaussCode a = corpus_entry(n1).code;
            const GaussCode b = corpus_entry(n2).code;
            CHECK(spun_compare(a, b, small_palette()).outcome ==
                  spun_compare(b, a, small_palette()).outcome);
            CHECK(welded_compare(a, b, true, true, small_palette()).outcome ==
                  welded_compare(b, a, true, true, small_palette()).outcome);
        }
}

TEST_CASE("thm16 forward direction on the corpus at a small palette") {
    for (const CorpusEntry& e : corpus()) {
        const auto a = battery(e.code, Level::Tube, small_palette());
        const auto b = battery(reverse_mirror(e.code), Level::Tube, small_palette());
        CHECK(first_battery_difference(a, b) == std::nullopt);
    }
}

TEST_CASE("move-fuzzed codes never get distinguished from their origin") {
    // K'' is welded-equivalent to K (and no longer a classical diagram, so
    // the classical escalation must not fire).
    std::mt19937 rng(271828);
    for (const char* name : {"3_1", "4_1", "5_2"}) {
        const GaussCode k = corpus_entry(name).code;
        for (int trial = 0; trial < 4; ++trial) {
            const GaussCode moved = testing::random_walk(rng, k, 6, 9, /*allow_oc=*/true);
            CHECK(spun_compare(k, moved, small_palette()).outcome ==
                  Outcome::NotDistinguished);
            CHECK(welded_compare(k, moved, true, false, small_palette()).outcome ==
                  Outcome::NotDistinguished);
            const auto v1 = battery(k, Level::Welded, small_palette());
            const auto v2 = battery(moved, Level::Welded, small_palette());
            CHECK(first_battery_difference(v1, v2) == std::nullopt);
        }
    }
}
