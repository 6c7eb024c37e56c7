#include <doctest.h>

#include <set>
#include <stdexcept>

#include "weld/finite_algebra.hpp"

using namespace weld;

TEST_CASE("built-in groups validate and have the right orders") {
    CHECK(cyclic_group(5).order() == 5);
    CHECK(dihedral_group(3).order() == 6);
    CHECK(dihedral_group(6).order() == 12);
    CHECK(symmetric_group(3).order() == 6);
    CHECK(symmetric_group(4).order() == 24);
    CHECK(alternating_group_4().order() == 12);
}

TEST_CASE("group laws are enforced") {
    // A non-associative table: identity at 0, but 1*1 breaks associativity.
    std::vector<std::vector<int>> bad{{0, 1, 2}, {1, 0, 0}, {2, 0, 0}};
    CHECK_THROWS_AS(FiniteGroup("bad", bad), std::invalid_argument);
}

TEST_CASE("conjugacy classes of S3 and S4") {
    const FiniteGroup s3 = symmetric_group(3);
    std::multiset<size_t> sizes3;
    for (const auto& c : s3.conjugacy_classes()) sizes3.insert(c.size());
    CHECK(sizes3 == std::multiset<size_t>{1, 2, 3});

    const FiniteGroup s4 = symmetric_group(4);
    std::multiset<size_t> sizes4;
    for (const auto& c : s4.conjugacy_classes()) sizes4.insert(c.size());
    CHECK(sizes4 == std::multiset<size_t>{1, 3, 6, 6, 8});
}

TEST_CASE("dihedral group relations") {
    const FiniteGroup d4 = dihedral_group(4);
    // r has order 4, s has order 2, s r s = r^-1
    const int r = 1, s = 4;
    CHECK(d4.power(r, 4) == d4.identity());
    CHECK(d4.mul(s, s) == d4.identity());
    CHECK(d4.mul(d4.mul(s, r), s) == d4.inverse(r));
}

TEST_CASE("dihedral quandles validate; R3 spot checks") {
    const FiniteQuandle r3 = dihedral_quandle(3);
    CHECK(r3.order() == 3);
    CHECK(r3.op(0, 1) == 2);   // 2*1 - 0 mod 3
    CHECK(r3.op(2, 2) == 2);   // idempotent
    CHECK(r3.inv_op(r3.op(0, 1), 1) == 0);
    for (int n = 3; n <= 9; ++n) CHECK(dihedral_quandle(n).order() == n);
}

TEST_CASE("quandle axioms are enforced") {
    // not idempotent
    std::vector<std::vector<int>> bad{{1, 0}, {0, 1}};
    CHECK_THROWS_AS(FiniteQuandle("bad", bad), std::invalid_argument);
}

TEST_CASE("default palette composition") {
    const Palette& p = Palette::default_palette();
    CHECK(p.version == "weld-palette-1");
    CHECK(p.groups.size() == 18);  // Z2..Z12, D3..D6, S3, S4, A4
    CHECK(p.quandles.size() == 7);  // R3..R9
    for (const FiniteGroup& g : p.groups) CHECK(g.order() <= 24);
    CHECK_THROWS_AS(p.subset({"Z99"}, {}), std::invalid_argument);
    const Palette sub = p.subset({"S3", "Z5"}, {"R3"});
    CHECK(sub.groups.size() == 2);
    CHECK(sub.quandles.size() == 1);
    CHECK(sub.version == p.version);
}
