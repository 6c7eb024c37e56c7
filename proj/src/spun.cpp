#include "weld/spun.hpp"

namespace weld {

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Distinguished: return "Distinguished";
        case Outcome::DistinguishedClassically: return "DistinguishedClassically";
        case Outcome::NotDistinguished: return "NotDistinguished";
    }
    return "?";
}

TubeCertificate tube_certificate(const GaussCode& code, const Palette& palette) {
    return TubeCertificate{code, peripheral(code), battery(code, Level::Tube, palette)};
}

namespace {

std::string branch_note(const std::string& label, const InvariantBattery& a,
                        const InvariantBattery& b) {
    auto diff = first_battery_difference(a, b);
    if (diff) return "welded batteries of " + label + " differ at " + *diff;
    return "welded batteries of " + label + " are equal";
}

}  // namespace

Verdict spun_compare(const GaussCode& k1, const GaussCode& k2, const Palette& palette) {
    Verdict v;
    const InvariantBattery t1 = battery(k1, Level::Tube, palette);
    const InvariantBattery t2 = battery(k2, Level::Tube, palette);
    if (auto diff = first_battery_difference(t1, t2)) {
        v.outcome = Outcome::Distinguished;
        v.witness = *diff;
        v.notes = {"Tube batteries differ: the spun tori are not isotopic",
                   "Tube preserves the knot group, meridian, and longitude up to inverse"};
        return v;
    }
    v.outcome = Outcome::NotDistinguished;
    v.notes.push_back(
        "equal Tube certificates: oriented spun tori are classified by their peripheral "
        "structures, so for classical inputs this is consistent with K = K' or "
        "K = reverse-mirror(K')");
    const InvariantBattery w1 = battery(k1, Level::Welded, palette);
    v.notes.push_back(branch_note("(K, K')", w1, battery(k2, Level::Welded, palette)));
    v.notes.push_back(branch_note("(K, reverse-mirror(K'))", w1,
                                  battery(reverse_mirror(k2), Level::Welded, palette)));
    return v;
}

Verdict welded_compare(const GaussCode& k1, const GaussCode& k2, bool classical1,
                       bool classical2, const Palette& palette) {
    Verdict v;
    const InvariantBattery w1 = battery(k1, Level::Welded, palette);
    const InvariantBattery w2 = battery(k2, Level::Welded, palette);
    if (auto diff = first_battery_difference(w1, w2)) {
        v.outcome = Outcome::Distinguished;
        v.witness = *diff;
        v.notes = {"welded batteries differ: the diagrams are not welded equivalent"};
        return v;
    }
    if (classical1 && classical2) {
        const InvariantBattery v1 = battery(k1, Level::Virtual, palette);
        const InvariantBattery v2 = battery(k2, Level::Virtual, palette);
        if (auto diff = first_battery_difference(v1, v2)) {
            v.outcome = Outcome::DistinguishedClassically;
            v.witness = *diff;
            v.notes = {
                "welded batteries are equal but the Virtual level differs",
                "classical knot theory embeds faithfully into welded knot theory: "
                "classically inequivalent diagrams stay inequivalent as welded knots"};
            return v;
        }
    }
    v.outcome = Outcome::NotDistinguished;
    v.notes = {"welded batteries are equal"};
    return v;
}

}  // namespace weld
