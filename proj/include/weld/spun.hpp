// Tube-level certificates and classification verdicts for pairs of diagrams.
//
// Satoh's Tube map sends a welded knot to a ribbon torus knot and preserves
// the knot group, the quandle, the meridian and the longitude up to inverse.
// A TubeCertificate is the computable shadow of Tube(K): the peripheral
// structure plus the Tube-level invariant battery, in which peripheral
// multisets identify the longitude with its inverse. No surface diagram is
// ever constructed.

#pragma once

#include <string>
#include <vector>

#include "weld/gauss_code.hpp"
#include "weld/invariants.hpp"
#include "weld/knot_group.hpp"

namespace weld {

struct TubeCertificate {
    GaussCode source;
    PeripheralStructure peripheral;
    InvariantBattery tube_battery;  // certificate equality = battery equality
};

TubeCertificate tube_certificate(const GaussCode& code,
                                 const Palette& palette = Palette::default_palette());

enum class Outcome { Distinguished, DistinguishedClassically, NotDistinguished };
std::string outcome_name(Outcome o);

struct Verdict {
    Outcome outcome = Outcome::NotDistinguished;
    std::string witness;             // first differing battery entry, if any
    std::vector<std::string> notes;  // applied classification facts
};

// Compares Tube batteries. A difference proves the spun tori non-isotopic;
// equality is consistent with K = K' or K = reverse-mirror(K') and is
// reported together with supporting Welded-level comparisons of both
// branches of that dichotomy.
Verdict spun_compare(const GaussCode& k1, const GaussCode& k2,
                     const Palette& palette = Palette::default_palette());

// Compares Welded batteries; when equal and both inputs are flagged as
// classical diagrams, escalates to the Virtual level, whose f-polynomial can
// separate classically inequivalent diagrams (classical knot theory embeds
// faithfully into welded knot theory).
Verdict welded_compare(const GaussCode& k1, const GaussCode& k2, bool classical1,
                       bool classical2, const Palette& palette = Palette::default_palette());

}  // namespace weld
