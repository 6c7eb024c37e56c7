#include "weld/report_json.hpp"

namespace weld {

Json laurent_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, c}));
    return terms;
}

Json word_json(const Word& w) {
    Json out = Json::array();
    for (const Letter& l : w) out.push_back(Json::array({l.gen, l.exp}));
    return out;
}

Json presentation_json(const Presentation& p) {
    Json j;
    j["generators"] = p.generator_count;
    j["labels"] = p.generator_labels;
    Json rels = Json::array();
    for (const Word& r : p.relations) rels.push_back(word_json(r));
    j["relations"] = rels;
    return j;
}

Json peripheral_json(const PeripheralStructure& ps) {
    Json j;
    j["group"] = presentation_json(ps.group);
    j["meridian"] = word_json(ps.meridian);
    j["longitude"] = word_json(ps.longitude);
    j["writhe"] = ps.writhe;
    return j;
}

Json battery_json(const InvariantBattery& b) {
    Json j;
    j["level"] = level_name(b.level);
    j["palette_version"] = b.palette_version;
    Json entries;
    entries["alexander"] = laurent_json(b.alexander);
    entries["hom_counts"] = b.hom_counts;
    entries["quandle_counts"] = b.quandle_counts;
    Json multisets;
    for (const auto& [name, ms] : b.peripheral_multisets) {
        Json orbits = Json::array();
        for (const auto& [pair, count] : ms.counts)
            orbits.push_back(Json::array({pair.first, pair.second, count}));
        multisets[name] = orbits;
    }
    entries["peripheral_multisets"] = multisets;
    if (b.f_polynomial) entries["f_polynomial"] = laurent_json(*b.f_polynomial);
    j["entries"] = entries;
    return j;
}

Json palette_json(const Palette& palette) {
    Json j;
    j["version"] = palette.version;
    Json groups = Json::array();
    for (const FiniteGroup& g : palette.groups) groups.push_back(g.name());
    j["groups"] = groups;
    Json quandles = Json::array();
    for (const FiniteQuandle& q : palette.quandles) quandles.push_back(q.name());
    j["quandles"] = quandles;
    return j;
}

Json move_json(const Move& m) {
    Json j;
    j["kind"] = move_kind_name(m.kind);
    j["site"] = m.site;
    j["variant"] = m.variant;
    j["payload"] = m.payload;
    return j;
}

Json move_path_json(const MovePath& p) {
    Json j;
    j["start"] = to_string(p.start);
    Json steps = Json::array();
    for (const Move& m : p.steps) steps.push_back(move_json(m));
    j["steps"] = steps;
    return j;
}

Move move_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("site"))
        throw InvalidMove("move JSON needs kind and site");
    Move m;
    const auto kind = move_kind_from_name(j.at("kind").get<std::string>());
    if (!kind) throw InvalidMove("unknown move kind in JSON");
    m.kind = *kind;
    m.site = j.at("site").get<std::vector<int>>();
    m.variant = j.value("variant", 0);
    if (j.contains("payload")) m.payload = j.at("payload").get<std::vector<int>>();
    return m;
}

Json verdict_json(const Verdict& v) {
    Json j;
    j["outcome"] = outcome_name(v.outcome);
    j["witness"] = v.witness;
    j["notes"] = v.notes;
    return j;
}

Json search_json(const SearchResult& r) {
    Json j;
    j["found"] = r.path.has_value();
    if (r.path) j["path"] = move_path_json(*r.path);
    Json stats;
    stats["states_visited"] = r.stats.states_visited;
    stats["states_expanded"] = r.stats.states_expanded;
    stats["frontier_size"] = r.stats.frontier_size;
    stats["budget_exhausted"] = r.stats.budget_exhausted;
    j["stats"] = stats;
    return j;
}

}  // namespace weld
