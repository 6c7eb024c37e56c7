#include <bit>
#include <cassert>
#include <map>
#include <stdexcept>
#include <vector>

#include "weld/invariants.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weld::kernels {

namespace {

// ---------------------------------------------------------------- bracket

struct CrossingPositions {
    int over_pos = -1;
    int under_pos = -1;
    CrossingSign sign = CrossingSign::Plus;
};

std::vector<CrossingPositions> crossing_positions(const GaussCode& code) {
    std::map<int, CrossingPositions> by_id;
    const auto symbols = code.symbols();
    for (size_t p = 0; p < symbols.size(); ++p) {
        const GaussSymbol& s = symbols[p];
        CrossingPositions& cp = by_id[s.crossing_id];
        cp.sign = s.sign;
        (s.role == Role::Over ? cp.over_pos : cp.under_pos) = static_cast<int>(p);
    }
    std::vector<CrossingPositions> v;
    v.reserve(by_id.size());
    for (auto& [id, cp] : by_id) v.push_back(cp);
    return v;
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

void unite(std::vector<int>& parent, int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) parent[a] = b;
}

// Circle edges e_0..e_{2n-1}, e_i between positions i and i+1; a smoothing
// glues the four strand ends at each crossing; loops = components.
int loops_of_state(const std::vector<CrossingPositions>& crossings, int edge_count,
                   std::uint64_t state, std::vector<int>& parent) {
    parent.resize(edge_count);
    for (int i = 0; i < edge_count; ++i) parent[i] = i;
    for (size_t c = 0; c < crossings.size(); ++c) {
        const CrossingPositions& cp = crossings[c];
        const bool b_smoothing = (state >> c) & 1;
        // A-smoothing is orientation-preserving at Plus crossings and
        // orientation-reversing at Minus crossings.
        const bool preserving = (cp.sign == CrossingSign::Plus) != b_smoothing;
        const int in_o = (cp.over_pos + edge_count - 1) % edge_count;
        const int out_o = cp.over_pos;
        const int in_u = (cp.under_pos + edge_count - 1) % edge_count;
        const int out_u = cp.under_pos;
        if (preserving) {
            unite(parent, in_o, out_u);
            unite(parent, in_u, out_o);
        } else {
            unite(parent, in_o, in_u);
            unite(parent, out_o, out_u);
        }
    }
    int loops = 0;
    for (int i = 0; i < edge_count; ++i)
        if (find_root(parent, i) == i) ++loops;
    return loops;
}

// Dense accumulator over exponents of A, offset so index 0 is exponent -off.
struct DenseAccum {
    explicit DenseAccum(int off) : offset(off), coeffs(2 * off + 1, 0) {}
    void add(int exp, std::int64_t c) { coeffs[exp + offset] += c; }
    void merge(const DenseAccum& o) {
        for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    }
    LaurentPoly to_poly() const {
        LaurentPoly p;
        for (size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) p += LaurentPoly::monomial(coeffs[i], static_cast<int>(i) - offset);
        return p;
    }
    int offset;
    std::vector<std::int64_t> coeffs;
};

struct BracketTables {
    std::vector<CrossingPositions> crossings;
    int n = 0;
    int edges = 0;
    int offset = 0;
    // (-A^2 - A^-2)^j as sparse term lists
    std::vector<std::vector<std::pair<int, std::int64_t>>> dpow;
};

BracketTables bracket_tables(const GaussCode& code) {
    BracketTables t;
    t.crossings = crossing_positions(code);
    t.n = static_cast<int>(t.crossings.size());
    t.edges = 2 * t.n;
    t.offset = 5 * t.n + 4;
    LaurentPoly d = LaurentPoly::from_terms({{2, -1}, {-2, -1}});
    LaurentPoly acc = LaurentPoly::constant(1);
    for (int j = 0; j <= t.edges; ++j) {
        std::vector<std::pair<int, std::int64_t>> terms(acc.terms().begin(), acc.terms().end());
        t.dpow.push_back(std::move(terms));
        acc = acc * d;
    }
    return t;
}

void bracket_state_range(const BracketTables& t, std::uint64_t begin, std::uint64_t end,
                         DenseAccum& acc, std::vector<int>& parent) {
    for (std::uint64_t s = begin; s < end; ++s) {
        const int loops = loops_of_state(t.crossings, t.edges, s, parent);
        const int k = std::popcount(s);
        const int shift = t.n - 2 * k;  // A^{#A - #B}
        for (const auto& [e, c] : t.dpow[loops - 1]) acc.add(e + shift, c);
    }
}

// --------------------------------------------------------- hom enumeration

struct HomCollector {
    std::int64_t mult = 1;
    std::int64_t count = 0;
    bool want_images = false;
    std::map<std::pair<int, int>, std::int64_t> images;
};

struct GroupWalk {
    const FiniteGroup& h;
    const std::vector<CrossingRelation>& events;
    const Word& meridian;
    const Word& longitude;
    std::vector<int> assign;
    const std::vector<int>* domain = nullptr;
    HomCollector* out = nullptr;

    int eval(const Word& w) const {
        int v = h.identity();
        for (const Letter& l : w)
            v = h.mul(v, l.exp > 0 ? assign[l.gen] : h.inverse(assign[l.gen]));
        return v;
    }

    void complete() {
        out->count += out->mult;
        if (out->want_images)
            out->images[{eval(meridian), eval(longitude)}] += out->mult;
    }

    void step(size_t j) {
        if (j == events.size()) {
            complete();
            return;
        }
        const CrossingRelation& c = events[j];
        const int a = assign[c.incoming];
        const int e = sign_value(c.sign);
        if (assign[c.over] >= 0) {
            const int b = h.conjugate(a, h.power(assign[c.over], e));
            if (assign[c.outgoing] >= 0) {
                if (assign[c.outgoing] == b) step(j + 1);
            } else {
                assign[c.outgoing] = b;
                step(j + 1);
                assign[c.outgoing] = -1;
            }
        } else if (c.over == c.outgoing) {
            // b = b^-e a b^e forces b = a, with no further constraint.
            assign[c.outgoing] = a;
            step(j + 1);
            assign[c.outgoing] = -1;
        } else {
            for (int v : *domain) {
                assign[c.over] = v;
                const int b = h.conjugate(a, h.power(v, e));
                if (assign[c.outgoing] >= 0) {
                    if (assign[c.outgoing] == b) step(j + 1);
                } else {
                    assign[c.outgoing] = b;
                    step(j + 1);
                    assign[c.outgoing] = -1;
                }
                assign[c.over] = -1;
            }
        }
    }
};

// Plain backtracking for presentations without crossing metadata: assign
// generators in index order, checking each relator once its last generator
// is assigned.
struct GenericWalk {
    const FiniteGroup& h;
    const Presentation& p;
    const Word& meridian;
    const Word& longitude;
    std::vector<int> assign;
    std::vector<std::vector<const Word*>> checks_at;  // generator -> relators
    HomCollector* out = nullptr;

    GenericWalk(const FiniteGroup& hh, const Presentation& pp, const Word& m, const Word& l)
        : h(hh), p(pp), meridian(m), longitude(l), assign(pp.generator_count, -1),
          checks_at(pp.generator_count) {
        for (const Word& r : p.relations) {
            int last = 0;
            for (const Letter& le : r) last = std::max(last, le.gen);
            if (!r.empty()) checks_at[last].push_back(&r);
        }
    }

    int eval(const Word& w) const {
        int v = h.identity();
        for (const Letter& l : w)
            v = h.mul(v, l.exp > 0 ? assign[l.gen] : h.inverse(assign[l.gen]));
        return v;
    }

    void step(int g) {
        if (g == p.generator_count) {
            out->count += out->mult;
            if (out->want_images)
                out->images[{eval(meridian), eval(longitude)}] += out->mult;
            return;
        }
        for (int v = 0; v < h.order(); ++v) {
            assign[g] = v;
            bool ok = true;
            for (const Word* r : checks_at[g])
                if (eval(*r) != h.identity()) {
                    ok = false;
                    break;
                }
            if (ok) step(g + 1);
        }
        assign[g] = -1;
    }
};

bool wirtinger_shaped(const Presentation& p) {
    return !p.crossings.empty() && p.crossings.size() == p.relations.size();
}

HomImages finish(HomCollector&& c) {
    HomImages r;
    r.count = c.count;
    r.meridian_longitude = std::move(c.images);
    return r;
}

}  // namespace

LaurentPoly bracket_reference(const GaussCode& code) {
    if (code.crossing_count() == 0) return LaurentPoly::constant(1);
    const BracketTables t = bracket_tables(code);
    DenseAccum acc(t.offset);
    std::vector<int> parent;
    bracket_state_range(t, 0, std::uint64_t{1} << t.n, acc, parent);
    return acc.to_poly();
}

LaurentPoly bracket_parallel(const GaussCode& code) {
    if (code.crossing_count() == 0) return LaurentPoly::constant(1);
    const BracketTables t = bracket_tables(code);
    const std::uint64_t states = std::uint64_t{1} << t.n;
#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::vector<DenseAccum> partial(threads, DenseAccum(t.offset));
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
    {
        const int tid = omp_get_thread_num();
        std::vector<int> parent;
        const std::uint64_t chunk = (states + threads - 1) / threads;
        const std::uint64_t begin = chunk * tid;
        const std::uint64_t end = std::min(states, begin + chunk);
        if (begin < end) bracket_state_range(t, begin, end, partial[tid], parent);
    }
#else
    std::vector<int> parent;
    bracket_state_range(t, 0, states, partial[0], parent);
#endif
    // Exact integer sums: merge order cannot change the result.
    for (int i = 1; i < threads; ++i) partial[0].merge(partial[i]);
    return partial[0].to_poly();
}

HomImages homs_reference(const Presentation& p, const Word& meridian, const Word& longitude,
                         const FiniteGroup& h) {
    HomCollector col;
    col.want_images = true;
    if (wirtinger_shaped(p)) {
        std::vector<int> all(h.order());
        for (int i = 0; i < h.order(); ++i) all[i] = i;
        GroupWalk walk{h, p.crossings, meridian, longitude,
                       std::vector<int>(p.generator_count, -1), &all, &col};
        const int seed = p.crossings.front().incoming;
        for (int x = 0; x < h.order(); ++x) {
            walk.assign[seed] = x;
            walk.step(0);
            walk.assign[seed] = -1;
        }
        return finish(std::move(col));
    }
    GenericWalk walk(h, p, meridian, longitude);
    walk.out = &col;
    walk.step(0);
    return finish(std::move(col));
}

HomImages homs_parallel(const Presentation& p, const Word& meridian, const Word& longitude,
                        const FiniteGroup& h) {
    if (!wirtinger_shaped(p)) return homs_reference(p, meridian, longitude, h);
    // All Wirtinger generators are conjugate, so every homomorphism maps them
    // into a single conjugacy class. Pin the basepoint generator to the class
    // representative: each completed walk stands for |class| homomorphisms,
    // all conjugates of it, so counts and conjugation-normalized multisets
    // come out exact.
    const auto& classes = h.conjugacy_classes();
    const int nclasses = static_cast<int>(classes.size());
    std::vector<HomCollector> per_class(nclasses);
    const int seed = p.crossings.front().incoming;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int ci = 0; ci < nclasses; ++ci) {
        const std::vector<int>& cls = classes[ci];
        HomCollector& col = per_class[ci];
        col.want_images = true;
        col.mult = static_cast<std::int64_t>(cls.size());
        GroupWalk walk{h, p.crossings, meridian, longitude,
                       std::vector<int>(p.generator_count, -1), &cls, &col};
        walk.assign[seed] = cls.front();
        walk.step(0);
    }
    HomCollector total;
    total.want_images = true;
    for (HomCollector& col : per_class) {
        total.count += col.count;
        for (const auto& [key, c] : col.images) total.images[key] += c;
    }
    return finish(std::move(total));
}

namespace {

struct QuandleWalk {
    const FiniteQuandle& q;
    const std::vector<CrossingRelation>& events;
    std::vector<int> assign;
    std::int64_t count = 0;

    int act(int a, int over, CrossingSign sign) const {
        return sign == CrossingSign::Plus ? q.op(a, over) : q.inv_op(a, over);
    }

    void step(size_t j) {
        if (j == events.size()) {
            ++count;
            return;
        }
        const CrossingRelation& c = events[j];
        const int a = assign[c.incoming];
        if (assign[c.over] >= 0) {
            const int b = act(a, assign[c.over], c.sign);
            if (assign[c.outgoing] >= 0) {
                if (assign[c.outgoing] == b) step(j + 1);
            } else {
                assign[c.outgoing] = b;
                step(j + 1);
                assign[c.outgoing] = -1;
            }
        } else if (c.over == c.outgoing) {
            // b = a * b: enumerate the fixed colors of the translation.
            for (int x = 0; x < q.order(); ++x) {
                if (act(a, x, c.sign) != x) continue;
                assign[c.outgoing] = x;
                step(j + 1);
                assign[c.outgoing] = -1;
            }
        } else {
            for (int v = 0; v < q.order(); ++v) {
                assign[c.over] = v;
                const int b = act(a, v, c.sign);
                if (assign[c.outgoing] >= 0) {
                    if (assign[c.outgoing] == b) step(j + 1);
                } else {
                    assign[c.outgoing] = b;
                    step(j + 1);
                    assign[c.outgoing] = -1;
                }
                assign[c.over] = -1;
            }
        }
    }
};

std::int64_t quandle_seed_count(const ArcStructure& as, const FiniteQuandle& q, int seed_color) {
    QuandleWalk walk{q, as.crossings, std::vector<int>(as.arc_count, -1)};
    walk.assign[as.crossings.front().incoming] = seed_color;
    walk.step(0);
    return walk.count;
}

}  // namespace

std::int64_t quandle_colorings_reference(const GaussCode& code, const FiniteQuandle& q) {
    const ArcStructure as = arc_structure(code);
    if (as.crossings.empty()) return q.order();
    std::int64_t total = 0;
    for (int x = 0; x < q.order(); ++x) total += quandle_seed_count(as, q, x);
    return total;
}

std::int64_t quandle_colorings_parallel(const GaussCode& code, const FiniteQuandle& q) {
    const ArcStructure as = arc_structure(code);
    if (as.crossings.empty()) return q.order();
    std::vector<std::int64_t> partial(q.order(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int x = 0; x < q.order(); ++x) partial[x] = quandle_seed_count(as, q, x);
    std::int64_t total = 0;
    for (std::int64_t c : partial) total += c;
    return total;
}

}  // namespace weld::kernels
