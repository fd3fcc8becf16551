#include "pastures/morphism.hpp"

#include <algorithm>
#include <set>

namespace pastures {

ValidationReport validate_morphism(const Morphism& m) {
    ValidationReport report;
    auto add = [&](const char* axiom, std::vector<Index> witness) {
        report.violations.push_back({axiom, std::move(witness)});
    };
    const Pasture& src = *m.source;
    const Pasture& tgt = *m.target;

    if (m.map.size() != static_cast<std::size_t>(src.size)) {
        add("structure.map-shape", {static_cast<Index>(m.map.size())});
        return report;
    }
    for (Index x = 0; x < src.size; ++x) {
        if (m.map[x] < 0 || m.map[x] >= tgt.size) {
            add("structure.map-range", {x, m.map[x]});
            return report;
        }
    }

    if (m.map[0] != 0) add("morphism.zero", {m.map[0]});
    if (m.map[1] != 1) add("morphism.one", {m.map[1]});
    for (Index u = 1; u < src.size; ++u) {
        if (m.map[u] == 0) add("morphism.unit-image", {u});
    }
    for (Index x = 1; x < src.size; ++x) {
        for (Index y = x; y < src.size; ++y) {
            if (m.map[x] == 0 || m.map[y] == 0) continue;  // already reported
            if (m.map[src.mul(x, y)] != tgt.mul(m.map[x], m.map[y])) {
                add("morphism.multiplicative", {x, y});
            }
        }
    }
    for (Index x = 0; x < src.size; ++x) {
        if (m.map[src.neg[x]] != tgt.neg[m.map[x]]) add("morphism.involution", {x});
    }
    for (const Triple& t : src.nullset) {
        if (!tgt.is_null(m.map[t[0]], m.map[t[1]], m.map[t[2]])) {
            add("morphism.nullset", {t[0], t[1], t[2]});
        }
    }
    return report;
}

Morphism identity(PastureRef p) {
    Morphism m;
    m.map.resize(p->size);
    for (Index x = 0; x < p->size; ++x) m.map[x] = x;
    m.source = p;
    m.target = std::move(p);
    return m;
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(*f.target == *g.source)) {
        throw std::invalid_argument("compose: middle pastures differ (" + f.target->name +
                                    " vs " + g.source->name + ")");
    }
    Morphism out;
    out.source = f.source;
    out.target = g.target;
    out.map.resize(f.map.size());
    for (std::size_t x = 0; x < f.map.size(); ++x) out.map[x] = g.map[f.map[x]];
    return out;
}

std::vector<Index> unit_generators(const Pasture& p) {
    std::vector<char> generated(p.size, 0);
    generated[1] = 1;
    int covered = 1;
    std::vector<Index> gens;
    while (covered < p.size - 1) {
        Index next = 0;
        for (Index u = 2; u < p.size; ++u) {
            if (!generated[u]) {
                next = u;
                break;
            }
        }
        if (next == 0) {
            throw std::logic_error("unit_generators: unit table of " + p.name +
                                   " is not closed on units");
        }
        gens.push_back(next);
        generated[next] = 1;
        ++covered;
        bool changed = true;
        while (changed) {
            changed = false;
            for (Index x = 1; x < p.size; ++x) {
                if (!generated[x]) continue;
                for (Index y = x; y < p.size; ++y) {
                    if (!generated[y]) continue;
                    Index xy = p.mul(x, y);
                    if (!generated[xy]) {
                        generated[xy] = 1;
                        ++covered;
                        changed = true;
                    }
                }
            }
        }
    }
    return gens;
}

namespace {

// Closes a partial unit map (0 = unassigned) under products.
// Returns false on a conflict with an already assigned image.
bool close_unit_map(const Pasture& src, const Pasture& tgt, std::vector<Index>& img) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (Index x = 1; x < src.size; ++x) {
            if (img[x] == 0) continue;
            for (Index y = x; y < src.size; ++y) {
                if (img[y] == 0) continue;
                Index xy = src.mul(x, y);
                Index v = tgt.mul(img[x], img[y]);
                if (img[xy] == 0) {
                    img[xy] = v;
                    changed = true;
                } else if (img[xy] != v) {
                    return false;
                }
            }
        }
    }
    return true;
}

void search_homs(const PastureRef& source, const PastureRef& target,
                 const std::vector<Index>& gens, std::size_t depth,
                 std::vector<Index>& img, std::vector<Morphism>& out) {
    const Pasture& src = *source;
    const Pasture& tgt = *target;
    if (depth == gens.size()) {
        // gens generate P^x, so the closed map is total on units.
        Morphism m;
        m.source = source;
        m.target = target;
        m.map.resize(src.size, 0);
        for (Index u = 1; u < src.size; ++u) m.map[u] = img[u];
        for (Index x = 0; x < src.size; ++x) {
            if (m.map[src.neg[x]] != tgt.neg[m.map[x]]) return;
        }
        for (const Triple& t : src.nullset) {
            if (!tgt.is_null(m.map[t[0]], m.map[t[1]], m.map[t[2]])) return;
        }
        out.push_back(std::move(m));
        return;
    }
    for (Index q = 1; q < tgt.size; ++q) {
        std::vector<Index> attempt = img;
        attempt[gens[depth]] = q;
        if (close_unit_map(src, tgt, attempt)) {
            search_homs(source, target, gens, depth + 1, attempt, out);
        }
    }
}

}  // namespace

std::vector<Morphism> enumerate_homs(const PastureRef& source, const PastureRef& target,
                                     int max_source_size) {
    if (source->size > max_source_size) {
        throw CapacityError("enumerate_homs: source " + source->name + " has " +
                            std::to_string(source->size) + " elements, bound is " +
                            std::to_string(max_source_size));
    }
    std::vector<Index> gens = unit_generators(*source);
    std::vector<Index> img(source->size, 0);
    img[1] = 1;
    if (!close_unit_map(*source, *target, img)) return {};
    std::vector<Morphism> out;
    search_homs(source, target, gens, 0, img, out);
    std::sort(out.begin(), out.end(),
              [](const Morphism& a, const Morphism& b) { return a.map < b.map; });
    return out;
}

std::optional<std::pair<Morphism, Morphism>> is_isomorphic(const PastureRef& a,
                                                           const PastureRef& b,
                                                           int max_size) {
    if (a->size > max_size || b->size > max_size) {
        throw CapacityError("is_isomorphic: carrier exceeds bound " + std::to_string(max_size));
    }
    if (a->size != b->size || a->nullset.size() != b->nullset.size()) return std::nullopt;
    for (const Morphism& f : enumerate_homs(a, b, max_size)) {
        std::vector<char> hit(b->size, 0);
        bool bijective = true;
        for (Index x = 0; x < a->size; ++x) {
            if (hit[f.map[x]]) {
                bijective = false;
                break;
            }
            hit[f.map[x]] = 1;
        }
        if (!bijective) continue;
        std::set<Triple> image;
        for (const Triple& t : a->nullset) {
            image.insert(sorted_triple(f.map[t[0]], f.map[t[1]], f.map[t[2]]));
        }
        if (image != b->nullset) continue;
        Morphism back;
        back.source = b;
        back.target = a;
        back.map.resize(b->size);
        for (Index x = 0; x < a->size; ++x) back.map[f.map[x]] = x;
        return std::make_pair(f, std::move(back));
    }
    return std::nullopt;
}

}  // namespace pastures
