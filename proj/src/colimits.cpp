#include "pastures/colimits.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace pastures {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

std::string joined_names(const std::vector<PastureRef>& ps) {
    std::string out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) out += ",";
        out += ps[i]->name;
    }
    return out;
}

}  // namespace

UnitPartition partition_by_generators(int n, const std::vector<std::vector<int>>& generators) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gen : generators) {
        for (int x = 0; x < n; ++x) {
            int a = find_root(parent, x);
            int b = find_root(parent, gen[x]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    UnitPartition part;
    part.class_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        int root = find_root(parent, x);
        if (part.class_of[root] < 0) {
            part.class_of[root] = part.class_count();
            part.representative.push_back(root);
            part.members.emplace_back();
        }
        part.class_of[x] = part.class_of[root];
        part.members[part.class_of[x]].push_back(x);
    }
    return part;
}

CoequalizerResult coequalizer(const Morphism& f, const Morphism& g) {
    if (!(*f.source == *g.source) || !(*f.target == *g.target)) {
        throw std::invalid_argument("coequalizer: f and g are not a parallel pair");
    }
    const Pasture& p1 = *f.source;
    const Pasture& p2 = *f.target;

    // H = { f(z) g(z)^-1 } is the image of a group homomorphism, hence a
    // subgroup of P2^x; the classes below are its cosets.
    std::set<Index> subgroup;
    for (Index z = 1; z < p1.size; ++z) {
        subgroup.insert(p2.mul(f.map[z], p2.inv(g.map[z])));
    }
    std::vector<std::vector<int>> generators;
    for (Index h : subgroup) {
        std::vector<int> gen(p2.size - 1);
        for (Index u = 1; u < p2.size; ++u) gen[u - 1] = p2.mul(h, u) - 1;
        generators.push_back(std::move(gen));
    }
    UnitPartition part = partition_by_generators(p2.size - 1, generators);

    CoequalizerResult result;
    result.subgroup.assign(subgroup.begin(), subgroup.end());
    for (const auto& coset : part.members) {
        std::vector<Index> units;
        for (int pos : coset) units.push_back(pos + 1);
        result.classes.push_back(std::move(units));
    }
    auto cls = [&](Index x) { return x == 0 ? 0 : part.class_of[x - 1] + 1; };

    Pasture q;
    q.name = "coeq(" + p2.name + ")";
    q.size = 1 + part.class_count();
    q.unit_mul.resize(static_cast<std::size_t>(q.size - 1) * (q.size - 1));
    q.neg.resize(q.size);
    q.neg[0] = 0;
    for (Index i = 1; i < q.size; ++i) {
        Index rep = part.representative[i - 1] + 1;
        q.neg[i] = cls(p2.neg[rep]);
        for (Index j = 1; j < q.size; ++j) {
            Index other = part.representative[j - 1] + 1;
            q.unit_mul[static_cast<std::size_t>(i - 1) * (q.size - 1) + (j - 1)] =
                cls(p2.mul(rep, other));
        }
    }
    for (const Triple& t : p2.nullset) {
        q.nullset.insert(sorted_triple(cls(t[0]), cls(t[1]), cls(t[2])));
    }
    add_zero_law_triples(q.nullset, q.neg, q.size);

    result.object = make_pasture(std::move(q));
    result.projection.source = f.target;
    result.projection.target = result.object;
    result.projection.map.resize(p2.size);
    for (Index x = 0; x < p2.size; ++x) result.projection.map[x] = cls(x);
    return result;
}

FiberedCoproductResult fibered_coproduct(const Morphism& f1, const Morphism& f2) {
    if (!(*f1.source == *f2.source)) {
        throw std::invalid_argument("fibered_coproduct: legs have different sources");
    }
    const Pasture& base = *f1.source;
    const Pasture& p1 = *f1.target;
    const Pasture& p2 = *f2.target;
    const int u1 = p1.unit_count();
    const int u2 = p2.unit_count();

    // Orbits of the base unit group acting by x.(a,b) = (f1(x)^-1 a, f2(x) b).
    auto position = [&](Index a, Index b) { return (a - 1) * u2 + (b - 1); };
    std::vector<std::vector<int>> generators;
    for (Index x = 1; x < base.size; ++x) {
        std::vector<int> gen(u1 * u2);
        Index scale1 = p1.inv(f1.map[x]);
        Index scale2 = f2.map[x];
        for (Index a = 1; a < p1.size; ++a) {
            for (Index b = 1; b < p2.size; ++b) {
                gen[position(a, b)] = position(p1.mul(scale1, a), p2.mul(scale2, b));
            }
        }
        generators.push_back(std::move(gen));
    }
    UnitPartition part = partition_by_generators(u1 * u2, generators);

    FiberedCoproductResult result;
    for (const auto& orbit : part.members) {
        std::vector<std::pair<Index, Index>> pairs;
        for (int pos : orbit) pairs.push_back({pos / u2 + 1, pos % u2 + 1});
        result.classes.push_back(std::move(pairs));
    }
    auto cls = [&](Index a, Index b) { return part.class_of[position(a, b)] + 1; };

    Pasture q;
    q.name = "pushout(" + p1.name + "," + p2.name + ";" + base.name + ")";
    q.size = 1 + part.class_count();
    q.unit_mul.resize(static_cast<std::size_t>(q.size - 1) * (q.size - 1));
    q.neg.resize(q.size);
    q.neg[0] = 0;
    for (Index i = 1; i < q.size; ++i) {
        auto [a, b] = result.classes[i - 1].front();
        q.neg[i] = cls(p1.neg[a], b);
        for (Index j = 1; j < q.size; ++j) {
            auto [c, d] = result.classes[j - 1].front();
            q.unit_mul[static_cast<std::size_t>(i - 1) * (q.size - 1) + (j - 1)] =
                cls(p1.mul(a, c), p2.mul(b, d));
        }
    }
    // Both rule families of the defining relations, instantiated over every
    // representative (the rules quantify over elements, not classes).
    for (Index y = 1; y < p2.size; ++y) {
        for (const Triple& t : p1.nullset) {
            auto elem = [&](Index a) { return a == 0 ? 0 : cls(a, y); };
            q.nullset.insert(sorted_triple(elem(t[0]), elem(t[1]), elem(t[2])));
        }
    }
    for (Index x = 1; x < p1.size; ++x) {
        for (const Triple& t : p2.nullset) {
            auto elem = [&](Index b) { return b == 0 ? 0 : cls(x, b); };
            q.nullset.insert(sorted_triple(elem(t[0]), elem(t[1]), elem(t[2])));
        }
    }
    add_zero_law_triples(q.nullset, q.neg, q.size);

    result.object = make_pasture(std::move(q));
    result.left_leg.source = f1.target;
    result.left_leg.target = result.object;
    result.left_leg.map.resize(p1.size);
    result.left_leg.map[0] = 0;
    for (Index x = 1; x < p1.size; ++x) result.left_leg.map[x] = cls(x, 1);
    result.right_leg.source = f2.target;
    result.right_leg.target = result.object;
    result.right_leg.map.resize(p2.size);
    result.right_leg.map[0] = 0;
    for (Index y = 1; y < p2.size; ++y) result.right_leg.map[y] = cls(1, y);
    return result;
}

CoproductResult coproduct(const std::vector<PastureRef>& summands, int max_size) {
    if (summands.empty()) {
        throw std::invalid_argument("coproduct: empty summand list");
    }
    long long tuples = 1;
    for (const PastureRef& s : summands) {
        tuples *= s->unit_count();
        if (tuples > max_size) {
            throw CapacityError("coproduct: unit tuple space exceeds bound " +
                                std::to_string(max_size));
        }
    }
    const std::size_t n = summands.size();

    CoproductResult result;
    result.summands = summands;
    std::vector<std::vector<Index>> all_tuples;
    std::vector<Index> tuple(n, 1);
    for (long long i = 0; i < tuples; ++i) {
        all_tuples.push_back(tuple);
        for (std::size_t d = n; d-- > 0;) {
            if (++tuple[d] < summands[d]->size) break;
            tuple[d] = 1;
        }
    }
    auto position = [&](const std::vector<Index>& t) {
        long long pos = 0;
        for (std::size_t d = 0; d < n; ++d) pos = pos * summands[d]->unit_count() + (t[d] - 1);
        return static_cast<int>(pos);
    };

    // Even sign flips, as orbit closure of the pairwise flip generators.
    std::vector<std::vector<int>> generators;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<int> gen(all_tuples.size());
            for (std::size_t p = 0; p < all_tuples.size(); ++p) {
                std::vector<Index> flipped = all_tuples[p];
                flipped[i] = summands[i]->neg[flipped[i]];
                flipped[j] = summands[j]->neg[flipped[j]];
                gen[p] = position(flipped);
            }
            generators.push_back(std::move(gen));
        }
    }
    UnitPartition part = partition_by_generators(static_cast<int>(all_tuples.size()), generators);

    for (const auto& orbit : part.members) {
        std::vector<std::vector<Index>> members;
        for (int pos : orbit) members.push_back(all_tuples[pos]);
        result.classes.push_back(std::move(members));
    }
    auto cls = [&](const std::vector<Index>& t) { return part.class_of[position(t)] + 1; };

    Pasture q;
    q.name = "coprod(" + joined_names(summands) + ")";
    q.size = 1 + part.class_count();
    q.unit_mul.resize(static_cast<std::size_t>(q.size - 1) * (q.size - 1));
    q.neg.resize(q.size);
    q.neg[0] = 0;
    std::vector<Index> scratch(n);
    for (Index i = 1; i < q.size; ++i) {
        const auto& x = result.classes[i - 1].front();
        scratch = x;
        scratch[0] = summands[0]->neg[scratch[0]];  // any single flip; choices agree mod ~
        q.neg[i] = cls(scratch);
        for (Index j = 1; j < q.size; ++j) {
            const auto& y = result.classes[j - 1].front();
            for (std::size_t d = 0; d < n; ++d) scratch[d] = summands[d]->mul(x[d], y[d]);
            q.unit_mul[static_cast<std::size_t>(i - 1) * (q.size - 1) + (j - 1)] = cls(scratch);
        }
    }
    // All-unit triples: a witness slot j carrying a null triple of summand j,
    // every other slot sharing one value across the three representatives.
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Triple> unit_triples;
        for (const Triple& t : summands[j]->nullset) {
            if (t[0] != 0) unit_triples.push_back(t);
        }
        if (unit_triples.empty()) continue;
        for (const auto& context : all_tuples) {
            for (const Triple& t : unit_triples) {
                std::vector<Index> x = context, y = context, z = context;
                x[j] = t[0];
                y[j] = t[1];
                z[j] = t[2];
                q.nullset.insert(sorted_triple(cls(x), cls(y), cls(z)));
            }
        }
    }
    add_zero_law_triples(q.nullset, q.neg, q.size);

    result.object = make_pasture(std::move(q));
    for (std::size_t d = 0; d < n; ++d) {
        Morphism inj;
        inj.source = summands[d];
        inj.target = result.object;
        inj.map.resize(summands[d]->size);
        inj.map[0] = 0;
        for (Index x = 1; x < summands[d]->size; ++x) {
            std::vector<Index> t(n, 1);
            t[d] = x;
            inj.map[x] = cls(t);
        }
        result.injections.push_back(std::move(inj));
    }
    return result;
}

Morphism cotuple_morphism(const CoproductResult& coprod, const PastureRef& codomain,
                          const std::vector<Morphism>& legs) {
    if (legs.size() != coprod.summands.size()) {
        throw std::invalid_argument("cotuple_morphism: one leg per summand required");
    }
    for (std::size_t d = 0; d < legs.size(); ++d) {
        if (!(*legs[d].source == *coprod.summands[d])) {
            throw std::invalid_argument("cotuple_morphism: leg " + std::to_string(d) +
                                        " does not start at its summand");
        }
        if (!(*legs[d].target == *codomain)) {
            throw std::invalid_argument("cotuple_morphism: leg " + std::to_string(d) +
                                        " does not land in the codomain");
        }
    }
    Morphism out;
    out.source = coprod.object;
    out.target = codomain;
    out.map.resize(coprod.object->size);
    out.map[0] = 0;
    for (Index i = 1; i < coprod.object->size; ++i) {
        const auto& rep = coprod.classes[i - 1].front();
        Index value = 1;
        for (std::size_t d = 0; d < legs.size(); ++d) {
            value = codomain->mul(value, legs[d].map[rep[d]]);
        }
        out.map[i] = value;
    }
    return out;
}

}  // namespace pastures
