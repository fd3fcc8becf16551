#include "pastures/limits.hpp"

#include <map>
#include <string>

namespace pastures {

namespace {

std::string joined_names(const std::vector<PastureRef>& ps) {
    std::string out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) out += ",";
        out += ps[i]->name;
    }
    return out;
}

}  // namespace

EqualizerResult equalizer(const Morphism& f, const Morphism& g) {
    if (!(*f.source == *g.source) || !(*f.target == *g.target)) {
        throw std::invalid_argument("equalizer: f and g are not a parallel pair");
    }
    const Pasture& p1 = *f.source;

    EqualizerResult result;
    for (Index x = 0; x < p1.size; ++x) {
        if (f.map[x] == g.map[x]) result.carrier.push_back(x);
    }
    std::vector<Index> new_of_old(p1.size, -1);
    for (std::size_t i = 0; i < result.carrier.size(); ++i) {
        new_of_old[result.carrier[i]] = static_cast<Index>(i);
    }

    Pasture q;
    q.name = "eq(" + p1.name + ")";
    q.size = static_cast<int>(result.carrier.size());
    q.unit_mul.resize(static_cast<std::size_t>(q.size - 1) * (q.size - 1));
    for (Index a = 1; a < q.size; ++a) {
        for (Index b = 1; b < q.size; ++b) {
            Index prod = p1.mul(result.carrier[a], result.carrier[b]);
            q.unit_mul[static_cast<std::size_t>(a - 1) * (q.size - 1) + (b - 1)] = new_of_old[prod];
        }
    }
    q.neg.resize(q.size);
    for (Index x = 0; x < q.size; ++x) q.neg[x] = new_of_old[p1.neg[result.carrier[x]]];
    for (const Triple& t : p1.nullset) {
        if (new_of_old[t[0]] >= 0 && new_of_old[t[1]] >= 0 && new_of_old[t[2]] >= 0) {
            // re-indexing is monotone, so the triple stays sorted
            q.nullset.insert({new_of_old[t[0]], new_of_old[t[1]], new_of_old[t[2]]});
        }
    }

    result.object = make_pasture(std::move(q));
    result.inclusion.source = result.object;
    result.inclusion.target = f.source;
    result.inclusion.map = result.carrier;
    return result;
}

FiberedProductResult fibered_product(const Morphism& f1, const Morphism& f2) {
    if (!(*f1.target == *f2.target)) {
        throw std::invalid_argument("fibered_product: legs have different targets");
    }
    const Pasture& p1 = *f1.source;
    const Pasture& p2 = *f2.source;

    FiberedProductResult result;
    std::map<std::pair<Index, Index>, Index> index_of;
    for (Index a = 1; a < p1.size; ++a) {
        for (Index b = 1; b < p2.size; ++b) {
            if (f1.map[a] == f2.map[b]) {
                result.unit_pairs.push_back({a, b});
                index_of[{a, b}] = static_cast<Index>(result.unit_pairs.size());
            }
        }
    }

    Pasture q;
    q.name = "pullback(" + p1.name + "," + p2.name + ";" + f1.target->name + ")";
    q.size = 1 + static_cast<int>(result.unit_pairs.size());
    q.unit_mul.resize(static_cast<std::size_t>(q.size - 1) * (q.size - 1));
    q.neg.resize(q.size);
    q.neg[0] = 0;
    for (Index i = 1; i < q.size; ++i) {
        auto [a, b] = result.unit_pairs[i - 1];
        q.neg[i] = index_of.at({p1.neg[a], p2.neg[b]});
        for (Index j = 1; j < q.size; ++j) {
            auto [c, d] = result.unit_pairs[j - 1];
            q.unit_mul[static_cast<std::size_t>(i - 1) * (q.size - 1) + (j - 1)] =
                index_of.at({p1.mul(a, c), p2.mul(b, d)});
        }
    }
    add_zero_law_triples(q.nullset, q.neg, q.size);
    for (Index i = 1; i < q.size; ++i) {
        for (Index j = i; j < q.size; ++j) {
            for (Index k = j; k < q.size; ++k) {
                const auto& x = result.unit_pairs[i - 1];
                const auto& y = result.unit_pairs[j - 1];
                const auto& z = result.unit_pairs[k - 1];
                if (p1.is_null(x.first, y.first, z.first) &&
                    p2.is_null(x.second, y.second, z.second)) {
                    q.nullset.insert({i, j, k});
                }
            }
        }
    }

    result.object = make_pasture(std::move(q));
    result.proj1.source = result.object;
    result.proj1.target = f1.source;
    result.proj1.map.resize(result.object->size);
    result.proj2.source = result.object;
    result.proj2.target = f2.source;
    result.proj2.map.resize(result.object->size);
    result.proj1.map[0] = 0;
    result.proj2.map[0] = 0;
    for (Index i = 1; i < result.object->size; ++i) {
        result.proj1.map[i] = result.unit_pairs[i - 1].first;
        result.proj2.map[i] = result.unit_pairs[i - 1].second;
    }
    return result;
}

ProductResult product(const std::vector<PastureRef>& factors, int max_size) {
    long long tuples = 1;
    for (const PastureRef& f : factors) {
        tuples *= f->unit_count();
        if (tuples > max_size) {
            throw CapacityError("product: unit tuple space exceeds bound " +
                                std::to_string(max_size));
        }
    }

    ProductResult result;
    result.factors = factors;
    const std::size_t n = factors.size();
    std::vector<Index> tuple(n, 1);
    for (long long i = 0; i < tuples; ++i) {
        result.unit_tuples.push_back(tuple);
        // odometer, last factor fastest
        for (std::size_t d = n; d-- > 0;) {
            if (++tuple[d] < factors[d]->size) break;
            tuple[d] = 1;
        }
    }
    // Mixed-radix position of a unit tuple, +1 for the zero slot.
    auto index_of = [&](const std::vector<Index>& t) {
        long long pos = 0;
        for (std::size_t d = 0; d < n; ++d) pos = pos * factors[d]->unit_count() + (t[d] - 1);
        return static_cast<Index>(pos + 1);
    };

    Pasture q;
    q.name = "prod(" + joined_names(factors) + ")";
    q.size = 1 + static_cast<int>(tuples);
    q.unit_mul.resize(static_cast<std::size_t>(q.size - 1) * (q.size - 1));
    q.neg.resize(q.size);
    q.neg[0] = 0;
    std::vector<Index> scratch(n);
    for (Index i = 1; i < q.size; ++i) {
        const auto& x = result.unit_tuples[i - 1];
        for (std::size_t d = 0; d < n; ++d) scratch[d] = factors[d]->neg[x[d]];
        q.neg[i] = index_of(scratch);
        for (Index j = 1; j < q.size; ++j) {
            const auto& y = result.unit_tuples[j - 1];
            for (std::size_t d = 0; d < n; ++d) scratch[d] = factors[d]->mul(x[d], y[d]);
            q.unit_mul[static_cast<std::size_t>(i - 1) * (q.size - 1) + (j - 1)] = index_of(scratch);
        }
    }
    add_zero_law_triples(q.nullset, q.neg, q.size);
    for (Index i = 1; i < q.size; ++i) {
        for (Index j = i; j < q.size; ++j) {
            for (Index k = j; k < q.size; ++k) {
                bool null_everywhere = true;
                for (std::size_t d = 0; d < n && null_everywhere; ++d) {
                    null_everywhere = factors[d]->is_null(result.unit_tuples[i - 1][d],
                                                          result.unit_tuples[j - 1][d],
                                                          result.unit_tuples[k - 1][d]);
                }
                if (null_everywhere) q.nullset.insert({i, j, k});
            }
        }
    }

    result.object = make_pasture(std::move(q));
    for (std::size_t d = 0; d < n; ++d) {
        Morphism pi;
        pi.source = result.object;
        pi.target = factors[d];
        pi.map.resize(result.object->size);
        pi.map[0] = 0;
        for (Index i = 1; i < result.object->size; ++i) pi.map[i] = result.unit_tuples[i - 1][d];
        result.projections.push_back(std::move(pi));
    }
    return result;
}

Morphism tuple_morphism(const ProductResult& prod, const PastureRef& domain,
                        const std::vector<Morphism>& legs) {
    if (legs.size() != prod.factors.size()) {
        throw std::invalid_argument("tuple_morphism: one leg per factor required");
    }
    for (std::size_t d = 0; d < legs.size(); ++d) {
        if (!(*legs[d].target == *prod.factors[d])) {
            throw std::invalid_argument("tuple_morphism: leg " + std::to_string(d) +
                                        " does not land in its factor");
        }
        if (!(*legs[d].source == *domain)) {
            throw std::invalid_argument("tuple_morphism: leg " + std::to_string(d) +
                                        " does not start at the domain");
        }
    }

    auto index_of = [&](const std::vector<Index>& t) {
        long long pos = 0;
        for (std::size_t d = 0; d < prod.factors.size(); ++d) {
            pos = pos * prod.factors[d]->unit_count() + (t[d] - 1);
        }
        return static_cast<Index>(pos + 1);
    };

    Morphism out;
    out.source = domain;
    out.target = prod.object;
    out.map.resize(domain->size);
    out.map[0] = 0;
    std::vector<Index> tuple(prod.factors.size());
    for (Index x = 1; x < domain->size; ++x) {
        for (std::size_t d = 0; d < legs.size(); ++d) tuple[d] = legs[d].map[x];
        out.map[x] = index_of(tuple);
    }
    return out;
}

}  // namespace pastures
