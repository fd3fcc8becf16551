#pragma once

#include <utility>
#include <vector>

#include "pastures/morphism.hpp"

namespace pastures {

/// Equalizer of a parallel pair f,g : P1 -> P2. The object is the
/// subpasture {x : f(x) = g(x)} re-indexed densely; carrier[x] is the
/// P1 element behind the new index x.
struct EqualizerResult {
    PastureRef object;
    Morphism inclusion;          // q : Q -> P1
    std::vector<Index> carrier;  // provenance, indexed by Q elements
};

EqualizerResult equalizer(const Morphism& f, const Morphism& g);

/// Fibered product of f1 : P1 -> P and f2 : P2 -> P: a fresh zero plus
/// the matched unit pairs (a,b) with f1(a) = f2(b), componentwise
/// multiplication and involution, and all-unit triples null exactly when
/// both coordinate triples are null.
struct FiberedProductResult {
    PastureRef object;
    Morphism proj1;  // pi1 : P1 x_P P2 -> P1
    Morphism proj2;
    std::vector<std::pair<Index, Index>> unit_pairs;  // unit i <-> unit_pairs[i-1]
};

FiberedProductResult fibered_product(const Morphism& f1, const Morphism& f2);

/// Finite product: a fresh zero plus the cartesian product of the unit
/// groups, lexicographically indexed. The empty product is the terminal
/// 2-element pasture with a full nullset.
struct ProductResult {
    PastureRef object;
    std::vector<PastureRef> factors;
    std::vector<Morphism> projections;
    std::vector<std::vector<Index>> unit_tuples;  // unit i <-> unit_tuples[i-1]
};

ProductResult product(const std::vector<PastureRef>& factors,
                      int max_size = kDefaultCarrierBound);

/// The mediating morphism into a product from componentwise legs
/// (legs[i] : domain -> factors[i]); the unique map with pi_i after it
/// = legs[i]. The domain is explicit so the empty product works too.
Morphism tuple_morphism(const ProductResult& prod, const PastureRef& domain,
                        const std::vector<Morphism>& legs);

}  // namespace pastures
