#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pastures/core.hpp"

namespace pastures {

/**
 * A morphism of pastures: a multiplicative map fixing 0 and 1, commuting
 * with the involution, and carrying nullset triples to nullset triples.
 * Units map to units (forced by f(u)f(u^-1) = 1).
 */
struct Morphism {
    PastureRef source;
    PastureRef target;
    std::vector<Index> map;  // indexed by source elements

    Index operator()(Index x) const { return map[x]; }

    /// Equality of maps between structurally equal endpoints.
    bool operator==(const Morphism& other) const {
        return map == other.map && *source == *other.source && *target == *other.target;
    }
};

/// Checks every morphism invariant; endpoints are assumed valid pastures.
ValidationReport validate_morphism(const Morphism& m);

Morphism identity(PastureRef p);

/// g after f. Rejects a mismatched middle pasture.
Morphism compose(const Morphism& g, const Morphism& f);

/// Greedy generating set of P^x: repeatedly adjoin the smallest unit
/// outside the subgroup generated so far.
std::vector<Index> unit_generators(const Pasture& p);

/**
 * The complete hom-set source -> target, in lexicographic order of map
 * arrays. Candidates are produced by assigning images to a generating set
 * of the source unit group and closing under products, then filtered by
 * the involution and nullset conditions. Throws CapacityError when the
 * source carrier exceeds max_source_size.
 */
std::vector<Morphism> enumerate_homs(const PastureRef& source, const PastureRef& target,
                                     int max_source_size = kDefaultEnumerationBound);

/**
 * First isomorphism pair (f, f^-1) in enumeration order, if any. The
 * forward map must be a bijection whose nullset image is exactly the
 * target nullset, so the inverse is itself a morphism.
 */
std::optional<std::pair<Morphism, Morphism>> is_isomorphic(
    const PastureRef& a, const PastureRef& b, int max_size = kDefaultEnumerationBound);

}  // namespace pastures
