#pragma once

#include <utility>
#include <vector>

#include "pastures/morphism.hpp"

namespace pastures {

/**
 * A partition of positions 0..n-1 into equivalence classes, computed as
 * orbit closure under generator maps. Class ids are assigned in order of
 * their canonical (smallest) member, so the class of position 0 is class 0.
 * Backs the three quotient constructions: cosets (coequalizer), orbits of
 * the twisted base action (fibered coproduct), and even-sign-flip classes
 * (coproduct).
 */
struct UnitPartition {
    std::vector<int> class_of;              // position -> class id
    std::vector<int> representative;        // class id -> canonical position
    std::vector<std::vector<int>> members;  // class id -> ascending positions

    int class_count() const { return static_cast<int>(representative.size()); }
};

/// Orbit closure of positions 0..n-1 under the given total maps.
UnitPartition partition_by_generators(int n, const std::vector<std::vector<int>>& generators);

/// Coequalizer of f,g : P1 -> P2: units of P2 modulo the subgroup
/// H = { f(z) g(z)^-1 }, nullset the image of the P2 nullset.
struct CoequalizerResult {
    PastureRef object;
    Morphism projection;                       // q : P2 -> Q
    std::vector<Index> subgroup;               // H, ascending unit indices of P2
    std::vector<std::vector<Index>> classes;   // unit class i+1 <-> coset members
};

CoequalizerResult coequalizer(const Morphism& f, const Morphism& g);

/// Fibered coproduct of f1 : P -> P1 and f2 : P -> P2: unit pairs modulo
/// the action x.(a,b) = (f1(x)^-1 a, f2(x) b), zero pairs collapsed, and
/// the nullset generated by the two coordinate rule families instantiated
/// over all representatives.
struct FiberedCoproductResult {
    PastureRef object;
    Morphism left_leg;   // i1 : P1 -> Q, x -> [(x,1)]
    Morphism right_leg;  // i2 : P2 -> Q, y -> [(1,y)]
    std::vector<std::vector<std::pair<Index, Index>>> classes;  // orbit members
};

FiberedCoproductResult fibered_coproduct(const Morphism& f1, const Morphism& f2);

/// Finite coproduct: unit tuples modulo the closure of the pairwise
/// sign-flip generators (flip at i and j simultaneously). The involution
/// flips a single slot. An empty summand list is rejected.
struct CoproductResult {
    PastureRef object;
    std::vector<PastureRef> summands;
    std::vector<Morphism> injections;
    std::vector<std::vector<std::vector<Index>>> classes;  // class -> member tuples
};

CoproductResult coproduct(const std::vector<PastureRef>& summands,
                          int max_size = kDefaultCarrierBound);

/// The mediating morphism out of a coproduct from legs
/// (legs[i] : summands[i] -> codomain): [tuple] -> prod_i legs[i](tuple_i).
Morphism cotuple_morphism(const CoproductResult& coprod, const PastureRef& codomain,
                          const std::vector<Morphism>& legs);

}  // namespace pastures
