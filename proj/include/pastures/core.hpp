#pragma once

#include <array>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pastures {

/// Element index into a pasture carrier. Index 0 is the zero element,
/// index 1 the multiplicative identity; indices 1..n-1 are the units.
using Index = int;

/// A nullset entry, stored sorted (i <= j <= k).
using Triple = std::array<Index, 3>;

/// Thrown when an operation would exceed a configured size bound.
/// Never a silent truncation: callers either get the full answer or this.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Largest source carrier accepted by hom-set enumeration.
inline constexpr int kDefaultEnumerationBound = 16;
/// Largest unit-tuple space accepted by product/coproduct style constructions.
inline constexpr int kDefaultCarrierBound = 64;
/// Largest prime accepted by from_prime_field.
inline constexpr int kDefaultPrimeBound = 13;

Triple sorted_triple(Index a, Index b, Index c);

/**
 * A finite pasture: a multiplicative monoid with zero whose nonzero elements
 * form an abelian group, together with an involution x -> -x fixing zero and
 * a ternary nullset (the triples declared to sum to zero).
 *
 * Elements are dense indices 0..size-1 with slot 0 = zero and slot 1 = one.
 * The nullset keeps only sorted triples, so permutation invariance is
 * structural; multiplicative invariance and the zero law are checked by
 * validate_pasture. Values are immutable after construction and safe to
 * share read-only.
 */
struct Pasture {
    std::string name;             // diagnostic label, no semantic weight
    int size = 0;                 // carrier size, n >= 2
    std::vector<Index> unit_mul;  // (n-1)^2 row-major unit products, offset by 1
    std::vector<Index> neg;       // involution as a permutation of 0..n-1
    std::set<Triple> nullset;     // sorted triples only

    int unit_count() const { return size - 1; }

    /// Total multiplication; zero absorbs.
    Index mul(Index a, Index b) const {
        if (a == 0 || b == 0) return 0;
        return unit_mul[static_cast<std::size_t>(a - 1) * (size - 1) + (b - 1)];
    }

    /// Multiplicative inverse of a unit (linear scan; carriers are tiny).
    Index inv(Index u) const;

    /// Order-insensitive nullset membership.
    bool is_null(Index a, Index b, Index c) const {
        return nullset.count(sorted_triple(a, b, c)) > 0;
    }

    /// Structural equality; the name label is ignored.
    bool operator==(const Pasture& other) const {
        return size == other.size && unit_mul == other.unit_mul &&
               neg == other.neg && nullset == other.nullset;
    }
};

using PastureRef = std::shared_ptr<const Pasture>;

inline PastureRef make_pasture(Pasture p) {
    return std::make_shared<const Pasture>(std::move(p));
}

/// One failed check: a stable axiom id plus the concrete indices that
/// reproduce the failure.
struct Violation {
    std::string axiom;
    std::vector<Index> witness;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
};

/**
 * Checks every pasture invariant: unit-group laws, the involution laws, and
 * the three nullset axioms. Structural defects (wrong table shapes,
 * out-of-range indices, unsorted triples) are reported with "structure."
 * ids and suppress the axiom checks, which would be meaningless on a
 * malformed carrier.
 */
ValidationReport validate_pasture(const Pasture& p);

/// Inserts (0,0,0) and (0,u,-u) for every unit u: the zero-involving triples
/// forced by the zero law. Used by every construction.
void add_zero_law_triples(std::set<Triple>& nullset, const std::vector<Index>& neg, int size);

/// The prime field F_p as a pasture: nullset = residue triples summing to 0.
PastureRef from_prime_field(int p, int max_prime = kDefaultPrimeBound);

/// The Krasner hyperfield K = {0,1} with a full nullset.
PastureRef krasner();

/// The hyperfield of signs S = {0,1,-1}.
PastureRef sign_hyperfield();

/// The regular partial field F1pm = {0,1,-1} whose only relation is 1-1+0=0.
PastureRef f1pm();

/// The six pastures used as the standard test family:
/// F1pm, K, S, F2, F3, F5.
std::vector<PastureRef> standard_family();

}  // namespace pastures
