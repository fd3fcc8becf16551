#pragma once

#include <optional>
#include <vector>

#include "pastures/colimits.hpp"
#include "pastures/limits.hpp"

namespace pastures {

/**
 * A finite diagram presented as a multigraph: an ordered object list and
 * generating arrows between them. Commutation obligations range over the
 * listed arrows only; composites are implied by leg composition.
 */
struct DiagramArrow {
    int source = 0;
    int target = 0;
    Morphism morphism;
};

struct Diagram {
    std::vector<PastureRef> objects;
    std::vector<DiagramArrow> arrows;
};

/// Rejects arrows whose morphism endpoints disagree with the indexed objects.
void validate_diagram(const Diagram& d);

/// Apex with one leg apex -> objects[i] per object; over every arrow
/// (s,t,m) a cone must satisfy m . leg_s = leg_t.
struct Cone {
    PastureRef apex;
    std::vector<Morphism> legs;
};

/// Apex with one leg objects[i] -> apex per object; over every arrow
/// (s,t,m) a cocone must satisfy leg_t . m = leg_s.
struct Cocone {
    PastureRef apex;
    std::vector<Morphism> legs;
};

struct LimitResult {
    PastureRef apex;
    Cone cone;
};

struct ColimitResult {
    PastureRef apex;
    Cocone cocone;
};

/**
 * Limit by the product-equalizer assembly: equalize the two canonical
 * morphisms product(objects) -> product(arrow targets) built per arrow
 * from "project the target" and "project the source, then apply".
 */
LimitResult limit(const Diagram& d, int max_size = kDefaultCarrierBound);

/// Dual assembly: coequalize the two canonical morphisms
/// coproduct(arrow sources) -> coproduct(objects). For an arrow-free
/// diagram the parallel pair degenerates to identities on the coproduct.
ColimitResult colimit(const Diagram& d, int max_size = kDefaultCarrierBound);

/// What happened for one probe (co)cone: how many mediating morphisms were
/// found, and the morphism itself when it was unique.
struct ProbeOutcome {
    PastureRef probe;
    std::vector<Morphism> probe_legs;
    std::size_t mediating_count = 0;
    std::optional<Morphism> mediating;
};

struct VerificationResult {
    bool passed = false;  // every probe (co)cone found exactly one mediating morphism
    std::vector<ProbeOutcome> outcomes;
};

/**
 * Brute-force universal-property check: for every probe pasture, every
 * commuting cone from it over the diagram (found by enumerating hom-sets
 * leg-wise) must factor through the given cone by exactly one morphism.
 * Probes larger than probe_bound are rejected with CapacityError; a
 * non-commuting input cone is rejected naming the violating arrow.
 */
VerificationResult check_limit_cone(const Diagram& d, const Cone& cone,
                                    const std::vector<PastureRef>& probes,
                                    int probe_bound = kDefaultEnumerationBound);

/// Dual of check_limit_cone: probe cocones under the diagram, mediating
/// morphisms out of the apex.
VerificationResult check_colimit_cocone(const Diagram& d, const Cocone& cocone,
                                        const std::vector<PastureRef>& probes,
                                        int probe_bound = kDefaultEnumerationBound);

}  // namespace pastures
