#include "pastures/universal.hpp"

#include <string>

namespace pastures {

namespace {

constexpr long long kProbeConeGuard = 1'000'000;

void require_valid(const Morphism& m, const char* what) {
    ValidationReport report = validate_morphism(m);
    if (!report.valid()) {
        throw std::logic_error(std::string("assembly produced an invalid morphism: ") + what +
                               " (" + report.violations.front().axiom + ")");
    }
}

}  // namespace

void validate_diagram(const Diagram& d) {
    for (std::size_t k = 0; k < d.arrows.size(); ++k) {
        const DiagramArrow& a = d.arrows[k];
        if (a.source < 0 || a.source >= static_cast<int>(d.objects.size()) ||
            a.target < 0 || a.target >= static_cast<int>(d.objects.size())) {
            throw std::invalid_argument("diagram: arrow " + std::to_string(k) +
                                        " references a missing object");
        }
        if (!(*a.morphism.source == *d.objects[a.source]) ||
            !(*a.morphism.target == *d.objects[a.target])) {
            throw std::invalid_argument("diagram: arrow " + std::to_string(k) +
                                        " endpoints disagree with its objects");
        }
    }
}

LimitResult limit(const Diagram& d, int max_size) {
    validate_diagram(d);
    ProductResult all = product(d.objects, max_size);

    std::vector<PastureRef> arrow_targets;
    std::vector<Morphism> project_target;
    std::vector<Morphism> project_then_apply;
    for (const DiagramArrow& a : d.arrows) {
        arrow_targets.push_back(d.objects[a.target]);
        project_target.push_back(all.projections[a.target]);
        project_then_apply.push_back(compose(a.morphism, all.projections[a.source]));
    }
    ProductResult codomain = product(arrow_targets, max_size);
    Morphism lhs = tuple_morphism(codomain, all.object, project_target);
    Morphism rhs = tuple_morphism(codomain, all.object, project_then_apply);
    require_valid(lhs, "limit lhs");
    require_valid(rhs, "limit rhs");

    EqualizerResult eq = equalizer(lhs, rhs);
    LimitResult result;
    result.apex = eq.object;
    result.cone.apex = eq.object;
    for (std::size_t i = 0; i < d.objects.size(); ++i) {
        result.cone.legs.push_back(compose(all.projections[i], eq.inclusion));
    }
    return result;
}

ColimitResult colimit(const Diagram& d, int max_size) {
    validate_diagram(d);
    if (d.objects.empty()) {
        throw std::invalid_argument("colimit: empty object list");
    }
    CoproductResult all = coproduct(d.objects, max_size);

    CoequalizerResult ce = [&] {
        if (d.arrows.empty()) {
            return coequalizer(identity(all.object), identity(all.object));
        }
        std::vector<PastureRef> arrow_sources;
        std::vector<Morphism> include_source;
        std::vector<Morphism> apply_then_include;
        for (const DiagramArrow& a : d.arrows) {
            arrow_sources.push_back(d.objects[a.source]);
            include_source.push_back(all.injections[a.source]);
            apply_then_include.push_back(compose(all.injections[a.target], a.morphism));
        }
        CoproductResult domain = coproduct(arrow_sources, max_size);
        Morphism lhs = cotuple_morphism(domain, all.object, include_source);
        Morphism rhs = cotuple_morphism(domain, all.object, apply_then_include);
        require_valid(lhs, "colimit lhs");
        require_valid(rhs, "colimit rhs");
        return coequalizer(lhs, rhs);
    }();

    ColimitResult result;
    result.apex = ce.object;
    result.cocone.apex = ce.object;
    for (std::size_t i = 0; i < d.objects.size(); ++i) {
        result.cocone.legs.push_back(compose(ce.projection, all.injections[i]));
    }
    return result;
}

namespace {

void check_cone_shape(const Diagram& d, const Cone& cone) {
    if (cone.legs.size() != d.objects.size()) {
        throw std::invalid_argument("cone: expected one leg per object");
    }
    for (std::size_t i = 0; i < cone.legs.size(); ++i) {
        if (!(*cone.legs[i].source == *cone.apex) ||
            !(*cone.legs[i].target == *d.objects[i])) {
            throw std::invalid_argument("cone: leg " + std::to_string(i) + " endpoints are wrong");
        }
    }
    for (std::size_t k = 0; k < d.arrows.size(); ++k) {
        const DiagramArrow& a = d.arrows[k];
        if (!(compose(a.morphism, cone.legs[a.source]).map == cone.legs[a.target].map)) {
            throw std::invalid_argument("cone does not commute over arrow " + std::to_string(k));
        }
    }
}

void check_cocone_shape(const Diagram& d, const Cocone& cocone) {
    if (cocone.legs.size() != d.objects.size()) {
        throw std::invalid_argument("cocone: expected one leg per object");
    }
    for (std::size_t i = 0; i < cocone.legs.size(); ++i) {
        if (!(*cocone.legs[i].source == *d.objects[i]) ||
            !(*cocone.legs[i].target == *cocone.apex)) {
            throw std::invalid_argument("cocone: leg " + std::to_string(i) +
                                        " endpoints are wrong");
        }
    }
    for (std::size_t k = 0; k < d.arrows.size(); ++k) {
        const DiagramArrow& a = d.arrows[k];
        if (!(compose(cocone.legs[a.target], a.morphism).map == cocone.legs[a.source].map)) {
            throw std::invalid_argument("cocone does not commute over arrow " + std::to_string(k));
        }
    }
}

// Walks every tuple of hom-set choices, invoking fn on each.
template <typename Fn>
void for_each_choice(const std::vector<std::vector<Morphism>>& homsets, Fn&& fn) {
    long long total = 1;
    for (const auto& hs : homsets) {
        total *= static_cast<long long>(hs.size());
        if (total > kProbeConeGuard) {
            throw CapacityError("universal check: probe cone space too large");
        }
        if (total == 0) return;
    }
    std::vector<std::size_t> pick(homsets.size(), 0);
    std::vector<Morphism> legs;
    for (long long n = 0; n < total; ++n) {
        legs.clear();
        for (std::size_t i = 0; i < homsets.size(); ++i) legs.push_back(homsets[i][pick[i]]);
        fn(legs);
        for (std::size_t i = homsets.size(); i-- > 0;) {
            if (++pick[i] < homsets[i].size()) break;
            pick[i] = 0;
        }
    }
}

}  // namespace

VerificationResult check_limit_cone(const Diagram& d, const Cone& cone,
                                    const std::vector<PastureRef>& probes, int probe_bound) {
    validate_diagram(d);
    check_cone_shape(d, cone);

    VerificationResult result;
    result.passed = true;
    for (const PastureRef& probe : probes) {
        if (probe->size > probe_bound) {
            throw CapacityError("check_limit_cone: probe " + probe->name + " exceeds bound " +
                                std::to_string(probe_bound));
        }
        std::vector<std::vector<Morphism>> homsets;
        for (const PastureRef& obj : d.objects) {
            homsets.push_back(enumerate_homs(probe, obj, probe_bound));
        }
        std::vector<Morphism> candidates = enumerate_homs(probe, cone.apex, probe_bound);
        for_each_choice(homsets, [&](const std::vector<Morphism>& legs) {
            for (const DiagramArrow& a : d.arrows) {
                if (!(compose(a.morphism, legs[a.source]).map == legs[a.target].map)) return;
            }
            ProbeOutcome outcome;
            outcome.probe = probe;
            outcome.probe_legs = legs;
            for (const Morphism& u : candidates) {
                bool factors = true;
                for (std::size_t i = 0; i < legs.size() && factors; ++i) {
                    factors = compose(cone.legs[i], u).map == legs[i].map;
                }
                if (factors) {
                    ++outcome.mediating_count;
                    if (outcome.mediating_count == 1) outcome.mediating = u;
                }
            }
            if (outcome.mediating_count != 1) {
                outcome.mediating.reset();
                result.passed = false;
            }
            result.outcomes.push_back(std::move(outcome));
        });
    }
    return result;
}

VerificationResult check_colimit_cocone(const Diagram& d, const Cocone& cocone,
                                        const std::vector<PastureRef>& probes, int probe_bound) {
    validate_diagram(d);
    check_cocone_shape(d, cocone);

    VerificationResult result;
    result.passed = true;
    for (const PastureRef& probe : probes) {
        if (probe->size > probe_bound) {
            throw CapacityError("check_colimit_cocone: probe " + probe->name + " exceeds bound " +
                                std::to_string(probe_bound));
        }
        std::vector<std::vector<Morphism>> homsets;
        for (const PastureRef& obj : d.objects) {
            // the diagram object is the hom source here, so exempt it from
            // the probe bound
            homsets.push_back(enumerate_homs(obj, probe, std::max(probe_bound, obj->size)));
        }
        std::vector<Morphism> candidates =
            enumerate_homs(cocone.apex, probe, std::max(probe_bound, cocone.apex->size));
        for_each_choice(homsets, [&](const std::vector<Morphism>& legs) {
            for (const DiagramArrow& a : d.arrows) {
                if (!(compose(legs[a.target], a.morphism).map == legs[a.source].map)) return;
            }
            ProbeOutcome outcome;
            outcome.probe = probe;
            outcome.probe_legs = legs;
            for (const Morphism& u : candidates) {
                bool factors = true;
                for (std::size_t i = 0; i < legs.size() && factors; ++i) {
                    factors = compose(u, cocone.legs[i]).map == legs[i].map;
                }
                if (factors) {
                    ++outcome.mediating_count;
                    if (outcome.mediating_count == 1) outcome.mediating = u;
                }
            }
            if (outcome.mediating_count != 1) {
                outcome.mediating.reset();
                result.passed = false;
            }
            result.outcomes.push_back(std::move(outcome));
        });
    }
    return result;
}

}  // namespace pastures
