// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
//
//   1  axiom suite          every construction output validates
//   2  leg-morphism suite   legs validate, commuting equations exact
//   3  universal properties exactly one mediating morphism per probe cone
//   4  assembly cross-check generic (co)limits match direct constructions
//   5  cardinality oracles  sizes against independent enumerations
//   6  derived instance pins
//   7  mutation sensitivity deleting an apex triple breaks criterion 3
//   8  fixture round-trips  serialize(parse(d)) byte-identical
//
// The construction battery covers every cospan, span and parallel pair
// between standard-family members (plus the product-projection pairs),
// and product/coproduct lists up to length three, filtered to results
// of at most 64 elements.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "pastures/io.hpp"
#include "pastures/universal.hpp"

using namespace pastures;

namespace {

constexpr int kResultBound = 64;

struct ParallelPair {
    Morphism f, g;
};

struct Battery {
    std::vector<PastureRef> family = standard_family();
    std::vector<Morphism> homs;
    std::vector<ParallelPair> parallel_pairs;               // standard + projection pairs
    std::vector<std::pair<Morphism, Morphism>> cospans;     // common target
    std::vector<std::pair<Morphism, Morphism>> spans;       // common source
    std::vector<std::vector<PastureRef>> factor_lists;      // products, incl. empty
    std::vector<std::vector<PastureRef>> summand_lists;     // coproducts, non-empty

    std::vector<std::pair<ParallelPair, EqualizerResult>> equalizers;
    std::vector<std::pair<ParallelPair, CoequalizerResult>> coequalizers;
    std::vector<std::tuple<Morphism, Morphism, FiberedProductResult>> fibered_products;
    std::vector<std::tuple<Morphism, Morphism, FiberedCoproductResult>> fibered_coproducts;
    std::vector<ProductResult> products;
    std::vector<CoproductResult> coproducts;
};

Battery build_battery() {
    Battery battery;
    for (const PastureRef& src : battery.family) {
        for (const PastureRef& dst : battery.family) {
            for (const Morphism& m : enumerate_homs(src, dst)) battery.homs.push_back(m);
        }
    }
    for (const Morphism& f : battery.homs) {
        for (const Morphism& g : battery.homs) {
            if (*f.source == *g.source && *f.target == *g.target) {
                battery.parallel_pairs.push_back({f, g});
            }
            if (*f.target == *g.target) battery.cospans.push_back({f, g});
            if (*f.source == *g.source) battery.spans.push_back({f, g});
        }
    }
    for (const PastureRef& p : battery.family) {
        ProductResult square = product({p, p});
        battery.parallel_pairs.push_back({square.projections[0], square.projections[1]});
    }

    battery.factor_lists.push_back({});
    for (const PastureRef& a : battery.family) {
        battery.factor_lists.push_back({a});
        battery.summand_lists.push_back({a});
        for (const PastureRef& b : battery.family) {
            battery.factor_lists.push_back({a, b});
            battery.summand_lists.push_back({a, b});
            for (const PastureRef& c : battery.family) {
                battery.factor_lists.push_back({a, b, c});
                battery.summand_lists.push_back({a, b, c});
            }
        }
    }

    for (const ParallelPair& pair : battery.parallel_pairs) {
        battery.equalizers.push_back({pair, equalizer(pair.f, pair.g)});
        battery.coequalizers.push_back({pair, coequalizer(pair.f, pair.g)});
    }
    for (const auto& [f1, f2] : battery.cospans) {
        FiberedProductResult fp = fibered_product(f1, f2);
        if (fp.object->size <= kResultBound) {
            battery.fibered_products.push_back({f1, f2, std::move(fp)});
        }
    }
    for (const auto& [f1, f2] : battery.spans) {
        FiberedCoproductResult fc = fibered_coproduct(f1, f2);
        if (fc.object->size <= kResultBound) {
            battery.fibered_coproducts.push_back({f1, f2, std::move(fc)});
        }
    }
    auto keep = [](long long size) { return size <= kResultBound; };
    for (const auto& factors : battery.factor_lists) {
        if (!keep(1 + oracles::unit_tuple_count(factors))) continue;
        battery.products.push_back(product(factors));
    }
    for (const auto& summands : battery.summand_lists) {
        if (!keep(oracles::unit_tuple_count(summands))) continue;
        CoproductResult cp = coproduct(summands);
        if (keep(cp.object->size)) battery.coproducts.push_back(std::move(cp));
    }
    return battery;
}

Diagram parallel_pair_diagram(const ParallelPair& pair) {
    Diagram d;
    d.objects = {pair.f.source, pair.f.target};
    d.arrows.push_back({0, 1, pair.f});
    d.arrows.push_back({0, 1, pair.g});
    return d;
}

Diagram pullback_diagram(const Morphism& f1, const Morphism& f2) {
    Diagram d;
    d.objects = {f1.source, f2.source, f1.target};
    d.arrows.push_back({0, 2, f1});
    d.arrows.push_back({1, 2, f2});
    return d;
}

Diagram pushout_diagram(const Morphism& f1, const Morphism& f2) {
    Diagram d;
    d.objects = {f1.target, f2.target, f1.source};
    d.arrows.push_back({2, 0, f1});
    d.arrows.push_back({2, 1, f2});
    return d;
}

Diagram discrete_diagram(const std::vector<PastureRef>& objects) {
    Diagram d;
    d.objects = objects;
    return d;
}

std::vector<PastureRef> probes_for(const Diagram& d) {
    std::vector<PastureRef> probes = standard_family();
    probes.insert(probes.end(), d.objects.begin(), d.objects.end());
    return probes;
}

struct Criterion {
    int failures = 0;
    long long checks = 0;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            if (failures < 5) detail << "\n      " << what;
            ++failures;
        }
    }
};

bool isomorphic(const PastureRef& a, const PastureRef& b) {
    return is_isomorphic(a, b, kResultBound).has_value();
}

// --- criterion bodies -------------------------------------------------

void axiom_suite(const Battery& battery, Criterion& c) {
    for (const PastureRef& p : battery.family) {
        c.expect(validate_pasture(*p).valid(), "standard pasture " + p->name);
    }
    for (const auto& [pair, eq] : battery.equalizers) {
        c.expect(validate_pasture(*eq.object).valid(), eq.object->name);
    }
    for (const auto& [pair, ce] : battery.coequalizers) {
        c.expect(validate_pasture(*ce.object).valid(), ce.object->name);
    }
    for (const auto& [f1, f2, fp] : battery.fibered_products) {
        c.expect(validate_pasture(*fp.object).valid(), fp.object->name);
    }
    for (const auto& [f1, f2, fc] : battery.fibered_coproducts) {
        c.expect(validate_pasture(*fc.object).valid(), fc.object->name);
    }
    for (const ProductResult& pr : battery.products) {
        c.expect(validate_pasture(*pr.object).valid(), pr.object->name);
    }
    for (const CoproductResult& cp : battery.coproducts) {
        c.expect(validate_pasture(*cp.object).valid(), cp.object->name);
    }
}

void leg_suite(const Battery& battery, Criterion& c) {
    auto leg_valid = [&](const Morphism& m, const std::string& what) {
        c.expect(validate_morphism(m).valid(), what);
    };
    for (const auto& [pair, eq] : battery.equalizers) {
        leg_valid(eq.inclusion, "equalizer inclusion " + eq.object->name);
        c.expect(compose(pair.f, eq.inclusion) == compose(pair.g, eq.inclusion),
                 "f.q = g.q for " + eq.object->name);
    }
    for (const auto& [pair, ce] : battery.coequalizers) {
        leg_valid(ce.projection, "coequalizer projection " + ce.object->name);
        c.expect(compose(ce.projection, pair.f) == compose(ce.projection, pair.g),
                 "q.f = q.g for " + ce.object->name);
    }
    for (const auto& [f1, f2, fp] : battery.fibered_products) {
        leg_valid(fp.proj1, "pi1 of " + fp.object->name);
        leg_valid(fp.proj2, "pi2 of " + fp.object->name);
        c.expect(compose(f1, fp.proj1) == compose(f2, fp.proj2),
                 "f1.pi1 = f2.pi2 for " + fp.object->name);
    }
    for (const auto& [f1, f2, fc] : battery.fibered_coproducts) {
        leg_valid(fc.left_leg, "i1 of " + fc.object->name);
        leg_valid(fc.right_leg, "i2 of " + fc.object->name);
        c.expect(compose(fc.left_leg, f1) == compose(fc.right_leg, f2),
                 "i1.f1 = i2.f2 for " + fc.object->name);
    }
    for (const ProductResult& pr : battery.products) {
        for (const Morphism& leg : pr.projections) leg_valid(leg, "pi of " + pr.object->name);
    }
    for (const CoproductResult& cp : battery.coproducts) {
        for (const Morphism& leg : cp.injections) leg_valid(leg, "in of " + cp.object->name);
    }
}

void universal_suite(const Battery& battery, Criterion& c) {
    auto passed = [&](const VerificationResult& r) {
        for (const ProbeOutcome& outcome : r.outcomes) {
            if (outcome.mediating_count != 1) return false;
        }
        return r.passed;
    };
    for (const auto& [pair, eq] : battery.equalizers) {
        Diagram d = parallel_pair_diagram(pair);
        Cone cone{eq.object, {eq.inclusion, compose(pair.f, eq.inclusion)}};
        c.expect(passed(check_limit_cone(d, cone, probes_for(d), kResultBound)),
                 "equalizer " + eq.object->name);
    }
    for (const auto& [pair, ce] : battery.coequalizers) {
        Diagram d = parallel_pair_diagram(pair);
        Cocone cocone{ce.object, {compose(ce.projection, pair.f), ce.projection}};
        c.expect(passed(check_colimit_cocone(d, cocone, probes_for(d), kResultBound)),
                 "coequalizer " + ce.object->name);
    }
    for (const auto& [f1, f2, fp] : battery.fibered_products) {
        Diagram d = pullback_diagram(f1, f2);
        Cone cone{fp.object, {fp.proj1, fp.proj2, compose(f1, fp.proj1)}};
        c.expect(passed(check_limit_cone(d, cone, probes_for(d), kResultBound)),
                 "fibered product " + fp.object->name);
    }
    for (const auto& [f1, f2, fc] : battery.fibered_coproducts) {
        Diagram d = pushout_diagram(f1, f2);
        Cocone cocone{fc.object, {fc.left_leg, fc.right_leg, compose(fc.left_leg, f1)}};
        c.expect(passed(check_colimit_cocone(d, cocone, probes_for(d), kResultBound)),
                 "fibered coproduct " + fc.object->name);
    }
    for (const ProductResult& pr : battery.products) {
        Diagram d = discrete_diagram(pr.factors);
        Cone cone{pr.object, pr.projections};
        c.expect(passed(check_limit_cone(d, cone, probes_for(d), kResultBound)),
                 "product " + pr.object->name);
    }
    for (const CoproductResult& cp : battery.coproducts) {
        Diagram d = discrete_diagram(cp.summands);
        Cocone cocone{cp.object, cp.injections};
        c.expect(passed(check_colimit_cocone(d, cocone, probes_for(d), kResultBound)),
                 "coproduct " + cp.object->name);
    }
}

void assembly_suite(const Battery& battery, Criterion& c) {
    // intermediate tuple spaces grow with the square of the object sizes,
    // so the assembly calls get a roomier bound than the 64-element results
    constexpr int kAssemblyBound = 4096;
    for (const auto& [f1, f2, fp] : battery.fibered_products) {
        LimitResult lim = limit(pullback_diagram(f1, f2), kAssemblyBound);
        c.expect(isomorphic(lim.apex, fp.object), "limit vs " + fp.object->name);
    }
    for (const auto& [f1, f2, fc] : battery.fibered_coproducts) {
        ColimitResult colim = colimit(pushout_diagram(f1, f2), kAssemblyBound);
        c.expect(isomorphic(colim.apex, fc.object), "colimit vs " + fc.object->name);
    }
    for (const auto& [pair, ce] : battery.coequalizers) {
        ColimitResult colim = colimit(parallel_pair_diagram(pair), kAssemblyBound);
        c.expect(isomorphic(colim.apex, ce.object), "colimit vs " + ce.object->name);
    }
}

void cardinality_suite(const Battery& battery, Criterion& c) {
    for (const auto& [pair, eq] : battery.equalizers) {
        c.expect(eq.object->size ==
                     static_cast<int>(oracles::equalizer_carrier(pair.f, pair.g).size()),
                 "equalizer size " + eq.object->name);
    }
    for (const auto& [pair, ce] : battery.coequalizers) {
        c.expect(ce.object->size == 1 + oracles::coset_count(pair.f, pair.g),
                 "coequalizer size " + ce.object->name);
    }
    for (const auto& [f1, f2, fp] : battery.fibered_products) {
        c.expect(fp.object->size == 1 + oracles::matched_pair_count(f1, f2),
                 "fibered product size " + fp.object->name);
    }
    for (const auto& [f1, f2, fc] : battery.fibered_coproducts) {
        c.expect(fc.object->size == 1 + oracles::orbit_count(f1, f2),
                 "fibered coproduct size " + fc.object->name);
    }
    for (const ProductResult& pr : battery.products) {
        c.expect(pr.object->size == 1 + oracles::unit_tuple_count(pr.factors),
                 "product size " + pr.object->name);
    }
    for (const CoproductResult& cp : battery.coproducts) {
        c.expect(cp.object->size == 1 + oracles::even_flip_class_count(cp.summands),
                 "coproduct size " + cp.object->name);
    }
}

void pinned_instances(Criterion& c) {
    PastureRef k = krasner();
    PastureRef s = sign_hyperfield();
    PastureRef f1 = f1pm();
    PastureRef f2 = from_prime_field(2);

    ProductResult ss = product({s, s});
    CoequalizerResult ce = coequalizer(ss.projections[0], ss.projections[1]);
    c.expect(isomorphic(ce.object, k), "coeq(pi1,pi2: SxS -> S) = K");

    Morphism k_leg = enumerate_homs(f1, k)[0];
    c.expect(isomorphic(fibered_coproduct(k_leg, k_leg).object, k), "K (x)_F1pm K = K");

    c.expect(isomorphic(coproduct({f2, f2}).object, f2), "coprod(F2,F2) = F2");
    c.expect(isomorphic(coproduct({k, k}).object, k), "coprod(K,K) = K");

    ProductResult terminal = product({});
    c.expect(isomorphic(terminal.object, k), "prod() = K");
    for (const PastureRef& p : standard_family()) {
        c.expect(enumerate_homs(p, terminal.object).size() == 1,
                 "terminality of prod() from " + p->name);
    }

    for (const PastureRef& p : standard_family()) {
        Morphism leg = enumerate_homs(f1, p)[0];
        FiberedCoproductResult fc = fibered_coproduct(identity(f1), leg);
        c.expect(isomorphic(fc.object, p), "pushout along id at F1pm = " + p->name);
    }
}

void mutation_suite(const Battery& battery, Criterion& c) {
    for (const auto& [f1, f2, fp] : battery.fibered_products) {
        Diagram d = pullback_diagram(f1, f2);
        // the unmutated apex joins the probe family: its identity cone is
        // the witness that pins every deleted triple
        std::vector<PastureRef> probes = probes_for(d);
        probes.push_back(fp.object);

        std::vector<Triple> unit_triples;
        for (const Triple& t : fp.object->nullset) {
            if (t[0] != 0) unit_triples.push_back(t);
        }
        for (const Triple& t : unit_triples) {
            Pasture mutated = *fp.object;
            mutated.nullset.erase(t);
            PastureRef apex = make_pasture(std::move(mutated));
            Cone cone{apex,
                      {Morphism{apex, f1.source, fp.proj1.map},
                       Morphism{apex, f2.source, fp.proj2.map},
                       Morphism{apex, f1.target, compose(f1, fp.proj1).map}}};
            bool detected = false;
            for (const PastureRef& probe : probes) {
                VerificationResult result = check_limit_cone(d, cone, {probe}, kResultBound);
                if (result.passed) continue;
                for (const ProbeOutcome& outcome : result.outcomes) {
                    if (outcome.mediating_count != 1 && outcome.probe) detected = true;
                }
                break;
            }
            std::ostringstream what;
            what << "undetected deletion (" << t[0] << "," << t[1] << "," << t[2] << ") from "
                 << fp.object->name;
            c.expect(detected, what.str());
        }
    }
}

void roundtrip_suite(Criterion& c) {
    namespace fs = std::filesystem;
    int seen = 0;
    for (const auto& entry : fs::directory_iterator(PASTURES_FIXTURES_DIR)) {
        if (!entry.is_regular_file()) continue;
        ++seen;
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        std::string text = buffer.str();
        std::string extension = entry.path().extension().string();
        std::string again;
        if (extension == ".pasture") {
            again = serialize_pasture(parse_pasture(text));
        } else if (extension == ".morphism") {
            again = serialize_morphism(parse_morphism(text));
        } else if (extension == ".diagram") {
            again = serialize_diagram(parse_diagram(text));
        } else {
            c.expect(false, "unclassified fixture " + entry.path().string());
            continue;
        }
        c.expect(again == text, "round trip " + entry.path().filename().string());
    }
    c.expect(seen >= 17, "fixture corpus present");
}

}  // namespace

int main() {
    Battery battery = build_battery();
    std::cout << "acceptance battery: " << battery.equalizers.size() << " equalizers, "
              << battery.coequalizers.size() << " coequalizers, "
              << battery.fibered_products.size() << " fibered products, "
              << battery.fibered_coproducts.size() << " fibered coproducts, "
              << battery.products.size() << " products, " << battery.coproducts.size()
              << " coproducts\n";

    struct Entry {
        int number;
        const char* label;
        std::function<void(Criterion&)> run;
    };
    const std::vector<Entry> criteria = {
        {1, "axiom suite", [&](Criterion& c) { axiom_suite(battery, c); }},
        {2, "leg-morphism suite", [&](Criterion& c) { leg_suite(battery, c); }},
        {3, "universal-property suite", [&](Criterion& c) { universal_suite(battery, c); }},
        {4, "assembly cross-check", [&](Criterion& c) { assembly_suite(battery, c); }},
        {5, "cardinality oracles", [&](Criterion& c) { cardinality_suite(battery, c); }},
        {6, "derived instance pins", [&](Criterion& c) { pinned_instances(c); }},
        {7, "mutation sensitivity", [&](Criterion& c) { mutation_suite(battery, c); }},
        {8, "fixture round-trips", [&](Criterion& c) { roundtrip_suite(c); }},
    };

    int failed_criteria = 0;
    for (const Entry& entry : criteria) {
        Criterion c;
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            entry.run(c);
        } catch (const std::exception& e) {
            error = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        bool ok = error.empty() && c.failures == 0;
        std::cout << "[" << entry.number << "] " << entry.label << ": "
                  << (ok ? "PASS" : "FAIL") << " (" << c.checks << " checks, " << ms << " ms)";
        if (!error.empty()) std::cout << " exception: " << error;
        std::cout << c.detail.str() << "\n";
        if (!ok) ++failed_criteria;
    }
    return failed_criteria == 0 ? 0 : 1;
}
