#include "pastures/core.hpp"

#include <algorithm>

namespace pastures {

Triple sorted_triple(Index a, Index b, Index c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

Index Pasture::inv(Index u) const {
    for (Index v = 1; v < size; ++v) {
        if (mul(u, v) == 1) return v;
    }
    throw std::logic_error("Pasture::inv: " + std::to_string(u) + " has no inverse in " + name);
}

namespace {

bool check_structure(const Pasture& p, std::vector<Violation>& out) {
    auto add = [&](const char* axiom, std::vector<Index> witness) {
        out.push_back({axiom, std::move(witness)});
    };
    if (p.size < 2) {
        add("structure.size", {p.size});
        return false;
    }
    bool ok = true;
    const std::size_t units = static_cast<std::size_t>(p.size - 1);
    if (p.unit_mul.size() != units * units) {
        add("structure.mul-shape", {static_cast<Index>(p.unit_mul.size())});
        ok = false;
    } else {
        for (Index a = 1; a < p.size && ok; ++a) {
            for (Index b = 1; b < p.size; ++b) {
                Index v = p.unit_mul[static_cast<std::size_t>(a - 1) * units + (b - 1)];
                if (v < 1 || v >= p.size) {
                    add("structure.mul-range", {a, b, v});
                    ok = false;
                    break;
                }
            }
        }
    }
    if (p.neg.size() != static_cast<std::size_t>(p.size)) {
        add("structure.neg-shape", {static_cast<Index>(p.neg.size())});
        ok = false;
    } else {
        for (Index x = 0; x < p.size; ++x) {
            if (p.neg[x] < 0 || p.neg[x] >= p.size) {
                add("structure.neg-range", {x, p.neg[x]});
                ok = false;
                break;
            }
        }
    }
    for (const Triple& t : p.nullset) {
        if (t[0] < 0 || t[2] >= p.size) {
            add("structure.null-range", {t[0], t[1], t[2]});
            ok = false;
        } else if (!(t[0] <= t[1] && t[1] <= t[2])) {
            add("structure.null-unsorted", {t[0], t[1], t[2]});
            ok = false;
        }
    }
    return ok;
}

}  // namespace

ValidationReport validate_pasture(const Pasture& p) {
    ValidationReport report;
    if (!check_structure(p, report.violations)) return report;

    auto add = [&](const char* axiom, std::vector<Index> witness) {
        report.violations.push_back({axiom, std::move(witness)});
    };

    // P^x is an abelian group with identity 1.
    for (Index u = 1; u < p.size; ++u) {
        if (p.mul(1, u) != u) add("units.identity", {u, p.mul(1, u)});
    }
    for (Index u = 1; u < p.size; ++u) {
        for (Index v = u; v < p.size; ++v) {
            if (p.mul(u, v) != p.mul(v, u)) add("units.commutativity", {u, v});
        }
    }
    for (Index u = 1; u < p.size; ++u) {
        for (Index v = 1; v < p.size; ++v) {
            for (Index w = 1; w < p.size; ++w) {
                if (p.mul(p.mul(u, v), w) != p.mul(u, p.mul(v, w))) {
                    add("units.associativity", {u, v, w});
                }
            }
        }
    }
    for (Index u = 1; u < p.size; ++u) {
        bool has_inverse = false;
        for (Index v = 1; v < p.size; ++v) {
            if (p.mul(u, v) == 1) {
                has_inverse = true;
                break;
            }
        }
        if (!has_inverse) add("units.inverse", {u});
    }

    // Involution: fixes zero, self-inverse, closed on units.
    if (p.neg[0] != 0) add("involution.fixes-zero", {p.neg[0]});
    for (Index x = 0; x < p.size; ++x) {
        if (p.neg[p.neg[x]] != x) add("involution.involutive", {x, p.neg[x], p.neg[p.neg[x]]});
    }
    for (Index u = 1; u < p.size; ++u) {
        if (p.neg[u] == 0) add("involution.unit-image", {u});
    }

    // Nullset axiom (2): closure under multiplication by units.
    // (Axiom (1) is structural: triples are stored sorted.)
    for (const Triple& t : p.nullset) {
        for (Index d = 1; d < p.size; ++d) {
            if (!p.is_null(p.mul(d, t[0]), p.mul(d, t[1]), p.mul(d, t[2]))) {
                add("nullset.mul-closure", {t[0], t[1], t[2], d});
            }
        }
    }

    // Nullset axiom (3): a+b+0=0 iff a=-b, which forces (0,0,0), forces
    // (0,u,-u) for every unit u, and forbids every other zero-involving triple.
    if (!p.is_null(0, 0, 0)) add("nullset.zero-zero-zero", {});
    for (Index u = 1; u < p.size; ++u) {
        if (p.neg[u] >= 1 && p.neg[u] < p.size && !p.is_null(0, u, p.neg[u])) {
            add("nullset.zero-sum-missing", {u, p.neg[u]});
        }
    }
    for (const Triple& t : p.nullset) {
        if (t[0] != 0) continue;
        if (t[1] == 0) {
            if (t[2] != 0) add("nullset.zero-zero-unit", {t[2]});
        } else if (p.neg[t[1]] != t[2]) {
            add("nullset.zero-sum-illegal", {t[1], t[2]});
        }
    }

    return report;
}

void add_zero_law_triples(std::set<Triple>& nullset, const std::vector<Index>& neg, int size) {
    nullset.insert({0, 0, 0});
    for (Index u = 1; u < size; ++u) {
        nullset.insert(sorted_triple(0, u, neg[u]));
    }
}

PastureRef from_prime_field(int p, int max_prime) {
    if (p > max_prime) {
        throw std::invalid_argument("from_prime_field: " + std::to_string(p) +
                                    " exceeds the prime bound " + std::to_string(max_prime));
    }
    bool prime = p >= 2;
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) prime = false;
    }
    if (!prime) {
        throw std::invalid_argument("from_prime_field: " + std::to_string(p) + " is not prime");
    }

    Pasture f;
    f.name = "F" + std::to_string(p);
    f.size = p;
    f.unit_mul.resize(static_cast<std::size_t>(p - 1) * (p - 1));
    for (Index a = 1; a < p; ++a) {
        for (Index b = 1; b < p; ++b) {
            f.unit_mul[static_cast<std::size_t>(a - 1) * (p - 1) + (b - 1)] = (a * b) % p;
        }
    }
    f.neg.resize(p);
    for (Index x = 0; x < p; ++x) f.neg[x] = (p - x) % p;
    for (Index a = 0; a < p; ++a) {
        for (Index b = a; b < p; ++b) {
            for (Index c = b; c < p; ++c) {
                if ((a + b + c) % p == 0) f.nullset.insert({a, b, c});
            }
        }
    }
    return make_pasture(std::move(f));
}

PastureRef krasner() {
    Pasture k;
    k.name = "K";
    k.size = 2;
    k.unit_mul = {1};
    k.neg = {0, 1};
    k.nullset = {{0, 0, 0}, {0, 1, 1}, {1, 1, 1}};
    return make_pasture(std::move(k));
}

namespace {

Pasture two_unit_carrier(std::string name) {
    // Shared shape of S and F1pm: carrier {0, 1, -1} with (-1)^2 = 1.
    Pasture p;
    p.name = std::move(name);
    p.size = 3;
    p.unit_mul = {1, 2, 2, 1};
    p.neg = {0, 2, 1};
    return p;
}

}  // namespace

PastureRef sign_hyperfield() {
    Pasture s = two_unit_carrier("S");
    s.nullset = {{0, 0, 0}, {0, 1, 2}, {1, 1, 2}, {1, 2, 2}};
    return make_pasture(std::move(s));
}

PastureRef f1pm() {
    Pasture f = two_unit_carrier("F1pm");
    f.nullset = {{0, 0, 0}, {0, 1, 2}};
    return make_pasture(std::move(f));
}

std::vector<PastureRef> standard_family() {
    return {f1pm(), krasner(), sign_hyperfield(),
            from_prime_field(2), from_prime_field(3), from_prime_field(5)};
}

}  // namespace pastures
