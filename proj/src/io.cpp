#include "pastures/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <tuple>

namespace pastures {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream stream(text);
    std::string raw;
    int number = 0;
    while (std::getline(stream, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line;
        line.number = number;
        std::string token;
        while (ls >> token) line.tokens.push_back(token);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

int parse_int(const Line& line, const std::string& token) {
    try {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line.number, "expected an integer, got '" + token + "'");
    }
}

std::string sanitized_name(const std::string& name) {
    if (name.empty()) return "P";
    std::string out = name;
    std::replace_if(out.begin(), out.end(), [](unsigned char c) { return std::isspace(c); }, '_');
    return out;
}

}  // namespace

Pasture parse_pasture(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(0, "empty document");
    const Line& header = lines.front();
    if (header.tokens[0] != "pasture" || header.tokens.size() != 3) {
        throw ParseError(header.number, "expected 'pasture <name> <n>'");
    }

    Pasture p;
    p.name = header.tokens[1];
    p.size = parse_int(header, header.tokens[2]);
    if (p.size < 2) throw ParseError(header.number, "a pasture needs at least 2 elements");

    std::map<std::string, Index> aliases;
    auto element = [&](const Line& line, const std::string& token) {
        auto it = aliases.find(token);
        Index x = it != aliases.end() ? it->second : parse_int(line, token);
        if (x < 0 || x >= p.size) {
            throw ParseError(line.number, "element '" + token + "' out of range");
        }
        return x;
    };

    const std::size_t units = static_cast<std::size_t>(p.size - 1);
    std::vector<std::optional<Index>> mul(units * units);
    std::vector<std::optional<Index>> neg(p.size);
    bool entries_seen = false;

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const std::string& kind = line.tokens[0];
        if (kind == "names") {
            if (entries_seen) throw ParseError(line.number, "names must precede entries");
            if (line.tokens.size() != static_cast<std::size_t>(p.size) + 1) {
                throw ParseError(line.number, "names needs one token per element");
            }
            for (Index x = 0; x < p.size; ++x) {
                if (!aliases.emplace(line.tokens[x + 1], x).second) {
                    throw ParseError(line.number, "duplicate name '" + line.tokens[x + 1] + "'");
                }
            }
            continue;
        }
        entries_seen = true;
        if (kind == "mul") {
            if (line.tokens.size() != 4) throw ParseError(line.number, "expected 'mul i j k'");
            Index a = element(line, line.tokens[1]);
            Index b = element(line, line.tokens[2]);
            Index c = element(line, line.tokens[3]);
            if (a == 0 || b == 0 || c == 0) {
                throw ParseError(line.number, "mul entries are between units");
            }
            auto assign = [&](Index x, Index y) {
                auto& slot = mul[static_cast<std::size_t>(x - 1) * units + (y - 1)];
                if (slot && *slot != c) {
                    throw ParseError(line.number, "conflicting product for " + std::to_string(x) +
                                                      " * " + std::to_string(y));
                }
                slot = c;
            };
            assign(a, b);
            assign(b, a);
        } else if (kind == "neg") {
            if (line.tokens.size() != 3) throw ParseError(line.number, "expected 'neg i j'");
            Index a = element(line, line.tokens[1]);
            Index b = element(line, line.tokens[2]);
            if (neg[a] && *neg[a] != b) {
                throw ParseError(line.number, "conflicting involution for " + std::to_string(a));
            }
            neg[a] = b;
        } else if (kind == "null") {
            if (line.tokens.size() != 4) throw ParseError(line.number, "expected 'null i j k'");
            Triple t = sorted_triple(element(line, line.tokens[1]), element(line, line.tokens[2]),
                                     element(line, line.tokens[3]));
            if (!p.nullset.insert(t).second) {
                throw ParseError(line.number, "duplicate null triple");
            }
        } else {
            throw ParseError(line.number, "unknown entry '" + kind + "'");
        }
    }

    for (Index a = 1; a < p.size; ++a) {
        for (Index b = a; b < p.size; ++b) {
            if (!mul[static_cast<std::size_t>(a - 1) * units + (b - 1)]) {
                throw ParseError(0, "missing mul entry " + std::to_string(a) + " " +
                                        std::to_string(b));
            }
        }
    }
    for (Index x = 0; x < p.size; ++x) {
        if (!neg[x]) throw ParseError(0, "missing neg entry " + std::to_string(x));
    }
    p.unit_mul.resize(units * units);
    for (std::size_t i = 0; i < mul.size(); ++i) p.unit_mul[i] = *mul[i];
    p.neg.resize(p.size);
    for (Index x = 0; x < p.size; ++x) p.neg[x] = *neg[x];
    return p;
}

std::string serialize_pasture(const Pasture& p) {
    std::ostringstream out;
    out << "pasture " << sanitized_name(p.name) << " " << p.size << "\n";
    for (Index a = 1; a < p.size; ++a) {
        for (Index b = a; b < p.size; ++b) {
            out << "mul " << a << " " << b << " " << p.mul(a, b) << "\n";
        }
    }
    for (Index x = 0; x < p.size; ++x) {
        out << "neg " << x << " " << p.neg[x] << "\n";
    }
    for (const Triple& t : p.nullset) {
        out << "null " << t[0] << " " << t[1] << " " << t[2] << "\n";
    }
    return out.str();
}

MorphismDocument parse_morphism(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(0, "empty document");
    const Line& header = lines.front();
    if (header.tokens[0] != "morphism" || header.tokens.size() != 4) {
        throw ParseError(header.number, "expected 'morphism <name> <src> <dst>'");
    }
    MorphismDocument doc;
    doc.name = header.tokens[1];
    doc.source_name = header.tokens[2];
    doc.target_name = header.tokens[3];
    std::map<Index, Index> entries;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (line.tokens[0] != "map" || line.tokens.size() != 3) {
            throw ParseError(line.number, "expected 'map i j'");
        }
        Index from = parse_int(line, line.tokens[1]);
        Index to = parse_int(line, line.tokens[2]);
        auto [it, fresh] = entries.emplace(from, to);
        if (!fresh && it->second != to) {
            throw ParseError(line.number, "conflicting image for " + std::to_string(from));
        }
    }
    doc.entries.assign(entries.begin(), entries.end());
    return doc;
}

std::string serialize_morphism(const MorphismDocument& doc) {
    std::ostringstream out;
    out << "morphism " << sanitized_name(doc.name) << " " << sanitized_name(doc.source_name)
        << " " << sanitized_name(doc.target_name) << "\n";
    auto entries = doc.entries;
    std::sort(entries.begin(), entries.end());
    for (const auto& [from, to] : entries) {
        out << "map " << from << " " << to << "\n";
    }
    return out.str();
}

MorphismDocument to_document(const Morphism& m, const std::string& name) {
    MorphismDocument doc;
    doc.name = name;
    doc.source_name = m.source->name;
    doc.target_name = m.target->name;
    for (Index x = 0; x < m.source->size; ++x) doc.entries.push_back({x, m.map[x]});
    return doc;
}

DiagramDocument parse_diagram(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(0, "empty document");
    const Line& header = lines.front();
    if (header.tokens[0] != "diagram" || header.tokens.size() > 2) {
        throw ParseError(header.number, "expected 'diagram [name]'");
    }
    DiagramDocument doc;
    doc.name = header.tokens.size() == 2 ? header.tokens[1] : "D";
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (line.tokens[0] == "object" && line.tokens.size() == 2) {
            doc.object_names.push_back(line.tokens[1]);
        } else if (line.tokens[0] == "arrow" && line.tokens.size() == 4) {
            DiagramDocument::ArrowLine arrow;
            arrow.source = parse_int(line, line.tokens[1]);
            arrow.target = parse_int(line, line.tokens[2]);
            arrow.morphism_name = line.tokens[3];
            if (arrow.source < 0 || arrow.target < 0 ||
                arrow.source >= static_cast<int>(doc.object_names.size()) ||
                arrow.target >= static_cast<int>(doc.object_names.size())) {
                throw ParseError(line.number, "arrow references an object not yet listed");
            }
            doc.arrows.push_back(std::move(arrow));
        } else {
            throw ParseError(line.number, "expected 'object <pasture>' or 'arrow s t <morphism>'");
        }
    }
    return doc;
}

std::string serialize_diagram(const DiagramDocument& doc) {
    std::ostringstream out;
    out << "diagram " << sanitized_name(doc.name) << "\n";
    for (const std::string& obj : doc.object_names) {
        out << "object " << sanitized_name(obj) << "\n";
    }
    auto arrows = doc.arrows;
    std::sort(arrows.begin(), arrows.end(), [](const auto& a, const auto& b) {
        return std::tie(a.source, a.target, a.morphism_name) <
               std::tie(b.source, b.target, b.morphism_name);
    });
    for (const auto& arrow : arrows) {
        out << "arrow " << arrow.source << " " << arrow.target << " "
            << sanitized_name(arrow.morphism_name) << "\n";
    }
    return out.str();
}

void Registry::add_pasture(const std::string& name, PastureRef p) {
    auto [it, fresh] = pastures.emplace(name, p);
    if (!fresh && !(*it->second == *p)) {
        throw ParseError(0, "pasture '" + name + "' is already defined differently");
    }
}

void Registry::add_morphism(const std::string& name, Morphism m) {
    auto [it, fresh] = morphisms.emplace(name, m);
    if (!fresh && !(it->second == m)) {
        throw ParseError(0, "morphism '" + name + "' is already defined differently");
    }
}

PastureRef Registry::pasture(const std::string& name) const {
    auto it = pastures.find(name);
    if (it == pastures.end()) throw ParseError(0, "unknown pasture '" + name + "'");
    return it->second;
}

const Morphism& Registry::morphism(const std::string& name) const {
    auto it = morphisms.find(name);
    if (it == morphisms.end()) throw ParseError(0, "unknown morphism '" + name + "'");
    return it->second;
}

Registry standard_registry() {
    Registry registry;
    for (const PastureRef& p : standard_family()) {
        registry.add_pasture(p->name, p);
    }
    return registry;
}

Morphism resolve_morphism(const MorphismDocument& doc, const Registry& registry) {
    Morphism m;
    m.source = registry.pasture(doc.source_name);
    m.target = registry.pasture(doc.target_name);
    m.map.assign(m.source->size, -1);
    for (const auto& [from, to] : doc.entries) {
        if (from < 0 || from >= m.source->size) {
            throw ParseError(0, "morphism '" + doc.name + "': source element " +
                                    std::to_string(from) + " out of range");
        }
        if (to < 0 || to >= m.target->size) {
            throw ParseError(0, "morphism '" + doc.name + "': target element " +
                                    std::to_string(to) + " out of range");
        }
        m.map[from] = to;
    }
    for (Index x = 0; x < m.source->size; ++x) {
        if (m.map[x] < 0) {
            throw ParseError(0, "morphism '" + doc.name + "': missing image for " +
                                    std::to_string(x));
        }
    }
    return m;
}

Diagram resolve_diagram(const DiagramDocument& doc, const Registry& registry) {
    Diagram d;
    for (const std::string& name : doc.object_names) {
        d.objects.push_back(registry.pasture(name));
    }
    for (const auto& arrow : doc.arrows) {
        DiagramArrow a;
        a.source = arrow.source;
        a.target = arrow.target;
        a.morphism = registry.morphism(arrow.morphism_name);
        d.arrows.push_back(std::move(a));
    }
    validate_diagram(d);
    return d;
}

}  // namespace pastures
