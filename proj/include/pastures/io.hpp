#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pastures/universal.hpp"

namespace pastures {

/// Syntax or reference-resolution failure; line is 1-based, 0 when the
/// problem is not tied to one line.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

/**
 * Pasture document, line based:
 *
 *   pasture <name> <n>
 *   names <tok0> ... <tok_{n-1}>     (optional; aliases usable below)
 *   mul i j k                        (unit products, upper triangle)
 *   neg i j                          (one line per element)
 *   null i j k
 *   # comment
 *
 * Parsing is purely structural; validation is a separate step so broken
 * fixtures stay representable. The canonical form has sorted, deduplicated
 * lines and no names or comments.
 */
Pasture parse_pasture(const std::string& text);
std::string serialize_pasture(const Pasture& p);

struct MorphismDocument {
    std::string name;
    std::string source_name;
    std::string target_name;
    std::vector<std::pair<Index, Index>> entries;  // map i j lines, sorted
};

MorphismDocument parse_morphism(const std::string& text);
std::string serialize_morphism(const MorphismDocument& doc);
MorphismDocument to_document(const Morphism& m, const std::string& name);

struct DiagramDocument {
    std::string name;
    std::vector<std::string> object_names;
    struct ArrowLine {
        int source = 0;
        int target = 0;
        std::string morphism_name;
    };
    std::vector<ArrowLine> arrows;
};

DiagramDocument parse_diagram(const std::string& text);
std::string serialize_diagram(const DiagramDocument& doc);

/**
 * Named pastures and morphisms a document set can reference. Re-adding a
 * name is allowed only when the definition is unchanged.
 */
struct Registry {
    std::map<std::string, PastureRef> pastures;
    std::map<std::string, Morphism> morphisms;

    void add_pasture(const std::string& name, PastureRef p);
    void add_morphism(const std::string& name, Morphism m);
    PastureRef pasture(const std::string& name) const;
    const Morphism& morphism(const std::string& name) const;
};

/// Registry preloaded with the standard family under its own names
/// (F1pm, K, S, F2, F3, F5).
Registry standard_registry();

Morphism resolve_morphism(const MorphismDocument& doc, const Registry& registry);
Diagram resolve_diagram(const DiagramDocument& doc, const Registry& registry);

}  // namespace pastures
