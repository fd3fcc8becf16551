// Command-line front end: validate / show documents, enumerate hom-sets,
// and run every categorical construction with canonical-document output.
//
// Exit codes: 0 success/valid/passed, 1 invalid/failed, 2 usage, file or
// capacity errors.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "pastures/io.hpp"

using namespace pastures;

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

enum class DocKind { Pasture, Morphism, Diagram };

struct DocSegment {
    DocKind kind;
    std::string text;
};

/// Splits a file into documents at pasture/morphism/diagram headers, so
/// construction output (apex plus legs) can be fed straight back in.
std::vector<DocSegment> split_documents(const std::string& text, const std::string& path) {
    std::vector<DocSegment> segments;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        std::istringstream ls(line);
        std::string token;
        bool header = ls >> token && token[0] != '#';
        if (header && token == "pasture") {
            segments.push_back({DocKind::Pasture, ""});
        } else if (header && token == "morphism") {
            segments.push_back({DocKind::Morphism, ""});
        } else if (header && token == "diagram") {
            segments.push_back({DocKind::Diagram, ""});
        } else if (segments.empty()) {
            if (header) {
                throw std::runtime_error("'" + path +
                                         "' is not a pasture, morphism or diagram document");
            }
            continue;  // leading comments or blank lines
        }
        segments.back().text += line;
        segments.back().text += "\n";
    }
    if (segments.empty()) {
        throw std::runtime_error("'" + path + "' contains no documents");
    }
    return segments;
}

/// Loaded documents plus the built-in standard pastures; arguments may be
/// file paths or names registered earlier.
struct Session {
    Registry registry = standard_registry();
    std::map<std::string, DiagramDocument> diagrams;

    void load_files(const std::vector<std::string>& paths) {
        std::vector<std::string> morphism_texts;
        std::vector<std::string> diagram_texts;
        for (const std::string& path : paths) {
            for (DocSegment& segment : split_documents(read_file(path), path)) {
                switch (segment.kind) {
                    case DocKind::Pasture: {
                        Pasture p = parse_pasture(segment.text);
                        std::string name = p.name;
                        registry.add_pasture(name, make_pasture(std::move(p)));
                        break;
                    }
                    case DocKind::Morphism:
                        morphism_texts.push_back(std::move(segment.text));
                        break;
                    case DocKind::Diagram:
                        diagram_texts.push_back(std::move(segment.text));
                        break;
                }
            }
        }
        for (const std::string& text : morphism_texts) {
            MorphismDocument doc = parse_morphism(text);
            registry.add_morphism(doc.name, resolve_morphism(doc, registry));
        }
        for (const std::string& text : diagram_texts) {
            DiagramDocument doc = parse_diagram(text);
            diagrams.emplace(doc.name, std::move(doc));
        }
    }

    PastureRef pasture_arg(const std::string& arg) {
        if (std::filesystem::exists(arg)) {
            load_files({arg});
            for (const DocSegment& segment : split_documents(read_file(arg), arg)) {
                if (segment.kind == DocKind::Pasture) {
                    return registry.pasture(parse_pasture(segment.text).name);
                }
            }
            throw std::runtime_error("'" + arg + "' contains no pasture document");
        }
        return registry.pasture(arg);
    }

    Morphism morphism_arg(const std::string& arg) {
        if (std::filesystem::exists(arg)) {
            load_files({arg});
            for (const DocSegment& segment : split_documents(read_file(arg), arg)) {
                if (segment.kind == DocKind::Morphism) {
                    return registry.morphism(parse_morphism(segment.text).name);
                }
            }
            throw std::runtime_error("'" + arg + "' contains no morphism document");
        }
        return registry.morphism(arg);
    }

    Diagram diagram_arg(const std::string& arg, std::string* name_out = nullptr) {
        if (std::filesystem::exists(arg)) {
            load_files({arg});
            for (const DocSegment& segment : split_documents(read_file(arg), arg)) {
                if (segment.kind == DocKind::Diagram) {
                    DiagramDocument doc = parse_diagram(segment.text);
                    if (name_out) *name_out = doc.name;
                    return resolve_diagram(doc, registry);
                }
            }
            throw std::runtime_error("'" + arg + "' contains no diagram document");
        }
        auto it = diagrams.find(arg);
        if (it == diagrams.end()) throw std::runtime_error("unknown diagram '" + arg + "'");
        if (name_out) *name_out = it->second.name;
        return resolve_diagram(it->second, registry);
    }
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << text;
        std::cout << "# wrote " << out_path << "\n";
    }
}

std::string violations_text(const ValidationReport& report) {
    std::ostringstream out;
    for (const Violation& v : report.violations) {
        out << "  " << v.axiom << " witness=[";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
            if (i) out << ",";
            out << v.witness[i];
        }
        out << "]\n";
    }
    return out.str();
}

/// Re-validates a construction result and renders it as documents; a broken
/// output is reported loudly instead of printed.
int emit_construction(const PastureRef& apex,
                      const std::vector<std::pair<std::string, Morphism>>& legs,
                      const std::string& out_path) {
    ValidationReport apex_report = validate_pasture(*apex);
    if (!apex_report.valid()) {
        std::cerr << "constructed pasture failed validation:\n" << violations_text(apex_report);
        return kExitInvalid;
    }
    for (const auto& [name, leg] : legs) {
        ValidationReport leg_report = validate_morphism(leg);
        if (!leg_report.valid()) {
            std::cerr << "constructed leg '" << name << "' failed validation:\n"
                      << violations_text(leg_report);
            return kExitInvalid;
        }
    }
    std::ostringstream out;
    out << serialize_pasture(*apex);
    for (const auto& [name, leg] : legs) {
        out << "\n" << serialize_morphism(to_document(leg, name));
    }
    out << "\n# " << apex->name << ": " << apex->size << " elements, "
        << apex->nullset.size() << " null triples\n# validation: ok\n";
    emit(out.str(), out_path);
    return kExitValid;
}

int run_validate(Session& session, const std::vector<std::string>& files) {
    session.load_files(files);  // pastures first so references resolve
    bool all_valid = true;
    for (const std::string& path : files) {
        for (const DocSegment& segment : split_documents(read_file(path), path)) {
            switch (segment.kind) {
                case DocKind::Pasture: {
                    Pasture p = parse_pasture(segment.text);
                    ValidationReport report = validate_pasture(p);
                    std::cout << path << " pasture " << p.name << ": "
                              << (report.valid() ? "valid" : "INVALID") << "\n"
                              << violations_text(report);
                    all_valid = all_valid && report.valid();
                    break;
                }
                case DocKind::Morphism: {
                    MorphismDocument doc = parse_morphism(segment.text);
                    ValidationReport report =
                        validate_morphism(resolve_morphism(doc, session.registry));
                    std::cout << path << " morphism " << doc.name << ": "
                              << (report.valid() ? "valid" : "INVALID") << "\n"
                              << violations_text(report);
                    all_valid = all_valid && report.valid();
                    break;
                }
                case DocKind::Diagram: {
                    DiagramDocument doc = parse_diagram(segment.text);
                    resolve_diagram(doc, session.registry);  // rejects ill-typed arrows
                    std::cout << path << " diagram " << doc.name << ": valid\n";
                    break;
                }
            }
        }
    }
    return all_valid ? kExitValid : kExitInvalid;
}

int run_show(const std::string& file, const std::string& out_path) {
    std::ostringstream out;
    bool first = true;
    for (const DocSegment& segment : split_documents(read_file(file), file)) {
        if (!first) out << "\n";
        first = false;
        switch (segment.kind) {
            case DocKind::Pasture:
                out << serialize_pasture(parse_pasture(segment.text));
                break;
            case DocKind::Morphism:
                out << serialize_morphism(parse_morphism(segment.text));
                break;
            case DocKind::Diagram:
                out << serialize_diagram(parse_diagram(segment.text));
                break;
        }
    }
    emit(out.str(), out_path);
    return kExitValid;
}

int run_hom(Session& session, const std::string& src_arg, const std::string& dst_arg,
            int max_size, const std::string& out_path) {
    PastureRef src = session.pasture_arg(src_arg);
    PastureRef dst = session.pasture_arg(dst_arg);
    std::vector<Morphism> homs = enumerate_homs(src, dst, max_size);
    std::ostringstream out;
    out << homs.size() << " morphism" << (homs.size() == 1 ? "" : "s") << "\n";
    for (std::size_t i = 0; i < homs.size(); ++i) {
        out << "\n" << serialize_morphism(to_document(homs[i], "hom" + std::to_string(i)));
    }
    emit(out.str(), out_path);
    return kExitValid;
}

int run_iso(Session& session, const std::string& a_arg, const std::string& b_arg, int max_size,
            const std::string& out_path) {
    PastureRef a = session.pasture_arg(a_arg);
    PastureRef b = session.pasture_arg(b_arg);
    auto pair = is_isomorphic(a, b, max_size);
    if (!pair) {
        emit("not isomorphic\n", out_path);
        return kExitInvalid;
    }
    std::ostringstream out;
    out << "isomorphic\n\n"
        << serialize_morphism(to_document(pair->first, "iso")) << "\n"
        << serialize_morphism(to_document(pair->second, "iso_inverse"));
    emit(out.str(), out_path);
    return kExitValid;
}

int report_verification(const std::string& verified_side, const VerificationResult& result) {
    for (std::size_t i = 0; i < result.outcomes.size(); ++i) {
        const ProbeOutcome& outcome = result.outcomes[i];
        std::cout << "probe " << outcome.probe->name << " " << verified_side << " cone "
                  << (i + 1) << ": mediating morphisms = " << outcome.mediating_count << "\n";
    }
    std::cout << verified_side << " universal property: " << (result.passed ? "PASS" : "FAIL")
              << "\n";
    return result.passed ? kExitValid : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"categorical constructions for finite pastures"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string out_path;
    std::string left_arg, right_arg, base_arg;
    std::vector<std::string> probe_args;
    std::string side = "both";
    int max_size = kDefaultEnumerationBound;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("files", files, "additional documents to load");
        cmd->add_option("--out", out_path, "write the result document here");
        return cmd;
    };
    auto add_max_size = [&](CLI::App* cmd) {
        cmd->add_option("--max-size", max_size, "hom enumeration bound")
            ->envname("PASTURES_MAX_SIZE");
    };

    CLI::App* validate = app.add_subcommand("validate", "check documents against the axioms");
    validate->add_option("files", files, "documents to validate")->required();

    CLI::App* show = app.add_subcommand("show", "print a document in canonical form");
    show->add_option("file", base_arg, "document to canonicalize")->required();
    show->add_option("--out", out_path, "write the result document here");

    CLI::App* hom = app.add_subcommand("hom", "enumerate all morphisms P -> Q");
    hom->add_option("source", left_arg)->required();
    hom->add_option("target", right_arg)->required();
    add_common(hom);
    add_max_size(hom);

    CLI::App* iso = app.add_subcommand("iso", "find an isomorphism pair");
    iso->add_option("first", left_arg)->required();
    iso->add_option("second", right_arg)->required();
    add_common(iso);
    add_max_size(iso);

    auto parallel_pair_cmd = [&](const char* name, const char* help) {
        CLI::App* cmd = app.add_subcommand(name, help);
        cmd->add_option("--left", left_arg, "first morphism")->required();
        cmd->add_option("--right", right_arg, "second morphism")->required();
        add_common(cmd);
        return cmd;
    };
    CLI::App* eq = parallel_pair_cmd("equalizer", "equalizer of a parallel pair");
    CLI::App* coeq = parallel_pair_cmd("coequalizer", "coequalizer of a parallel pair");
    CLI::App* pullback_cmd = parallel_pair_cmd("pullback", "fibered product of a cospan");
    pullback_cmd->add_option("--base", base_arg, "common target (consistency check)");
    CLI::App* pushout_cmd = parallel_pair_cmd("pushout", "fibered coproduct of a span");
    pushout_cmd->add_option("--base", base_arg, "common source (consistency check)");

    CLI::App* product_cmd = app.add_subcommand("product", "finite product of pastures");
    product_cmd->add_option("factors", files, "factor pastures in order");
    product_cmd->add_option("--out", out_path, "write the result document here");

    CLI::App* coproduct_cmd = app.add_subcommand("coproduct", "finite coproduct of pastures");
    coproduct_cmd->add_option("summands", files, "summand pastures in order")->required();
    coproduct_cmd->add_option("--out", out_path, "write the result document here");

    CLI::App* limit_cmd = app.add_subcommand("limit", "limit of a finite diagram");
    limit_cmd->add_option("diagram", base_arg)->required();
    add_common(limit_cmd);

    CLI::App* colimit_cmd = app.add_subcommand("colimit", "colimit of a finite diagram");
    colimit_cmd->add_option("diagram", base_arg)->required();
    add_common(colimit_cmd);

    CLI::App* check = app.add_subcommand(
        "check-universal", "verify the universal property of a diagram's (co)limit");
    check->add_option("diagram", base_arg)->required();
    check->add_option("files", files, "additional documents to load");
    check->add_option("--probes", probe_args,
                      "probe pastures (default: standard family + objects)");
    check->add_option("--side", side, "limit, colimit or both")
        ->check(CLI::IsMember({"limit", "colimit", "both"}));
    add_max_size(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        Session session;
        if (validate->parsed()) return run_validate(session, files);
        if (show->parsed()) return run_show(base_arg, out_path);
        if (hom->parsed()) {
            session.load_files(files);
            return run_hom(session, left_arg, right_arg, max_size, out_path);
        }
        if (iso->parsed()) {
            session.load_files(files);
            return run_iso(session, left_arg, right_arg, max_size, out_path);
        }
        if (eq->parsed() || coeq->parsed()) {
            session.load_files(files);
            Morphism f = session.morphism_arg(left_arg);
            Morphism g = session.morphism_arg(right_arg);
            if (eq->parsed()) {
                EqualizerResult result = equalizer(f, g);
                return emit_construction(result.object, {{"q", result.inclusion}}, out_path);
            }
            CoequalizerResult result = coequalizer(f, g);
            return emit_construction(result.object, {{"q", result.projection}}, out_path);
        }
        if (pullback_cmd->parsed()) {
            session.load_files(files);
            PastureRef base = base_arg.empty() ? nullptr : session.pasture_arg(base_arg);
            Morphism f1 = session.morphism_arg(left_arg);
            Morphism f2 = session.morphism_arg(right_arg);
            if (base && !(*f1.target == *base)) {
                throw std::runtime_error("--base does not match the legs' target");
            }
            FiberedProductResult result = fibered_product(f1, f2);
            return emit_construction(result.object,
                                     {{"pi1", result.proj1}, {"pi2", result.proj2}}, out_path);
        }
        if (pushout_cmd->parsed()) {
            session.load_files(files);
            PastureRef base = base_arg.empty() ? nullptr : session.pasture_arg(base_arg);
            Morphism f1 = session.morphism_arg(left_arg);
            Morphism f2 = session.morphism_arg(right_arg);
            if (base && !(*f1.source == *base)) {
                throw std::runtime_error("--base does not match the legs' source");
            }
            FiberedCoproductResult result = fibered_coproduct(f1, f2);
            return emit_construction(result.object,
                                     {{"i1", result.left_leg}, {"i2", result.right_leg}},
                                     out_path);
        }
        if (product_cmd->parsed() || coproduct_cmd->parsed()) {
            std::vector<PastureRef> parts;
            for (const std::string& arg : files) parts.push_back(session.pasture_arg(arg));
            std::vector<std::pair<std::string, Morphism>> legs;
            PastureRef apex;
            if (product_cmd->parsed()) {
                ProductResult result = product(parts);
                apex = result.object;
                for (std::size_t i = 0; i < result.projections.size(); ++i) {
                    legs.push_back({"pi" + std::to_string(i + 1), result.projections[i]});
                }
            } else {
                CoproductResult result = coproduct(parts);
                apex = result.object;
                for (std::size_t i = 0; i < result.injections.size(); ++i) {
                    legs.push_back({"in" + std::to_string(i + 1), result.injections[i]});
                }
            }
            return emit_construction(apex, legs, out_path);
        }
        if (limit_cmd->parsed() || colimit_cmd->parsed()) {
            session.load_files(files);
            Diagram d = session.diagram_arg(base_arg);
            std::vector<std::pair<std::string, Morphism>> legs;
            PastureRef apex;
            if (limit_cmd->parsed()) {
                LimitResult result = limit(d);
                apex = result.apex;
                for (std::size_t i = 0; i < result.cone.legs.size(); ++i) {
                    legs.push_back({"leg" + std::to_string(i + 1), result.cone.legs[i]});
                }
            } else {
                ColimitResult result = colimit(d);
                apex = result.apex;
                for (std::size_t i = 0; i < result.cocone.legs.size(); ++i) {
                    legs.push_back({"leg" + std::to_string(i + 1), result.cocone.legs[i]});
                }
            }
            return emit_construction(apex, legs, out_path);
        }
        if (check->parsed()) {
            session.load_files(files);
            std::string name;
            Diagram d = session.diagram_arg(base_arg, &name);
            std::vector<PastureRef> probes;
            if (probe_args.empty()) {
                probes = standard_family();
                probes.insert(probes.end(), d.objects.begin(), d.objects.end());
            } else {
                for (const std::string& arg : probe_args) {
                    probes.push_back(session.pasture_arg(arg));
                }
            }
            int status = kExitValid;
            if (side == "limit" || side == "both") {
                LimitResult lim = limit(d);
                std::cout << "# limit of diagram " << name << ": apex " << lim.apex->name
                          << " (" << lim.apex->size << " elements)\n";
                VerificationResult result = check_limit_cone(d, lim.cone, probes, max_size);
                status = std::max(status, report_verification("limit", result));
            }
            if (side == "colimit" || side == "both") {
                ColimitResult colim = colimit(d);
                std::cout << "# colimit of diagram " << name << ": apex " << colim.apex->name
                          << " (" << colim.apex->size << " elements)\n";
                VerificationResult result =
                    check_colimit_cocone(d, colim.cocone, probes, max_size);
                status = std::max(status, report_verification("colimit", result));
            }
            return status;
        }
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
