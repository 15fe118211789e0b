#include "platknot/commands.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "platknot/covering.hpp"
#include "platknot/errors.hpp"
#include "platknot/moves.hpp"
#include "platknot/plat.hpp"
#include "platknot/render.hpp"

namespace platknot {

namespace {

const PlatPresentation& require_plat(const Document& doc, const char* command) {
    if (!doc.plat) {
        throw DomainError(std::string("the '") + command +
                          "' command needs a plat in the input document");
    }
    return *doc.plat;
}

const CoveringSpec& require_covering(const Document& doc, const char* command) {
    if (!doc.covering) {
        throw DomainError(std::string("the '") + command +
                          "' command needs a covering in the input document");
    }
    return *doc.covering;
}

const char* bool_word(bool b) { return b ? "true" : "false"; }

// "[1,2,3]" — the text-mode list shape.
std::string bracket_list(const std::vector<int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(values[i]);
    }
    out += ']';
    return out;
}

// " 1 2 3" (leading separators) — appended after "key:" in structured mode,
// so an empty list leaves a bare "key:" line.
std::string space_list(const std::vector<int>& values) {
    std::string out;
    for (const int v : values) {
        out += ' ';
        out += std::to_string(v);
    }
    return out;
}

std::string cmd_trace(const Document& doc, const CommandOptions& options) {
    const PlatPresentation& plat = require_plat(doc, "trace");
    const LinkTrace trace = trace_components(plat);
    std::ostringstream out;
    if (options.format == OutputFormat::Structured) {
        out << "mu: " << trace.mu << '\n';
        out << "n_j:" << space_list(trace.top_arc_count) << '\n';
        out << "component_of_top_arc:" << space_list(trace.component_of_top_arc) << '\n';
        out << "component_of_bottom_arc:" << space_list(trace.component_of_bottom_arc) << '\n';
    } else {
        out << "mu=" << trace.mu << "; n=" << bracket_list(trace.top_arc_count)
            << "; top arcs: " << bracket_list(trace.component_of_top_arc)
            << "; bottom arcs: " << bracket_list(trace.component_of_bottom_arc) << '\n';
    }
    return out.str();
}

std::string cmd_special(const Document& doc, const CommandOptions& options) {
    const PlatPresentation& plat = require_plat(doc, "special");
    const LinkTrace trace = trace_components(plat);
    const bool c1 = is_condition_1(plat, trace);
    const bool c2 = is_condition_2(plat);
    const bool c2p = is_condition_2prime(plat, trace);
    const bool special = c1 && c2;
    std::ostringstream out;
    if (options.format == OutputFormat::Structured) {
        out << "condition1: " << bool_word(c1) << '\n';
        out << "condition2: " << bool_word(c2) << '\n';
        out << "condition2prime: " << bool_word(c2p) << '\n';
        out << "special: " << bool_word(special) << '\n';
    } else {
        out << "condition (1): " << bool_word(c1) << '\n';
        out << "condition (2): " << bool_word(c2) << '\n';
        out << "condition (2'): " << bool_word(c2p) << '\n';
        out << "special: " << bool_word(special) << '\n';
    }
    return out.str();
}

std::string cmd_normalize(const Document& doc, const CommandOptions& options) {
    const PlatPresentation& plat = require_plat(doc, "normalize");
    const NormalizationResult result = normalize_to_special(plat);

    if (options.emit_normalized) {
        Document normalized;
        normalized.plat = result.plat;
        normalized.covering = doc.covering;  // mu is preserved, so still consistent
        return emit_document(normalized);
    }

    std::string move_text;
    for (std::size_t i = 0; i < result.moves.size(); ++i) {
        if (i > 0) {
            move_text += ' ';
        }
        move_text += to_string(result.moves[i]);
    }

    std::ostringstream out;
    if (options.format == OutputFormat::Structured) {
        out << "moves:" << (move_text.empty() ? "" : " ") << move_text << '\n';
        out << "word:" << space_list(result.plat.braid().letters()) << '\n';
    } else {
        out << "moves: " << (move_text.empty() ? "(none)" : move_text) << '\n';
        const auto& letters = result.plat.braid().letters();
        if (letters.empty()) {
            out << "word: (empty)" << '\n';
        } else {
            out << "word:" << space_list(letters) << '\n';
        }
    }
    return out.str();
}

std::string class_list_text(const std::vector<CoveringClass>& classes, const char* separator) {
    std::string out;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i > 0) {
            out += separator;
        }
        out += to_string(classes[i]);
    }
    return out;
}

std::string cmd_classify(const Document& doc, const CommandOptions& options) {
    const CoveringSpec& spec = require_covering(doc, "classify");
    const CoveringClass strongest = classify(spec);
    const std::vector<CoveringClass> satisfied = classes_satisfied(spec);
    std::ostringstream out;
    if (options.format == OutputFormat::Structured) {
        out << "class: " << to_string(strongest) << '\n';
        out << "classes_satisfied: " << class_list_text(satisfied, " ") << '\n';
        out << "p: " << spec.degree() << '\n';
        out << "coefficients:" << space_list(spec.coefficients()) << '\n';
    } else {
        out << "class: " << to_string(strongest) << '\n';
        out << "classes satisfied: " << class_list_text(satisfied, ", ") << '\n';
    }
    return out.str();
}

std::string cmd_cover_components(const Document& doc, const CommandOptions& options) {
    const CoveringSpec& spec = require_covering(doc, "cover-components");
    std::vector<int> counts;
    counts.reserve(static_cast<std::size_t>(spec.component_count()));
    for (int j = 1; j <= spec.component_count(); ++j) {
        counts.push_back(preimage_component_count(spec, j));
    }
    std::ostringstream out;
    if (options.format == OutputFormat::Structured) {
        out << "preimage_components:" << space_list(counts) << '\n';
        out << "p: " << spec.degree() << '\n';
        out << "coefficients:" << space_list(spec.coefficients()) << '\n';
    } else {
        for (int j = 1; j <= spec.component_count(); ++j) {
            out << "component " << j << ": " << counts[static_cast<std::size_t>(j - 1)] << '\n';
        }
    }
    return out.str();
}

std::string cmd_genus(const Document& doc, const CommandOptions& options) {
    const PlatPresentation& plat = require_plat(doc, "genus");
    const CoveringSpec& spec = require_covering(doc, "genus");
    // An almost-strictly-cyclic covering is handled by reorienting components
    // until the coefficients agree; the degree and bridge count are untouched,
    // so the bound itself is unchanged.  Weaker classes fail the theorem
    // precondition inside heegaard_genus_bound.
    CoveringSpec oriented = spec;
    if (!satisfies(spec, CoveringClass::StrictlyCyclic) &&
        satisfies(spec, CoveringClass::AlmostStrictlyCyclic)) {
        oriented = reorient_to_strict(spec).spec;
    }
    const int n = plat.bridge_count();
    const int p = oriented.degree();
    const int g = heegaard_genus_bound(n, oriented);
    std::ostringstream out;
    if (options.format == OutputFormat::Structured) {
        out << "genus_bound: " << g << '\n';
        out << "p: " << p << '\n';
    } else {
        out << "g ≤ (" << n << "-1)(" << p << "-1) = " << g << '\n';
    }
    return out.str();
}

std::string cmd_decompose(const Document& doc, const CommandOptions& options) {
    const PlatPresentation& plat = require_plat(doc, "decompose");
    const DecompositionData data = decomposition_data(plat);
    std::ostringstream out;
    if (options.format == OutputFormat::Structured) {
        out << "n: " << data.bridge_count << '\n';
        out << "word:" << space_list(data.gluing_word.letters()) << '\n';
    } else {
        out << "n: " << data.bridge_count << '\n';
        const auto& letters = data.gluing_word.letters();
        if (letters.empty()) {
            out << "gluing word: (empty)" << '\n';
        } else {
            out << "gluing word:" << space_list(letters) << '\n';
        }
    }
    return out.str();
}

std::string cmd_render(const Document& doc, const CommandOptions& options) {
    const PlatPresentation& plat = require_plat(doc, "render");
    return options.svg ? render_svg(plat) : render_ascii(plat);
}

}  // namespace

std::string run_command(const std::string& command, const Document& doc,
                        const CommandOptions& options) {
    if (command == "trace") {
        return cmd_trace(doc, options);
    }
    if (command == "special") {
        return cmd_special(doc, options);
    }
    if (command == "normalize") {
        return cmd_normalize(doc, options);
    }
    if (command == "classify") {
        return cmd_classify(doc, options);
    }
    if (command == "cover-components") {
        return cmd_cover_components(doc, options);
    }
    if (command == "genus") {
        return cmd_genus(doc, options);
    }
    if (command == "decompose") {
        return cmd_decompose(doc, options);
    }
    if (command == "render") {
        return cmd_render(doc, options);
    }
    throw ParseError("unknown command '" + command + "'");
}

}  // namespace platknot
