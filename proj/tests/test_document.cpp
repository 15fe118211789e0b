#include <doctest.h>

#include <string>

#include "platknot/commands.hpp"
#include "platknot/document.hpp"
#include "platknot/errors.hpp"
#include "platknot/render.hpp"

using namespace platknot;

namespace {

CommandOptions structured() {
    CommandOptions options;
    options.format = OutputFormat::Structured;
    return options;
}

}  // namespace

TEST_CASE("parsing minimal documents") {
    const Document doc = parse_document("plat 2\nword\n");
    REQUIRE(doc.plat.has_value());
    CHECK(doc.plat->strand_count() == 2);
    CHECK(doc.plat->braid().letters().empty());
    CHECK_FALSE(doc.covering.has_value());

    const Document wordless = parse_document("plat 4\n");
    REQUIRE(wordless.plat.has_value());
    CHECK(wordless.plat->braid().letters().empty());

    const Document covering_only = parse_document("covering 5 2 3\n");
    CHECK_FALSE(covering_only.plat.has_value());
    REQUIRE(covering_only.covering.has_value());
    CHECK(*covering_only.covering == CoveringSpec(5, {2, 3}));
}

TEST_CASE("parsing a full document with comments") {
    const std::string text =
        "# Hopf link as a 4-plat\n"
        "plat 4   # strand count\n"
        "\n"
        "word 2 2\n"
        "covering 5 2 3\n";
    const Document doc = parse_document(text);
    REQUIRE(doc.plat.has_value());
    CHECK(doc.plat->strand_count() == 4);
    CHECK(doc.plat->braid().letters() == std::vector<int>{2, 2});
    REQUIRE(doc.covering.has_value());
    CHECK(*doc.covering == CoveringSpec(5, {2, 3}));
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_document("plat 4\nword 5\n"),
                         "line 2: letter 5 is out of range for 4 strands", ParseError);
    CHECK_THROWS_WITH_AS(parse_document("plat 3\n"),
                         "line 1: strand count must be a positive even integer, got 3",
                         ParseError);
    CHECK_THROWS_AS(parse_document("word 1\nplat 4\n"), ParseError);   // word first
    CHECK_THROWS_AS(parse_document("plat 4\nplat 4\n"), ParseError);   // duplicate
    CHECK_THROWS_AS(parse_document("plat 4\nword 1\nword 1\n"), ParseError);
    CHECK_THROWS_AS(parse_document("covering 5 1\ncovering 5 1\n"), ParseError);
    CHECK_THROWS_AS(parse_document("plat four\n"), ParseError);        // not an integer
    CHECK_THROWS_AS(parse_document("plat 4 4\n"), ParseError);         // arity
    CHECK_THROWS_AS(parse_document("covering 5\n"), ParseError);       // no coefficients
    CHECK_THROWS_AS(parse_document("covering 1 1\n"), ParseError);     // degree < 2
    CHECK_THROWS_AS(parse_document("link 4\n"), ParseError);           // unknown directive
    CHECK_THROWS_AS(parse_document(""), ParseError);                   // nothing at all
    CHECK_THROWS_AS(parse_document("# only a comment\n"), ParseError);
}

TEST_CASE("semantic failures are domain errors") {
    // Coefficients sharing a factor with the degree: invalid covering.
    CHECK_THROWS_AS(parse_document("covering 6 2 4\n"), DomainError);
    // Coefficient count differing from the traced component count.
    CHECK_THROWS_AS(parse_document("plat 4\nword 2 2\ncovering 5 2\n"), DomainError);
    CHECK_THROWS_AS(parse_document("plat 4\nword 2 2 2\ncovering 5 2 2\n"), DomainError);
}

TEST_CASE("emit and parse round-trip") {
    for (const std::string text : {"plat 2\nword\n",
                                   "plat 4\nword 2 2\ncovering 5 2 3\n",
                                   "covering 7 1 2\n",
                                   "plat 8\nword -3 5 -7 1 1\n"}) {
        const Document doc = parse_document(text);
        const std::string emitted = emit_document(doc);
        const Document reparsed = parse_document(emitted);
        CHECK(reparsed.plat == doc.plat);
        CHECK(reparsed.covering == doc.covering);
        CHECK(emit_document(reparsed) == emitted);
    }
    // Emission normalizes a wordless plat to an explicit empty word line.
    CHECK(emit_document(parse_document("plat 4\n")) == "plat 4\nword\n");
}

TEST_CASE("trace command output") {
    const Document doc = parse_document("plat 4\nword 2 2\n");
    CHECK(run_command("trace", doc) ==
          "mu=2; n=[1,1]; top arcs: [1,2]; bottom arcs: [1,2]\n");
    CHECK(run_command("trace", doc, structured()) ==
          "mu: 2\n"
          "n_j: 1 1\n"
          "component_of_top_arc: 1 2\n"
          "component_of_bottom_arc: 1 2\n");
}

TEST_CASE("special command output") {
    const Document hopf = parse_document("plat 4\nword 2 2\n");
    CHECK(run_command("special", hopf) ==
          "condition (1): true\n"
          "condition (2): true\n"
          "condition (2'): true\n"
          "special: true\n");

    const Document crossing = parse_document("plat 4\nword 1\n");
    CHECK(run_command("special", crossing) ==
          "condition (1): true\n"
          "condition (2): false\n"
          "condition (2'): false\n"
          "special: false\n");
    CHECK(run_command("special", crossing, structured()) ==
          "condition1: true\n"
          "condition2: false\n"
          "condition2prime: false\n"
          "special: false\n");
}

TEST_CASE("normalize command output") {
    const Document crossing = parse_document("plat 4\nword 1\n");
    CHECK(run_command("normalize", crossing) ==
          "moves: II'@1\n"
          "word: 1 1\n");
    CHECK(run_command("normalize", crossing, structured()) ==
          "moves: II'@1\n"
          "word: 1 1\n");

    CommandOptions emit;
    emit.emit_normalized = true;
    CHECK(run_command("normalize", crossing, emit) == "plat 4\nword 1 1\n");

    const Document special = parse_document("plat 4\nword 2 2\n");
    CHECK(run_command("normalize", special) ==
          "moves: (none)\n"
          "word: 2 2\n");
    CHECK(run_command("normalize", special, structured()) ==
          "moves:\n"
          "word: 2 2\n");

    const Document unknot = parse_document("plat 2\nword\n");
    CHECK(run_command("normalize", unknot) ==
          "moves: (none)\n"
          "word: (empty)\n");

    // The emitted document carries an input covering through unchanged.
    const Document with_covering = parse_document("plat 4\nword 1\ncovering 3 1 1\n");
    CommandOptions emit2;
    emit2.emit_normalized = true;
    CHECK(run_command("normalize", with_covering, emit2) ==
          "plat 4\nword 1 1\ncovering 3 1 1\n");
}

TEST_CASE("classify command output") {
    const Document doc = parse_document("covering 5 2 3\n");
    CHECK(run_command("classify", doc) ==
          "class: almost-strictly-cyclic\n"
          "classes satisfied: almost-strictly-cyclic, meridian-cyclic, singly-cyclic, "
          "monodromy-cyclic\n");
    CHECK(run_command("classify", doc, structured()) ==
          "class: almost-strictly-cyclic\n"
          "classes_satisfied: almost-strictly-cyclic meridian-cyclic singly-cyclic "
          "monodromy-cyclic\n"
          "p: 5\n"
          "coefficients: 2 3\n");
}

TEST_CASE("cover-components command output") {
    const Document doc = parse_document("covering 6 2 3\n");
    CHECK(run_command("cover-components", doc) ==
          "component 1: 2\n"
          "component 2: 3\n");
    CHECK(run_command("cover-components", doc, structured()) ==
          "preimage_components: 2 3\n"
          "p: 6\n"
          "coefficients: 2 3\n");
}

TEST_CASE("genus command output") {
    const Document strict = parse_document("plat 4\nword 2 2\ncovering 5 2 2\n");
    CHECK(run_command("genus", strict) == "g ≤ (2-1)(5-1) = 4\n");
    CHECK(run_command("genus", strict, structured()) ==
          "genus_bound: 4\n"
          "p: 5\n");

    // Almost-strictly cyclic coverings are reoriented first.
    const Document almost = parse_document("plat 4\nword 2 2\ncovering 5 2 3\n");
    CHECK(run_command("genus", almost) == "g ≤ (2-1)(5-1) = 4\n");

    const Document meridian = parse_document("plat 4\nword 2 2\ncovering 7 1 2\n");
    CHECK_THROWS_AS(run_command("genus", meridian), DomainError);
}

TEST_CASE("decompose command output") {
    const Document doc = parse_document("plat 4\nword 2 2\n");
    CHECK(run_command("decompose", doc) ==
          "n: 2\n"
          "gluing word: 2 2\n");
    CHECK(run_command("decompose", doc, structured()) ==
          "n: 2\n"
          "word: 2 2\n");

    const Document unknot = parse_document("plat 2\nword\n");
    CHECK(run_command("decompose", unknot) ==
          "n: 1\n"
          "gluing word: (empty)\n");
}

TEST_CASE("render command output") {
    const Document hopf = parse_document("plat 4\nword 2 2\n");
    CHECK(run_command("render", hopf) ==
          " ___     ___\n"
          "|   |   |   |\n"
          "|   \\       |\n"
          "|   |   |   |\n"
          "|   \\       |\n"
          "|   |   |   |\n"
          "|___|   |___|\n");

    const Document mixed = parse_document("plat 4\nword 2 -2\n");
    CHECK(run_command("render", mixed) ==
          " ___     ___\n"
          "|   |   |   |\n"
          "|   \\       |\n"
          "|   |   |   |\n"
          "|       /   |\n"
          "|   |   |   |\n"
          "|___|   |___|\n");

    CommandOptions svg;
    svg.svg = true;
    const Document unknot = parse_document("plat 2\nword\n");
    CHECK(run_command("render", unknot, svg) ==
          "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"80\" height=\"80\" "
          "viewBox=\"0 0 80 80\">\n"
          "  <g stroke=\"#1a1a1a\" stroke-width=\"3\" fill=\"none\" "
          "stroke-linecap=\"round\">\n"
          "    <path d=\"M 20 40 A 20 20 0 0 1 60 40\"/>\n"
          "    <path d=\"M 20 40 A 20 20 0 0 0 60 40\"/>\n"
          "  </g>\n</svg>\n");

    // A crossing band renders the under strand as two interrupted segments.
    const std::string hopf_svg = run_command("render", hopf, svg);
    CHECK(hopf_svg.find("<line x1=\"60\" y1=\"40\" x2=\"100\" y2=\"80\"/>") !=
          std::string::npos);
}

TEST_CASE("commands reject missing document parts") {
    const Document plat_only = parse_document("plat 4\nword 2 2\n");
    const Document covering_only = parse_document("covering 5 2 3\n");
    CHECK_THROWS_AS(run_command("trace", covering_only), DomainError);
    CHECK_THROWS_AS(run_command("render", covering_only), DomainError);
    CHECK_THROWS_AS(run_command("classify", plat_only), DomainError);
    CHECK_THROWS_AS(run_command("genus", plat_only), DomainError);
    CHECK_THROWS_AS(run_command("genus", covering_only), DomainError);
    CHECK_THROWS_AS(run_command("cover-components", plat_only), DomainError);
    CHECK_THROWS_AS(run_command("nonsense", plat_only), ParseError);
}

TEST_CASE("command output is deterministic") {
    const Document doc = parse_document("plat 6\nword 2 -3 4 3 -2\ncovering 4 1 3\n");
    for (const char* command : {"trace", "special", "normalize", "decompose", "render"}) {
        CHECK(run_command(command, doc) == run_command(command, doc));
    }
    CHECK(run_command("classify", doc) == run_command("classify", doc));
}
