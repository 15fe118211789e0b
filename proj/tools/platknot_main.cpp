// platknot: command-line front end for the plat presentation library.
//
// Usage:
//   platknot <command> [--in FILE|-] [--format text|structured] [--svg]
//                      [--emit-normalized]
//
// The input document is read from --in (default "-", standard input).
// Exit codes: 0 success, 1 usage or parse error, 2 domain error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "platknot/commands.hpp"
#include "platknot/document.hpp"
#include "platknot/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsageOrParse = 1;
constexpr int kExitDomain = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw platknot::ParseError("cannot open input file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plat presentations of links: tracing, normalization to special "
                 "form, cyclic branched covering classification, and diagrams"};
    app.require_subcommand(1);

    struct SubcommandSpec {
        const char* name;
        const char* help;
        bool takes_svg;
        bool takes_emit_normalized;
    };
    static constexpr SubcommandSpec kSubcommands[] = {
        {"trace", "Trace link components of a plat", false, false},
        {"special", "Evaluate the special-plat conditions (1), (2), (2')", false, false},
        {"normalize", "Rewrite a plat into special form via moves I, I', II, II'", false,
         true},
        {"classify", "Classify a cyclic branched covering", false, false},
        {"cover-components", "Count preimage components per link component", false, false},
        {"genus", "Symmetric Heegaard genus bound (n-1)(p-1)", false, false},
        {"decompose", "Bridge-sphere decomposition data of a plat", false, false},
        {"render", "Draw the plat as ASCII art (or SVG with --svg)", true, false},
    };

    std::string in_path = "-";
    std::string format_name = "text";
    bool svg = false;
    bool emit_normalized = false;

    for (const auto& sub : kSubcommands) {
        CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
        cmd->add_option("--in", in_path, "Input document file, or - for stdin")
            ->capture_default_str();
        cmd->add_option("--format", format_name, "Output format")
            ->check(CLI::IsMember({"text", "structured"}))
            ->capture_default_str();
        if (sub.takes_svg) {
            cmd->add_flag("--svg", svg, "Emit SVG instead of ASCII");
        }
        if (sub.takes_emit_normalized) {
            cmd->add_flag("--emit-normalized", emit_normalized,
                          "Emit the normalized plat as an input document");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsageOrParse;
    }

    const std::string command = app.get_subcommands().front()->get_name();

    platknot::CommandOptions options;
    options.format = format_name == "structured" ? platknot::OutputFormat::Structured
                                                 : platknot::OutputFormat::Text;
    options.svg = svg;
    options.emit_normalized = emit_normalized;

    try {
        const std::string text = read_input(in_path);
        const platknot::Document doc = platknot::parse_document(text);
        std::cout << platknot::run_command(command, doc, options);
        return kExitOk;
    } catch (const platknot::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsageOrParse;
    } catch (const platknot::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitDomain;
    }
}
