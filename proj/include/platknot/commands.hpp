#pragma once

#include <string>

#include "platknot/document.hpp"

namespace platknot {

enum class OutputFormat { Text, Structured };

struct CommandOptions {
    OutputFormat format = OutputFormat::Text;
    bool svg = false;              // render: emit SVG instead of ASCII
    bool emit_normalized = false;  // normalize: emit the normalized plat as a document
};

// Runs one command (trace, special, normalize, classify, cover-components,
// genus, decompose, render) against a parsed document and returns the full
// output text, newline-terminated.  Deterministic: the same document and
// options always produce byte-identical output.
//
// Unknown command names raise ParseError.  A document missing the part a
// command needs, and theorem-precondition failures (e.g. asking for the genus
// bound of a covering that is not strictly or almost-strictly cyclic), raise
// DomainError.
std::string run_command(const std::string& command, const Document& doc,
                        const CommandOptions& options = {});

}  // namespace platknot
