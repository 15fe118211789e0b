#pragma once

#include <optional>
#include <string>

#include "platknot/covering.hpp"
#include "platknot/plat.hpp"

namespace platknot {

// A parsed input document.  A document describes a plat presentation, a
// covering specification, or both.  When both are present the covering's
// component count must match the number of link components of the plat;
// parse_document enforces that (it traces the plat) so a Document handed to a
// command is already consistent.
struct Document {
    std::optional<PlatPresentation> plat;
    std::optional<CoveringSpec> covering;
};

// Parses the text document format:
//
//   # comment
//   plat 4
//   word 2 2
//   covering 5 2 2
//
// Rules: '#' starts a comment (anywhere on a line); blank lines are skipped;
// `word` must follow a `plat` line; each directive may appear at most once;
// at least one of `plat`/`covering` must be present.  A `plat` line without a
// `word` line means an empty braid word.  Syntax and range problems raise
// ParseError with a 1-based line number; semantic problems detected by the
// constructed objects (e.g. covering coefficients sharing a factor with the
// degree) propagate as DomainError.
Document parse_document(const std::string& text);

// Serializes a document back to the text format.  Inverse of parse_document
// up to comments and whitespace: parse(emit(parse(text))) == parse(text).
std::string emit_document(const Document& doc);

}  // namespace platknot
