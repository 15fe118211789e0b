#include "platknot/document.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "platknot/errors.hpp"

namespace platknot {

namespace {

ParseError parse_error(int line_no, const std::string& what) {
    return ParseError("line " + std::to_string(line_no) + ": " + what);
}

// Splits a line into whitespace-separated tokens, dropping anything from '#'
// onward first.
std::vector<std::string> tokenize(std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            tokens.emplace_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

int parse_int(const std::string& token, int line_no) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw parse_error(line_no, "expected an integer, got '" + token + "'");
    }
    return value;
}

}  // namespace

Document parse_document(const std::string& text) {
    std::optional<int> strand_count;
    std::optional<std::vector<int>> letters;
    std::optional<CoveringSpec> covering;
    int plat_line = 0;  // line number of the `plat` directive, for back-references

    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        const std::string& directive = tokens[0];
        if (directive == "plat") {
            if (strand_count) {
                throw parse_error(line_no, "duplicate 'plat' directive");
            }
            if (tokens.size() != 2) {
                throw parse_error(line_no, "'plat' takes exactly one argument (the strand count)");
            }
            const int m = parse_int(tokens[1], line_no);
            if (m < 2 || m % 2 != 0) {
                throw parse_error(line_no,
                                  "strand count must be a positive even integer, got " +
                                      std::to_string(m));
            }
            strand_count = m;
            plat_line = line_no;
        } else if (directive == "word") {
            if (!strand_count) {
                throw parse_error(line_no, "'word' must come after a 'plat' directive");
            }
            if (letters) {
                throw parse_error(line_no, "duplicate 'word' directive");
            }
            std::vector<int> parsed;
            parsed.reserve(tokens.size() - 1);
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                const int e = parse_int(tokens[t], line_no);
                const int index = e < 0 ? -e : e;
                if (index < 1 || index > *strand_count - 1) {
                    throw parse_error(line_no, "letter " + std::to_string(e) +
                                                   " is out of range for " +
                                                   std::to_string(*strand_count) + " strands");
                }
                parsed.push_back(e);
            }
            letters = std::move(parsed);
        } else if (directive == "covering") {
            if (covering) {
                throw parse_error(line_no, "duplicate 'covering' directive");
            }
            if (tokens.size() < 3) {
                throw parse_error(
                    line_no, "'covering' needs a degree and at least one coefficient");
            }
            const int degree = parse_int(tokens[1], line_no);
            if (degree < 2) {
                throw parse_error(line_no, "covering degree must be at least 2, got " +
                                               std::to_string(degree));
            }
            std::vector<int> coefficients;
            coefficients.reserve(tokens.size() - 2);
            for (std::size_t t = 2; t < tokens.size(); ++t) {
                coefficients.push_back(parse_int(tokens[t], line_no));
            }
            // Semantic validation lives in the CoveringSpec constructor and
            // surfaces as DomainError, not ParseError.
            covering = CoveringSpec(degree, coefficients);
        } else {
            throw parse_error(line_no, "unknown directive '" + directive + "'");
        }
    }

    if (!strand_count && !covering) {
        throw ParseError("document contains neither a 'plat' nor a 'covering' directive");
    }
    (void)plat_line;

    Document doc;
    if (strand_count) {
        doc.plat =
            PlatPresentation(BraidWord(*strand_count, letters.value_or(std::vector<int>{})));
    }
    doc.covering = covering;

    if (doc.plat && doc.covering) {
        const int mu = trace_components(*doc.plat).mu;
        if (doc.covering->component_count() != mu) {
            throw DomainError("covering component count (" +
                              std::to_string(doc.covering->component_count()) +
                              ") does not match the plat's component count (" +
                              std::to_string(mu) + ")");
        }
    }
    return doc;
}

std::string emit_document(const Document& doc) {
    std::ostringstream out;
    if (doc.plat) {
        out << "plat " << doc.plat->strand_count() << "\n";
        out << "word";
        for (const int e : doc.plat->braid().letters()) {
            out << ' ' << e;
        }
        out << "\n";
    }
    if (doc.covering) {
        out << "covering " << doc.covering->degree();
        for (const int c : doc.covering->coefficients()) {
            out << ' ' << c;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace platknot
