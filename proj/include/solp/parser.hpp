#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solp/ast.hpp"
#include "solp/diagnostics.hpp"

namespace solp {

/// A named chunk of source text; typically one .solp file.
struct SourceUnit {
    std::string name;
    std::string text;
};

struct ParseResult {
    std::optional<Collection> collection; // set iff no error diagnostics
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return collection.has_value(); }
};

/// Parse and validate a collection. Program order follows source order;
/// one unit may declare several #program sections.
ParseResult parseCollection(const std::vector<SourceUnit>& sources);

/// Convenience wrapper for a single inline text.
ParseResult parseCollectionText(const std::string& text, const std::string& name = "<input>");

/// Parse an atom written as `pred` or `pred(c1,...,ck)`.
std::optional<Atom> parseAtomText(const std::string& text);

/// Canonical text form. Re-parsing the output yields an equal collection;
/// resolved bounds are appended as trailing comments.
std::string printCollection(const Collection& c);

} // namespace solp
