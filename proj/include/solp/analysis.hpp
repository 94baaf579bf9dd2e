#pragma once

#include <string>
#include <vector>

#include "solp/ast.hpp"
#include "solp/diagnostics.hpp"

namespace solp {

// All atoms occurring anywhere in the program: heads, okay-rule arguments,
// body literals, and SC contents at any nesting depth. okay() is a reserved
// wrapper, so only its argument counts as an atom of the vocabulary.
Interpretation varsOf(const Program& p);

// Nesting depth of every SC in a rule: top-level SCs have depth 0, members
// of skel(s) have depth(s)+1.
std::vector<const SocialCondition*> mscAtDepth(const Rule& r, int depth);

// A one-to-one numbering of the SCs of a program. Order: rule index
// ascending, then preorder within each rule. This numbering is what the
// translator's auxiliary names are derived from.
struct NumberedSc {
    const SocialCondition* sc;
    int ruleIndex; // 1-based
    int scIndex;   // 1-based preorder position within the rule
    int depth;
};
std::vector<NumberedSc> uscOf(const Program& p);

// Evaluate a cardinal selection against the collection size. Missing lower
// defaults to 0, missing upper to n-1; lower rounds up, upper rounds down,
// then both are clamped into [0, n-1]. Unsatisfiable bounds (l > h) are an
// error.
struct BoundsResult {
    bool ok = false;
    Bounds bounds;
    std::string error;
};
BoundsResult resolveBounds(const CardinalSelection& c, long long n);

// Well-formedness of a social condition: simple SCs are well-formed; a
// non-simple SC must be cardinal, with every nested cardinal well-formed and
// upper-bounded by the parent, and every nested member simple.
struct WellFormedResult {
    bool ok = false;
    std::string error;
};
WellFormedResult checkWellFormed(const SocialCondition& s, long long n);

// Full collection validation: distinct ids, reserved-name rules, member
// targets resolve, bounds resolvable, SCs well-formed, constraints nonempty.
// Resolved bounds are stored into the cardinal selections on success.
std::vector<Diagnostic> validateCollection(Collection& c);

} // namespace solp
