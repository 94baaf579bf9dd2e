#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solp/ast.hpp"
#include "solp/exec.hpp"

namespace solp {

enum class QueryMode { SS, IS, SC, IC };

std::optional<QueryMode> queryModeFromString(const std::string& s);
std::string to_string(QueryMode m);

struct QueryVerdict {
    bool answer = false;
    // for credulous modes: a satisfying model; for skeptical modes that come
    // out false: a refuting model
    std::optional<SocialInterpretation> witness;
    std::vector<std::string> witnessPrograms; // programs carrying (or missing) the atom
};

// Decide one of the four reasoning modes over the enumerated social models.
QueryVerdict query(const Collection& c, const Atom& x, QueryMode mode, const Caps& caps = {},
                   ExecMode mode2 = ExecMode::Parallel);

// A COLP program contains only classical and okay rules: no social
// conditions, no constraints.
bool isColpProgram(const Program& p);

// Every rule gains one simple cardinal condition [n-1, n-1] over its
// (okay-stripped) head atom, placed in front of the original body.
Program sigmaTranslate(const Program& p, long long n);

// Common fixpoints of the hat-transformed programs, enumerated over the
// union vocabulary.
std::vector<Interpretation> jointFixpoints(const std::vector<Program>& ps, const Caps& caps = {},
                                           ExecMode mode = ExecMode::Parallel);

// Classical fixpoints of the hat transform of a single program.
std::vector<Interpretation> hatFixpoints(const Program& p, const Caps& caps = {},
                                         ExecMode mode = ExecMode::Parallel);

struct JfpReport {
    bool ok = false;
    std::string detail; // first failed sub-check, or empty
    std::vector<Interpretation> joint;
    std::vector<SocialInterpretation> socialModels;
};

// Executable form of the joint-fixpoint correspondence: translate the COLP
// collection, compute both sides independently, compare; the per-program
// fixpoint identity and the equal-projection property are checked on the
// way.
JfpReport checkJfpCorrespondence(const std::vector<Program>& ps, const Caps& caps = {},
                          ExecMode mode = ExecMode::Parallel);

} // namespace solp
