#pragma once

#include <vector>

#include "solp/ast.hpp"
#include "solp/exec.hpp"

namespace solp {

struct VerifyResult {
    bool equal = false;
    std::vector<SocialInterpretation> direct;    // social-model enumeration
    std::vector<SocialInterpretation> projected; // oracle answer sets, projected
};

// Runs both routes: direct social-model enumeration, and translation plus
// answer-set search with base-atom projection. The two multisets must agree
// model for model.
VerifyResult verifyEquivalence(const Collection& c, const Caps& caps = {},
                               ExecMode mode = ExecMode::Parallel);

} // namespace solp
