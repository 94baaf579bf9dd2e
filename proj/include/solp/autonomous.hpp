#pragma once

#include <set>
#include <vector>

#include "solp/ast.hpp"
#include "solp/exec.hpp"

namespace solp {

// Program with every social condition removed from rule bodies.
Program autonomousReduction(const Program& p);

// Tolerance rules okay(a) <- body become a <- a, body; everything else is
// untouched.
Program hatTransform(const Program& p);

// Var(A(P)) with okay wrappers replaced by their arguments.
Interpretation varStar(const Program& p);

// One application of the autonomous immediate consequence operator.
Interpretation atStep(const Program& p, const Interpretation& i);

// Exhaustive enumeration of the autonomous fixpoints: interpretations I over
// varStar(p) with atStep(p, I) = I and every constraint body (social
// conditions stripped) false w.r.t. I. Results in canonical order.
std::vector<Interpretation> enumerateAFP(const Program& p, const Caps& caps = {},
                                         ExecMode mode = ExecMode::Parallel);

// States an agent can hold before the collection is consulted: like the
// autonomous reduction, but a rule whose body mentions a social condition
// cannot fire on its own and becomes self-conditioned (head <- head, lits),
// the same shape the hat transform gives tolerance rules. Constraints that
// mention social conditions are deferred to the social level.
Program guardedReduction(const Program& p);

// Fixpoints of the guarded reduction; the per-program factor of the social
// candidate space.
std::vector<Interpretation> admissibleStates(const Program& p, const Caps& caps = {},
                                             ExecMode mode = ExecMode::Parallel);

// ---------------------------------------------------------------------------
// Shared ground-evaluation kernel (also used by the reasoning module)
// ---------------------------------------------------------------------------

// Bitmask evaluator for an SC-free program over a fixed vocabulary.
struct GroundEval {
    struct ERule {
        int head = -1; // -1 for constraints
        std::uint64_t pos = 0;
        std::uint64_t neg = 0;
        bool dead = false; // positive body atom outside the vocabulary
    };
    std::vector<Atom> vocab; // sorted
    std::vector<ERule> rules;

    int indexOf(const Atom& a) const;
    std::uint64_t step(std::uint64_t mask) const;
    bool blockedByConstraint(std::uint64_t mask) const;
    bool isFixpoint(std::uint64_t mask) const {
        return step(mask) == mask && !blockedByConstraint(mask);
    }

    Interpretation toInterpretation(std::uint64_t mask) const;
    std::uint64_t toMask(const Interpretation& i) const; // atoms outside vocab are ignored
};

// Evaluator over an explicit vocabulary; tolerance rules are given hat form.
// The program must be SC-free.
GroundEval makeGroundEval(const Program& scFree, const std::vector<Atom>& vocab);

// All fixpoint masks of the evaluator, canonically ordered. The shared scan
// behind enumerateAFP / admissibleStates / joint-fixpoint search.
std::vector<std::uint64_t> fixpointScan(const GroundEval& ev, ExecMode mode);

} // namespace solp
