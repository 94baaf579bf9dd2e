#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "solp/ast.hpp"
#include "solp/exec.hpp"

namespace solp {

// Precompiled view of a collection: per-program vocabularies (Var of the
// reduced hat program) and bit-coded rules. Social interpretations are
// per-program bitmasks over these vocabularies.
class CollectionIndex {
public:
    explicit CollectionIndex(const Collection& c);

    const Collection& collection() const { return *c_; }
    int programCount() const { return static_cast<int>(vocabs_.size()); }
    const std::vector<Atom>& vocab(int i) const { return vocabs_[i]; }

    using State = std::vector<std::uint64_t>;

    State toState(const SocialInterpretation& i) const;
    SocialInterpretation toSocial(const State& s) const;

    // Truth of a social condition for program `owner` within the active
    // program set (bitmask over program indices), w.r.t. the state.
    bool scTruth(const SocialCondition& s, int owner, std::uint64_t activeSet,
                 const State& state) const;

    // One application of the social immediate consequence operator.
    State stStep(const State& s) const;
    void stStepInto(const State& s, State& out) const;

    bool constraintsViolated(const State& s) const;
    bool isSocialModel(const State& s) const {
        State scratch;
        return isSocialModel(s, scratch);
    }
    // scratch variant for tight enumeration loops
    bool isSocialModel(const State& s, State& scratch) const {
        stStepInto(s, scratch);
        return scratch == s && !constraintsViolated(s);
    }

    bool literalTrueFor(const Literal& l, int program, const State& s) const;

private:
    struct CLit {
        int bit = -1; // -1: atom outside the program vocabulary
        bool negated = false;
    };
    struct CRule {
        Rule::HeadKind kind = Rule::HeadKind::Plain;
        int headBit = -1;
        std::vector<CLit> lits;
        std::vector<std::pair<const SocialCondition*, bool>> scs; // (sc, negated)
    };

    const Collection* c_;
    std::vector<std::vector<Atom>> vocabs_;
    std::vector<std::vector<CRule>> rules_;

    int bitOf(int program, const Atom& a) const;
};

struct EvalContext {
    const Collection* collection = nullptr;
    std::vector<std::string> activeSubset; // program ids; empty means all of C
    std::string evaluatingProgram;
    SocialInterpretation interpretation;
};

// Definition-level entry point used by tests and diagnostics.
bool scTruth(const SocialCondition& s, const EvalContext& ctx);

SocialInterpretation stStep(const Collection& c, const SocialInterpretation& i);

// Source of the per-program candidate states. Admissible states treat
// socially conditioned rules as assumptions, which makes the enumeration
// agree with the aggregate translation; the autonomous source is the
// definition-literal fixpoint set, which the joint-fixpoint correspondence
// is stated for.
enum class CandidateSource { Admissible, Autonomous };

// Exhaustive social-model enumeration over the candidate product.
// Canonically ordered.
std::vector<SocialInterpretation> enumerateSocialModels(
    const Collection& c, const Caps& caps = {}, ExecMode mode = ExecMode::Parallel,
    CandidateSource source = CandidateSource::Admissible);

// Every labelled atom is justified by a firing rule of its own program.
bool isSupported(const Collection& c, const SocialInterpretation& m);

} // namespace solp
