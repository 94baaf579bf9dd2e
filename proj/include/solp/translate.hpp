#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "solp/ast.hpp"

namespace solp {

// ---------------------------------------------------------------------------
// Target language: normal rules plus one count-aggregate literal form
// ---------------------------------------------------------------------------

struct LpaAtom {
    enum class Kind { Base, Primed, Support, Fail, Rho, GAux };
    Kind kind = Kind::Base;
    Atom atom;             // Base / Primed / Support
    std::string programId; // owner label
    int programIndex = 0;  // 1-based collection index of the owner
    int ruleIndex = 0;     // Rho / GAux
    int scIndex = 0;       // Rho / GAux
    int gArg = 0;          // GAux instance argument

    friend bool operator==(const LpaAtom&, const LpaAtom&) = default;
    friend auto operator<=>(const LpaAtom&, const LpaAtom&) = default;

    // Emitted-name mangling. The "__" separator is reserved, so rendered
    // names cannot collide with each other for validated input.
    std::string render() const;
};

struct LpaLiteral {
    enum class Kind { Plain, Count };
    Kind kind = Kind::Plain;
    // Plain
    int atomId = -1;
    bool negated = false;
    // Count: lower <= #count{K : g(K), K != excluded} <= upper
    long long lower = 0;
    long long upper = 0;
    int excludedIndex = 0;        // owner's 1-based index
    int ruleIndex = 0, scIndex = 0; // the g-name
    std::string ownerId;
    std::vector<int> instanceIds; // atom ids of the materialized g(K) instances

    static LpaLiteral plain(int atomId, bool negated = false) {
        LpaLiteral l;
        l.atomId = atomId;
        l.negated = negated;
        return l;
    }
};

struct LpaRule {
    // tags drive the structured answer-set backend
    enum class Tag { GuessPos, GuessNeg, Derive, FailPair, ConstraintFail, ScGuess, ScCheck };
    Tag tag = Tag::Derive;
    int headId = -1;
    std::vector<LpaLiteral> body;
    int scDepth = 0; // ScGuess / ScCheck stratum
};

class LpaProgram {
public:
    int intern(const LpaAtom& a);
    int find(const LpaAtom& a) const; // -1 when absent
    const LpaAtom& atom(int id) const { return atoms_[id]; }
    int atomCount() const { return static_cast<int>(atoms_.size()); }
    const std::vector<LpaAtom>& atoms() const { return atoms_; }

    void addRule(LpaRule r) { rules_.push_back(std::move(r)); }
    const std::vector<LpaRule>& rules() const { return rules_; }
    std::vector<LpaRule>& rules() { return rules_; }

    int agentCount = 0; // declared index range 1..n

private:
    std::vector<LpaAtom> atoms_;
    std::map<LpaAtom, int> index_;
    std::vector<LpaRule> rules_;
};

class TranslationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Translation entry points
// ---------------------------------------------------------------------------

// Guess/check translation of one social condition of `owner` (1-based index
// into the collection), appended to out.
void translateSc(const SocialCondition& s, int ruleIndex, int scIndex, int ownerIndex,
                 const Collection& c, LpaProgram& out);

// Guess/check translation of every social condition of the whole collection.
LpaProgram translateCollectionScs(const Collection& c);

// Guess / derive / fail transform of one program (applied to its hat form),
// appended to out.
void gammaPrime(const Program& p, int programIndex, const Collection& c, LpaProgram& out);

// The merged program for the whole collection.
LpaProgram translateAll(const Collection& c);

// Deterministic DLV-compatible text.
std::string emitText(const LpaProgram& p);

// Re-read emitted text against the program's own atom table; used to detect
// emitter drift. Throws TranslationError on any mismatch.
void verifyEmittedText(const LpaProgram& p, const std::string& text);

} // namespace solp
