#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "solp/rational.hpp"

namespace solp {

// ---------------------------------------------------------------------------
// Atoms and literals
// ---------------------------------------------------------------------------

struct Atom {
    std::string predicate;
    std::vector<std::string> args; // ground constants only (identifier or integer text)

    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom&, const Atom&) = default;

    std::string toString() const;
};

struct Literal {
    Atom atom;
    bool negated = false; // negation as failure

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

// ---------------------------------------------------------------------------
// Selection-bound expressions: arithmetic over the agent count `n`
// ---------------------------------------------------------------------------

struct BoundExpr;
using BoundExprPtr = std::shared_ptr<const BoundExpr>;

struct BoundExpr {
    enum class Kind { Number, AgentCount, Add, Sub, Mul, Div };
    Kind kind = Kind::Number;
    Rational value;      // Number
    BoundExprPtr lhs, rhs;

    static BoundExprPtr number(Rational v);
    static BoundExprPtr agentCount();
    static BoundExprPtr binary(Kind k, BoundExprPtr l, BoundExprPtr r);

    Rational eval(long long n) const;
    std::string toString() const;
};

bool exprEqual(const BoundExprPtr& a, const BoundExprPtr& b);

// Evaluated cardinal bounds, 0 <= lower <= upper <= n-1.
struct Bounds {
    long long lower = 0;
    long long upper = 0;
    friend bool operator==(const Bounds&, const Bounds&) = default;
    friend auto operator<=>(const Bounds&, const Bounds&) = default;
};

// ---------------------------------------------------------------------------
// Selection conditions and social conditions
// ---------------------------------------------------------------------------

struct MemberSelection {
    std::string programId;
};

struct CardinalSelection {
    BoundExprPtr lower; // nullptr -> default 0
    BoundExprPtr upper; // nullptr -> default n-1
    // Filled by validation (resolveBounds against the collection's n).
    std::optional<Bounds> resolved;
};

struct Selection {
    std::variant<MemberSelection, CardinalSelection> sel;

    bool isMember() const { return std::holds_alternative<MemberSelection>(sel); }
    bool isCardinal() const { return std::holds_alternative<CardinalSelection>(sel); }
    const MemberSelection& member() const { return std::get<MemberSelection>(sel); }
    const CardinalSelection& cardinal() const { return std::get<CardinalSelection>(sel); }
    CardinalSelection& cardinal() { return std::get<CardinalSelection>(sel); }
};

bool selectionEqual(const Selection& a, const Selection& b);

struct SocialCondition {
    Selection cond;
    std::vector<Literal> content;        // nonempty
    std::vector<SocialCondition> skel;   // nested conditions, possibly empty

    bool simple() const { return skel.empty(); }
};

bool scEqual(const SocialCondition& a, const SocialCondition& b);

// ---------------------------------------------------------------------------
// Rules, programs, collections
// ---------------------------------------------------------------------------

struct BodyElement {
    struct Lit { Literal lit; };
    struct Sc { SocialCondition sc; bool negated = false; };
    std::variant<Lit, Sc> elem;

    bool isLiteral() const { return std::holds_alternative<Lit>(elem); }
    bool isSc() const { return std::holds_alternative<Sc>(elem); }
    const Literal& literal() const { return std::get<Lit>(elem).lit; }
    const Sc& sc() const { return std::get<Sc>(elem); }
};

bool bodyElementEqual(const BodyElement& a, const BodyElement& b);

struct Rule {
    enum class HeadKind { Plain, Okay, Constraint };
    HeadKind headKind = HeadKind::Plain;
    Atom head;                     // meaningful unless Constraint
    std::vector<BodyElement> body;

    bool isTolerance() const { return headKind == HeadKind::Okay; }
    bool isConstraint() const { return headKind == HeadKind::Constraint; }
    bool hasSc() const {
        for (const auto& e : body)
            if (e.isSc()) return true;
        return false;
    }
};

bool ruleEqual(const Rule& a, const Rule& b);

struct Program {
    std::string id;
    std::vector<Rule> rules;
};

bool programEqual(const Program& a, const Program& b);

struct Collection {
    std::vector<Program> programs;

    long long agentCount() const { return static_cast<long long>(programs.size()); }
    // Index of a program id, or -1.
    int indexOf(const std::string& id) const;
};

bool collectionEqual(const Collection& a, const Collection& b);

// ---------------------------------------------------------------------------
// Interpretations
// ---------------------------------------------------------------------------

using Interpretation = std::set<Atom>;

struct LabeledAtom {
    Atom atom;
    std::string programId;

    friend bool operator==(const LabeledAtom&, const LabeledAtom&) = default;
    friend auto operator<=>(const LabeledAtom&, const LabeledAtom&) = default;

    std::string toString() const { return atom.toString() + "@" + programId; }
};

using SocialInterpretation = std::set<LabeledAtom>;

std::string renderSet(const Interpretation& i);
std::string renderSet(const SocialInterpretation& i);

} // namespace solp
