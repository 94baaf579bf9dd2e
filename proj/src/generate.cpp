#include "solp/generate.hpp"

#include "solp/analysis.hpp"

namespace solp::testgen {

namespace {

int pick(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(std::mt19937& rng, int percent) { return pick(rng, 1, 100) <= percent; }

Atom poolAtom(std::mt19937& rng, int maxAtoms) {
    static const char* names[] = {"a", "b", "c", "d", "e", "f"};
    return Atom{names[pick(rng, 0, maxAtoms - 1)], {}};
}

Literal randomLiteral(std::mt19937& rng, int maxAtoms, int negPercent = 30) {
    return Literal{poolAtom(rng, maxAtoms), chance(rng, negPercent)};
}

BoundExprPtr randomLowerBound(std::mt19937& rng, int n) {
    switch (pick(rng, 1, 4)) {
        case 1: // n/2-1
            return BoundExpr::binary(BoundExpr::Kind::Sub,
                                     BoundExpr::binary(BoundExpr::Kind::Div,
                                                       BoundExpr::agentCount(),
                                                       BoundExpr::number(Rational(2))),
                                     BoundExpr::number(Rational(1)));
        case 2: // 0.33*n
            return BoundExpr::binary(BoundExpr::Kind::Mul, BoundExpr::number(Rational(33, 100)),
                                     BoundExpr::agentCount());
        case 3: // n-2
            return BoundExpr::binary(BoundExpr::Kind::Sub, BoundExpr::agentCount(),
                                     BoundExpr::number(Rational(2)));
        default:
            return BoundExpr::number(Rational(pick(rng, 0, n - 1)));
    }
}

SocialCondition randomSc(std::mt19937& rng, const GenOptions& opt, int n, int nesting) {
    SocialCondition sc;
    if (chance(rng, 40)) {
        sc.cond.sel = MemberSelection{"p" + std::to_string(pick(rng, 1, n))};
    } else {
        CardinalSelection card;
        if (chance(rng, 70)) card.lower = randomLowerBound(rng, n);
        if (opt.allowCappedUpper && chance(rng, 50))
            card.upper = BoundExpr::number(Rational(pick(rng, 0, n - 1)));
        sc.cond.sel = std::move(card);
        if (nesting > 0 && chance(rng, 60)) {
            sc.skel.push_back(randomSc(rng, opt, n, 0)); // nested members stay simple
        }
    }
    int contentSize = pick(rng, 1, 2);
    for (int i = 0; i < contentSize; ++i) sc.content.push_back(randomLiteral(rng, opt.maxAtoms));
    if (sc.cond.isMember()) sc.skel.clear();
    return sc;
}

} // namespace

Collection randomCollection(std::mt19937& rng, const GenOptions& opt) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        Collection c;
        int n = pick(rng, 1, opt.maxPrograms);
        for (int i = 1; i <= n; ++i) c.programs.push_back(Program{"p" + std::to_string(i), {}});
        for (auto& p : c.programs) {
            int scBudget = opt.maxScs;
            int ruleCount = pick(rng, 0, opt.maxRules);
            for (int r = 0; r < ruleCount; ++r) {
                Rule rule;
                int kindRoll = pick(rng, 1, 100);
                if (opt.allowConstraints && kindRoll <= 15) {
                    rule.headKind = Rule::HeadKind::Constraint;
                } else if (opt.allowOkay && kindRoll <= 40) {
                    rule.headKind = Rule::HeadKind::Okay;
                    rule.head = poolAtom(rng, opt.maxAtoms);
                } else {
                    rule.headKind = Rule::HeadKind::Plain;
                    rule.head = poolAtom(rng, opt.maxAtoms);
                }
                int lits = pick(rng, rule.isConstraint() ? 1 : 0, 2);
                for (int k = 0; k < lits; ++k) {
                    BodyElement e;
                    e.elem = BodyElement::Lit{randomLiteral(rng, opt.maxAtoms)};
                    rule.body.push_back(std::move(e));
                }
                while (scBudget > 0 && chance(rng, 35)) {
                    --scBudget;
                    BodyElement e;
                    e.elem = BodyElement::Sc{
                        randomSc(rng, opt, n, opt.maxNesting), chance(rng, 20)};
                    rule.body.push_back(std::move(e));
                }
                p.rules.push_back(std::move(rule));
            }
        }
        auto diags = validateCollection(c);
        if (!hasErrors(diags)) return c;
    }
    // degenerate fallback; validation of a bare program cannot fail
    Collection c;
    c.programs.push_back(Program{"p1", {}});
    auto diags = validateCollection(c);
    (void)diags;
    return c;
}

Program randomColp(std::mt19937& rng, const std::string& id, int maxAtoms, int maxRules) {
    Program p;
    p.id = id;
    int ruleCount = pick(rng, 0, maxRules);
    for (int r = 0; r < ruleCount; ++r) {
        Rule rule;
        rule.headKind = chance(rng, 35) ? Rule::HeadKind::Okay : Rule::HeadKind::Plain;
        rule.head = poolAtom(rng, maxAtoms);
        int lits = pick(rng, 0, 2);
        for (int k = 0; k < lits; ++k) {
            BodyElement e;
            e.elem = BodyElement::Lit{randomLiteral(rng, maxAtoms)};
            rule.body.push_back(std::move(e));
        }
        p.rules.push_back(std::move(rule));
    }
    return p;
}

} // namespace solp::testgen
