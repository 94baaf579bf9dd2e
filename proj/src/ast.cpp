#include "solp/ast.hpp"

#include <algorithm>
#include <sstream>

namespace solp {

std::string Atom::toString() const {
    if (args.empty()) return predicate;
    std::string s = predicate;
    s += '(';
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) s += ',';
        s += args[i];
    }
    s += ')';
    return s;
}

BoundExprPtr BoundExpr::number(Rational v) {
    auto e = std::make_shared<BoundExpr>();
    e->kind = Kind::Number;
    e->value = v;
    return e;
}

BoundExprPtr BoundExpr::agentCount() {
    auto e = std::make_shared<BoundExpr>();
    e->kind = Kind::AgentCount;
    return e;
}

BoundExprPtr BoundExpr::binary(Kind k, BoundExprPtr l, BoundExprPtr r) {
    auto e = std::make_shared<BoundExpr>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

Rational BoundExpr::eval(long long n) const {
    switch (kind) {
        case Kind::Number: return value;
        case Kind::AgentCount: return Rational(n);
        case Kind::Add: return lhs->eval(n) + rhs->eval(n);
        case Kind::Sub: return lhs->eval(n) - rhs->eval(n);
        case Kind::Mul: return lhs->eval(n) * rhs->eval(n);
        case Kind::Div: return lhs->eval(n) / rhs->eval(n);
    }
    return {};
}

namespace {

int precedenceOf(BoundExpr::Kind k) {
    switch (k) {
        case BoundExpr::Kind::Add:
        case BoundExpr::Kind::Sub: return 1;
        case BoundExpr::Kind::Mul:
        case BoundExpr::Kind::Div: return 2;
        default: return 3;
    }
}

void printExpr(const BoundExpr& e, int parentPrec, bool rightChild, std::string& out) {
    switch (e.kind) {
        case BoundExpr::Kind::Number: {
            if (e.value.den == 1) {
                out += std::to_string(e.value.num);
            } else {
                // only produced by decimal literals; render back as decimal
                std::ostringstream os;
                os << e.value.toDouble();
                out += os.str();
            }
            return;
        }
        case BoundExpr::Kind::AgentCount: out += 'n'; return;
        default: break;
    }
    int prec = precedenceOf(e.kind);
    // left-assoc operators: the right child needs parens at equal precedence
    bool parens = prec < parentPrec || (prec == parentPrec && rightChild);
    if (parens) out += '(';
    printExpr(*e.lhs, prec, false, out);
    switch (e.kind) {
        case BoundExpr::Kind::Add: out += '+'; break;
        case BoundExpr::Kind::Sub: out += '-'; break;
        case BoundExpr::Kind::Mul: out += '*'; break;
        case BoundExpr::Kind::Div: out += '/'; break;
        default: break;
    }
    printExpr(*e.rhs, prec, true, out);
    if (parens) out += ')';
}

} // namespace

std::string BoundExpr::toString() const {
    std::string out;
    printExpr(*this, 0, false, out);
    return out;
}

bool exprEqual(const BoundExprPtr& a, const BoundExprPtr& b) {
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case BoundExpr::Kind::Number: return a->value == b->value;
        case BoundExpr::Kind::AgentCount: return true;
        default: return exprEqual(a->lhs, b->lhs) && exprEqual(a->rhs, b->rhs);
    }
}

bool selectionEqual(const Selection& a, const Selection& b) {
    if (a.isMember() != b.isMember()) return false;
    if (a.isMember()) return a.member().programId == b.member().programId;
    const auto& ca = a.cardinal();
    const auto& cb = b.cardinal();
    return exprEqual(ca.lower, cb.lower) && exprEqual(ca.upper, cb.upper) &&
           ca.resolved == cb.resolved;
}

bool scEqual(const SocialCondition& a, const SocialCondition& b) {
    if (!selectionEqual(a.cond, b.cond)) return false;
    if (a.content != b.content) return false;
    if (a.skel.size() != b.skel.size()) return false;
    for (size_t i = 0; i < a.skel.size(); ++i)
        if (!scEqual(a.skel[i], b.skel[i])) return false;
    return true;
}

bool bodyElementEqual(const BodyElement& a, const BodyElement& b) {
    if (a.isLiteral() != b.isLiteral()) return false;
    if (a.isLiteral()) return a.literal() == b.literal();
    return a.sc().negated == b.sc().negated && scEqual(a.sc().sc, b.sc().sc);
}

bool ruleEqual(const Rule& a, const Rule& b) {
    if (a.headKind != b.headKind) return false;
    if (a.headKind != Rule::HeadKind::Constraint && a.head != b.head) return false;
    if (a.body.size() != b.body.size()) return false;
    for (size_t i = 0; i < a.body.size(); ++i)
        if (!bodyElementEqual(a.body[i], b.body[i])) return false;
    return true;
}

bool programEqual(const Program& a, const Program& b) {
    if (a.id != b.id || a.rules.size() != b.rules.size()) return false;
    for (size_t i = 0; i < a.rules.size(); ++i)
        if (!ruleEqual(a.rules[i], b.rules[i])) return false;
    return true;
}

bool collectionEqual(const Collection& a, const Collection& b) {
    if (a.programs.size() != b.programs.size()) return false;
    for (size_t i = 0; i < a.programs.size(); ++i)
        if (!programEqual(a.programs[i], b.programs[i])) return false;
    return true;
}

int Collection::indexOf(const std::string& id) const {
    for (size_t i = 0; i < programs.size(); ++i)
        if (programs[i].id == id) return static_cast<int>(i);
    return -1;
}

std::string renderSet(const Interpretation& i) {
    std::string s = "{";
    bool first = true;
    for (const auto& a : i) {
        if (!first) s += ", ";
        first = false;
        s += a.toString();
    }
    s += "}";
    return s;
}

std::string renderSet(const SocialInterpretation& i) {
    std::vector<LabeledAtom> sorted(i.begin(), i.end());
    std::sort(sorted.begin(), sorted.end(), [](const LabeledAtom& x, const LabeledAtom& y) {
        return std::tie(x.programId, x.atom) < std::tie(y.programId, y.atom);
    });
    std::string s = "{";
    bool first = true;
    for (const auto& a : sorted) {
        if (!first) s += ", ";
        first = false;
        s += a.toString();
    }
    s += "}";
    return s;
}

} // namespace solp
