#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "solp/analysis.hpp"
#include "solp/ast.hpp"
#include "solp/parser.hpp"

namespace th {

inline solp::Atom at(std::string p) { return solp::Atom{std::move(p), {}}; }

inline solp::Literal lit(std::string p, bool neg = false) { return solp::Literal{at(std::move(p)), neg}; }

inline solp::BodyElement bodyLit(std::string p, bool neg = false) {
    solp::BodyElement e;
    e.elem = solp::BodyElement::Lit{lit(std::move(p), neg)};
    return e;
}

inline solp::BodyElement bodySc(solp::SocialCondition sc, bool neg = false) {
    solp::BodyElement e;
    e.elem = solp::BodyElement::Sc{std::move(sc), neg};
    return e;
}

inline solp::SocialCondition cardinalSc(long long lo, long long hi,
                                        std::vector<solp::Literal> content,
                                        std::vector<solp::SocialCondition> skel = {}) {
    solp::SocialCondition sc;
    solp::CardinalSelection c;
    if (lo >= 0) c.lower = solp::BoundExpr::number(solp::Rational(lo));
    if (hi >= 0) c.upper = solp::BoundExpr::number(solp::Rational(hi));
    sc.cond.sel = std::move(c);
    sc.content = std::move(content);
    sc.skel = std::move(skel);
    return sc;
}

inline solp::SocialCondition memberSc(std::string target, std::vector<solp::Literal> content) {
    solp::SocialCondition sc;
    sc.cond.sel = solp::MemberSelection{std::move(target)};
    sc.content = std::move(content);
    return sc;
}

inline solp::Rule fact(std::string head) {
    solp::Rule r;
    r.head = at(std::move(head));
    return r;
}

inline solp::Rule rule(std::string head, std::vector<solp::BodyElement> body) {
    solp::Rule r;
    r.head = at(std::move(head));
    r.body = std::move(body);
    return r;
}

inline solp::Rule okayRule(std::string head, std::vector<solp::BodyElement> body = {}) {
    solp::Rule r;
    r.headKind = solp::Rule::HeadKind::Okay;
    r.head = at(std::move(head));
    r.body = std::move(body);
    return r;
}

inline solp::Rule constraint(std::vector<solp::BodyElement> body) {
    solp::Rule r;
    r.headKind = solp::Rule::HeadKind::Constraint;
    r.body = std::move(body);
    return r;
}

inline solp::Collection parseOrDie(const std::string& text) {
    auto res = solp::parseCollectionText(text);
    if (!res.ok()) {
        std::string msg = "parse failed:";
        for (const auto& d : res.diagnostics) msg += "\n  " + d.format();
        throw std::runtime_error(msg);
    }
    return *res.collection;
}

inline solp::Collection loadGolden(const std::string& name) {
    std::ifstream in(std::string(SOLP_GOLDEN_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing golden file " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return parseOrDie(ss.str());
}

inline std::string goldenText(const std::string& name) {
    std::ifstream in(std::string(SOLP_GOLDEN_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing golden file " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Validate a hand-built collection, resolving its bounds in place.
inline void validateOrDie(solp::Collection& c) {
    auto diags = solp::validateCollection(c);
    if (solp::hasErrors(diags)) {
        std::string msg = "validation failed:";
        for (const auto& d : diags) msg += "\n  " + d.format();
        throw std::runtime_error(msg);
    }
}

inline solp::SocialInterpretation social(
    std::initializer_list<std::pair<const char*, const char*>> atoms) {
    solp::SocialInterpretation out;
    for (const auto& [a, p] : atoms) out.insert({at(a), p});
    return out;
}

} // namespace th
