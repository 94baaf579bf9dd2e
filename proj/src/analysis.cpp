#include "solp/analysis.hpp"

#include <functional>

namespace solp {

std::string Diagnostic::format() const {
    std::string s = severity == Severity::Error ? "error: " : "warning: ";
    if (!source.empty()) {
        std::string loc = source;
        if (line > 0) loc += ":" + std::to_string(line) + ":" + std::to_string(column);
        s = loc + ": " + s;
    }
    return s + message;
}

bool hasErrors(const std::vector<Diagnostic>& ds) {
    for (const auto& d : ds)
        if (d.severity == Diagnostic::Severity::Error) return true;
    return false;
}

namespace {

void collectScAtoms(const SocialCondition& s, Interpretation& out) {
    for (const auto& l : s.content) out.insert(l.atom);
    for (const auto& child : s.skel) collectScAtoms(child, out);
}

} // namespace

Interpretation varsOf(const Program& p) {
    Interpretation out;
    for (const auto& r : p.rules) {
        if (r.headKind != Rule::HeadKind::Constraint) out.insert(r.head);
        for (const auto& e : r.body) {
            if (e.isLiteral()) {
                out.insert(e.literal().atom);
            } else {
                collectScAtoms(e.sc().sc, out);
            }
        }
    }
    return out;
}

std::vector<const SocialCondition*> mscAtDepth(const Rule& r, int depth) {
    std::vector<const SocialCondition*> out;
    std::function<void(const SocialCondition&, int)> walk = [&](const SocialCondition& s, int d) {
        if (d == depth) {
            out.push_back(&s);
            return; // children are strictly deeper
        }
        for (const auto& child : s.skel) walk(child, d + 1);
    };
    for (const auto& e : r.body)
        if (e.isSc()) walk(e.sc().sc, 0);
    return out;
}

std::vector<NumberedSc> uscOf(const Program& p) {
    std::vector<NumberedSc> out;
    for (size_t ri = 0; ri < p.rules.size(); ++ri) {
        int scIndex = 0;
        std::function<void(const SocialCondition&, int)> walk = [&](const SocialCondition& s, int depth) {
            ++scIndex;
            out.push_back(NumberedSc{&s, static_cast<int>(ri) + 1, scIndex, depth});
            for (const auto& child : s.skel) walk(child, depth + 1);
        };
        for (const auto& e : p.rules[ri].body)
            if (e.isSc()) walk(e.sc().sc, 0);
    }
    return out;
}

BoundsResult resolveBounds(const CardinalSelection& c, long long n) {
    BoundsResult res;
    long long lo = 0;
    long long hi = n - 1;
    try {
        if (c.lower) lo = c.lower->eval(n).ceilInt();
        if (c.upper) hi = c.upper->eval(n).floorInt();
    } catch (const std::domain_error& e) {
        res.error = e.what();
        return res;
    }
    lo = std::max<long long>(0, std::min(lo, n - 1));
    hi = std::max<long long>(0, std::min(hi, n - 1));
    if (lo > hi) {
        res.error = "unsatisfiable bounds: lower " + std::to_string(lo) +
                    " exceeds upper " + std::to_string(hi);
        return res;
    }
    res.ok = true;
    res.bounds = Bounds{lo, hi};
    return res;
}

namespace {

std::string describeSc(const SocialCondition& s) {
    if (s.cond.isMember()) return "[" + s.cond.member().programId + "]{...}";
    const auto& c = s.cond.cardinal();
    std::string lo = c.lower ? c.lower->toString() : "";
    std::string hi = c.upper ? c.upper->toString() : "";
    return "[" + lo + ", " + hi + "]{...}";
}

} // namespace

WellFormedResult checkWellFormed(const SocialCondition& s, long long n) {
    WellFormedResult res;
    if (s.simple()) {
        res.ok = true;
        return res;
    }
    if (s.cond.isMember()) {
        res.error = "non-simple SC " + describeSc(s) + " has a member selection condition";
        return res;
    }
    auto parent = resolveBounds(s.cond.cardinal(), n);
    if (!parent.ok) {
        res.error = parent.error;
        return res;
    }
    for (const auto& child : s.skel) {
        if (child.cond.isMember()) {
            if (!child.simple()) {
                res.error = "nested member SC " + describeSc(child) + " is not simple";
                return res;
            }
            continue;
        }
        auto childBounds = resolveBounds(child.cond.cardinal(), n);
        if (!childBounds.ok) {
            res.error = childBounds.error;
            return res;
        }
        if (childBounds.bounds.upper > parent.bounds.upper) {
            res.error = "nested SC " + describeSc(child) + " exceeds the enclosing bounds of " +
                        describeSc(s) + " (" + std::to_string(childBounds.bounds.upper) + " > " +
                        std::to_string(parent.bounds.upper) + ")";
            return res;
        }
        auto sub = checkWellFormed(child, n);
        if (!sub.ok) return sub;
    }
    res.ok = true;
    return res;
}

namespace {

void validateSc(SocialCondition& s, const Collection& c, const std::string& where,
                std::vector<Diagnostic>& diags) {
    long long n = c.agentCount();
    if (s.content.empty()) {
        diags.push_back({Diagnostic::Severity::Error,
                         where + ": social condition has empty content", "", 0, 0});
    }
    if (s.cond.isMember()) {
        const auto& target = s.cond.member().programId;
        if (c.indexOf(target) < 0) {
            diags.push_back({Diagnostic::Severity::Error,
                             where + ": member selection [" + target +
                                 "] names no program in the collection",
                             "", 0, 0});
        }
    } else {
        auto r = resolveBounds(s.cond.cardinal(), n);
        if (!r.ok) {
            diags.push_back({Diagnostic::Severity::Error, where + ": " + r.error, "", 0, 0});
        } else {
            s.cond.cardinal().resolved = r.bounds;
        }
    }
    for (auto& child : s.skel) validateSc(child, c, where, diags);
}

} // namespace

std::vector<Diagnostic> validateCollection(Collection& c) {
    std::vector<Diagnostic> diags;
    if (c.programs.empty()) {
        diags.push_back({Diagnostic::Severity::Error, "collection has no programs", "", 0, 0});
        return diags;
    }
    long long n = c.agentCount();
    for (size_t i = 0; i < c.programs.size(); ++i) {
        for (size_t j = i + 1; j < c.programs.size(); ++j) {
            if (c.programs[i].id == c.programs[j].id) {
                diags.push_back({Diagnostic::Severity::Error,
                                 "duplicate program id '" + c.programs[i].id + "'", "", 0, 0});
            }
        }
    }
    for (auto& p : c.programs) {
        for (size_t ri = 0; ri < p.rules.size(); ++ri) {
            auto& r = p.rules[ri];
            std::string where = p.id + ", rule " + std::to_string(ri + 1);
            if (r.isConstraint() && r.body.empty()) {
                diags.push_back({Diagnostic::Severity::Error,
                                 where + ": constraint with empty body", "", 0, 0});
            }
            for (auto& e : r.body) {
                if (!e.isSc()) continue;
                auto& scElem = std::get<BodyElement::Sc>(e.elem);
                validateSc(scElem.sc, c, where, diags);
                auto wf = checkWellFormed(scElem.sc, n);
                if (!wf.ok) {
                    diags.push_back({Diagnostic::Severity::Error, where + ": " + wf.error, "", 0, 0});
                }
            }
        }
    }
    return diags;
}

} // namespace solp
