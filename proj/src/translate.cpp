#include "solp/translate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "solp/analysis.hpp"
#include "solp/autonomous.hpp"

namespace solp {

std::string LpaAtom::render() const {
    auto withArgs = [&](std::string name) {
        if (atom.args.empty()) return name;
        name += '(';
        for (size_t i = 0; i < atom.args.size(); ++i) {
            if (i) name += ',';
            name += atom.args[i];
        }
        name += ')';
        return name;
    };
    switch (kind) {
        case Kind::Base: return withArgs(atom.predicate + "__" + programId);
        case Kind::Primed: return withArgs("n" + atom.predicate + "__" + programId);
        case Kind::Support: return withArgs("s_" + atom.predicate + "__" + programId);
        case Kind::Fail: return "fail__" + programId;
        case Kind::Rho:
            return "rho_" + std::to_string(ruleIndex) + "_" + std::to_string(scIndex) + "__" +
                   programId;
        case Kind::GAux:
            return "g_" + std::to_string(ruleIndex) + "_" + std::to_string(scIndex) + "__" +
                   programId + "(" + std::to_string(gArg) + ")";
    }
    return {};
}

int LpaProgram::intern(const LpaAtom& a) {
    auto it = index_.find(a);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(atoms_.size());
    atoms_.push_back(a);
    index_.emplace(a, id);
    return id;
}

int LpaProgram::find(const LpaAtom& a) const {
    auto it = index_.find(a);
    return it == index_.end() ? -1 : it->second;
}

namespace {

LpaAtom baseAtom(const Atom& a, const Collection& c, int programIndex) {
    LpaAtom out;
    out.kind = LpaAtom::Kind::Base;
    out.atom = a;
    out.programId = c.programs[programIndex - 1].id;
    out.programIndex = programIndex;
    return out;
}

LpaAtom auxAtom(LpaAtom::Kind kind, int ruleIndex, int scIndex, const Collection& c,
                int programIndex, int gArg = 0) {
    LpaAtom out;
    out.kind = kind;
    out.programId = c.programs[programIndex - 1].id;
    out.programIndex = programIndex;
    out.ruleIndex = ruleIndex;
    out.scIndex = scIndex;
    out.gArg = gArg;
    return out;
}

// Guessable vocabularies, used to prune guess rules whose positive body
// atoms can never be derived.
std::vector<std::set<Atom>> baseVocabularies(const Collection& c) {
    std::vector<std::set<Atom>> out;
    out.reserve(c.programs.size());
    for (const auto& p : c.programs) out.push_back(varStar(p));
    return out;
}

struct ScTranslator {
    const Collection& c;
    const std::vector<std::set<Atom>>& vocab;
    LpaProgram& out;
    int ownerIndex; // 1-based
    int ruleIndex;

    void emit(const SocialCondition& s, int scIndex, int depth, std::vector<LpaRule>& guesses,
              std::vector<LpaRule>& checks) {
        if (s.cond.isMember()) {
            int k = c.indexOf(s.cond.member().programId) + 1;
            LpaRule guess;
            guess.tag = LpaRule::Tag::ScGuess;
            guess.scDepth = depth;
            bool dead = false;
            std::vector<LpaLiteral> body;
            for (const auto& l : s.content) {
                if (!l.negated && !vocab[k - 1].count(l.atom)) { dead = true; break; }
                if (l.negated && !vocab[k - 1].count(l.atom)) continue; // vacuously true
                body.push_back(
                    LpaLiteral::plain(out.intern(baseAtom(l.atom, c, k)), l.negated));
            }
            int gId = out.intern(auxAtom(LpaAtom::Kind::GAux, ruleIndex, scIndex, c, ownerIndex, k));
            if (!dead) {
                guess.headId = gId;
                guess.body = std::move(body);
                guesses.push_back(std::move(guess));
            }
            LpaRule check;
            check.tag = LpaRule::Tag::ScCheck;
            check.scDepth = depth;
            check.headId = out.intern(auxAtom(LpaAtom::Kind::Rho, ruleIndex, scIndex, c, ownerIndex));
            check.body.push_back(LpaLiteral::plain(gId));
            checks.push_back(std::move(check));
            return;
        }

        // cardinal: one guess rule per other agent, then the count check
        const auto& card = s.cond.cardinal();
        Bounds b = card.resolved.value_or(Bounds{0, c.agentCount() - 1});
        int childIndex = scIndex;
        std::vector<int> childRhoIds;
        std::vector<std::pair<const SocialCondition*, int>> children;
        for (const auto& child : s.skel) {
            childIndex += 1;
            children.emplace_back(&child, childIndex);
            childRhoIds.push_back(
                out.intern(auxAtom(LpaAtom::Kind::Rho, ruleIndex, childIndex, c, ownerIndex)));
            childIndex += scSpan(child) - 1;
        }

        LpaLiteral count;
        count.kind = LpaLiteral::Kind::Count;
        count.lower = b.lower;
        count.upper = b.upper;
        count.excludedIndex = ownerIndex;
        count.ruleIndex = ruleIndex;
        count.scIndex = scIndex;
        count.ownerId = c.programs[ownerIndex - 1].id;

        for (int i = 1; i <= static_cast<int>(c.programs.size()); ++i) {
            if (i == ownerIndex) continue;
            bool dead = false;
            std::vector<LpaLiteral> body;
            for (const auto& l : s.content) {
                if (!l.negated && !vocab[i - 1].count(l.atom)) { dead = true; break; }
                if (l.negated && !vocab[i - 1].count(l.atom)) continue;
                body.push_back(
                    LpaLiteral::plain(out.intern(baseAtom(l.atom, c, i)), l.negated));
            }
            if (dead) continue;
            for (int rhoId : childRhoIds) body.push_back(LpaLiteral::plain(rhoId));
            int gId =
                out.intern(auxAtom(LpaAtom::Kind::GAux, ruleIndex, scIndex, c, ownerIndex, i));
            count.instanceIds.push_back(gId);
            LpaRule guess;
            guess.tag = LpaRule::Tag::ScGuess;
            guess.scDepth = depth;
            guess.headId = gId;
            guess.body = std::move(body);
            guesses.push_back(std::move(guess));
        }

        LpaRule check;
        check.tag = LpaRule::Tag::ScCheck;
        check.scDepth = depth;
        check.headId = out.intern(auxAtom(LpaAtom::Kind::Rho, ruleIndex, scIndex, c, ownerIndex));
        check.body.push_back(std::move(count));
        checks.push_back(std::move(check));

        for (const auto& [child, idx] : children) emit(*child, idx, depth + 1, guesses, checks);
    }

    // number of preorder slots an SC occupies (itself plus nested ones)
    static int scSpan(const SocialCondition& s) {
        int span = 1;
        for (const auto& child : s.skel) span += scSpan(child);
        return span;
    }
};

} // namespace

void translateSc(const SocialCondition& s, int ruleIndex, int scIndex, int ownerIndex,
                 const Collection& c, LpaProgram& out) {
    auto vocab = baseVocabularies(c);
    ScTranslator tr{c, vocab, out, ownerIndex, ruleIndex};
    std::vector<LpaRule> guesses, checks;
    tr.emit(s, scIndex, 0, guesses, checks);
    for (auto& r : guesses) out.addRule(std::move(r));
    for (auto& r : checks) out.addRule(std::move(r));
}

namespace {

void translateProgramScs(const Collection& c, int programIndex,
                         const std::vector<std::set<Atom>>& vocab, LpaProgram& out) {
    const auto& p = c.programs[programIndex - 1];
    for (size_t ri = 0; ri < p.rules.size(); ++ri) {
        int scIndex = 0;
        for (const auto& e : p.rules[ri].body) {
            if (!e.isSc()) continue;
            ScTranslator tr{c, vocab, out, programIndex, static_cast<int>(ri) + 1};
            std::vector<LpaRule> guesses, checks;
            tr.emit(e.sc().sc, scIndex + 1, 0, guesses, checks);
            for (auto& r : guesses) out.addRule(std::move(r));
            for (auto& r : checks) out.addRule(std::move(r));
            scIndex += ScTranslator::scSpan(e.sc().sc);
        }
    }
}

} // namespace

LpaProgram translateCollectionScs(const Collection& c) {
    LpaProgram out;
    out.agentCount = static_cast<int>(c.programs.size());
    auto vocab = baseVocabularies(c);
    for (int i = 1; i <= static_cast<int>(c.programs.size()); ++i)
        translateProgramScs(c, i, vocab, out);
    return out;
}

namespace {

// Vocabulary of the reduced hat program in first-occurrence order.
std::vector<Atom> occurrenceVocab(const Program& hat) {
    std::vector<Atom> out;
    std::set<Atom> seen;
    auto add = [&](const Atom& a) {
        if (seen.insert(a).second) out.push_back(a);
    };
    for (const auto& r : hat.rules) {
        if (!r.isConstraint()) add(r.head);
        for (const auto& e : r.body)
            if (e.isLiteral()) add(e.literal().atom);
    }
    return out;
}

} // namespace

void gammaPrime(const Program& p, int programIndex, const Collection& c, LpaProgram& out) {
    Program hat = hatTransform(p);
    auto vocab = occurrenceVocab(autonomousReduction(hat));

    std::vector<int> baseIds, primedIds, supportIds;
    for (const auto& a : vocab) {
        LpaAtom base = baseAtom(a, c, programIndex);
        LpaAtom primed = base;
        primed.kind = LpaAtom::Kind::Primed;
        LpaAtom support = base;
        support.kind = LpaAtom::Kind::Support;
        baseIds.push_back(out.intern(base));
        primedIds.push_back(out.intern(primed));
        supportIds.push_back(out.intern(support));
    }
    int failId = out.intern(auxAtom(LpaAtom::Kind::Fail, 0, 0, c, programIndex));

    for (size_t i = 0; i < vocab.size(); ++i) {
        LpaRule pos;
        pos.tag = LpaRule::Tag::GuessPos;
        pos.headId = baseIds[i];
        pos.body.push_back(LpaLiteral::plain(primedIds[i], true));
        out.addRule(std::move(pos));
        LpaRule neg;
        neg.tag = LpaRule::Tag::GuessNeg;
        neg.headId = primedIds[i];
        neg.body.push_back(LpaLiteral::plain(baseIds[i], true));
        out.addRule(std::move(neg));
    }

    auto bitOf = [&](const Atom& a) {
        for (size_t i = 0; i < vocab.size(); ++i)
            if (vocab[i] == a) return static_cast<int>(i);
        return -1;
    };

    for (size_t ri = 0; ri < hat.rules.size(); ++ri) {
        const auto& r = hat.rules[ri];
        LpaRule lr;
        std::vector<LpaLiteral> body;
        int scIndex = 0;
        for (const auto& e : r.body) {
            if (e.isLiteral()) {
                int bit = bitOf(e.literal().atom);
                body.push_back(LpaLiteral::plain(baseIds[bit], e.literal().negated));
            } else {
                int rhoId = out.intern(auxAtom(LpaAtom::Kind::Rho, static_cast<int>(ri) + 1,
                                               scIndex + 1, c, programIndex));
                body.push_back(LpaLiteral::plain(rhoId, e.sc().negated));
                scIndex += ScTranslator::scSpan(e.sc().sc);
            }
        }
        if (r.isConstraint()) {
            lr.tag = LpaRule::Tag::ConstraintFail;
            lr.headId = failId;
            lr.body.push_back(LpaLiteral::plain(failId, true));
            for (auto& l : body) lr.body.push_back(std::move(l));
        } else {
            lr.tag = LpaRule::Tag::Derive;
            lr.headId = supportIds[bitOf(r.head)];
            lr.body = std::move(body);
        }
        out.addRule(std::move(lr));
    }

    for (size_t i = 0; i < vocab.size(); ++i) {
        LpaRule a;
        a.tag = LpaRule::Tag::FailPair;
        a.headId = failId;
        a.body.push_back(LpaLiteral::plain(failId, true));
        a.body.push_back(LpaLiteral::plain(supportIds[i]));
        a.body.push_back(LpaLiteral::plain(baseIds[i], true));
        out.addRule(std::move(a));
        LpaRule b;
        b.tag = LpaRule::Tag::FailPair;
        b.headId = failId;
        b.body.push_back(LpaLiteral::plain(failId, true));
        b.body.push_back(LpaLiteral::plain(baseIds[i]));
        b.body.push_back(LpaLiteral::plain(supportIds[i], true));
        out.addRule(std::move(b));
    }
}

LpaProgram translateAll(const Collection& c) {
    LpaProgram out;
    out.agentCount = static_cast<int>(c.programs.size());
    for (int i = 1; i <= static_cast<int>(c.programs.size()); ++i)
        gammaPrime(c.programs[i - 1], i, c, out);
    auto vocab = baseVocabularies(c);
    for (int i = 1; i <= static_cast<int>(c.programs.size()); ++i)
        translateProgramScs(c, i, vocab, out);

    // rendered names must stay injective; "__" in user identifiers is already
    // rejected, this guards the remaining pathological prefixes
    std::set<std::string> seen;
    for (const auto& a : out.atoms()) {
        if (!seen.insert(a.render()).second)
            throw TranslationError("emitted name collision on '" + a.render() + "'");
    }
    return out;
}

namespace {

std::string countName(const LpaLiteral& l) {
    return "g_" + std::to_string(l.ruleIndex) + "_" + std::to_string(l.scIndex) + "__" + l.ownerId;
}

std::string renderLiteral(const LpaProgram& p, const LpaLiteral& l) {
    if (l.kind == LpaLiteral::Kind::Plain) {
        std::string s = l.negated ? "not " : "";
        return s + p.atom(l.atomId).render();
    }
    std::ostringstream os;
    os << l.lower << " <= #count{K : " << countName(l) << "(K), K != " << l.excludedIndex
       << "} <= " << l.upper;
    return os.str();
}

} // namespace

std::string emitText(const LpaProgram& p) {
    std::string out;
    for (const auto& r : p.rules()) {
        std::string line = p.atom(r.headId).render();
        if (!r.body.empty()) {
            line += " :- ";
            for (size_t i = 0; i < r.body.size(); ++i) {
                if (i) line += ", ";
                line += renderLiteral(p, r.body[i]);
            }
        }
        line += ".";
        out += line + "\n";
    }
    return out;
}

void verifyEmittedText(const LpaProgram& p, const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (auto pos = line.find('%'); pos != std::string::npos) line = line.substr(0, pos);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.size() != p.rules().size())
        throw TranslationError("emitted text re-read: rule count mismatch");
    for (size_t i = 0; i < lines.size(); ++i) {
        std::string expected = p.atom(p.rules()[i].headId).render();
        if (!p.rules()[i].body.empty()) {
            expected += " :- ";
            for (size_t k = 0; k < p.rules()[i].body.size(); ++k) {
                if (k) expected += ", ";
                expected += renderLiteral(p, p.rules()[i].body[k]);
            }
        }
        expected += ".";
        if (lines[i] != expected)
            throw TranslationError("emitted text re-read: rule " + std::to_string(i + 1) +
                                   " drifted: '" + lines[i] + "' vs '" + expected + "'");
    }
}

} // namespace solp
