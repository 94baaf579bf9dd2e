#include "solp/reasoning.hpp"

#include <algorithm>
#include <set>

#include "solp/analysis.hpp"
#include "solp/autonomous.hpp"
#include "solp/social.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace solp {

std::optional<QueryMode> queryModeFromString(const std::string& s) {
    if (s == "ss") return QueryMode::SS;
    if (s == "is") return QueryMode::IS;
    if (s == "sc") return QueryMode::SC;
    if (s == "ic") return QueryMode::IC;
    return std::nullopt;
}

std::string to_string(QueryMode m) {
    switch (m) {
        case QueryMode::SS: return "ss";
        case QueryMode::IS: return "is";
        case QueryMode::SC: return "sc";
        case QueryMode::IC: return "ic";
    }
    return {};
}

QueryVerdict query(const Collection& c, const Atom& x, QueryMode mode, const Caps& caps,
                   ExecMode exec) {
    auto models = enumerateSocialModels(c, caps, exec);
    QueryVerdict v;

    auto carriers = [&](const SocialInterpretation& m) {
        std::vector<std::string> out;
        for (const auto& p : c.programs)
            if (m.count(LabeledAtom{x, p.id})) out.push_back(p.id);
        return out;
    };
    auto holdsForAll = [&](const SocialInterpretation& m) {
        return carriers(m).size() == c.programs.size();
    };
    auto holdsForSome = [&](const SocialInterpretation& m) { return !carriers(m).empty(); };

    switch (mode) {
        case QueryMode::SS:
            v.answer = true;
            for (const auto& m : models) {
                if (!holdsForAll(m)) {
                    v.answer = false;
                    v.witness = m;
                    v.witnessPrograms = carriers(m);
                    break;
                }
            }
            break;
        case QueryMode::IS:
            v.answer = true;
            for (const auto& m : models) {
                if (!holdsForSome(m)) {
                    v.answer = false;
                    v.witness = m;
                    break;
                }
            }
            break;
        case QueryMode::SC:
            for (const auto& m : models) {
                if (holdsForAll(m)) {
                    v.answer = true;
                    v.witness = m;
                    v.witnessPrograms = carriers(m);
                    break;
                }
            }
            break;
        case QueryMode::IC:
            for (const auto& m : models) {
                if (holdsForSome(m)) {
                    v.answer = true;
                    v.witness = m;
                    v.witnessPrograms = carriers(m);
                    break;
                }
            }
            break;
    }
    return v;
}

bool isColpProgram(const Program& p) {
    for (const auto& r : p.rules) {
        if (r.isConstraint()) return false;
        if (r.hasSc()) return false;
    }
    return true;
}

Program sigmaTranslate(const Program& p, long long n) {
    Program out;
    out.id = p.id;
    for (const auto& r : p.rules) {
        Rule nr;
        nr.headKind = r.headKind;
        nr.head = r.head;
        SocialCondition sc;
        CardinalSelection card;
        card.lower = BoundExpr::number(Rational(n - 1));
        card.upper = BoundExpr::number(Rational(n - 1));
        card.resolved = Bounds{n - 1, n - 1};
        sc.cond.sel = std::move(card);
        sc.content.push_back(Literal{r.head, false});
        BodyElement e;
        e.elem = BodyElement::Sc{std::move(sc), false};
        nr.body.push_back(std::move(e));
        for (const auto& b : r.body) nr.body.push_back(b);
        out.rules.push_back(std::move(nr));
    }
    return out;
}

std::vector<Interpretation> hatFixpoints(const Program& p, const Caps& caps, ExecMode mode) {
    Program hat = hatTransform(p);
    auto vocabSet = varsOf(hat);
    std::vector<Atom> vocab(vocabSet.begin(), vocabSet.end());
    if (static_cast<int>(vocab.size()) > caps.afpAtomCap || vocab.size() > 62)
        throw CapExceeded("afp-atom-cap", "program '" + p.id + "' has " +
                                              std::to_string(vocab.size()) + " atoms");
    auto ev = makeGroundEval(hat, vocab);
    std::vector<Interpretation> out;
    for (auto mask : fixpointScan(ev, mode)) out.push_back(ev.toInterpretation(mask));
    return out;
}

std::vector<Interpretation> jointFixpoints(const std::vector<Program>& ps, const Caps& caps,
                                           ExecMode mode) {
    std::set<Atom> unionVocab;
    std::vector<Program> hats;
    for (const auto& p : ps) {
        hats.push_back(hatTransform(p));
        auto vs = varsOf(hats.back());
        unionVocab.insert(vs.begin(), vs.end());
    }
    std::vector<Atom> vocab(unionVocab.begin(), unionVocab.end());
    if (static_cast<int>(vocab.size()) > caps.afpAtomCap || vocab.size() > 62)
        throw CapExceeded("afp-atom-cap",
                          "union vocabulary of " + std::to_string(vocab.size()) + " atoms");
    std::vector<GroundEval> evals;
    for (const auto& h : hats) evals.push_back(makeGroundEval(h, vocab));
    if (evals.empty()) return {};

    auto joint = [&](std::uint64_t mask) {
        for (const auto& ev : evals)
            if (ev.step(mask) != mask) return false;
        return true;
    };
    std::vector<std::uint64_t> hits;
    const std::uint64_t total = std::uint64_t{1} << vocab.size();
    if (mode == ExecMode::Serial) {
        for (std::uint64_t mask = 0; mask < total; ++mask)
            if (joint(mask)) hits.push_back(mask);
    } else {
#ifdef _OPENMP
        std::vector<std::vector<std::uint64_t>> buckets;
#pragma omp parallel
        {
#pragma omp single
            buckets.resize(omp_get_num_threads());
            auto& local = buckets[omp_get_thread_num()];
#pragma omp for schedule(static)
            for (long long m = 0; m < static_cast<long long>(total); ++m)
                if (joint(static_cast<std::uint64_t>(m))) local.push_back(m);
        }
        for (auto& b : buckets) hits.insert(hits.end(), b.begin(), b.end());
        std::sort(hits.begin(), hits.end());
#else
        for (std::uint64_t mask = 0; mask < total; ++mask)
            if (joint(mask)) hits.push_back(mask);
#endif
    }
    std::vector<Interpretation> out;
    out.reserve(hits.size());
    for (auto mask : hits) out.push_back(evals.front().toInterpretation(mask));
    return out;
}

JfpReport checkJfpCorrespondence(const std::vector<Program>& ps, const Caps& caps, ExecMode mode) {
    JfpReport rep;
    long long n = static_cast<long long>(ps.size());
    for (const auto& p : ps) {
        if (!isColpProgram(p)) {
            rep.detail = "program '" + p.id + "' is not a COLP program";
            return rep;
        }
    }

    Collection translated;
    for (const auto& p : ps) translated.programs.push_back(sigmaTranslate(p, n));
    auto diags = validateCollection(translated);
    if (hasErrors(diags)) {
        rep.detail = "translated collection failed validation: " + diags.front().message;
        return rep;
    }

    // per-program fixpoint identity: hat fixpoints == autonomous fixpoints of
    // the translation
    for (size_t i = 0; i < ps.size(); ++i) {
        auto lhs = hatFixpoints(ps[i], caps, mode);
        auto rhs = enumerateAFP(translated.programs[i], caps, mode);
        auto key = [](std::vector<Interpretation> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        if (key(lhs) != key(rhs)) {
            rep.detail = "fixpoint identity failed for program '" + ps[i].id + "'";
            return rep;
        }
    }

    rep.joint = jointFixpoints(ps, caps, mode);
    // the correspondence is stated for the definition-literal candidate set
    rep.socialModels =
        enumerateSocialModels(translated, caps, mode, CandidateSource::Autonomous);

    // every social model projects identically onto every program
    for (const auto& m : rep.socialModels) {
        std::vector<Interpretation> proj(ps.size());
        for (const auto& la : m) {
            int idx = translated.indexOf(la.programId);
            if (idx >= 0) proj[idx].insert(la.atom);
        }
        for (size_t i = 1; i < proj.size(); ++i) {
            if (proj[i] != proj[0]) {
                rep.detail = "social model " + renderSet(m) + " has unequal projections";
                return rep;
            }
        }
    }

    std::set<SocialInterpretation> expected;
    for (const auto& f : rep.joint) {
        SocialInterpretation m;
        for (const auto& q : translated.programs)
            for (const auto& a : f) m.insert({a, q.id});
        expected.insert(std::move(m));
    }
    std::set<SocialInterpretation> got(rep.socialModels.begin(), rep.socialModels.end());
    if (expected != got) {
        rep.detail = "joint fixpoints and social models disagree: " +
                     std::to_string(expected.size()) + " vs " + std::to_string(got.size());
        return rep;
    }
    rep.ok = true;
    return rep;
}

} // namespace solp
