#include "solp/social.hpp"

#include <algorithm>
#include <bit>

#include "solp/analysis.hpp"
#include "solp/autonomous.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace solp {

CollectionIndex::CollectionIndex(const Collection& c) : c_(&c) {
    int n = static_cast<int>(c.programs.size());
    if (n >= 62)
        throw CapExceeded("candidate-cap",
                          "collections of " + std::to_string(n) + " programs are not indexable");
    vocabs_.resize(n);
    rules_.resize(n);
    for (int i = 0; i < n; ++i) {
        auto vs = varStar(c.programs[i]);
        vocabs_[i].assign(vs.begin(), vs.end());
        if (vocabs_[i].size() > 62)
            throw CapExceeded("afp-atom-cap", "program '" + c.programs[i].id + "' has " +
                                                  std::to_string(vocabs_[i].size()) + " atoms");
        for (const auto& r : c.programs[i].rules) {
            CRule cr;
            cr.kind = r.headKind;
            if (!r.isConstraint()) cr.headBit = bitOf(i, r.head);
            for (const auto& e : r.body) {
                if (e.isLiteral()) {
                    cr.lits.push_back({bitOf(i, e.literal().atom), e.literal().negated});
                } else {
                    cr.scs.emplace_back(&e.sc().sc, e.sc().negated);
                }
            }
            rules_[i].push_back(std::move(cr));
        }
    }
}

int CollectionIndex::bitOf(int program, const Atom& a) const {
    const auto& v = vocabs_[program];
    auto it = std::lower_bound(v.begin(), v.end(), a);
    if (it == v.end() || !(*it == a)) return -1;
    return static_cast<int>(it - v.begin());
}

CollectionIndex::State CollectionIndex::toState(const SocialInterpretation& i) const {
    State s(vocabs_.size(), 0);
    for (const auto& la : i) {
        int p = c_->indexOf(la.programId);
        if (p < 0) continue;
        int bit = bitOf(p, la.atom);
        if (bit >= 0) s[p] |= std::uint64_t{1} << bit;
    }
    return s;
}

SocialInterpretation CollectionIndex::toSocial(const State& s) const {
    SocialInterpretation out;
    for (size_t p = 0; p < vocabs_.size(); ++p)
        for (size_t b = 0; b < vocabs_[p].size(); ++b)
            if (s[p] & (std::uint64_t{1} << b)) out.insert({vocabs_[p][b], c_->programs[p].id});
    return out;
}

bool CollectionIndex::literalTrueFor(const Literal& l, int program, const State& s) const {
    int bit = bitOf(program, l.atom);
    bool holds = bit >= 0 && (s[program] & (std::uint64_t{1} << bit));
    return l.negated ? !holds : holds;
}

bool CollectionIndex::scTruth(const SocialCondition& s, int owner, std::uint64_t activeSet,
                              const State& state) const {
    if (s.cond.isMember()) {
        int k = c_->indexOf(s.cond.member().programId);
        if (k < 0 || !(activeSet & (std::uint64_t{1} << k))) return false;
        for (const auto& l : s.content)
            if (!literalTrueFor(l, k, state)) return false;
        return true;
    }
    const auto& card = s.cond.cardinal();
    Bounds b = card.resolved.value_or(Bounds{0, static_cast<long long>(vocabs_.size()) - 1});
    std::uint64_t pool = activeSet & ~(std::uint64_t{1} << owner);
    std::uint64_t support = 0;
    for (int p = 0; p < programCount(); ++p) {
        if (!(pool & (std::uint64_t{1} << p))) continue;
        bool all = true;
        for (const auto& l : s.content)
            if (!literalTrueFor(l, p, state)) { all = false; break; }
        if (all) support |= std::uint64_t{1} << p;
    }
    int m = std::popcount(support);
    if (m < b.lower) return false;
    if (s.skel.empty()) return true; // any D of size in [l, min(h, m)] witnesses
    // enumerate witness sets D over the support, then each nested condition
    // needs some D' inside D
    for (std::uint64_t d = support;; d = (d - 1) & support) {
        int size = std::popcount(d);
        if (size >= b.lower && size <= b.upper) {
            bool all = true;
            for (const auto& child : s.skel) {
                bool found = false;
                for (std::uint64_t dp = d;; dp = (dp - 1) & d) {
                    if (scTruth(child, owner, dp, state)) { found = true; break; }
                    if (dp == 0) break;
                }
                if (!found) { all = false; break; }
            }
            if (all) return true;
        }
        if (d == 0) break;
    }
    return false;
}

CollectionIndex::State CollectionIndex::stStep(const State& s) const {
    State out;
    stStepInto(s, out);
    return out;
}

void CollectionIndex::stStepInto(const State& s, State& out) const {
    out.assign(vocabs_.size(), 0);
    std::uint64_t everyone = programCount() >= 64
                                 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << programCount()) - 1;
    for (int p = 0; p < programCount(); ++p) {
        for (const auto& r : rules_[p]) {
            if (r.kind == Rule::HeadKind::Constraint) continue;
            if (r.kind == Rule::HeadKind::Okay &&
                !(s[p] & (std::uint64_t{1} << r.headBit)))
                continue; // tolerated atom must already hold
            bool body = true;
            for (const auto& l : r.lits) {
                bool holds = l.bit >= 0 && (s[p] & (std::uint64_t{1} << l.bit));
                if ((l.negated && holds) || (!l.negated && !holds)) { body = false; break; }
            }
            if (body) {
                for (const auto& [sc, neg] : r.scs) {
                    bool t = scTruth(*sc, p, everyone, s);
                    if (t == neg) { body = false; break; }
                }
            }
            if (body) out[p] |= std::uint64_t{1} << r.headBit;
        }
    }
}

bool CollectionIndex::constraintsViolated(const State& s) const {
    std::uint64_t everyone = programCount() >= 64
                                 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << programCount()) - 1;
    for (int p = 0; p < programCount(); ++p) {
        for (const auto& r : rules_[p]) {
            if (r.kind != Rule::HeadKind::Constraint) continue;
            bool body = true;
            for (const auto& l : r.lits) {
                bool holds = l.bit >= 0 && (s[p] & (std::uint64_t{1} << l.bit));
                if ((l.negated && holds) || (!l.negated && !holds)) { body = false; break; }
            }
            if (body) {
                for (const auto& [sc, neg] : r.scs) {
                    bool t = scTruth(*sc, p, everyone, s);
                    if (t == neg) { body = false; break; }
                }
            }
            if (body) return true;
        }
    }
    return false;
}

bool scTruth(const SocialCondition& s, const EvalContext& ctx) {
    CollectionIndex idx(*ctx.collection);
    std::uint64_t active = 0;
    if (ctx.activeSubset.empty()) {
        active = idx.programCount() >= 64 ? ~std::uint64_t{0}
                                          : (std::uint64_t{1} << idx.programCount()) - 1;
    } else {
        for (const auto& id : ctx.activeSubset) {
            int p = ctx.collection->indexOf(id);
            if (p >= 0) active |= std::uint64_t{1} << p;
        }
    }
    int owner = ctx.collection->indexOf(ctx.evaluatingProgram);
    return idx.scTruth(s, owner, active, idx.toState(ctx.interpretation));
}

SocialInterpretation stStep(const Collection& c, const SocialInterpretation& i) {
    CollectionIndex idx(c);
    return idx.toSocial(idx.stStep(idx.toState(i)));
}

std::vector<SocialInterpretation> enumerateSocialModels(const Collection& c, const Caps& caps,
                                                        ExecMode mode, CandidateSource source) {
    CollectionIndex idx(c);
    int n = idx.programCount();
    std::vector<std::vector<std::uint64_t>> factors(n);
    long long total = 1;
    for (int p = 0; p < n; ++p) {
        auto states = source == CandidateSource::Admissible
                          ? admissibleStates(c.programs[p], caps, mode)
                          : enumerateAFP(c.programs[p], caps, mode);
        for (const auto& st : states) {
            std::uint64_t mask = 0;
            for (const auto& a : st) {
                const auto& v = idx.vocab(p);
                auto it = std::lower_bound(v.begin(), v.end(), a);
                mask |= std::uint64_t{1} << (it - v.begin());
            }
            factors[p].push_back(mask);
        }
        if (total > caps.candidateCap / std::max<long long>(1, (long long)factors[p].size()))
            throw CapExceeded("candidate-cap",
                              "candidate product exceeds " + std::to_string(caps.candidateCap));
        total *= static_cast<long long>(factors[p].size());
    }
    if (total > caps.candidateCap)
        throw CapExceeded("candidate-cap", "candidate product of size " + std::to_string(total) +
                                               " exceeds " + std::to_string(caps.candidateCap));

    auto candidateAt = [&](long long flat, CollectionIndex::State& s) {
        for (int p = n - 1; p >= 0; --p) {
            long long k = static_cast<long long>(factors[p].size());
            s[p] = factors[p][flat % k];
            flat /= k;
        }
    };

    // the scan stores flat candidate indices; interpretations are only
    // materialized for the survivors
    std::vector<long long> hits;
    if (mode == ExecMode::Serial) {
        CollectionIndex::State s(n, 0), scratch;
        for (long long f = 0; f < total; ++f) {
            candidateAt(f, s);
            if (idx.isSocialModel(s, scratch)) hits.push_back(f);
        }
    } else {
#ifdef _OPENMP
        std::vector<std::vector<long long>> buckets;
#pragma omp parallel
        {
#pragma omp single
            buckets.resize(omp_get_num_threads());
            auto& local = buckets[omp_get_thread_num()];
            CollectionIndex::State s(n, 0), scratch;
#pragma omp for schedule(static)
            for (long long f = 0; f < total; ++f) {
                candidateAt(f, s);
                if (idx.isSocialModel(s, scratch)) local.push_back(f);
            }
        }
        for (auto& b : buckets) hits.insert(hits.end(), b.begin(), b.end());
        std::sort(hits.begin(), hits.end());
#else
        CollectionIndex::State s(n, 0), scratch;
        for (long long f = 0; f < total; ++f) {
            candidateAt(f, s);
            if (idx.isSocialModel(s, scratch)) hits.push_back(f);
        }
#endif
    }
    std::vector<SocialInterpretation> out;
    out.reserve(hits.size());
    CollectionIndex::State s(n, 0);
    for (long long f : hits) {
        candidateAt(f, s);
        out.push_back(idx.toSocial(s));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool isSupported(const Collection& c, const SocialInterpretation& m) {
    CollectionIndex idx(c);
    auto state = idx.toState(m);
    // atoms that do not even belong to their program's vocabulary cannot
    // be headed by any rule
    if (idx.toSocial(state) != m) return false;
    std::uint64_t everyone = idx.programCount() >= 64
                                 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << idx.programCount()) - 1;
    for (const auto& la : m) {
        int p = c.indexOf(la.programId);
        if (p < 0) return false;
        bool justified = false;
        for (const auto& r : c.programs[p].rules) {
            if (r.isConstraint() || !(r.head == la.atom)) continue;
            // for tolerance rules the "a true for P" clause holds since la is in m
            bool body = true;
            for (const auto& e : r.body) {
                if (e.isLiteral()) {
                    if (!idx.literalTrueFor(e.literal(), p, state)) { body = false; break; }
                } else {
                    bool t = idx.scTruth(e.sc().sc, p, everyone, state);
                    if (t == e.sc().negated) { body = false; break; }
                }
            }
            if (body) { justified = true; break; }
        }
        if (!justified) return false;
    }
    return true;
}

} // namespace solp
