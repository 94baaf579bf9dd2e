#include "solp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace solp {

int Bitset::count() const {
    int c = 0;
    for (auto word : w) c += std::popcount(word);
    return c;
}

namespace {

// single-word evaluation for the generic backend (universe <= cap <= 62)
bool literalTrue(const LpaLiteral& l, std::uint64_t mask) {
    if (l.kind == LpaLiteral::Kind::Plain) {
        bool holds = mask & (std::uint64_t{1} << l.atomId);
        return l.negated ? !holds : holds;
    }
    long long c = 0;
    for (int id : l.instanceIds)
        if (mask & (std::uint64_t{1} << id)) ++c;
    return l.lower <= c && c <= l.upper;
}

bool bodyTrue(const LpaRule& r, std::uint64_t mask) {
    for (const auto& l : r.body)
        if (!literalTrue(l, mask)) return false;
    return true;
}

bool satisfies(const LpaProgram& p, std::uint64_t mask) {
    for (const auto& r : p.rules()) {
        if (mask & (std::uint64_t{1} << r.headId)) continue;
        if (bodyTrue(r, mask)) return false;
    }
    return true;
}

// FLP: no proper submodel of M may satisfy the rules whose bodies hold in M.
bool stable(const LpaProgram& p, std::uint64_t mask) {
    if (!satisfies(p, mask)) return false;
    std::vector<const LpaRule*> reduct;
    for (const auto& r : p.rules())
        if (bodyTrue(r, mask)) reduct.push_back(&r);
    if (mask == 0) return true;
    for (std::uint64_t n = (mask - 1) & mask;; n = (n - 1) & mask) {
        bool models = true;
        for (const auto* r : reduct) {
            if (!(n & (std::uint64_t{1} << r->headId)) && bodyTrue(*r, n)) {
                models = false;
                break;
            }
        }
        if (models) return false;
        if (n == 0) break;
    }
    return true;
}

Bitset toBitset(std::uint64_t mask, int bits) {
    Bitset b(bits);
    if (!b.w.empty()) b.w[0] = mask;
    return b;
}

} // namespace

bool satisfiesAllRules(const Bitset& model, const LpaProgram& p) {
    auto lit = [&](const LpaLiteral& l) {
        if (l.kind == LpaLiteral::Kind::Plain)
            return l.negated ? !model.test(l.atomId) : model.test(l.atomId);
        long long c = 0;
        for (int id : l.instanceIds)
            if (model.test(id)) ++c;
        return l.lower <= c && c <= l.upper;
    };
    for (const auto& r : p.rules()) {
        if (model.test(r.headId)) continue;
        bool body = true;
        for (const auto& l : r.body)
            if (!lit(l)) { body = false; break; }
        if (body) return false;
    }
    return true;
}

std::vector<Bitset> enumerateAnswerSetsGeneric(const LpaProgram& p, const Caps& caps,
                                               ExecMode mode) {
    int m = p.atomCount();
    if (m > caps.oracleUniverseCap || m > 62)
        throw CapExceeded("oracle-universe-cap", "universe of " + std::to_string(m) +
                                                     " atoms exceeds " +
                                                     std::to_string(caps.oracleUniverseCap));
    const std::uint64_t total = std::uint64_t{1} << m;
    std::vector<std::uint64_t> winners;
    if (mode == ExecMode::Serial) {
        for (std::uint64_t mask = 0; mask < total; ++mask)
            if (stable(p, mask)) winners.push_back(mask);
    } else {
#ifdef _OPENMP
        std::vector<std::vector<std::uint64_t>> buckets;
#pragma omp parallel
        {
#pragma omp single
            buckets.resize(omp_get_num_threads());
            auto& local = buckets[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 1024)
            for (long long f = 0; f < static_cast<long long>(total); ++f) {
                auto mask = static_cast<std::uint64_t>(f);
                if (stable(p, mask)) local.push_back(mask);
            }
        }
        for (auto& b : buckets) winners.insert(winners.end(), b.begin(), b.end());
        std::sort(winners.begin(), winners.end());
#else
        for (std::uint64_t mask = 0; mask < total; ++mask)
            if (stable(p, mask)) winners.push_back(mask);
#endif
    }
    std::vector<Bitset> out;
    out.reserve(winners.size());
    for (auto mask : winners) out.push_back(toBitset(mask, m));
    return out;
}

namespace {

struct StructuredPlan {
    std::vector<int> guessIds;                 // base atoms, table order
    std::vector<std::pair<int, int>> basePrimed;
    std::vector<std::pair<int, int>> baseSupport;
    std::vector<const LpaRule*> scRules;       // guesses+checks, deepest stratum first
    std::vector<const LpaRule*> deriveRules;
    std::vector<const LpaRule*> constraintRules;
};

StructuredPlan planStructured(const LpaProgram& p) {
    StructuredPlan plan;
    for (int id = 0; id < p.atomCount(); ++id) {
        const auto& a = p.atom(id);
        if (a.kind != LpaAtom::Kind::Base) continue;
        plan.guessIds.push_back(id);
        LpaAtom primed = a;
        primed.kind = LpaAtom::Kind::Primed;
        LpaAtom support = a;
        support.kind = LpaAtom::Kind::Support;
        int pid = p.find(primed);
        int sid = p.find(support);
        if (pid < 0 || sid < 0)
            throw OracleError("structured backend: base atom '" + a.render() +
                              "' lacks its guess or support counterpart");
        plan.basePrimed.emplace_back(id, pid);
        plan.baseSupport.emplace_back(id, sid);
    }
    int maxDepth = 0;
    for (const auto& r : p.rules()) {
        switch (r.tag) {
            case LpaRule::Tag::ScGuess:
            case LpaRule::Tag::ScCheck: maxDepth = std::max(maxDepth, r.scDepth); break;
            default: break;
        }
    }
    for (int d = maxDepth; d >= 0; --d) {
        for (const auto& r : p.rules())
            if (r.tag == LpaRule::Tag::ScGuess && r.scDepth == d) plan.scRules.push_back(&r);
        for (const auto& r : p.rules())
            if (r.tag == LpaRule::Tag::ScCheck && r.scDepth == d) plan.scRules.push_back(&r);
    }
    for (const auto& r : p.rules()) {
        if (r.tag == LpaRule::Tag::Derive) plan.deriveRules.push_back(&r);
        if (r.tag == LpaRule::Tag::ConstraintFail) plan.constraintRules.push_back(&r);
        if (r.tag == LpaRule::Tag::GuessPos) {
            if (r.body.size() != 1 || r.body[0].kind != LpaLiteral::Kind::Plain ||
                !r.body[0].negated)
                throw OracleError("structured backend: malformed guess rule");
        }
    }
    return plan;
}

bool modelLiteral(const Bitset& model, const LpaLiteral& l) {
    if (l.kind == LpaLiteral::Kind::Plain)
        return l.negated ? !model.test(l.atomId) : model.test(l.atomId);
    long long c = 0;
    for (int id : l.instanceIds)
        if (model.test(id)) ++c;
    return l.lower <= c && c <= l.upper;
}

bool modelBody(const Bitset& model, const LpaRule& r) {
    for (const auto& l : r.body)
        if (!modelLiteral(model, l)) return false;
    return true;
}

bool runCandidate(const LpaProgram& p, const StructuredPlan& plan, std::uint64_t guess,
                  Bitset& model) {
    model = Bitset(p.atomCount());
    for (size_t i = 0; i < plan.guessIds.size(); ++i)
        if (guess & (std::uint64_t{1} << i)) model.set(plan.guessIds[i]);
    for (size_t i = 0; i < plan.guessIds.size(); ++i)
        if (!(guess & (std::uint64_t{1} << i))) model.set(plan.basePrimed[i].second);
    for (const auto* r : plan.scRules)
        if (modelBody(model, *r)) model.set(r->headId);
    for (const auto* r : plan.deriveRules)
        if (modelBody(model, *r)) model.set(r->headId);
    for (const auto& [base, support] : plan.baseSupport)
        if (model.test(base) != model.test(support)) return false;
    // "not fail" self-literals hold: fail atoms are never in the model
    for (const auto* r : plan.constraintRules)
        if (modelBody(model, *r)) return false;
    return true;
}

} // namespace

std::vector<Bitset> enumerateAnswerSetsStructured(const LpaProgram& p, const Caps& caps,
                                                  ExecMode mode) {
    auto plan = planStructured(p);
    int bits = static_cast<int>(plan.guessIds.size());
    if (bits > 62 || (std::uint64_t{1} << std::min(bits, 62)) >
                         static_cast<std::uint64_t>(caps.candidateCap))
        throw CapExceeded("candidate-cap", "structured guess layer of 2^" + std::to_string(bits) +
                                               " candidates exceeds " +
                                               std::to_string(caps.candidateCap));
    const std::uint64_t total = std::uint64_t{1} << bits;
    std::vector<Bitset> out;
    if (mode == ExecMode::Serial) {
        Bitset model;
        for (std::uint64_t g = 0; g < total; ++g)
            if (runCandidate(p, plan, g, model)) out.push_back(model);
    } else {
#ifdef _OPENMP
        std::vector<std::vector<Bitset>> buckets;
#pragma omp parallel
        {
#pragma omp single
            buckets.resize(omp_get_num_threads());
            auto& local = buckets[omp_get_thread_num()];
            Bitset model;
#pragma omp for schedule(dynamic, 256)
            for (long long g = 0; g < static_cast<long long>(total); ++g)
                if (runCandidate(p, plan, static_cast<std::uint64_t>(g), model))
                    local.push_back(model);
        }
        for (auto& b : buckets)
            for (auto& m : b) out.push_back(std::move(m));
#else
        Bitset model;
        for (std::uint64_t g = 0; g < total; ++g)
            if (runCandidate(p, plan, g, model)) out.push_back(model);
#endif
    }
    std::sort(out.begin(), out.end());
    return out;
}

SocialInterpretation projectToSocial(const Bitset& model, const LpaProgram& p) {
    SocialInterpretation out;
    for (int id = 0; id < p.atomCount(); ++id) {
        if (!model.test(id)) continue;
        const auto& a = p.atom(id);
        if (a.kind == LpaAtom::Kind::Base) out.insert({a.atom, a.programId});
    }
    return out;
}

std::string renderModel(const Bitset& model, const LpaProgram& p) {
    std::string s = "{";
    bool first = true;
    for (int id = 0; id < p.atomCount(); ++id) {
        if (!model.test(id)) continue;
        if (!first) s += ", ";
        first = false;
        s += p.atom(id).render();
    }
    return s + "}";
}

} // namespace solp
