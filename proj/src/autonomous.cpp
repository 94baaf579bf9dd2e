#include "solp/autonomous.hpp"

#include <algorithm>

#include "solp/analysis.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace solp {

Program autonomousReduction(const Program& p) {
    Program out;
    out.id = p.id;
    out.rules.reserve(p.rules.size());
    for (const auto& r : p.rules) {
        Rule nr;
        nr.headKind = r.headKind;
        nr.head = r.head;
        for (const auto& e : r.body)
            if (e.isLiteral()) nr.body.push_back(e);
        out.rules.push_back(std::move(nr));
    }
    return out;
}

Program hatTransform(const Program& p) {
    Program out;
    out.id = p.id;
    out.rules.reserve(p.rules.size());
    for (const auto& r : p.rules) {
        if (!r.isTolerance()) {
            out.rules.push_back(r);
            continue;
        }
        Rule nr;
        nr.headKind = Rule::HeadKind::Plain;
        nr.head = r.head;
        BodyElement self;
        self.elem = BodyElement::Lit{Literal{r.head, false}};
        nr.body.push_back(std::move(self));
        for (const auto& e : r.body) nr.body.push_back(e);
        out.rules.push_back(std::move(nr));
    }
    return out;
}

Interpretation varStar(const Program& p) { return varsOf(autonomousReduction(p)); }

int GroundEval::indexOf(const Atom& a) const {
    auto it = std::lower_bound(vocab.begin(), vocab.end(), a);
    if (it == vocab.end() || !(*it == a)) return -1;
    return static_cast<int>(it - vocab.begin());
}

std::uint64_t GroundEval::step(std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (const auto& r : rules) {
        if (r.dead || r.head < 0) continue;
        if ((r.pos & mask) == r.pos && (r.neg & mask) == 0) out |= std::uint64_t{1} << r.head;
    }
    return out;
}

bool GroundEval::blockedByConstraint(std::uint64_t mask) const {
    for (const auto& r : rules) {
        if (r.head >= 0 || r.dead) continue;
        if ((r.pos & mask) == r.pos && (r.neg & mask) == 0) return true;
    }
    return false;
}

Interpretation GroundEval::toInterpretation(std::uint64_t mask) const {
    Interpretation out;
    for (size_t i = 0; i < vocab.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) out.insert(vocab[i]);
    return out;
}

std::uint64_t GroundEval::toMask(const Interpretation& i) const {
    std::uint64_t mask = 0;
    for (const auto& a : i) {
        int idx = indexOf(a);
        if (idx >= 0) mask |= std::uint64_t{1} << idx;
    }
    return mask;
}

GroundEval makeGroundEval(const Program& scFree, const std::vector<Atom>& vocab) {
    GroundEval ev;
    ev.vocab = vocab;
    std::sort(ev.vocab.begin(), ev.vocab.end());
    for (const auto& r : scFree.rules) {
        GroundEval::ERule er;
        if (!r.isConstraint()) {
            er.head = ev.indexOf(r.head);
            if (er.head < 0) continue; // head outside the vocabulary: cannot contribute
        }
        if (r.isTolerance()) {
            // okay(a) <- body derives a only when a already holds
            er.pos |= std::uint64_t{1} << er.head;
        }
        for (const auto& e : r.body) {
            const auto& l = e.literal();
            int idx = ev.indexOf(l.atom);
            if (idx < 0) {
                if (!l.negated) er.dead = true; // positive atom outside vocab is false
                continue;                        // negative one is vacuously true
            }
            if (l.negated)
                er.neg |= std::uint64_t{1} << idx;
            else
                er.pos |= std::uint64_t{1} << idx;
        }
        ev.rules.push_back(er);
    }
    return ev;
}

std::vector<std::uint64_t> fixpointScan(const GroundEval& ev, ExecMode mode) {
    const std::uint64_t total = std::uint64_t{1} << ev.vocab.size();
    std::vector<std::uint64_t> out;
    if (mode == ExecMode::Serial) {
        for (std::uint64_t mask = 0; mask < total; ++mask)
            if (ev.isFixpoint(mask)) out.push_back(mask);
        return out;
    }
#ifdef _OPENMP
    std::vector<std::vector<std::uint64_t>> buckets;
#pragma omp parallel
    {
#pragma omp single
        buckets.resize(omp_get_num_threads());
        auto& local = buckets[omp_get_thread_num()];
#pragma omp for schedule(static)
        for (long long m = 0; m < static_cast<long long>(total); ++m) {
            auto mask = static_cast<std::uint64_t>(m);
            if (ev.isFixpoint(mask)) local.push_back(mask);
        }
    }
    for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
#else
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (ev.isFixpoint(mask)) out.push_back(mask);
    return out;
#endif
}

namespace {

std::vector<Interpretation> fixpointsOf(const Program& scFree, const Program& origin,
                                        const Caps& caps, ExecMode mode) {
    auto vocabSet = varsOf(scFree);
    std::vector<Atom> vocab(vocabSet.begin(), vocabSet.end());
    if (static_cast<int>(vocab.size()) > caps.afpAtomCap || vocab.size() > 62) {
        throw CapExceeded("afp-atom-cap", "program '" + origin.id + "' has " +
                                              std::to_string(vocab.size()) + " atoms (cap " +
                                              std::to_string(caps.afpAtomCap) + ")");
    }
    auto ev = makeGroundEval(scFree, vocab);
    std::vector<Interpretation> out;
    for (auto mask : fixpointScan(ev, mode)) out.push_back(ev.toInterpretation(mask));
    return out;
}

} // namespace

Interpretation atStep(const Program& p, const Interpretation& i) {
    auto reduced = autonomousReduction(p);
    auto vocabSet = varsOf(reduced);
    std::vector<Atom> vocab(vocabSet.begin(), vocabSet.end());
    auto ev = makeGroundEval(reduced, vocab);
    return ev.toInterpretation(ev.step(ev.toMask(i)));
}

std::vector<Interpretation> enumerateAFP(const Program& p, const Caps& caps, ExecMode mode) {
    return fixpointsOf(autonomousReduction(p), p, caps, mode);
}

Program guardedReduction(const Program& p) {
    Program out;
    out.id = p.id;
    for (const auto& r : p.rules) {
        if (r.isConstraint()) {
            if (r.hasSc()) continue; // only decidable socially
            out.rules.push_back(r);
            continue;
        }
        Rule nr;
        nr.headKind = r.headKind;
        nr.head = r.head;
        if (!r.isTolerance() && r.hasSc()) {
            // socially conditioned rule: the agent alone can only assume it
            BodyElement self;
            self.elem = BodyElement::Lit{Literal{r.head, false}};
            nr.body.push_back(std::move(self));
        }
        for (const auto& e : r.body)
            if (e.isLiteral()) nr.body.push_back(e);
        out.rules.push_back(std::move(nr));
    }
    return out;
}

std::vector<Interpretation> admissibleStates(const Program& p, const Caps& caps, ExecMode mode) {
    auto guarded = guardedReduction(p);
    // same vocabulary as the autonomous reduction: guarding only duplicates heads
    auto vocabSet = varStar(p);
    std::vector<Atom> vocab(vocabSet.begin(), vocabSet.end());
    if (static_cast<int>(vocab.size()) > caps.afpAtomCap || vocab.size() > 62) {
        throw CapExceeded("afp-atom-cap", "program '" + p.id + "' has " +
                                              std::to_string(vocab.size()) + " atoms (cap " +
                                              std::to_string(caps.afpAtomCap) + ")");
    }
    auto ev = makeGroundEval(guarded, vocab);
    std::vector<Interpretation> out;
    for (auto mask : fixpointScan(ev, mode)) out.push_back(ev.toInterpretation(mask));
    return out;
}

} // namespace solp
