// Times the serial reference kernels against the OpenMP ones on synthetic
// instances of growing size.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "solp/analysis.hpp"
#include "solp/autonomous.hpp"
#include "solp/generate.hpp"
#include "solp/oracle.hpp"
#include "solp/social.hpp"
#include "solp/translate.hpp"

using namespace solp;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double timeMs(F&& f) {
    auto t0 = Clock::now();
    f();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void row(const std::string& name, double serialMs, double parallelMs) {
    std::printf("%-38s %10.1f ms %10.1f ms %8.2fx\n", name.c_str(), serialMs, parallelMs,
                parallelMs > 0 ? serialMs / parallelMs : 0.0);
}

// one program with k atoms and enough rules to make the scan non-trivial
Program chainProgram(int k) {
    Program p{"bench", {}};
    for (int i = 0; i + 1 < k; ++i) {
        Rule r;
        r.head = Atom{"x" + std::to_string(i), {}};
        BodyElement e;
        e.elem = BodyElement::Lit{Literal{Atom{"x" + std::to_string(i + 1), {}}, i % 2 == 0}};
        r.body.push_back(e);
        p.rules.push_back(std::move(r));
    }
    Rule last;
    last.head = Atom{"x" + std::to_string(k - 1), {}};
    BodyElement e;
    e.elem = BodyElement::Lit{Literal{Atom{"x0", {}}, false}};
    last.body.push_back(e);
    p.rules.push_back(std::move(last));
    return p;
}

} // namespace

int main(int argc, char** argv) {
    int atoms = argc > 1 ? std::stoi(argv[1]) : 22;
    Caps caps;
    caps.afpAtomCap = 26;
    caps.candidateCap = 1 << 26;
    caps.oracleUniverseCap = 22;

    std::printf("%-38s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    auto chain = chainProgram(atoms);
    std::vector<Interpretation> afpS, afpP;
    double s1 = timeMs([&] { afpS = enumerateAFP(chain, caps, ExecMode::Serial); });
    double p1 = timeMs([&] { afpP = enumerateAFP(chain, caps, ExecMode::Parallel); });
    row("fixpoint scan, 2^" + std::to_string(atoms) + " states", s1, p1);
    if (afpS != afpP) {
        std::fprintf(stderr, "kernel mismatch in the fixpoint scan\n");
        return 1;
    }

    // a wide candidate product with few surviving models: okay-heavy programs
    // whose ready-flag is socially conditioned and required by a constraint
    auto wide = [](int programs, int atoms) {
        Collection c;
        for (int i = 1; i <= programs; ++i) {
            Program p{"w" + std::to_string(i), {}};
            for (int j = 0; j < atoms; ++j) {
                Rule r;
                r.headKind = Rule::HeadKind::Okay;
                r.head = Atom{"a" + std::to_string(j), {}};
                p.rules.push_back(std::move(r));
            }
            Rule social;
            social.head = Atom{"ready", {}};
            SocialCondition sc;
            sc.cond.sel = CardinalSelection{BoundExpr::number(Rational(2)),
                                            BoundExpr::number(Rational(3)), {}};
            sc.content.push_back(Literal{Atom{"a0", {}}, false});
            sc.content.push_back(Literal{Atom{"a1", {}}, true});
            BodyElement e;
            e.elem = BodyElement::Sc{std::move(sc), false};
            social.body.push_back(std::move(e));
            p.rules.push_back(std::move(social));
            Rule require;
            require.headKind = Rule::HeadKind::Constraint;
            BodyElement notReady;
            notReady.elem = BodyElement::Lit{Literal{Atom{"ready", {}}, true}};
            require.body.push_back(std::move(notReady));
            p.rules.push_back(std::move(require));
            c.programs.push_back(std::move(p));
        }
        auto diags = validateCollection(c);
        (void)diags;
        return c;
    };
    auto c = wide(4, 5); // candidate product of 2^20 states
    std::vector<SocialInterpretation> socS, socP;
    double s2 = timeMs([&] { socS = enumerateSocialModels(c, caps, ExecMode::Serial); });
    double p2 = timeMs([&] { socP = enumerateSocialModels(c, caps, ExecMode::Parallel); });
    row("social candidate filtering, 2^20", s2, p2);
    if (socS != socP) {
        std::fprintf(stderr, "kernel mismatch in the social filter\n");
        return 1;
    }

    // answer-set scans on translated collections
    std::mt19937 rng(1);
    auto pair = testgen::GenOptions{};
    pair.maxPrograms = 2;
    pair.maxAtoms = 3;
    pair.maxRules = 3;
    pair.maxScs = 1;
    auto c2 = testgen::randomCollection(rng, pair);
    auto lpa = translateAll(c2);
    while (lpa.atomCount() > 22 || lpa.atomCount() < 14) {
        c2 = testgen::randomCollection(rng, pair);
        lpa = translateAll(c2);
    }
    std::vector<Bitset> genS, genP;
    double s3 = timeMs([&] { genS = enumerateAnswerSetsGeneric(lpa, caps, ExecMode::Serial); });
    double p3 = timeMs([&] { genP = enumerateAnswerSetsGeneric(lpa, caps, ExecMode::Parallel); });
    row("answer-set scan, 2^" + std::to_string(lpa.atomCount()) + " subsets", s3, p3);
    if (genS != genP) {
        std::fprintf(stderr, "kernel mismatch in the answer-set scan\n");
        return 1;
    }

    auto lpaWide = translateAll(wide(3, 5)); // 18 guessed atoms
    std::vector<Bitset> stS, stP;
    double s4 =
        timeMs([&] { stS = enumerateAnswerSetsStructured(lpaWide, caps, ExecMode::Serial); });
    double p4 =
        timeMs([&] { stP = enumerateAnswerSetsStructured(lpaWide, caps, ExecMode::Parallel); });
    row("structured guess layer, 2^20", s4, p4);
    return stS == stP ? 0 : 1;
}
