#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "solp/autonomous.hpp"
#include "solp/generate.hpp"
#include "solp/reasoning.hpp"
#include "solp/social.hpp"

using namespace solp;
using namespace th;

namespace {

// a second, quantifier-literal evaluator
bool literalVerdict(const Collection& c, const Atom& x, QueryMode mode) {
    auto models = enumerateSocialModels(c);
    auto all = [&](const SocialInterpretation& m) {
        for (const auto& p : c.programs)
            if (!m.count({x, p.id})) return false;
        return true;
    };
    auto some = [&](const SocialInterpretation& m) {
        for (const auto& p : c.programs)
            if (m.count({x, p.id})) return true;
        return false;
    };
    switch (mode) {
        case QueryMode::SS: {
            for (const auto& m : models)
                if (!all(m)) return false;
            return true;
        }
        case QueryMode::IS: {
            for (const auto& m : models)
                if (!some(m)) return false;
            return true;
        }
        case QueryMode::SC: {
            for (const auto& m : models)
                if (all(m)) return true;
            return false;
        }
        case QueryMode::IC: {
            for (const auto& m : models)
                if (some(m)) return true;
            return false;
        }
    }
    return false;
}

} // namespace

TEST_CASE("wedding verdicts for go_wedding") {
    auto c = loadGolden("wedding.solp");
    Atom gw = at("go_wedding");

    auto ic = query(c, gw, QueryMode::IC);
    CHECK(ic.answer);
    REQUIRE(ic.witness.has_value());
    CHECK(!ic.witnessPrograms.empty());

    auto ss = query(c, gw, QueryMode::SS);
    CHECK_FALSE(ss.answer);
    REQUIRE(ss.witness.has_value()); // the empty model refutes it

    CHECK_FALSE(query(c, gw, QueryMode::IS).answer);
    CHECK_FALSE(query(c, gw, QueryMode::SC).answer);
}

TEST_CASE("a single empty model refutes every mode") {
    auto c = parseOrDie("#program p1.\n#program p2.");
    Atom x = at("x");
    CHECK_FALSE(query(c, x, QueryMode::SS).answer);
    CHECK_FALSE(query(c, x, QueryMode::IS).answer);
    CHECK_FALSE(query(c, x, QueryMode::SC).answer);
    CHECK_FALSE(query(c, x, QueryMode::IC).answer);
}

TEST_CASE("an empty model set makes skeptical modes vacuously true") {
    // a :- not a admits no admissible state, so there are no social models
    auto c = parseOrDie("#program p1. a :- not a.");
    REQUIRE(enumerateSocialModels(c).empty());
    Atom a = at("a");
    CHECK(query(c, a, QueryMode::SS).answer);
    CHECK(query(c, a, QueryMode::IS).answer);
    CHECK_FALSE(query(c, a, QueryMode::SC).answer);
    CHECK_FALSE(query(c, a, QueryMode::IC).answer);
}

TEST_CASE("mode implications and evaluator agreement on random instances") {
    std::mt19937 rng(83);
    testgen::GenOptions opt;
    opt.maxNesting = 1;
    opt.allowCappedUpper = true;
    for (int i = 0; i < 80; ++i) {
        auto c = testgen::randomCollection(rng, opt);
        Atom x = at(i % 2 ? "a" : "b");
        bool ss = query(c, x, QueryMode::SS).answer;
        bool is = query(c, x, QueryMode::IS).answer;
        bool sc = query(c, x, QueryMode::SC).answer;
        bool ic = query(c, x, QueryMode::IC).answer;
        INFO(printCollection(c));
        if (ss) CHECK(is);
        if (sc) CHECK(ic);
        if (ss && !enumerateSocialModels(c).empty()) CHECK(sc);
        CHECK(ss == literalVerdict(c, x, QueryMode::SS));
        CHECK(is == literalVerdict(c, x, QueryMode::IS));
        CHECK(sc == literalVerdict(c, x, QueryMode::SC));
        CHECK(ic == literalVerdict(c, x, QueryMode::IC));
    }
}

TEST_CASE("sigma translation adds one cardinal condition per rule") {
    Program p{"q", {rule("a", {bodyLit("b")})}};
    auto t = sigmaTranslate(p, 3);
    REQUIRE(t.rules.size() == 1);
    const auto& r = t.rules[0];
    CHECK(r.head == at("a"));
    REQUIRE(r.body.size() == 2);
    REQUIRE(r.body[0].isSc());
    const auto& sc = r.body[0].sc().sc;
    CHECK(sc.cond.cardinal().resolved == Bounds{2, 2});
    CHECK(sc.content == std::vector<Literal>{lit("a")});
    CHECK(r.body[1].literal() == lit("b"));

    Program tol{"q", {okayRule("p")}};
    auto t2 = sigmaTranslate(tol, 2);
    REQUIRE(t2.rules.size() == 1);
    CHECK(t2.rules[0].isTolerance());
    REQUIRE(t2.rules[0].body.size() == 1);
    CHECK(t2.rules[0].body[0].sc().sc.cond.cardinal().resolved == Bounds{1, 1});

    Program empty{"q", {}};
    CHECK(sigmaTranslate(empty, 4).rules.empty());
}

TEST_CASE("joint fixpoints of reference pairs") {
    Program a{"q1", {rule("a", {bodyLit("a")})}};
    Program b{"q2", {rule("a", {bodyLit("a")})}};
    auto joint = jointFixpoints({a, b});
    std::sort(joint.begin(), joint.end());
    CHECK(joint == std::vector<Interpretation>{{}, {at("a")}});

    Program factP{"q1", {fact("a")}};
    Program emptyP{"q2", {}};
    CHECK(jointFixpoints({factP, emptyP}).empty());
}

TEST_CASE("joint fixpoints are the pairwise intersection of fixpoint sets") {
    std::mt19937 rng(89);
    for (int i = 0; i < 80; ++i) {
        auto p1 = testgen::randomColp(rng, "q1", 3);
        auto p2 = testgen::randomColp(rng, "q2", 3);
        auto joint = jointFixpoints({p1, p2});
        std::sort(joint.begin(), joint.end());

        // reference: fixpoints over the union vocabulary, intersected
        std::set<Atom> unionVocabSet;
        for (const auto& a : varsOf(hatTransform(p1))) unionVocabSet.insert(a);
        for (const auto& a : varsOf(hatTransform(p2))) unionVocabSet.insert(a);
        std::vector<Atom> vocab(unionVocabSet.begin(), unionVocabSet.end());
        auto fpOver = [&](const Program& p) {
            auto ev = makeGroundEval(hatTransform(p), vocab);
            std::set<Interpretation> out;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << vocab.size()); ++m)
                if (ev.step(m) == m) out.insert(ev.toInterpretation(m));
            return out;
        };
        auto f1 = fpOver(p1);
        auto f2 = fpOver(p2);
        std::vector<Interpretation> expected;
        for (const auto& f : f1)
            if (f2.count(f)) expected.push_back(f);
        std::sort(expected.begin(), expected.end());
        CHECK(joint == expected);
    }
}

TEST_CASE("the correspondence holds on reference cases") {
    Program okayA{"q", {okayRule("a")}};
    Program copy1 = okayA;
    copy1.id = "q1";
    Program copy2 = okayA;
    copy2.id = "q2";
    auto rep = checkJfpCorrespondence({copy1, copy2});
    CHECK(rep.ok);
    std::sort(rep.joint.begin(), rep.joint.end());
    CHECK(rep.joint == std::vector<Interpretation>{{}, {at("a")}});
    REQUIRE(rep.socialModels.size() == 2);
    CHECK(rep.socialModels[0] == SocialInterpretation{});
    CHECK(rep.socialModels[1] == social({{"a", "q1"}, {"a", "q2"}}));

    // a single program: the translated condition [0,0] holds via the empty set
    Program solo{"q", {fact("h"), okayRule("t", {bodyLit("h")})}};
    auto rep1 = checkJfpCorrespondence({solo});
    CHECK(rep1.ok);
    auto fp = hatFixpoints(solo);
    CHECK(rep1.joint.size() == fp.size());
}

TEST_CASE("the correspondence holds on random COLP collections") {
    std::mt19937 rng(97);
    for (int i = 0; i < 100; ++i) {
        int n = 1 + static_cast<int>(rng() % 2);
        std::vector<Program> ps;
        for (int k = 1; k <= n; ++k)
            ps.push_back(testgen::randomColp(rng, "q" + std::to_string(k), 4));
        auto rep = checkJfpCorrespondence(ps);
        INFO(rep.detail);
        CHECK(rep.ok);
    }
}

TEST_CASE("hat fixpoints equal the autonomous fixpoints of the translation for any n") {
    std::mt19937 rng(101);
    for (int i = 0; i < 40; ++i) {
        auto p = testgen::randomColp(rng, "q", 4);
        auto lhs = hatFixpoints(p);
        std::sort(lhs.begin(), lhs.end());
        for (long long n = 1; n <= 4; ++n) {
            auto rhs = enumerateAFP(sigmaTranslate(p, n));
            std::sort(rhs.begin(), rhs.end());
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("COLP detection") {
    CHECK(isColpProgram(Program{"q", {fact("a"), okayRule("b", {bodyLit("a")})}}));
    CHECK_FALSE(isColpProgram(Program{"q", {constraint({bodyLit("a")})}}));
    CHECK_FALSE(
        isColpProgram(Program{"q", {rule("a", {bodySc(memberSc("q", {lit("b")}))})}}));
}
