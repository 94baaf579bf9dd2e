#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "solp/analysis.hpp"
#include "solp/generate.hpp"
#include "solp/parser.hpp"
#include "solp/reasoning.hpp"
#include "solp/social.hpp"
#include "solp/translate.hpp"
#include "solp/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitIo = 2;
constexpr int kExitCaps = 3;
constexpr int kExitQueryFalse = 10;

struct Options {
    std::vector<std::string> paths;
    std::string format = "text";
    std::string out;
    std::string mode;
    std::string atomText;
    long long nOverride = 0;
    unsigned seed = 1;
    int randomRuns = 0;
    bool serial = false;
    solp::Caps caps;
};

long long envCap(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoll(v);
    } catch (...) {
        return fallback;
    }
}

solp::ExecMode execMode(const Options& o) {
    return o.serial ? solp::ExecMode::Serial : solp::ExecMode::Parallel;
}

// A path may be a .solp file or a directory of them (alphabetical order).
bool readSources(const std::vector<std::string>& paths, std::vector<solp::SourceUnit>& out) {
    for (const auto& path : paths) {
        std::error_code ec;
        if (fs::is_directory(path, ec)) {
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(path, ec)) {
                if (entry.path().extension() == ".solp") files.push_back(entry.path());
            }
            if (ec) {
                std::cerr << "error: cannot read directory " << path << "\n";
                return false;
            }
            std::sort(files.begin(), files.end());
            for (const auto& f : files) {
                std::ifstream in(f);
                if (!in) {
                    std::cerr << "error: cannot open " << f.string() << "\n";
                    return false;
                }
                std::stringstream ss;
                ss << in.rdbuf();
                out.push_back({f.string(), ss.str()});
            }
        } else {
            std::ifstream in(path);
            if (!in) {
                std::cerr << "error: cannot open " << path << "\n";
                return false;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            out.push_back({path, ss.str()});
        }
    }
    return true;
}

int loadCollection(const Options& o, solp::Collection& out) {
    std::vector<solp::SourceUnit> sources;
    if (!readSources(o.paths, sources)) return kExitIo;
    auto parsed = solp::parseCollection(sources);
    for (const auto& d : parsed.diagnostics) std::cerr << d.format() << "\n";
    if (!parsed.ok()) return kExitInput;
    out = std::move(*parsed.collection);
    return kExitOk;
}

bool writeOutput(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return true;
    }
    std::ofstream out(o.out, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << o.out << "\n";
        return false;
    }
    out << text;
    return true;
}

// program index first, then atom; the canonical report order
std::vector<solp::LabeledAtom> sortedModel(const solp::Collection& c,
                                           const solp::SocialInterpretation& m) {
    std::vector<solp::LabeledAtom> atoms(m.begin(), m.end());
    std::sort(atoms.begin(), atoms.end(),
              [&](const solp::LabeledAtom& x, const solp::LabeledAtom& y) {
                  int px = c.indexOf(x.programId), py = c.indexOf(y.programId);
                  return std::tie(px, x.atom) < std::tie(py, y.atom);
              });
    return atoms;
}

std::string renderModelText(const solp::Collection& c, const solp::SocialInterpretation& m) {
    auto atoms = sortedModel(c, m);
    std::string s = "{";
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (i) s += ", ";
        s += atoms[i].toString();
    }
    return s + "}";
}

std::vector<solp::SocialInterpretation> canonicalModels(
    const solp::Collection& c, std::vector<solp::SocialInterpretation> models) {
    std::sort(models.begin(), models.end(),
              [&](const solp::SocialInterpretation& a, const solp::SocialInterpretation& b) {
                  auto ka = sortedModel(c, a), kb = sortedModel(c, b);
                  auto key = [&](const std::vector<solp::LabeledAtom>& v) {
                      std::vector<std::tuple<int, solp::Atom>> k;
                      for (const auto& la : v) k.emplace_back(c.indexOf(la.programId), la.atom);
                      return k;
                  };
                  return key(ka) < key(kb);
              });
    return models;
}

int cmdCheck(const Options& o) {
    solp::Collection c;
    return loadCollection(o, c);
}

int cmdSolve(const Options& o) {
    solp::Collection c;
    if (int rc = loadCollection(o, c)) return rc;
    try {
        auto models = canonicalModels(c, solp::enumerateSocialModels(c, o.caps, execMode(o)));
        if (o.format == "json") {
            json arr = json::array();
            for (const auto& m : models) {
                json jm = json::array();
                for (const auto& la : sortedModel(c, m)) {
                    jm.push_back({{"program", la.programId},
                                  {"predicate", la.atom.predicate},
                                  {"args", la.atom.args}});
                }
                arr.push_back(std::move(jm));
            }
            if (!writeOutput(o, arr.dump(2) + "\n")) return kExitIo;
        } else {
            std::string text;
            for (const auto& m : models) text += renderModelText(c, m) + "\n";
            if (!writeOutput(o, text)) return kExitIo;
        }
    } catch (const solp::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCaps;
    }
    return kExitOk;
}

int cmdTranslate(const Options& o) {
    solp::Collection c;
    if (int rc = loadCollection(o, c)) return rc;
    try {
        auto lpa = solp::translateAll(c);
        if (!writeOutput(o, solp::emitText(lpa))) return kExitIo;
    } catch (const solp::TranslationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}

int reportVerify(const solp::Collection& c, const solp::VerifyResult& r, const std::string& label) {
    if (r.equal) {
        std::cout << label << "equal (" << r.direct.size() << " models)\n";
        return kExitOk;
    }
    std::cout << label << "MISMATCH\n";
    std::cout << "  direct social models (" << r.direct.size() << "):\n";
    for (const auto& m : r.direct) std::cout << "    " << renderModelText(c, m) << "\n";
    std::cout << "  projected answer sets (" << r.projected.size() << "):\n";
    for (const auto& m : r.projected) std::cout << "    " << renderModelText(c, m) << "\n";
    return kExitInput;
}

int cmdVerify(const Options& o) {
    try {
        if (o.randomRuns > 0) {
            std::mt19937 rng(o.seed);
            solp::testgen::GenOptions gen;
            int failures = 0;
            for (int i = 0; i < o.randomRuns; ++i) {
                auto c = solp::testgen::randomCollection(rng, gen);
                auto r = solp::verifyEquivalence(c, o.caps, execMode(o));
                if (!r.equal) {
                    ++failures;
                    std::cout << "instance " << i << " (seed " << o.seed << "):\n"
                              << solp::printCollection(c);
                    reportVerify(c, r, "  ");
                }
            }
            std::cout << (o.randomRuns - failures) << "/" << o.randomRuns << " random instances equal\n";
            return failures ? kExitInput : kExitOk;
        }
        solp::Collection c;
        if (int rc = loadCollection(o, c)) return rc;
        auto r = solp::verifyEquivalence(c, o.caps, execMode(o));
        return reportVerify(c, r, "");
    } catch (const solp::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCaps;
    } catch (const solp::TranslationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

int cmdQuery(const Options& o) {
    solp::Collection c;
    if (int rc = loadCollection(o, c)) return rc;
    auto mode = solp::queryModeFromString(o.mode);
    if (!mode) {
        std::cerr << "error: unknown mode '" << o.mode << "' (expected ss|is|sc|ic)\n";
        return kExitInput;
    }
    auto atom = solp::parseAtomText(o.atomText);
    if (!atom) {
        std::cerr << "error: cannot parse atom '" << o.atomText << "'\n";
        return kExitInput;
    }
    bool known = false;
    for (const auto& p : c.programs)
        if (solp::varsOf(p).count(*atom)) known = true;
    if (!known)
        std::cerr << "warning: atom " << atom->toString() << " occurs in no program\n";
    try {
        auto v = solp::query(c, *atom, *mode, o.caps, execMode(o));
        if (o.format == "json") {
            json j = {{"mode", solp::to_string(*mode)},
                      {"atom", atom->toString()},
                      {"answer", v.answer}};
            if (v.witness) j["witness"] = renderModelText(c, *v.witness);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << (v.answer ? "true" : "false") << "\n";
            if (v.witness) {
                std::cout << (v.answer ? "witness: " : "refuted by: ")
                          << renderModelText(c, *v.witness) << "\n";
            }
        }
        return v.answer ? kExitOk : kExitQueryFalse;
    } catch (const solp::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCaps;
    }
}

int cmdJfp(const Options& o) {
    solp::Collection c;
    if (int rc = loadCollection(o, c)) return rc;
    for (const auto& p : c.programs) {
        if (!solp::isColpProgram(p)) {
            std::cerr << "error: not a COLP collection (program '" << p.id
                      << "' has social conditions or constraints)\n";
            return kExitInput;
        }
    }
    std::vector<solp::Program> ps = c.programs;
    if (o.nOverride > 0) {
        if (ps.size() == 1 && o.nOverride > 1) {
            auto base = ps[0];
            ps.clear();
            for (long long i = 1; i <= o.nOverride; ++i) {
                auto copy = base;
                copy.id = base.id + std::to_string(i);
                ps.push_back(std::move(copy));
            }
        } else if (o.nOverride != static_cast<long long>(ps.size())) {
            std::cerr << "error: --n must match the number of programs (or replicate a single one)\n";
            return kExitInput;
        }
    }
    try {
        auto rep = solp::checkJfpCorrespondence(ps, o.caps, execMode(o));
        std::cout << "joint fixpoints: " << rep.joint.size() << "\n";
        for (const auto& f : rep.joint) std::cout << "  " << solp::renderSet(f) << "\n";
        std::cout << "social models of the translation: " << rep.socialModels.size() << "\n";
        if (rep.ok) {
            std::cout << "correspondence holds\n";
            return kExitOk;
        }
        std::cout << "correspondence FAILED: " << rep.detail << "\n";
        return kExitInput;
    } catch (const solp::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCaps;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"solp: social logic programs: models, translation, queries"};
    app.require_subcommand(1);

    Options o;
    o.caps.afpAtomCap = static_cast<int>(envCap("SOLP_AFP_CAP", 20));
    o.caps.candidateCap = envCap("SOLP_CAND_CAP", 1000000);
    o.caps.oracleUniverseCap = static_cast<int>(envCap("SOLP_ORACLE_CAP", 22));

    auto addCommon = [&](CLI::App* cmd, bool needsPaths = true) {
        if (needsPaths)
            cmd->add_option("paths", o.paths, "input .solp files or directories")->required();
        cmd->add_option("--afp-cap", o.caps.afpAtomCap, "per-program atom cap for fixpoint scans");
        cmd->add_option("--cand-cap", o.caps.candidateCap, "candidate product cap");
        cmd->add_option("--oracle-cap", o.caps.oracleUniverseCap, "generic oracle universe cap");
        cmd->add_flag("--serial", o.serial, "disable parallel enumeration");
    };

    auto* check = app.add_subcommand("check", "parse and validate a collection");
    addCommon(check);

    auto* solve = app.add_subcommand("solve", "enumerate the social models");
    addCommon(solve);
    solve->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    solve->add_option("--out", o.out, "output path (default stdout)");

    auto* translate = app.add_subcommand("translate", "emit the aggregate-program translation");
    addCommon(translate);
    translate->add_option("--out", o.out, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify",
                                      "compare direct social models with the translation's answer sets");
    verify->add_option("paths", o.paths, "input .solp files or directories");
    verify->add_option("--afp-cap", o.caps.afpAtomCap, "per-program atom cap for fixpoint scans");
    verify->add_option("--cand-cap", o.caps.candidateCap, "candidate product cap");
    verify->add_option("--oracle-cap", o.caps.oracleUniverseCap, "generic oracle universe cap");
    verify->add_flag("--serial", o.serial, "disable parallel enumeration");
    verify->add_option("--random", o.randomRuns, "verify N random collections instead of files");
    verify->add_option("--seed", o.seed, "seed for --random");

    auto* queryCmd = app.add_subcommand("query", "decide a reasoning mode for an atom");
    addCommon(queryCmd);
    queryCmd->add_option("--mode", o.mode, "ss|is|sc|ic")->required();
    queryCmd->add_option("--atom", o.atomText, "queried atom, e.g. go_wedding or at(2)")->required();
    queryCmd->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* jfp = app.add_subcommand("jfp", "joint-fixpoint correspondence for a COLP collection");
    addCommon(jfp);
    jfp->add_option("--n", o.nOverride, "replicate a single program n times");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmdCheck(o);
        if (solve->parsed()) return cmdSolve(o);
        if (translate->parsed()) return cmdTranslate(o);
        if (verify->parsed()) return cmdVerify(o);
        if (queryCmd->parsed()) return cmdQuery(o);
        if (jfp->parsed()) return cmdJfp(o);
    } catch (const solp::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCaps;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
