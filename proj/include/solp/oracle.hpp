#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "solp/ast.hpp"
#include "solp/exec.hpp"
#include "solp/translate.hpp"

namespace solp {

// Model over an LpaProgram's atom table.
struct Bitset {
    std::vector<std::uint64_t> w;
    int bits = 0;

    Bitset() = default;
    explicit Bitset(int n) : w((n + 63) / 64, 0), bits(n) {}
    bool test(int i) const { return w[i >> 6] & (std::uint64_t{1} << (i & 63)); }
    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    int count() const;

    friend bool operator==(const Bitset&, const Bitset&) = default;
    friend auto operator<=>(const Bitset& a, const Bitset& b) { return a.w <=> b.w; }
};

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exhaustive FLP answer-set search: every subset of the atom universe is
// tested for rule satisfaction and for minimality of the reduct. Works for
// any program within the universe cap.
std::vector<Bitset> enumerateAnswerSetsGeneric(const LpaProgram& p, const Caps& caps = {},
                                               ExecMode mode = ExecMode::Parallel);

// Backend for programs produced by translateAll: only the base-atom layer is
// guessed, everything else follows by stratified evaluation (deeper SC
// auxiliaries first), and a candidate is accepted when every support atom
// matches its base atom and no constraint body holds.
std::vector<Bitset> enumerateAnswerSetsStructured(const LpaProgram& p, const Caps& caps = {},
                                                  ExecMode mode = ExecMode::Parallel);

// Keep the base atoms only and un-label them.
SocialInterpretation projectToSocial(const Bitset& model, const LpaProgram& p);

std::string renderModel(const Bitset& model, const LpaProgram& p);

// True when the model satisfies every rule; independent re-validation hook.
bool satisfiesAllRules(const Bitset& model, const LpaProgram& p);

} // namespace solp
