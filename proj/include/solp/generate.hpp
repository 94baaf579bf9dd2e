#pragma once

#include <random>
#include <vector>

#include "solp/ast.hpp"

namespace solp::testgen {

struct GenOptions {
    int maxPrograms = 3;
    int maxAtoms = 3;   // shared atom pool size
    int maxRules = 3;   // per program
    int maxScs = 2;     // per program
    int maxNesting = 0; // 0: simple social conditions only
    bool allowOkay = true;
    bool allowConstraints = true;
    // explicit upper bounds below n-1; these expose the divergence between
    // the subset reading of cardinal conditions and the count aggregate in
    // the translation, so the equivalence family keeps them off
    bool allowCappedUpper = false;
};

// A validated random collection (resolved bounds filled in).
Collection randomCollection(std::mt19937& rng, const GenOptions& opt);

// A random COLP program: classical + okay rules only.
Program randomColp(std::mt19937& rng, const std::string& id, int maxAtoms, int maxRules = 3);

} // namespace solp::testgen
