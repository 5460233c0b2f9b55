#pragma once

#include "pathcell/path_complex.hpp"

namespace pathcell {

// Minimal cell module extracted from the totalized column: one 2^k layer of
// flavor words per level k <= n, differential entries given by the descended
// endpoint differences and homotopy values.
struct MinimalModule {
    CellModule module;
    int n = 0;
    std::vector<FlavorWord> words; // basis order: by length, then plain < complement
};

MinimalModule minimize(int n);

// Every off-diagonal differential entry must have vanishing unit part.
bool check_minimal(const MinimalModule& m);

// [(0,1), (-1,2), ..., (-n, 2^n)]
std::vector<std::pair<int, long long>> weight_layers(const MinimalModule& m);

// The quotient chain map from the totalized C column onto the minimal module:
// a top-length word maps to its abstract word, everything shorter dies.
ModuleMap quotient_map(const PathComplex& pc, const Totalization& tot, const MinimalModule& m);

} // namespace pathcell
