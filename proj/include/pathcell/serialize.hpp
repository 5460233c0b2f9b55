#pragma once

#include "pathcell/minimal.hpp"
#include "pathcell/path_complex.hpp"

#include <string>

namespace pathcell {

enum class EmitFormat { json, latex, text };

// {basis: [{label, bidegree}], entries: [{row, col, element}]} with "d" on
// the diagonal; deterministic and byte-stable.
std::string matrix_json(const CellModule& m, bool diagonal_d = true);
std::string matrix_latex(const CellModule& m, bool diagonal_d = true);
std::string matrix_text(const CellModule& m, bool diagonal_d = true);

std::string emit_matrix(const CellModule& m, EmitFormat f, bool diagonal_d = true);

// full `complex build` artifact: C/B/H and the verification report
std::string complex_json(const PathComplex& pc, const Totalization& tot,
                         const VerificationReport& rep);
std::string complex_latex(const PathComplex& pc);
std::string report_json(const VerificationReport& rep);

} // namespace pathcell
