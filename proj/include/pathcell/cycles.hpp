#pragma once

#include "pathcell/fraclin.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pathcell {

// Signed parametrized cycle in the cube: q coordinates, each a fractional-
// linear expression in parameters x1..xp and the symbolic constant a, with
// box = P^1 - {1} (faces at 0 and infinity, the value 1 excluded).
struct ParamCycle {
    Rat coeff{1};
    int params = 0;
    std::vector<RatFunc> coords;

    int dim() const { return (int)coords.size(); }
    std::string str() const;
};

using CycleSum = std::vector<ParamCycle>;

std::string cycle_sum_str(const CycleSum& s);

// point cycle with the given coordinate values (no parameters)
ParamCycle point_cycle(const std::vector<RatFunc>& values, const Rat& coeff = Rat(1));

// product = coordinate concatenation, parameters renumbered apart
ParamCycle cycle_product(const ParamCycle& x, const ParamCycle& y);

struct FaceResult {
    enum class Status { ok, empty, degenerate } status;
    CycleSum value; // empty unless ok
    std::string note;
};

// Solve coordinate j = eps (0 or infinity), substitute, drop the coordinate.
// Coordinates leaving box (value 1) give the empty sum.
FaceResult face_restrict(const ParamCycle& z, int j, bool at_infinity);

// sum_j (-1)^{j-1} (face_j^0 - face_j^inf)
CycleSum cycle_differential(const ParamCycle& z);
CycleSum cycle_differential(const CycleSum& s);

// Canonical representative of the alternating class: parameters are anchored
// to fractional-linear coordinates, coordinates sorted with the permutation
// sign; terms symmetric under an odd permutation vanish.
CycleSum alt_canonical(const CycleSum& s);

// literal (1/q!) sum of signed coordinate permutations
CycleSum alt_project(const CycleSum& s);

bool alt_class_equal(const CycleSum& x, const CycleSum& y);
bool raw_equal(const CycleSum& x, const CycleSum& y);

// the Bloch-Totaro family: rho(1) = [a], rho(n) the (2n-1)-coordinate cycle
ParamCycle rho(int n);

struct BlochTotaroReport {
    bool alt_equal = false;
    bool raw_equal = false;
    CycleSum lhs; // d rho_n, canonicalized
    CycleSum rhs; // the comparison product, canonicalized
    std::string describe() const;
};

// d rho_n against rho_{n-1} * [a] (n >= 3) or [a] x [1-a] (n = 2), compared
// as alternating classes; the raw comparison is recorded alongside.
BlochTotaroReport verify_bloch_totaro(int n);

// the four-term two-parameter representative; the sign pattern
// (+1/2, -1/2, -1/2, +1/2) is the unique one (up to a global sign) under
// which the displayed cycles form a cocycle
CycleSum fourfold_representative();
// the expression with the uniform +1/2 coefficients of the display
CycleSum fourfold_displayed();

struct FourfoldReport {
    bool raw_zero = false;
    bool alt_zero = false;
    CycleSum residual_alt;
    bool displayed_signs_zero = false; // the uniform-sign variant
    CycleSum displayed_residual;
    std::string describe() const;
};

FourfoldReport verify_fourfold();

} // namespace pathcell
