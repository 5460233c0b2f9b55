#pragma once

#include "pathcell/element.hpp"

#include <string>
#include <vector>

namespace pathcell {

// One factor of a Massey product: [x] or [1-x] at an endpoint constant or a
// variable base. A common base is required only when canonical Totaro bounds
// are requested.
struct MasseyLetter {
    SymBase base;
    Flavor flavor;

    Element cocycle() const { return Element::steinberg(base, flavor); }
};

using MasseyWord = std::vector<MasseyLetter>;

// Bounding cochains for every proper contiguous subword w[i..j) of length >= 2.
// Length-1 bounds are the Steinberg symbols themselves.
class DefiningSystem {
  public:
    void set_bound(size_t i, size_t j, const Element& e); // subword [i, j)
    bool has_bound(size_t i, size_t j) const;
    const Element& bound(size_t i, size_t j) const;

  private:
    std::map<std::pair<size_t, size_t>, Element> bounds_;
};

// B(w[i..j)) := T_{flavors} at the common base (zero / oriented as forced).
// Throws if the word mixes bases and a bound of length >= 2 is needed.
DefiningSystem canonical_totaro_system(const MasseyWord& w);

// d applied to the formal Totaro generator; the differential rule of the cdga.
Element totaro_differential(SymBase base, const FlavorWord& w);

struct SystemFailure {
    size_t i, j;          // offending subword [i, j)
    std::string reason;   // "heterogeneous bound", "wrong bidegree", "boundary mismatch"
    Element residual;     // d(B) - required sum, when applicable
};

struct SystemReport {
    std::vector<SystemFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Verifies every boundary condition d(B(w')) = sum \bar{B}(left) B(right)
// exactly, along with homogeneity and bidegree of each bound.
SystemReport check_defining_system(const MasseyWord& w, const DefiningSystem& sys);

// The representative cocycle sum \bar{B}(w[0..i)) B(w[i..n)). Throws on an
// incomplete or incompatible system, naming the offending subword.
Element massey_representative(const MasseyWord& w, const DefiningSystem& sys);
Element massey_representative(const MasseyWord& w); // canonical bounds

// Indeterminacy of a triple product: the coset first*H + H*third, described
// symbolically by its two ideal generators.
struct TripleIndeterminacy {
    Element first;  // left generator, multiplied on the right by H
    Element third;  // right generator, multiplied on the left by H
    std::string describe() const;
};

TripleIndeterminacy triple_indeterminacy(const Element& first, const Element& third);

} // namespace pathcell
