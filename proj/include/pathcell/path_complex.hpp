#pragma once

#include "pathcell/faces.hpp"
#include "pathcell/module.hpp"

#include <map>
#include <string>
#include <vector>

namespace pathcell {

// Element of one level of the cochain-model column B_k: an Element of the
// face cdga for each face of the level.
using BElt = std::map<int, Element>;

BElt b_add(const BElt& x, const BElt& y);
BElt b_scale(const Element& c, const BElt& x);
BElt b_negate(const BElt& x);
bool b_is_zero(const BElt& x);

struct VerificationReport {
    std::vector<std::string> failures;
    size_t c_columns_checked = 0;
    size_t b_paths_checked = 0;
    size_t b_generators_checked = 0;
    size_t hc_bh_cells_checked = 0;
    bool ok() const { return failures.empty(); }
};

// The cellular model of the path-torsor complex for X = P^1 - {0,1,infty}
// with endpoints a != b: free columns C_k, cochain columns B_k, the maps
// alpha/beta/f and the homotopy families h_i^k (cell side) and H_i^k
// (comparison side), all built from the closed formulas.
class PathComplex {
  public:
    explicit PathComplex(int n);

    int n() const { return n_; }
    const std::vector<std::vector<Face>>& levels() const { return levels_; }

    const CellModule& C(int k) const { return C_[k]; }
    int cell_index(int k, int face, const FaceWord& w) const;
    const std::pair<int, FaceWord>& cell_origin(int k, int idx) const {
        return origins_[k][idx];
    }

    const ModuleMap& alpha(int k) const { return alpha_[k]; } // C_k -> C_{k-1}, 1 <= k <= n

    // f_k on a basis cell: the inclusion of the word as a product of
    // variable Steinberg symbols of its face.
    BElt f_value(int k, int cell) const;

    // beta_k applied to a level-k element, with the alternating coface signs.
    BElt beta(int k, const BElt& x) const;

    // h_i^k : C_i -> C_{i-k}, closed form, zero map when out of range.
    const ModuleMap& h_closed(int i, int k) const;
    // H_i^k value on a basis cell of C_i, landing in level i-k; k >= 1.
    const BElt& H_closed(int i, int k, int cell) const;

    // Totalization of the C column with the overline-twisted subdiagonals.
    Totalization totalize_C() const;

    // Full verification: D_C^2 = 0, D_B^2 = 0 (per-face differentials,
    // coface chain-commutation, two-step path cancellation) and HC = BH.
    VerificationReport verify() const;

  private:
    void build_cells();
    void build_alpha();
    void build_h();
    void build_H();

    int n_;
    std::vector<std::vector<Face>> levels_;
    std::vector<CellModule> C_;
    std::vector<std::vector<std::pair<int, FaceWord>>> origins_;
    std::vector<std::map<std::pair<int, FaceWord>, int>> index_;
    std::vector<ModuleMap> alpha_;
    // h_[i][k], 2 <= k <= i; H_[i][k], 1 <= k <= i (values per cell)
    std::vector<std::vector<ModuleMap>> h_;
    std::vector<std::vector<std::vector<BElt>>> Hval_;
};

// Independent reconstruction of the homotopy families by solving the
// coherence equations degree by degree, expressing every required boundary
// in the canonical Totaro catalog. Throws when a residual is not a catalog
// boundary (a genuinely new Massey obstruction).
struct InductiveFamilies {
    // same shapes as the closed tables
    std::vector<std::vector<ModuleMap>> h;
    std::vector<std::vector<std::vector<BElt>>> Hval;
};

InductiveFamilies homotopy_inductive(const PathComplex& pc);

// exact boundary solve: find x with d(x) = r supported on monomials over the
// given generator pool, preferring earlier candidates; nullopt if r is not a
// boundary of the pool span.
std::optional<Element> solve_boundary(const Element& r, const std::vector<Element>& preferred,
                                      const std::vector<Symbol>& pool);

// Finite Adams-capped snapshot of one cochain column level: every face's
// variable monomials through the cap, as a free module over the constants
// with the face differential. Makes the comparison data into honest module
// maps for the dg-module toolkit.
struct BLevelModule {
    int level = 0;
    int cap = 0;
    CellModule mod;
    std::vector<std::pair<int, Monomial>> basis;  // cell -> (face, monomial)
    std::map<std::pair<int, Monomial>, int> index; // (face, monomial) -> cell
};

BLevelModule b_level_module(const PathComplex& pc, int level, int cap);

// expand a face element into snapshot cells with constant coefficients
ModElt decompose_into(const BLevelModule& snap, int face, const Element& x);

ModuleMap beta_map(const PathComplex& pc, const BLevelModule& src, const BLevelModule& tgt);
ModuleMap f_map(const PathComplex& pc, int level, const BLevelModule& tgt);   // C_l -> B_l
ModuleMap H_map(const PathComplex& pc, int i, int k, const BLevelModule& tgt); // C_i -> B_{i-k}

// the comparison matrix H as one module map between the two totalizations
ModuleMap assemble_H(const PathComplex& pc, const Totalization& totC,
                     const std::vector<BLevelModule>& blevels, const Totalization& totB);

} // namespace pathcell
