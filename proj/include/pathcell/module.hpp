#pragma once

#include "pathcell/element.hpp"

#include <functional>
#include <string>
#include <vector>

namespace pathcell {

struct Cell {
    std::string label;
    Bidegree deg;
};

// Element of a based module: coefficients (constants-algebra Elements)
// indexed by cell.
using ModElt = std::map<int, Element>;

ModElt mod_add(const ModElt& x, const ModElt& y);
ModElt mod_scale(const Element& c, const ModElt& x); // plain left multiplication
ModElt mod_negate(const ModElt& x);
bool mod_is_zero(const ModElt& x);
std::string mod_str(const ModElt& x, const std::vector<Cell>& cells);

// Free dg module over the formal cdga with a finite cell basis. The
// differential is a matrix of Elements; d(c*e) = d(c)e + (-1)^{|c|} c d(e).
class CellModule {
  public:
    CellModule() = default;
    explicit CellModule(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    size_t rank() const { return cells_.size(); }
    const std::vector<Cell>& cells() const { return cells_; }
    const Cell& cell(int i) const { return cells_[i]; }

    int add_cell(const std::string& label, Bidegree deg);
    void set_entry(int row, int col, const Element& e);
    const std::vector<std::pair<int, Element>>& column(int col) const { return diff_[col]; }

    // d of a basis cell as a module element.
    ModElt d_basis(int col) const;
    // d of a general element via the Leibniz rule.
    ModElt d(const ModElt& x) const;

    struct Residual {
        int row, col;
        Element value;
    };
    // dికి d = 0 checked entry by entry; empty means the module is valid.
    std::vector<Residual> d_squared_residuals() const;

  private:
    std::string name_;
    std::vector<Cell> cells_;
    std::vector<std::vector<std::pair<int, Element>>> diff_; // column major
};

// Map of based modules, entries in left-coefficient normal form. `shift` is
// the bidegree of the map; applying to c*e crosses c with sign
// (-1)^{shift.p * |c|}.
class ModuleMap {
  public:
    ModuleMap() = default;
    ModuleMap(const CellModule* src, const CellModule* tgt, Bidegree shift = {0, 0});

    const CellModule* source() const { return src_; }
    const CellModule* target() const { return tgt_; }
    Bidegree shift() const { return shift_; }

    void set_value(int col, const ModElt& v);
    void add_value(int col, int row, const Element& e);
    const ModElt& value(int col) const { return cols_[col]; }

    ModElt apply_basis(int col) const { return cols_[col]; }
    // Koszul application per the declared shift.
    ModElt apply(const ModElt& x) const;
    // Application with no coefficient sign (interval-on-the-right homotopies).
    ModElt apply_strict(const ModElt& x) const;

    // Entry-level homogeneity check against source/target bidegrees.
    bool entries_homogeneous(std::string* complaint = nullptr) const;

  private:
    const CellModule* src_ = nullptr;
    const CellModule* tgt_ = nullptr;
    Bidegree shift_{0, 0};
    std::vector<ModElt> cols_;
};

ModuleMap identity_map(const CellModule& m);
ModuleMap zero_map(const CellModule& src, const CellModule& tgt, Bidegree shift = {0, 0});
ModuleMap compose(const ModuleMap& g, const ModuleMap& f); // g after f

// d_tgt(F(e)) - (-1)^{shift.p} F(d_src(e)) per basis cell; empty <=> chain map.
std::vector<CellModule::Residual> chain_map_residuals(const ModuleMap& f);
bool is_chain_map(const ModuleMap& f);

// {n} shift: bidegrees move by (-n, -n); adams_shift moves only the weight.
CellModule shift(const CellModule& m, int n);
CellModule adams_shift(const CellModule& m, int r);

CellModule sphere(int p, int q);
CellModule disk(int p, int q);
CellModule interval_module(); // [0], [1] in degree 0 and [I] with d[I] = [0]-[1]

// Cofiber with the matrix differential ((d_M, 0), (f-bar, d_N)),
// f-bar(x) = (-1)^{deg x} f(x). Rejects non-chain-map input.
CellModule cofiber(const ModuleMap& f);

// Residuals of d(h(e)) - h(d(e)) = (-1)^{deg e}(f(e) - g(e)); h applies
// strictly (the unit interval sits on the right of the source).
std::vector<CellModule::Residual> homotopy_residuals(const ModuleMap& h, const ModuleMap& f,
                                                     const ModuleMap& g);
bool check_homotopy(const ModuleMap& h, const ModuleMap& f, const ModuleMap& g);

// Lemma on cofiber maps: x + w(x)[I] -> beta(x) + h(w) + alpha(w)[I] gives a
// chain map C(f) -> C(g) when h : beta f ~ g alpha.
ModuleMap cofiber_map(const CellModule& cf, const CellModule& cg, const ModuleMap& alpha,
                      const ModuleMap& beta, const ModuleMap& f, const ModuleMap& g,
                      const ModuleMap& h);

// Totalization of C_n -> ... -> C_0 with the lower-triangular differential:
// d on the diagonal, overline-twisted alpha on the first subdiagonal and
// overline-twisted h^k on the k-th. modules[i] is the level-(n-i) module.
struct Totalization {
    CellModule total;
    // (level, cell index within level) for every total cell
    std::vector<std::pair<int, int>> origin;
    std::vector<int> first_cell_of_level; // indexed by level n..0 order
};

Totalization totalize(const std::vector<const CellModule*>& modules,
                      const std::vector<const ModuleMap*>& alphas,
                      const std::map<std::pair<int, int>, const ModuleMap*>& homotopies);

// Unit-pivot Gaussian elimination of a based complex, tracking the chain
// projection onto the surviving cells. Used to strip contractible pairs.
struct Elimination {
    CellModule reduced;
    std::vector<int> survivor;      // reduced cell -> original cell
    std::vector<ModElt> projection; // original cell -> element of reduced
};

Elimination eliminate_units(const CellModule& m);

} // namespace pathcell
