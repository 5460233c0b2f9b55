#include "pathcell/module.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pathcell {

namespace {

// Split by parity of cohomological degree; only the parity enters Koszul signs.
void split_parity(const Element& e, Element& even, Element& odd) {
    even = Element();
    odd = Element();
    for (const auto& [m, c] : e.terms()) {
        if (m.deg().p % 2 == 0)
            even.add_term(m, c);
        else
            odd.add_term(m, c);
    }
}

void accumulate(ModElt& into, int cell, const Element& e) {
    if (e.is_zero())
        return;
    auto [it, fresh] = into.emplace(cell, e);
    if (!fresh) {
        it->second += e;
        if (it->second.is_zero())
            into.erase(it);
    }
}

} // namespace

ModElt mod_add(const ModElt& x, const ModElt& y) {
    ModElt r = x;
    for (const auto& [cell, c] : y)
        accumulate(r, cell, c);
    return r;
}

ModElt mod_scale(const Element& c, const ModElt& x) {
    ModElt r;
    for (const auto& [cell, k] : x)
        accumulate(r, cell, multiply(c, k));
    return r;
}

ModElt mod_negate(const ModElt& x) {
    ModElt r;
    for (const auto& [cell, c] : x)
        r.emplace(cell, -c);
    return r;
}

bool mod_is_zero(const ModElt& x) { return x.empty(); }

std::string mod_str(const ModElt& x, const std::vector<Cell>& cells) {
    if (x.empty())
        return "0";
    std::string s;
    for (const auto& [cell, c] : x) {
        if (!s.empty())
            s += " + ";
        s += "(" + c.str() + ")*" + cells[cell].label;
    }
    return s;
}

int CellModule::add_cell(const std::string& label, Bidegree deg) {
    cells_.push_back({label, deg});
    diff_.emplace_back();
    return (int)cells_.size() - 1;
}

void CellModule::set_entry(int row, int col, const Element& e) {
    auto& column = diff_[col];
    for (auto& [r, v] : column) {
        if (r == row) {
            v = e;
            return;
        }
    }
    if (!e.is_zero())
        column.emplace_back(row, e);
}

ModElt CellModule::d_basis(int col) const {
    ModElt r;
    for (const auto& [row, e] : diff_[col])
        accumulate(r, row, e);
    return r;
}

ModElt CellModule::d(const ModElt& x) const {
    ModElt r;
    for (const auto& [cell, c] : x) {
        accumulate(r, cell, differential(c));
        Element even, odd;
        split_parity(c, even, odd);
        for (const auto& [row, e] : diff_[cell]) {
            if (!even.is_zero())
                accumulate(r, row, multiply(even, e));
            if (!odd.is_zero())
                accumulate(r, row, -multiply(odd, e));
        }
    }
    return r;
}

std::vector<CellModule::Residual> CellModule::d_squared_residuals() const {
    std::vector<Residual> out;
    for (int col = 0; col < (int)rank(); ++col) {
        ModElt dd = d(d_basis(col));
        for (const auto& [row, e] : dd)
            out.push_back({row, col, e});
    }
    return out;
}

ModuleMap::ModuleMap(const CellModule* src, const CellModule* tgt, Bidegree shift)
    : src_(src), tgt_(tgt), shift_(shift), cols_(src ? src->rank() : 0) {}

void ModuleMap::set_value(int col, const ModElt& v) { cols_[col] = v; }

void ModuleMap::add_value(int col, int row, const Element& e) {
    accumulate(cols_[col], row, e);
}

ModElt ModuleMap::apply(const ModElt& x) const {
    ModElt r;
    bool odd_map = shift_.p % 2 != 0;
    for (const auto& [cell, c] : x) {
        Element even, odd;
        split_parity(c, even, odd);
        Element crossed = odd_map ? even - odd : even + odd;
        for (const auto& [row, e] : cols_[cell])
            accumulate(r, row, multiply(crossed, e));
    }
    return r;
}

ModElt ModuleMap::apply_strict(const ModElt& x) const {
    ModElt r;
    for (const auto& [cell, c] : x)
        for (const auto& [row, e] : cols_[cell])
            accumulate(r, row, multiply(c, e));
    return r;
}

bool ModuleMap::entries_homogeneous(std::string* complaint) const {
    for (int col = 0; col < (int)cols_.size(); ++col) {
        for (const auto& [row, e] : cols_[col]) {
            if (e.is_zero())
                continue;
            // deg(entry) + deg(row cell) = deg(col cell) + shift
            Bidegree needed = src_->cell(col).deg + shift_ - tgt_->cell(row).deg;
            auto have = e.bidegree();
            if (!have || *have != needed) {
                if (complaint)
                    *complaint = "entry (" + std::to_string(row) + "," + std::to_string(col) +
                                 ") not homogeneous of " + needed.str();
                return false;
            }
        }
    }
    return true;
}

ModuleMap identity_map(const CellModule& m) {
    ModuleMap f(&m, &m);
    for (int i = 0; i < (int)m.rank(); ++i)
        f.add_value(i, i, Element::unit());
    return f;
}

ModuleMap zero_map(const CellModule& src, const CellModule& tgt, Bidegree shift) {
    return ModuleMap(&src, &tgt, shift);
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    if (f.target() != g.source())
        throw std::invalid_argument("compose: mismatched modules");
    ModuleMap r(f.source(), g.target(), f.shift() + g.shift());
    for (int col = 0; col < (int)f.source()->rank(); ++col)
        r.set_value(col, g.apply(f.apply_basis(col)));
    return r;
}

std::vector<CellModule::Residual> chain_map_residuals(const ModuleMap& f) {
    std::vector<CellModule::Residual> out;
    const CellModule& src = *f.source();
    const CellModule& tgt = *f.target();
    bool odd = f.shift().p % 2 != 0;
    for (int col = 0; col < (int)src.rank(); ++col) {
        ModElt lhs = tgt.d(f.apply_basis(col));
        ModElt rhs = f.apply(src.d_basis(col));
        ModElt res = mod_add(lhs, odd ? rhs : mod_negate(rhs));
        for (const auto& [row, e] : res)
            out.push_back({row, col, e});
    }
    return out;
}

bool is_chain_map(const ModuleMap& f) { return chain_map_residuals(f).empty(); }

CellModule shift(const CellModule& m, int n) {
    CellModule r(m.name() + "{" + std::to_string(n) + "}");
    for (const auto& c : m.cells())
        r.add_cell(c.label, c.deg - Bidegree{n, n});
    for (int col = 0; col < (int)m.rank(); ++col)
        for (const auto& [row, e] : m.column(col))
            r.set_entry(row, col, e);
    return r;
}

CellModule adams_shift(const CellModule& m, int r_) {
    CellModule r(m.name() + "(" + std::to_string(r_) + ")");
    for (const auto& c : m.cells())
        r.add_cell(c.label, {c.deg.p, c.deg.q - r_});
    for (int col = 0; col < (int)m.rank(); ++col)
        for (const auto& [row, e] : m.column(col))
            r.set_entry(row, col, e);
    return r;
}

CellModule sphere(int p, int q) {
    CellModule m("S(" + std::to_string(p) + "," + std::to_string(q) + ")");
    m.add_cell("i", {p, q});
    return m;
}

CellModule disk(int p, int q) {
    // cone on the (p+1, q)-sphere: generator s and the interval cell killing it
    CellModule m("D(" + std::to_string(p) + "," + std::to_string(q) + ")");
    int s = m.add_cell("s", {p + 1, q});
    int i = m.add_cell("i", {p, q});
    // d(m [I]) = (-1)^{deg m} m [0] with deg s = p+1
    m.set_entry(s, i, Element::unit(Rat(p % 2 == 0 ? 1 : -1)));
    return m;
}

CellModule interval_module() {
    CellModule m("I");
    int c0 = m.add_cell("[0]", {0, 0});
    int c1 = m.add_cell("[1]", {0, 0});
    int ci = m.add_cell("[I]", {-1, 0});
    m.set_entry(c0, ci, Element::unit());
    m.set_entry(c1, ci, Element::unit(Rat(-1)));
    return m;
}

CellModule cofiber(const ModuleMap& f) {
    if (f.shift() != Bidegree{0, 0})
        throw std::invalid_argument("cofiber: map must have degree (0,0)");
    auto res = chain_map_residuals(f);
    if (!res.empty()) {
        const auto& r = res.front();
        throw std::invalid_argument("cofiber: not a chain map, residual at (" +
                                    std::to_string(r.row) + "," + std::to_string(r.col) +
                                    ") = " + r.value.str());
    }
    const CellModule& M = *f.source();
    const CellModule& N = *f.target();
    CellModule c("C(" + M.name() + "->" + N.name() + ")");
    for (const auto& cell : N.cells())
        c.add_cell(cell.label, cell.deg);
    int off = (int)N.rank();
    for (const auto& cell : M.cells())
        c.add_cell(cell.label + "[I]", cell.deg - Bidegree{1, 0});
    for (int col = 0; col < (int)N.rank(); ++col)
        for (const auto& [row, e] : N.column(col))
            c.set_entry(row, col, e);
    for (int col = 0; col < (int)M.rank(); ++col) {
        for (const auto& [row, e] : M.column(col))
            c.set_entry(off + row, off + col, e);
        Rat tw(M.cell(col).deg.p % 2 == 0 ? 1 : -1);
        for (const auto& [row, e] : f.apply_basis(col))
            c.set_entry(row, off + col, tw * e);
    }
    return c;
}

std::vector<CellModule::Residual> homotopy_residuals(const ModuleMap& h, const ModuleMap& f,
                                                     const ModuleMap& g) {
    const CellModule& M = *f.source();
    const CellModule& N = *f.target();
    std::vector<CellModule::Residual> out;
    for (int col = 0; col < (int)M.rank(); ++col) {
        ModElt lhs = mod_add(N.d(h.apply_basis(col)), mod_negate(h.apply_strict(M.d_basis(col))));
        ModElt want = mod_add(f.apply_basis(col), mod_negate(g.apply_basis(col)));
        if (M.cell(col).deg.p % 2 != 0)
            want = mod_negate(want);
        ModElt res = mod_add(lhs, mod_negate(want));
        for (const auto& [row, e] : res)
            out.push_back({row, col, e});
    }
    return out;
}

bool check_homotopy(const ModuleMap& h, const ModuleMap& f, const ModuleMap& g) {
    return homotopy_residuals(h, f, g).empty();
}

ModuleMap cofiber_map(const CellModule& cf, const CellModule& cg, const ModuleMap& alpha,
                      const ModuleMap& beta, const ModuleMap& f, const ModuleMap& g,
                      const ModuleMap& h) {
    if (!check_homotopy(h, compose(beta, f), compose(g, alpha)))
        throw std::invalid_argument("cofiber_map: h is not a homotopy beta f ~ g alpha");
    const CellModule& X = *f.target();  // cf = X + W[I]
    const CellModule& Z = *g.target();  // cg = Z + Y[I]
    const CellModule& W = *f.source();
    int offW = (int)X.rank();
    int offY = (int)Z.rank();
    ModuleMap F(&cf, &cg);
    for (int col = 0; col < (int)X.rank(); ++col)
        for (const auto& [row, e] : beta.apply_basis(col))
            F.add_value(col, row, e);
    for (int col = 0; col < (int)W.rank(); ++col) {
        for (const auto& [row, e] : h.apply_basis(col))
            F.add_value(offW + col, row, e);
        for (const auto& [row, e] : alpha.apply_basis(col))
            F.add_value(offW + col, offY + row, e);
    }
    return F;
}

Totalization totalize(const std::vector<const CellModule*>& modules,
                      const std::vector<const ModuleMap*>& alphas,
                      const std::map<std::pair<int, int>, const ModuleMap*>& homotopies) {
    int n = (int)modules.size() - 1;
    Totalization tot;
    tot.total = CellModule("Tot");
    std::vector<std::vector<int>> cell_of; // per module index, per local cell
    for (int idx = 0; idx <= n; ++idx) {
        int level = n - idx;
        tot.first_cell_of_level.push_back((int)tot.total.rank());
        std::vector<int> ids;
        for (const auto& c : modules[idx]->cells()) {
            int id = tot.total.add_cell("C" + std::to_string(level) + ":" + c.label,
                                        c.deg - Bidegree{level, 0});
            tot.origin.emplace_back(level, (int)ids.size());
            ids.push_back(id);
        }
        cell_of.push_back(std::move(ids));
    }
    auto put = [&](int src_idx, int tgt_idx, const ModuleMap& map, bool twist) {
        for (int col = 0; col < (int)modules[src_idx]->rank(); ++col) {
            Rat tw(1);
            if (twist && modules[src_idx]->cell(col).deg.p % 2 != 0)
                tw = Rat(-1);
            for (const auto& [row, e] : map.apply_basis(col))
                tot.total.set_entry(cell_of[tgt_idx][row], cell_of[src_idx][col], tw * e);
        }
    };
    for (int idx = 0; idx <= n; ++idx) {
        // the diagonal d-block is the module's own differential
        for (int col = 0; col < (int)modules[idx]->rank(); ++col)
            for (const auto& [row, e] : modules[idx]->column(col))
                tot.total.set_entry(cell_of[idx][row], cell_of[idx][col], e);
        if (idx < n && idx < (int)alphas.size() && alphas[idx])
            put(idx, idx + 1, *alphas[idx], true);
    }
    for (const auto& [key, hom] : homotopies) {
        auto [level, k] = key;
        int src_idx = n - level;
        int tgt_idx = src_idx + k;
        if (hom)
            put(src_idx, tgt_idx, *hom, true);
    }
    return tot;
}

Elimination eliminate_units(const CellModule& m) {
    int n = (int)m.rank();
    // dense-ish sparse copy
    std::vector<std::map<int, Element>> col(n);
    for (int c = 0; c < n; ++c)
        for (const auto& [r, e] : m.column(c))
            if (!e.is_zero())
                col[c][r] = e;
    std::vector<bool> dead(n, false);
    std::vector<ModElt> proj(n);
    for (int i = 0; i < n; ++i)
        proj[i] = {{i, Element::unit()}};

    auto unit_of = [](const Element& e) -> std::optional<Rat> {
        if (e.term_count() != 1)
            return std::nullopt;
        const auto& [mono, c] = *e.terms().begin();
        if (!mono.is_unit())
            return std::nullopt;
        return c;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (int c = 0; c < n && !progress; ++c) {
            if (dead[c])
                continue;
            for (const auto& [r, e] : col[c]) {
                if (dead[r])
                    continue;
                auto u = unit_of(e);
                if (!u)
                    continue;
                // eliminate the pair (column c, row r)
                Rat uinv = Rat(1) / *u;
                std::map<int, Element> pivot_col = col[c];
                pivot_col.erase(r);
                // rewrite rule: r -> -1/u * (d(c) minus the pivot term)
                ModElt rimage;
                for (const auto& [y, a] : pivot_col)
                    if (!dead[y])
                        accumulate(rimage, y, (-uinv) * a);
                for (int x = 0; x < n; ++x) {
                    if (dead[x] || x == c)
                        continue;
                    auto it = col[x].find(r);
                    if (it == col[x].end())
                        continue;
                    Element b = it->second;
                    col[x].erase(it);
                    for (const auto& [y, a] : pivot_col) {
                        if (dead[y])
                            continue;
                        Element upd = (-uinv) * multiply(b, a);
                        auto [jt, fresh] = col[x].emplace(y, upd);
                        if (!fresh) {
                            jt->second += upd;
                            if (jt->second.is_zero())
                                col[x].erase(jt);
                        }
                    }
                }
                // update the tracked projection
                for (int o = 0; o < n; ++o) {
                    auto pt = proj[o].find(c);
                    if (pt != proj[o].end())
                        proj[o].erase(pt);
                    pt = proj[o].find(r);
                    if (pt != proj[o].end()) {
                        Element coeff = pt->second;
                        proj[o].erase(pt);
                        for (const auto& [y, a] : rimage)
                            accumulate(proj[o], y, multiply(coeff, a));
                    }
                }
                dead[c] = dead[r] = true;
                progress = true;
                break;
            }
        }
    }

    Elimination out;
    out.reduced = CellModule(m.name() + "/min");
    std::vector<int> new_index(n, -1);
    for (int i = 0; i < n; ++i) {
        if (!dead[i]) {
            new_index[i] = out.reduced.add_cell(m.cell(i).label, m.cell(i).deg);
            out.survivor.push_back(i);
        }
    }
    for (int c = 0; c < n; ++c) {
        if (dead[c])
            continue;
        for (const auto& [r, e] : col[c])
            if (!dead[r])
                out.reduced.set_entry(new_index[r], new_index[c], e);
    }
    out.projection.resize(n);
    for (int o = 0; o < n; ++o)
        for (const auto& [cell, e] : proj[o])
            if (!dead[cell])
                accumulate(out.projection[o], new_index[cell], e);
    return out;
}

} // namespace pathcell
