#include "pathcell/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace pathcell {

using nlohmann::json;

namespace {

json matrix_to_json(const CellModule& m, bool diagonal_d) {
    json basis = json::array();
    for (const auto& c : m.cells())
        basis.push_back({{"label", c.label}, {"bidegree", {c.deg.p, c.deg.q}}});
    json entries = json::array();
    for (int col = 0; col < (int)m.rank(); ++col) {
        if (diagonal_d)
            entries.push_back({{"row", col}, {"col", col}, {"element", "d"}});
        std::vector<std::pair<int, Element>> column(m.column(col).begin(), m.column(col).end());
        std::sort(column.begin(), column.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (const auto& [row, e] : column)
            if (!e.is_zero())
                entries.push_back({{"row", row}, {"col", col}, {"element", e.str()}});
    }
    return json{{"basis", basis}, {"entries", entries}};
}

std::string latex_escape(const std::string& s) {
    // element strings already use T_{...} and [1-a]; wrap products verbatim
    return s;
}

} // namespace

std::string matrix_json(const CellModule& m, bool diagonal_d) {
    return matrix_to_json(m, diagonal_d).dump(2) + "\n";
}

std::string matrix_latex(const CellModule& m, bool diagonal_d) {
    int n = (int)m.rank();
    std::vector<std::vector<std::string>> grid(n, std::vector<std::string>(n, "0"));
    for (int col = 0; col < n; ++col)
        for (const auto& [row, e] : m.column(col))
            if (!e.is_zero())
                grid[row][col] = latex_escape(e.str());
    if (diagonal_d)
        for (int i = 0; i < n; ++i)
            grid[i][i] = "d";
    std::ostringstream os;
    os << "\\left(\\begin{array}{" << std::string(n, 'c') << "}\n";
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (c)
                os << " & ";
            os << grid[r][c];
        }
        os << (r + 1 < n ? " \\\\" : "") << "\n";
    }
    os << "\\end{array}\\right)\n";
    return os.str();
}

std::string matrix_text(const CellModule& m, bool diagonal_d) {
    int n = (int)m.rank();
    std::vector<std::vector<std::string>> grid(n, std::vector<std::string>(n, "0"));
    for (int col = 0; col < n; ++col)
        for (const auto& [row, e] : m.column(col))
            if (!e.is_zero())
                grid[row][col] = e.str();
    if (diagonal_d)
        for (int i = 0; i < n; ++i)
            grid[i][i] = "d";
    std::vector<size_t> width(n, 1);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r)
            width[c] = std::max(width[c], grid[r][c].size());
    std::ostringstream os;
    for (int r = 0; r < n; ++r) {
        os << "[ ";
        for (int c = 0; c < n; ++c) {
            if (c)
                os << "  ";
            os << grid[r][c] << std::string(width[c] - grid[r][c].size(), ' ');
        }
        os << " ]\n";
    }
    return os.str();
}

std::string emit_matrix(const CellModule& m, EmitFormat f, bool diagonal_d) {
    switch (f) {
    case EmitFormat::json:
        return matrix_json(m, diagonal_d);
    case EmitFormat::latex:
        return matrix_latex(m, diagonal_d);
    case EmitFormat::text:
        return matrix_text(m, diagonal_d);
    }
    return {};
}

std::string report_json(const VerificationReport& rep) {
    json j;
    j["residuals"] = json::array();
    for (const auto& f : rep.failures)
        j["residuals"].push_back(f);
    j["checked"] = {{"c_columns", rep.c_columns_checked},
                    {"b_paths", rep.b_paths_checked},
                    {"b_generators", rep.b_generators_checked},
                    {"hc_bh_cells", rep.hc_bh_cells_checked}};
    j["ok"] = rep.ok();
    return j.dump(2) + "\n";
}

std::string complex_json(const PathComplex& pc, const Totalization& tot,
                         const VerificationReport& rep) {
    json j;
    int n = pc.n();
    j["n"] = n;
    j["C"] = matrix_to_json(tot.total, true);
    // block structure of the totalized differential
    json blocks = json::array();
    for (int col_level = n; col_level >= 0; --col_level) {
        blocks.push_back(
            {{"row_level", col_level}, {"col_level", col_level}, {"kind", "d"}});
        if (col_level >= 1)
            blocks.push_back(
                {{"row_level", col_level - 1}, {"col_level", col_level}, {"kind", "alpha"}});
        for (int k = 2; k <= col_level; ++k)
            blocks.push_back(
                {{"row_level", col_level - k}, {"col_level", col_level}, {"kind", "h"}});
    }
    j["C_blocks"] = blocks;
    // B: faces per level plus the signed coface substitutions
    json blevels = json::array();
    for (int k = 0; k <= n; ++k) {
        json faces = json::array();
        for (const auto& f : pc.levels()[k])
            faces.push_back(f.str());
        blevels.push_back(faces);
    }
    j["B"] = {{"levels", blevels}};
    json betas = json::array();
    for (int k = 1; k <= n; ++k) {
        for (int fi = 0; fi < (int)pc.levels()[k].size(); ++fi) {
            const Face& f = pc.levels()[k][fi];
            for (const auto& cf : cofaces(f)) {
                json sub = json::array();
                for (const auto& [from, to] : cf.subst)
                    sub.push_back({{"from", SymBase{from}.name()}, {"to", to.name()}});
                betas.push_back({{"level", k},
                                 {"face", f.str()},
                                 {"target", cf.target.str()},
                                 {"sign", cf.sign()},
                                 {"subst", sub}});
            }
        }
    }
    j["B"]["beta"] = betas;
    // H: per column cell, the images in each B level
    json hcols = json::array();
    for (int lev = 0; lev <= n; ++lev) {
        for (int cell = 0; cell < (int)pc.C(lev).rank(); ++cell) {
            json images = json::array();
            {
                json img = json::array();
                for (const auto& [fi, e] : pc.f_value(lev, cell))
                    img.push_back({{"face", pc.levels()[lev][fi].str()}, {"element", e.str()}});
                images.push_back({{"level", lev}, {"kind", "f"}, {"value", img}});
            }
            for (int k = 1; k <= lev; ++k) {
                const BElt& v = pc.H_closed(lev, k, cell);
                if (v.empty())
                    continue;
                json img = json::array();
                for (const auto& [fi, e] : v)
                    img.push_back(
                        {{"face", pc.levels()[lev - k][fi].str()}, {"element", e.str()}});
                images.push_back({{"level", lev - k}, {"kind", "H"}, {"value", img}});
            }
            hcols.push_back({{"level", lev},
                             {"cell", pc.C(lev).cell(cell).label},
                             {"images", images}});
        }
    }
    j["H"] = hcols;
    j["report"] = json::parse(report_json(rep));
    return j.dump(2) + "\n";
}

std::string complex_latex(const PathComplex& pc) {
    // the block displays: d on the diagonal, twisted alpha and h below
    int n = pc.n();
    std::ostringstream os;
    auto block_matrix = [&](const std::string& name, bool with_h, bool bside) {
        os << name << " = \\left(\\begin{array}{" << std::string(n + 1, 'c') << "}\n";
        for (int r = 0; r <= n; ++r) {
            for (int c = 0; c <= n; ++c) {
                if (c)
                    os << " & ";
                int col_level = n - c, row_level = n - r;
                if (r == c)
                    os << "d";
                else if (row_level == col_level - 1)
                    os << "\\overline{" << (bside ? "\\beta" : "\\alpha") << "_{" << col_level
                       << "}}";
                else if (with_h && row_level < col_level - 1)
                    os << "\\overline{h_{" << col_level << "}^{" << col_level - row_level
                       << "}}";
                else
                    os << "0";
            }
            os << (r < n ? " \\\\" : "") << "\n";
        }
        os << "\\end{array}\\right)\n";
    };
    block_matrix("C", true, false);
    block_matrix("B", false, true);
    os << "H = \\left(\\begin{array}{" << std::string(n + 1, 'c') << "}\n";
    for (int r = 0; r <= n; ++r) {
        for (int c = 0; c <= n; ++c) {
            if (c)
                os << " & ";
            int col_level = n - c, row_level = n - r;
            if (r == c)
                os << "f_{" << col_level << "}";
            else if (row_level < col_level)
                os << "H_{" << col_level << "}^{" << col_level - row_level << "}";
            else
                os << "0";
        }
        os << (r < n ? " \\\\" : "") << "\n";
    }
    os << "\\end{array}\\right)\n";
    return os.str();
}

} // namespace pathcell
