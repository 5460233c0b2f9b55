#include "pathcell/faces.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathcell {

std::string Face::str() const {
    std::string s = "(";
    for (int i = 0; i < a_pins; ++i)
        s += "a,";
    for (size_t j = 0; j < blocks.size(); ++j) {
        s += "X";
        if (blocks[j] > 1)
            s += "^" + std::to_string(blocks[j]);
        s += ",";
    }
    for (int i = 0; i < b_pins; ++i)
        s += "b,";
    if (s.size() > 1)
        s.pop_back();
    return s + ")";
}

std::vector<Coface> cofaces(const Face& f) {
    int m = f.level();
    std::vector<Coface> out;
    if (m == 0)
        return out;
    // i = 0: pin the first block to a
    {
        Coface c;
        c.local_index = 0;
        c.target.a_pins = f.a_pins + f.blocks[0];
        c.target.blocks.assign(f.blocks.begin() + 1, f.blocks.end());
        c.target.b_pins = f.b_pins;
        c.subst[SymBase::var(0).code] = SymBase::a();
        for (int j = 1; j < m; ++j)
            c.subst[SymBase::var(j).code] = SymBase::var(j - 1);
        out.push_back(std::move(c));
    }
    // 0 < i < m: merge blocks i, i+1 (1-based i matches the local index)
    for (int i = 1; i < m; ++i) {
        Coface c;
        c.local_index = i;
        c.target.a_pins = f.a_pins;
        c.target.b_pins = f.b_pins;
        for (int j = 0; j < m; ++j) {
            if (j == i - 1)
                c.target.blocks.push_back(f.blocks[j] + f.blocks[j + 1]);
            else if (j != i)
                c.target.blocks.push_back(f.blocks[j]);
        }
        for (int j = 0; j < m; ++j)
            c.subst[SymBase::var(j).code] = SymBase::var(j <= i - 1 ? j : j - 1);
        out.push_back(std::move(c));
    }
    // i = m: pin the last block to b
    {
        Coface c;
        c.local_index = m;
        c.target.a_pins = f.a_pins;
        c.target.blocks.assign(f.blocks.begin(), f.blocks.end() - 1);
        c.target.b_pins = f.b_pins + f.blocks[m - 1];
        c.subst[SymBase::var(m - 1).code] = SymBase::b();
        for (int j = 0; j < m - 1; ++j)
            c.subst[SymBase::var(j).code] = SymBase::var(j);
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

void compositions(int total, int parts, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0)
            out.push_back(acc);
        return;
    }
    for (int s = 1; s + parts - 1 <= total; ++s) {
        acc.push_back(s);
        compositions(total - s, parts - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<std::vector<Face>> build_face_lattice(int n) {
    if (n < 1)
        throw std::invalid_argument("build_face_lattice: n must be >= 1");
    std::vector<std::vector<Face>> levels(n + 1);
    for (int k = 0; k <= n; ++k) {
        for (int p = 0; p <= n; ++p) {
            for (int q = 0; p + q <= n; ++q) {
                int rest = n - p - q;
                if (k == 0) {
                    if (rest == 0)
                        levels[k].push_back(Face{p, {}, q});
                    continue;
                }
                std::vector<std::vector<int>> blocks;
                std::vector<int> acc;
                compositions(rest, k, acc, blocks);
                for (auto& bl : blocks)
                    levels[k].push_back(Face{p, bl, q});
            }
        }
        std::sort(levels[k].begin(), levels[k].end());
    }
    return levels;
}

int face_index(const std::vector<Face>& level, const Face& f) {
    for (size_t i = 0; i < level.size(); ++i)
        if (level[i] == f)
            return (int)i;
    throw std::invalid_argument("face_index: face not in level");
}

int FaceWord::length() const {
    int l = 0;
    for (Slot s : slots)
        if (s != Slot::none)
            ++l;
    return l;
}

std::string FaceWord::str() const {
    if (length() == 0)
        return "1";
    std::string s;
    for (size_t j = 0; j < slots.size(); ++j) {
        if (slots[j] == Slot::none)
            continue;
        std::string v = SymBase::var((int)j).name();
        s += slots[j] == Slot::plain ? "[" + v + "]" : "[1-" + v + "]";
    }
    return s;
}

std::vector<FaceWord> face_words(int m) {
    std::vector<FaceWord> out;
    int count = 1;
    for (int i = 0; i < m; ++i)
        count *= 3;
    for (int code = 0; code < count; ++code) {
        FaceWord w;
        int c = code;
        w.slots.resize(m);
        for (int j = m - 1; j >= 0; --j) {
            w.slots[j] = (Slot)(c % 3);
            c /= 3;
        }
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Element word_element(const FaceWord& w) {
    Element e = Element::unit();
    for (size_t j = 0; j < w.slots.size(); ++j) {
        if (w.slots[j] == Slot::none)
            continue;
        Flavor f = w.slots[j] == Slot::plain ? Flavor::plain : Flavor::complement;
        e = multiply(e, Element::steinberg(SymBase::var((int)j), f));
    }
    return e;
}

} // namespace pathcell
