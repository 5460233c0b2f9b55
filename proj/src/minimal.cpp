#include "pathcell/minimal.hpp"

#include <stdexcept>

namespace pathcell {

namespace {

std::string word_label(const FlavorWord& w) {
    if (w.empty())
        return "1";
    std::string s;
    for (size_t j = 0; j < w.size(); ++j) {
        std::string v = SymBase::var((int)j).name();
        s += w[j] == Flavor::plain ? "[" + v + "]" : "[1-" + v + "]";
    }
    return s;
}

std::vector<FlavorWord> words_of_level(int k) {
    std::vector<FlavorWord> out;
    for (int code = 0; code < (1 << k); ++code) {
        FlavorWord w;
        for (int j = 0; j < k; ++j)
            w.push_back((code >> (k - 1 - j)) & 1 ? Flavor::complement : Flavor::plain);
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace

MinimalModule minimize(int n) {
    if (n < 0)
        throw std::invalid_argument("minimize: n must be >= 0");
    MinimalModule mm;
    mm.n = n;
    mm.module = CellModule("Min" + std::to_string(n));
    std::map<FlavorWord, int> index;
    for (int k = 0; k <= n; ++k) {
        for (const auto& w : words_of_level(k)) {
            int id = mm.module.add_cell(word_label(w), {0, k});
            index[w] = id;
            mm.words.push_back(w);
        }
    }
    for (int col = 0; col < (int)mm.words.size(); ++col) {
        const FlavorWord& w = mm.words[col];
        int i = (int)w.size();
        if (i == 0)
            continue;
        Rat twist(i % 2 == 0 ? 1 : -1);
        // endpoint differences: (-1)^i ( w1(a) tail - wi(b) head )
        {
            FlavorWord tail(w.begin() + 1, w.end());
            FlavorWord head(w.begin(), w.end() - 1);
            Element first = twist * Element::steinberg(SymBase::a(), w.front());
            Element last = twist * Element::steinberg(SymBase::b(), w.back());
            if (tail == head) {
                mm.module.set_entry(index[tail], col, first - last);
            } else {
                mm.module.set_entry(index[tail], col, first);
                mm.module.set_entry(index[head], col, -last);
            }
        }
        // descended homotopies: (-1)^i (-1)^lambda ( T_a(first k) tail_k
        //                                          - T_b(last k) head_k )
        for (int k = 2; k <= i; ++k) {
            long lambda = (long)i * (k - 1) + (long)k * (k - 1) / 2;
            Rat sgn(lambda % 2 == 0 ? 1 : -1);
            FlavorWord lead(w.begin(), w.begin() + k);
            FlavorWord trail(w.end() - k, w.end());
            FlavorWord tail(w.begin() + k, w.end());
            FlavorWord head(w.begin(), w.end() - k);
            Element Ta = Element::totaro(SymBase::a(), lead);
            Element Tb = Element::totaro(SymBase::b(), trail);
            Element at_tail = twist * sgn * Ta;
            Element at_head = -(twist * sgn * Tb);
            if (tail == head) {
                Element combined = at_tail + at_head;
                if (!combined.is_zero())
                    mm.module.set_entry(index[tail], col, combined);
            } else {
                if (!at_tail.is_zero())
                    mm.module.set_entry(index[tail], col, at_tail);
                if (!at_head.is_zero())
                    mm.module.set_entry(index[head], col, at_head);
            }
        }
    }
    return mm;
}

bool check_minimal(const MinimalModule& m) {
    for (int col = 0; col < (int)m.module.rank(); ++col)
        for (const auto& [row, e] : m.module.column(col))
            if (row != col && !e.unit_coefficient().is_zero())
                return false;
    return true;
}

std::vector<std::pair<int, long long>> weight_layers(const MinimalModule& m) {
    std::vector<std::pair<int, long long>> out;
    for (int k = 0; k <= m.n; ++k)
        out.push_back({-k, 1LL << k});
    return out;
}

ModuleMap quotient_map(const PathComplex& pc, const Totalization& tot, const MinimalModule& m) {
    std::map<FlavorWord, int> index;
    for (int i = 0; i < (int)m.words.size(); ++i)
        index[m.words[i]] = i;
    ModuleMap q(&tot.total, &m.module, {0, 0});
    for (int cell = 0; cell < (int)tot.total.rank(); ++cell) {
        auto [level, local] = tot.origin[cell];
        auto [fi, w] = pc.cell_origin(level, local);
        (void)fi;
        if (w.length() != level)
            continue;
        FlavorWord abstract;
        for (Slot s : w.slots)
            abstract.push_back(s == Slot::plain ? Flavor::plain : Flavor::complement);
        q.add_value(cell, index.at(abstract), Element::unit());
    }
    return q;
}

} // namespace pathcell
