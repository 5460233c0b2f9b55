#include "pathcell/bar.hpp"

#include <functional>
#include <stdexcept>

namespace pathcell {

BarSum bar_sum(const BarWord& w, const Rat& c) {
    // normal form: expand every letter into its monomials, so words are
    // tensor words of single monomials and cancellation is term-exact
    BarSum s;
    if (c.is_zero())
        return s;
    for (const auto& r : w)
        if (r.is_zero())
            return s;
    struct Frame {
        BarWord word;
        Rat coeff;
    };
    std::vector<Frame> stack{{BarWord{}, c}};
    for (const auto& r : w) {
        std::vector<Frame> next;
        for (const auto& f : stack) {
            for (const auto& [mono, k] : r.terms()) {
                Frame g = f;
                g.word.push_back(Element::monomial(mono));
                g.coeff *= k;
                next.push_back(std::move(g));
            }
        }
        stack = std::move(next);
    }
    for (auto& f : stack) {
        auto [it, fresh] = s.emplace(std::move(f.word), f.coeff);
        if (!fresh) {
            it->second += f.coeff;
            if (it->second.is_zero())
                s.erase(it);
        }
    }
    return s;
}

BarSum bar_add(const BarSum& x, const BarSum& y) {
    BarSum r = x;
    for (const auto& [w, c] : y) {
        auto [it, fresh] = r.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                r.erase(it);
        }
    }
    return r;
}

BarSum bar_scale(const Rat& c, const BarSum& x) {
    BarSum r;
    if (c.is_zero())
        return r;
    for (const auto& [w, k] : x)
        r.emplace(w, c * k);
    return r;
}

bool bar_is_zero(const BarSum& x) { return x.empty(); }

std::string bar_str(const BarSum& x) {
    if (x.empty())
        return "0";
    std::string s;
    for (const auto& [w, c] : x) {
        if (!s.empty())
            s += " + ";
        s += c.str() + "*(";
        for (size_t i = 0; i < w.size(); ++i) {
            if (i)
                s += " | ";
            s += w[i].str();
        }
        s += ")";
    }
    return s;
}

namespace {

int letter_degree(const Element& e) {
    auto d = e.bidegree();
    if (!d)
        throw std::invalid_argument("bar: letters must be nonzero and homogeneous");
    if (!e.unit_coefficient().is_zero())
        throw std::invalid_argument("bar: letters must lie in the augmentation ideal");
    return d->p;
}

} // namespace

BarSum bar_differential(const BarWord& w) {
    // Total differential of the tensor algebra on the shifted ideal: prefix
    // signs count suspended degrees |r|-1, which is what makes D^2 vanish
    // across the bigrading. On the degree-one window both sums reduce to the
    // classical display (single-letter d with +, adjacent product at n=2
    // with -).
    BarSum out;
    int n = (int)w.size();
    std::vector<int> degs(n);
    for (int i = 0; i < n; ++i)
        degs[i] = letter_degree(w[i]);
    // inner differentials
    int prefix = 0; // suspended degree of the letters before slot i
    for (int i = 0; i < n; ++i) {
        Element d = differential(w[i]);
        if (!d.is_zero()) {
            BarWord t = w;
            t[i] = d;
            out = bar_add(out, bar_sum(t, Rat(prefix % 2 == 0 ? 1 : -1)));
        }
        prefix += degs[i] - 1;
    }
    // multiplications of adjacent letters
    int upto = 0; // suspended degree through slot j
    for (int j = 1; j < n; ++j) {
        upto += degs[j - 1] - 1;
        Element prod = multiply(w[j - 1], w[j]);
        if (prod.is_zero())
            continue;
        BarWord t;
        t.reserve(n - 1);
        for (int i = 0; i < j - 1; ++i)
            t.push_back(w[i]);
        t.push_back(prod);
        for (int i = j + 1; i < n; ++i)
            t.push_back(w[i]);
        out = bar_add(out, bar_sum(t, Rat(upto % 2 == 0 ? -1 : 1)));
    }
    return out;
}

BarSum bar_differential(const BarSum& s) {
    BarSum out;
    for (const auto& [w, c] : s)
        out = bar_add(out, bar_scale(c, bar_differential(w)));
    return out;
}

bool is_bar_cocycle(const BarSum& s) { return bar_is_zero(bar_differential(s)); }

std::vector<BarSum> h0_kernel_basis(const std::vector<Element>& letters, int max_len, int weight) {
    // enumerate bar-degree-0 words: every letter has degree 1, so a word of
    // length k has total degree 0 exactly when each letter is degree 1
    std::vector<Element> degree_one;
    for (const auto& l : letters)
        if (letter_degree(l) == 1)
            degree_one.push_back(l);
    std::vector<BarWord> basis;
    if (weight == 0)
        basis.push_back(BarWord{}); // the empty word (the unit)
    std::vector<Element> acc;
    std::function<void(int)> rec = [&](int wleft) {
        if ((int)acc.size() > max_len)
            return;
        if (wleft == 0 && !acc.empty()) {
            basis.push_back(acc);
        }
        if ((int)acc.size() == max_len)
            return;
        for (const auto& l : degree_one) {
            int lw = l.bidegree()->q;
            if (lw > wleft)
                continue;
            acc.push_back(l);
            rec(wleft - lw);
            acc.pop_back();
        }
    };
    rec(weight);

    // exact kernel of D restricted to the window
    std::map<BarWord, int> image_index;
    std::vector<BarSum> images;
    for (const auto& w : basis)
        images.push_back(bar_differential(w));
    std::vector<std::map<int, Rat>> cols(basis.size());
    for (size_t c = 0; c < basis.size(); ++c) {
        for (const auto& [iw, k] : images[c]) {
            auto [it, fresh] = image_index.emplace(iw, (int)image_index.size());
            cols[c][it->second] = k;
        }
    }
    // Gaussian elimination tracking kernel vectors
    size_t m = basis.size();
    std::vector<std::map<int, Rat>> mat = cols;
    std::vector<std::map<size_t, Rat>> combo(m);
    for (size_t i = 0; i < m; ++i)
        combo[i][i] = Rat(1);
    std::vector<std::pair<int, size_t>> pivots; // (row, column)
    std::vector<BarSum> kernel;
    for (size_t c = 0; c < m; ++c) {
        bool changed = true;
        while (changed && !mat[c].empty()) {
            changed = false;
            for (const auto& [row, colidx] : pivots) {
                auto it = mat[c].find(row);
                if (it == mat[c].end())
                    continue;
                Rat f = it->second;
                for (const auto& [r2, v2] : mat[colidx]) {
                    auto [jt, fresh] = mat[c].emplace(r2, -(f * v2));
                    if (!fresh) {
                        jt->second -= f * v2;
                        if (jt->second.is_zero())
                            mat[c].erase(jt);
                    }
                }
                for (const auto& [k2, v2] : combo[colidx]) {
                    auto [jt, fresh] = combo[c].emplace(k2, -(f * v2));
                    if (!fresh) {
                        jt->second -= f * v2;
                        if (jt->second.is_zero())
                            combo[c].erase(jt);
                    }
                }
                changed = true;
            }
        }
        if (mat[c].empty()) {
            BarSum ker;
            for (const auto& [k2, v2] : combo[c])
                ker = bar_add(ker, bar_sum(basis[k2], v2));
            if (!bar_is_zero(ker))
                kernel.push_back(ker);
            continue;
        }
        int lead = mat[c].begin()->first;
        Rat lc = mat[c].begin()->second;
        for (auto& [r2, v2] : mat[c])
            v2 /= lc;
        for (auto& [k2, v2] : combo[c])
            v2 /= lc;
        pivots.push_back({lead, c});
    }
    return kernel;
}

} // namespace pathcell
