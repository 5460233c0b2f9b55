#include "pathcell/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathcell {

std::string Monomial::str() const {
    if (syms.empty())
        return "1";
    std::string s;
    for (const auto& g : syms)
        s += g.str();
    return s;
}

Element Element::unit(const Rat& c) {
    Element e;
    e.add_term(Monomial{}, c);
    return e;
}

Element Element::steinberg(SymBase base, Flavor f) {
    Element e;
    e.add_term(Monomial{{Symbol{base, {f}}}}, Rat(1));
    return e;
}

Element Element::totaro(SymBase base, const FlavorWord& w) {
    if (w.size() < 2)
        throw std::invalid_argument("totaro: flavor word must have length >= 2");
    // a product of copies of one symbol vanishes identically over Q, and so
    // do all its iterated Massey representatives: the zero cochain is the
    // canonical bound for every all-equal word
    bool all_equal = true;
    for (const auto& f : w)
        all_equal = all_equal && f == w[0];
    if (all_equal)
        return Element();
    if (w.size() == 2 && w[0] == Flavor::complement) {
        // stored orientation: T_{1-x,x} := -T_{x,1-x}
        Element e;
        e.add_term(Monomial{{Symbol{base, {Flavor::plain, Flavor::complement}}}}, Rat(-1));
        return e;
    }
    Element e;
    e.add_term(Monomial{{Symbol{base, w}}}, Rat(1));
    return e;
}

Element Element::monomial(const Monomial& m, const Rat& c) {
    Element e;
    e.add_term(m, c);
    return e;
}

Rat Element::unit_coefficient() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rat(0) : it->second;
}

bool Element::is_homogeneous() const {
    if (terms_.empty())
        return true;
    Bidegree d = terms_.begin()->first.deg();
    for (const auto& [m, c] : terms_)
        if (m.deg() != d)
            return false;
    return true;
}

std::optional<Bidegree> Element::bidegree() const {
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return terms_.begin()->first.deg();
}

Element& Element::add_term(const Monomial& m, const Rat& c) {
    if (c.is_zero())
        return *this;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
    return *this;
}

Element operator+(const Element& x, const Element& y) {
    Element r = x;
    for (const auto& [m, c] : y.terms_)
        r.add_term(m, c);
    return r;
}

Element operator-(const Element& x, const Element& y) { return x + (-y); }

Element Element::operator-() const {
    Element r;
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Element operator*(const Rat& c, const Element& x) {
    Element r;
    if (c.is_zero())
        return r;
    for (const auto& [m, k] : x.terms())
        r.add_term(m, c * k);
    return r;
}

namespace {

// Merge two strictly sorted symbol lists; all symbols have odd degree, so a
// shared symbol kills the product and the sign is the merge parity.
bool merge_monomials(const Monomial& x, const Monomial& y, Monomial& out, int& sign) {
    out.syms.clear();
    out.syms.reserve(x.syms.size() + y.syms.size());
    size_t i = 0, j = 0;
    long inversions = 0;
    while (i < x.syms.size() && j < y.syms.size()) {
        if (x.syms[i] == y.syms[j])
            return false;
        if (x.syms[i] < y.syms[j]) {
            out.syms.push_back(x.syms[i++]);
        } else {
            inversions += (long)(x.syms.size() - i);
            out.syms.push_back(y.syms[j++]);
        }
    }
    for (; i < x.syms.size(); ++i)
        out.syms.push_back(x.syms[i]);
    for (; j < y.syms.size(); ++j)
        out.syms.push_back(y.syms[j]);
    sign = (inversions % 2 == 0) ? 1 : -1;
    return true;
}

} // namespace

Element multiply(const Element& x, const Element& y) {
    Element r;
    Monomial prod;
    int sign;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms())
            if (merge_monomials(mx, my, prod, sign))
                r.add_term(prod, Rat(sign) * cx * cy);
    return r;
}

Element operator*(const Element& x, const Element& y) { return multiply(x, y); }

Element totaro_boundary(SymBase base, const FlavorWord& w) {
    // sum_{i=1}^{n-1} \bar{T}_{w<=i} T_{w>i}; every letter has degree 1 so
    // the cochain overline is trivial on the left factors.
    Element r;
    for (size_t i = 1; i < w.size(); ++i) {
        FlavorWord left(w.begin(), w.begin() + i);
        FlavorWord right(w.begin() + i, w.end());
        Element l = left.size() == 1 ? Element::steinberg(base, left[0]) : Element::totaro(base, left);
        Element rt =
            right.size() == 1 ? Element::steinberg(base, right[0]) : Element::totaro(base, right);
        r += multiply(l, rt);
    }
    return r;
}

namespace {

Element symbol_differential(const Symbol& g) {
    if (g.is_steinberg())
        return Element();
    return totaro_boundary(g.base, g.word);
}

} // namespace

Element differential(const Element& x) {
    Element r;
    for (const auto& [m, c] : x.terms()) {
        for (size_t i = 0; i < m.syms.size(); ++i) {
            Element dg = symbol_differential(m.syms[i]);
            if (dg.is_zero())
                continue;
            Monomial before{{m.syms.begin(), m.syms.begin() + i}};
            Monomial after{{m.syms.begin() + i + 1, m.syms.end()}};
            // Leibniz across i odd-degree letters.
            Rat sign = (i % 2 == 0) ? c : -c;
            Element piece =
                multiply(multiply(Element::monomial(before, sign), dg), Element::monomial(after));
            r += piece;
        }
    }
    return r;
}

Element overline_cochain(const Element& x) {
    if (x.is_zero())
        return x;
    auto d = x.bidegree();
    if (!d)
        throw std::invalid_argument("overline_cochain: heterogeneous element");
    return (d->p % 2 != 0) ? x : -x;
}

Element substitute(const Element& x, const BaseMap& assignment) {
    Element r;
    for (const auto& [m, c] : x.terms()) {
        Element piece = Element::unit(c);
        for (const auto& g : m.syms) {
            auto it = assignment.find(g.base.code);
            SymBase nb = it == assignment.end() ? g.base : it->second;
            Element img = g.is_steinberg() ? Element::steinberg(nb, g.word[0])
                                           : Element::totaro(nb, g.word);
            piece = multiply(piece, img);
            if (piece.is_zero())
                break;
        }
        r += piece;
    }
    return r;
}

std::string Element::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat abs = c;
        bool neg = c < Rat(0);
        if (neg)
            abs = -c;
        if (first) {
            if (neg)
                s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        if (!abs.is_one() || m.is_unit()) {
            s += abs.str();
            if (!m.is_unit())
                s += " ";
        }
        if (!m.is_unit())
            s += m.str();
    }
    return s;
}

} // namespace pathcell
