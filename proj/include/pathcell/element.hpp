#pragma once

#include "pathcell/rational.hpp"
#include "pathcell/symbol.hpp"

#include <map>
#include <optional>
#include <string>

namespace pathcell {

// Monomial: strictly increasing product of generators. Every generator has
// odd (cohomological) degree 1, so a repeated generator kills the monomial
// and reordering contributes the sign of the permutation.
struct Monomial {
    std::vector<Symbol> syms;

    bool is_unit() const { return syms.empty(); }
    Bidegree deg() const {
        Bidegree d{0, 0};
        for (const auto& s : syms)
            d = d + s.deg();
        return d;
    }

    friend bool operator==(const Monomial& x, const Monomial& y) { return x.syms == y.syms; }
    friend bool operator<(const Monomial& x, const Monomial& y) {
        return std::lexicographical_compare(x.syms.begin(), x.syms.end(), y.syms.begin(),
                                            y.syms.end());
    }

    std::string str() const;
};

using BaseMap = std::map<int, SymBase>; // base code -> replacement base

// Finite rational combination of monomials, the universal currency of the
// engine. Zero coefficients are never stored.
class Element {
  public:
    Element() = default;

    static Element zero() { return Element(); }
    static Element unit(const Rat& c = Rat(1));
    // Canonicalizing generator factories. The length-2 Totaro conventions
    // live here: equal flavors give 0 and T_{1-x,x} = -T_{x,1-x}.
    static Element steinberg(SymBase base, Flavor f);
    static Element totaro(SymBase base, const FlavorWord& w);
    static Element monomial(const Monomial& m, const Rat& c = Rat(1));

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    // Coefficient of the unit monomial (the "constant part").
    Rat unit_coefficient() const;

    bool is_homogeneous() const;
    // Bidegree of a homogeneous element; nullopt for 0 or mixed.
    std::optional<Bidegree> bidegree() const;

    Element& add_term(const Monomial& m, const Rat& c);

    friend Element operator+(const Element& x, const Element& y);
    friend Element operator-(const Element& x, const Element& y);
    Element operator-() const;
    friend Element operator*(const Rat& c, const Element& x);
    friend Element operator*(const Element& x, const Element& y); // graded product
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }

    friend bool operator==(const Element& x, const Element& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }
    friend bool operator<(const Element& x, const Element& y) { return x.terms_ < y.terms_; }

    std::string str() const;

  private:
    std::map<Monomial, Rat> terms_;
};

Element multiply(const Element& x, const Element& y);

// Differential of the formal cdga: zero on Steinberg symbols, the
// defining-system sum on Totaro symbols, extended by the graded Leibniz rule.
Element differential(const Element& x);

// d on the Totaro generator T_w alone: sum over splits of \bar{T}_{w<=i} T_{w>i}.
Element totaro_boundary(SymBase base, const FlavorWord& w);

// (-1)^(n-1) x for homogeneous x of cohomological degree n.
Element overline_cochain(const Element& x);

// Algebra endomorphism replacing symbol bases, renormalizing as it goes.
Element substitute(const Element& x, const BaseMap& assignment);

} // namespace pathcell
