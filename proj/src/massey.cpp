#include "pathcell/massey.hpp"

#include <stdexcept>

namespace pathcell {

void DefiningSystem::set_bound(size_t i, size_t j, const Element& e) {
    bounds_[{i, j}] = e;
}

bool DefiningSystem::has_bound(size_t i, size_t j) const {
    return bounds_.count({i, j}) > 0;
}

const Element& DefiningSystem::bound(size_t i, size_t j) const {
    auto it = bounds_.find({i, j});
    if (it == bounds_.end())
        throw std::invalid_argument("defining system: missing bound for subword [" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    return it->second;
}

namespace {

// Bound of w[i..j): the Steinberg letter itself for length 1, else from sys.
Element subword_bound(const MasseyWord& w, const DefiningSystem& sys, size_t i, size_t j) {
    if (j - i == 1)
        return w[i].cocycle();
    return sys.bound(i, j);
}

Element required_boundary(const MasseyWord& w, const DefiningSystem& sys, size_t i, size_t j) {
    Element r;
    for (size_t k = i + 1; k < j; ++k)
        r += multiply(overline_cochain(subword_bound(w, sys, i, k)), subword_bound(w, sys, k, j));
    return r;
}

} // namespace

DefiningSystem canonical_totaro_system(const MasseyWord& w) {
    DefiningSystem sys;
    for (size_t len = 2; len < w.size(); ++len) {
        for (size_t i = 0; i + len <= w.size(); ++i) {
            SymBase base = w[i].base;
            FlavorWord fw;
            for (size_t k = i; k < i + len; ++k) {
                if (w[k].base != base)
                    throw std::invalid_argument(
                        "canonical_totaro_system: mixed bases in subword, no canonical bound");
                fw.push_back(w[k].flavor);
            }
            sys.set_bound(i, i + len, Element::totaro(base, fw));
        }
    }
    return sys;
}

Element totaro_differential(SymBase base, const FlavorWord& w) {
    if (w.size() < 2)
        throw std::invalid_argument("totaro_differential: word length must be >= 2");
    return totaro_boundary(base, w);
}

SystemReport check_defining_system(const MasseyWord& w, const DefiningSystem& sys) {
    SystemReport report;
    for (size_t len = 2; len < w.size(); ++len) {
        for (size_t i = 0; i + len <= w.size(); ++i) {
            size_t j = i + len;
            if (!sys.has_bound(i, j)) {
                report.failures.push_back({i, j, "missing bound", Element()});
                continue;
            }
            const Element& b = sys.bound(i, j);
            if (!b.is_homogeneous()) {
                report.failures.push_back({i, j, "heterogeneous bound", Element()});
                continue;
            }
            // A bound for a product of len degree-(1,1) letters lives in
            // bidegree (1, len); the zero cochain is always acceptable.
            if (!b.is_zero() && *b.bidegree() != Bidegree{1, (int)len}) {
                report.failures.push_back({i, j, "wrong bidegree", Element()});
                continue;
            }
            Element residual = differential(b) - required_boundary(w, sys, i, j);
            if (!residual.is_zero())
                report.failures.push_back({i, j, "boundary mismatch", residual});
        }
    }
    return report;
}

Element massey_representative(const MasseyWord& w, const DefiningSystem& sys) {
    if (w.empty())
        throw std::invalid_argument("massey_representative: empty word");
    SystemReport report = check_defining_system(w, sys);
    if (!report.ok()) {
        const auto& f = report.failures.front();
        throw std::invalid_argument("massey_representative: invalid system at subword [" +
                                    std::to_string(f.i) + "," + std::to_string(f.j) +
                                    "): " + f.reason);
    }
    return required_boundary(w, sys, 0, w.size());
}

Element massey_representative(const MasseyWord& w) {
    return massey_representative(w, canonical_totaro_system(w));
}

std::string TripleIndeterminacy::describe() const {
    return "(" + first.str() + ")*H + H*(" + third.str() + ")";
}

TripleIndeterminacy triple_indeterminacy(const Element& first, const Element& third) {
    if (!differential(first).is_zero() || !differential(third).is_zero())
        throw std::invalid_argument("triple_indeterminacy: arguments must be cocycles");
    if (!first.is_homogeneous() || !third.is_homogeneous())
        throw std::invalid_argument("triple_indeterminacy: arguments must be homogeneous");
    return TripleIndeterminacy{first, third};
}

} // namespace pathcell
