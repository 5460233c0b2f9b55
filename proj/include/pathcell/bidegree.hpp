#pragma once

#include <string>

namespace pathcell {

// (cohomological degree, Adams weight). The first grading governs Koszul
// signs; the second never does. The differential has bidegree (+1, 0).
struct Bidegree {
    int p = 0; // cohomological
    int q = 0; // Adams

    friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.p + b.p, a.q + b.q}; }
    friend Bidegree operator-(Bidegree a, Bidegree b) { return {a.p - b.p, a.q - b.q}; }
    friend bool operator==(Bidegree a, Bidegree b) { return a.p == b.p && a.q == b.q; }
    friend bool operator!=(Bidegree a, Bidegree b) { return !(a == b); }
    friend bool operator<(Bidegree a, Bidegree b) {
        return a.p != b.p ? a.p < b.p : a.q < b.q;
    }

    std::string str() const {
        return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
};

} // namespace pathcell
