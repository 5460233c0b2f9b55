#pragma once

#include "pathcell/bidegree.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace pathcell {

enum class Flavor : unsigned char { plain, complement };

inline Flavor opposite(Flavor f) {
    return f == Flavor::plain ? Flavor::complement : Flavor::plain;
}

using FlavorWord = std::vector<Flavor>;

// Base of a symbol: one of the two endpoint constants or a face-local
// variable block. Variables print as U, V, W, X, Y, Z.
struct SymBase {
    int code; // 0 = a, 1 = b, 2+i = variable block i

    static SymBase a() { return {0}; }
    static SymBase b() { return {1}; }
    static SymBase var(int i) { return {2 + i}; }

    bool is_const() const { return code < 2; }
    bool is_var() const { return code >= 2; }
    int var_index() const { return code - 2; }

    friend bool operator==(SymBase x, SymBase y) { return x.code == y.code; }
    friend bool operator!=(SymBase x, SymBase y) { return x.code != y.code; }
    friend bool operator<(SymBase x, SymBase y) { return x.code < y.code; }

    std::string name() const {
        if (code == 0)
            return "a";
        if (code == 1)
            return "b";
        static const char* v = "UVWXYZ";
        int i = code - 2;
        if (i < 6)
            return std::string(1, v[i]);
        return "U" + std::to_string(i + 1);
    }
};

// A formal generator: Steinberg symbol [x] / [1-x] (flavor word of length 1)
// or Totaro symbol T_{...} (length >= 2). Every generator has cohomological
// degree 1; the Adams weight is the word length.
struct Symbol {
    SymBase base;
    FlavorWord word;

    bool is_steinberg() const { return word.size() == 1; }
    Bidegree deg() const { return {1, (int)word.size()}; }

    friend bool operator==(const Symbol& x, const Symbol& y) {
        return x.base == y.base && x.word == y.word;
    }
    friend bool operator<(const Symbol& x, const Symbol& y) {
        // (kind, base, flavor word), Steinberg symbols first.
        bool xs = x.is_steinberg(), ys = y.is_steinberg();
        if (xs != ys)
            return xs;
        if (x.base != y.base)
            return x.base < y.base;
        return x.word < y.word;
    }

    std::string str() const {
        auto letter = [&](Flavor f) {
            return f == Flavor::plain ? base.name() : "1-" + base.name();
        };
        if (is_steinberg())
            return "[" + letter(word[0]) + "]";
        std::string s = "T_{";
        for (size_t i = 0; i < word.size(); ++i) {
            if (i)
                s += ",";
            s += letter(word[i]);
        }
        return s + "}";
    }
};

} // namespace pathcell
