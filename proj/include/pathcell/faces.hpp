#pragma once

#include "pathcell/element.hpp"

#include <string>
#include <vector>

namespace pathcell {

// Face of the cosimplicial path scheme for X^n with endpoints a, b: p leading
// coordinates pinned to a, m blocks of consecutive equal coordinates, q
// trailing coordinates pinned to b. The level of the face is m.
struct Face {
    int a_pins = 0;
    std::vector<int> blocks;
    int b_pins = 0;

    int level() const { return (int)blocks.size(); }
    int total() const {
        int t = a_pins + b_pins;
        for (int s : blocks)
            t += s;
        return t;
    }

    friend bool operator==(const Face& x, const Face& y) {
        return x.a_pins == y.a_pins && x.blocks == y.blocks && x.b_pins == y.b_pins;
    }
    // deterministic order: a_pins descending, blocks lexicographic, b_pins
    friend bool operator<(const Face& x, const Face& y) {
        if (x.a_pins != y.a_pins)
            return x.a_pins > y.a_pins;
        if (x.blocks != y.blocks)
            return x.blocks < y.blocks;
        return x.b_pins < y.b_pins;
    }

    std::string str() const;
};

// Coface of a face: local index i applies pin-first-block-to-a (i = 0), the
// merge of blocks i, i+1 (0 < i < m) or pin-last-block-to-b (i = m). The
// attached substitution maps the source face's block variables.
struct Coface {
    int local_index;
    Face target;
    BaseMap subst; // source block variable -> target base
    int sign() const { return local_index % 2 == 0 ? 1 : -1; }
};

std::vector<Coface> cofaces(const Face& f);

// Level k of the lattice lists every face with k blocks, in canonical order;
// level n is the single full face and level 0 the n+1 fully pinned ones.
std::vector<std::vector<Face>> build_face_lattice(int n);

int face_index(const std::vector<Face>& level, const Face& f);

// Basis word of a face's free model: one slot per block, empty or a Steinberg
// flavor. Bidegree of a word is (length, length).
enum class Slot : unsigned char { none, plain, complement };

struct FaceWord {
    std::vector<Slot> slots;

    int length() const;
    Bidegree deg() const { return {length(), length()}; }
    std::string str() const;

    friend bool operator==(const FaceWord& x, const FaceWord& y) { return x.slots == y.slots; }
    friend bool operator<(const FaceWord& x, const FaceWord& y) { return x.slots < y.slots; }
};

// All 3^m words of an m-block face in lexicographic slot order.
std::vector<FaceWord> face_words(int m);

// The product Element of variable Steinberg symbols the word names.
Element word_element(const FaceWord& w);

} // namespace pathcell
