#pragma once

#include "pathcell/element.hpp"

#include <map>
#include <vector>

namespace pathcell {

// Tensor word of homogeneous augmentation-ideal elements.
using BarWord = std::vector<Element>;
// Formal rational combination of bar words.
using BarSum = std::map<BarWord, Rat>;

BarSum bar_sum(const BarWord& w, const Rat& c = Rat(1));
BarSum bar_add(const BarSum& x, const BarSum& y);
BarSum bar_scale(const Rat& c, const BarSum& x);
bool bar_is_zero(const BarSum& x);
std::string bar_str(const BarSum& x);

// The reduced bar differential
//   D(r1 x ... x rn) = sum_i (-1)^{r1+...+r_{i-1}} r1 x ... x d(r_i) x ... x rn
//                    + sum_j (-1)^{n+j} r1 x ... x r_j r_{j+1} x ... x rn,
// letters that vanish annihilate their word.
BarSum bar_differential(const BarWord& w);
BarSum bar_differential(const BarSum& s);

bool is_bar_cocycle(const BarSum& s);

// Bar-degree-0 cocycles in the finite window: words of length <= max_len over
// the letter set, each letter of cohomological degree 1, total Adams weight w.
std::vector<BarSum> h0_kernel_basis(const std::vector<Element>& letters, int max_len, int weight);

} // namespace pathcell
