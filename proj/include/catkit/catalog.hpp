// Small named categories and diagrams used by the fixtures, the tests and the CLI examples.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catkit/comodule.hpp"
#include "catkit/diagram.hpp"

namespace catkit::catalog {

// One object, hom = Z/n with elements h0..h{n-1}.
VCatRef cyclic_group(std::size_t n);
// Objects 0..n-1, one morphism x -> y exactly when x <= y.
VCatRef chain_poset(std::size_t n);
VCatRef discrete(std::size_t n);
// Linear span over F_p of a finite-set category.
VCatRef linearize(const VCat& c, std::uint32_t p);
// F_p[Z/n] as a one-object category with basis g0..g{n-1}, graded over cyclic_index(n).
GradedRef group_algebra(std::uint32_t p, std::size_t n);

// Z/2 acting on Z/3 by inversion, as a strict diagram over cyclic_index(2).
OplaxRef z2_on_z3();
// Delta of chain_poset(2) over the arrow category.
OplaxRef arrow_delta();
// The comonad x |-> 0 on {0 <= 1} over the terminal category: oplax and not normal.
OplaxRef poset_comonad();
// Z/2 over cyclic_index(3) with a normalised theta whose first cocycle failure is at (g1,g1,g2).
OplaxRef broken_cocycle();

}  // namespace catkit::catalog
