// The Grothendieck construction of oplax (left) and lax (right) diagrams.
#pragma once

#include <utility>
#include <vector>

#include "catkit/comodule.hpp"
#include "catkit/diagram.hpp"

namespace catkit {

struct GrResult {
  GradedRef graded;
  // The oplax diagram the construction ran on; for lax input this is the opposite diagram.
  OplaxRef diagram;
  // Gr over the opposite diagram, kept for lax results so morphisms can be dualised.
  GradedRef dual;
  bool lax = false;
  std::vector<std::pair<std::size_t, std::size_t>> objects;  // (i, x) per object
  std::vector<std::size_t> first;                             // first object over each i

  std::size_t object_of(std::size_t i, std::size_t x) const { return first.at(i) + x; }

  // Block u of hom(a,b) is X(j)(X(u) x, y), or X(i)(x, X(u) y) for lax input.
  struct Source {
    std::size_t fiber;
    std::size_t from;
    std::size_t to;
  };
  Source source(std::size_t a, std::size_t b, std::size_t u) const;
};

// Throws Invalid with the oplax law report unless `check` is false.
GrResult grothendieck(const OplaxRef& x, bool check = true);
GrResult grothendieck_lax(const LaxRef& x, bool check = true);

GradedMorphism gr_on_morphism(const GrResult& gx, const GrResult& gy, const Transf& t);
Graded2Morphism gr_on_2morphism(const GrResult& gx, const GrResult& gy, const TransfMorphism& m);
// Right transformations of lax diagrams give right graded morphisms.
GradedMorphism gr_lax_on_morphism(const GrResult& gx, const GrResult& gy, const LaxTransf& t);

// The dual of a graded morphism: left becomes right over the opposite index category.
GradedMorphism op(const GradedMorphism& m, const GradedRef& dom, const GradedRef& cod);

// Finite sets only.
VFunctor projection_functor(const GrResult& g);

}  // namespace catkit
