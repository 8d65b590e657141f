// Fibers of a graded category, the Gamma 2-functors and (pre)cofibered structures.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "catkit/comodule.hpp"
#include "catkit/diagram.hpp"
#include "catkit/grothendieck.hpp"

namespace catkit {

// E|_i: objects of degree i with the 1_i blocks as homs.
struct StrictFiber {
  VCatRef cat;
  std::vector<std::size_t> objects;     // objects of E, in order
  std::vector<std::vector<Mor>> incl;   // fiber hom -> E hom
};

StrictFiber strict_fiber(const GradedVCat& g, std::size_t i);

// mu|i (left) has objects (e, u : p(e) -> i); i|mu (right) has objects (e, u : i -> p(e)).
struct CommaFiber {
  VCatRef cat;
  std::vector<std::pair<std::size_t, std::size_t>> objects;  // (e, u)
  std::vector<std::vector<Mor>> incl;                        // comma hom -> E hom
  bool right = false;

  std::size_t index_of(std::size_t e, std::size_t u) const;
};

CommaFiber left_comma_fiber(const GradedVCat& g, std::size_t i);
CommaFiber right_comma_fiber(const GradedVCat& g, std::size_t i);

// The pullback presentation of a left comma-fiber hom, re-expressed in canonical form.
Subobject comma_hom_pullback(const GradedVCat& g, std::size_t i, std::pair<std::size_t, std::size_t> a,
                             std::pair<std::size_t, std::size_t> b);

struct Gamma {
  GradedRef graded;
  OplaxRef diagram;
  std::vector<CommaFiber> fibers;
};

struct GammaRight {
  GradedRef graded;
  LaxRef diagram;  // indexed by the opposite index category
  std::vector<CommaFiber> fibers;
  Gamma dual;      // gamma_left of the opposite grading
};

Gamma gamma_left(const GradedRef& g);
GammaRight gamma_right(const GradedRef& g);

Transf gamma_on_morphism(const Gamma& gx, const Gamma& gy, const GradedMorphism& m);
TransfMorphism gamma_on_2morphism(const Gamma& gx, const Gamma& gy, const Graded2Morphism& m);
LaxTransf gamma_right_on_morphism(const GammaRight& gx, const GammaRight& gy, const GradedMorphism& m);

// i_i : E|_i -> mu|i and j_i : E|_i -> i|mu, both e |-> (e, 1_i).
VFunctor comparison_i(const StrictFiber& s, const CommaFiber& c, std::size_t i, const IndexCat& ic);
VFunctor comparison_j(const StrictFiber& s, const CommaFiber& c, std::size_t i, const IndexCat& ic);

// Per index object: the strict fiber, the comma fiber and the comparison functor between them.
struct FiberSystem {
  GradedRef graded;
  bool right = false;
  std::vector<StrictFiber> strict;
  std::vector<CommaFiber> comma;
  std::vector<VFunctor> compare;
  OplaxRef gamma;  // left systems only
};

FiberSystem fiber_system(const GradedRef& g, bool right = false);

// Cofibered: s_i -| i_i with unit 1 => i s, counit s i => 1.
// Fibered: j_i -| t_i with unit 1 => t j, counit j t => 1.
struct AdjointEntry {
  VFunctor adj;
  VNatTrans unit;
  VNatTrans counit;
};

struct FiberStructure {
  bool fibered = false;
  std::vector<AdjointEntry> entries;
};

struct StructureCheck {
  Report report;
  // Cofibered: every unit invertible. Fibered: every counit invertible.
  bool flag = false;
};

StructureCheck verify_cofibered_structure(const FiberSystem& sys, const FiberStructure& s);

// The precofibered structure s_i((x,j),u) = (X(u) x, i) on a Grothendieck construction.
FiberStructure canonical_cofibered(const GrResult& gr, const FiberSystem& sys);
// The prefibered structure on a lax Grothendieck construction, dual to the above.
FiberStructure canonical_fibered(const GrResult& gr);

FiberStructure op(const FiberStructure& s);

// Exhaustive search for an adjoint at i over finite sets; throws SizeCap past the budget.
std::optional<AdjointEntry> search_adjoint(const FiberSystem& sys, std::size_t i, std::size_t budget);

OplaxDiagram gamma_cof(const FiberSystem& sys, const FiberStructure& s);
LaxDiagram gamma_fib(const FiberSystem& sys, const FiberStructure& s);

struct Comparisons {
  Transf i;                     // Gamma_cof -> Gamma_left, left
  Transf s;                     // Gamma_left -> Gamma_cof, right
  std::optional<Transf> s_left; // when requested and invertible
};

Comparisons comparison_transformations(const FiberSystem& sys, const FiberStructure& s, const OplaxRef& cof,
                                       bool want_left_s = false);

// Gamma_cof on a left graded morphism between precofibered categories; throws NotIso when the
// target's unit cannot be inverted where the square needs it.
Transf gamma_cof_on_morphism(const FiberSystem& sx, const FiberStructure& x, const OplaxRef& cx,
                             const FiberSystem& sy, const FiberStructure& y, const OplaxRef& cy,
                             const GradedMorphism& m);
TransfMorphism gamma_cof_on_2morphism(const FiberSystem& sx, const OplaxRef& cx, const Transf& f,
                                      const FiberSystem& sy, const FiberStructure& y, const OplaxRef& cy,
                                      const Transf& g, const Graded2Morphism& m);

}  // namespace catkit
