// Units, counits and triangle checks for Gr -| Gamma and Gr -| Delta.
#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "catkit/diagram.hpp"
#include "catkit/fibers.hpp"
#include "catkit/grothendieck.hpp"

namespace catkit {

enum class AdjunctionKind { gr_gamma, gr_delta };

struct AdjunctionWitness {
  AdjunctionKind kind = AdjunctionKind::gr_gamma;
  Transf unit;                            // X => Gamma(Gr X) or X => Delta(Gr X)
  std::optional<GradedMorphism> counit;   // Gr(Gamma mu) -> mu
  std::optional<VFunctor> counit_delta;   // Gr(Delta A) -> A
  OplaxRef x;
  GradedRef mu;
  VCatRef a;
};

// Gr -| Gamma on X with mu = Gr X, or Gr -| Delta on X and A.
AdjunctionWitness witness_gr_gamma(const OplaxRef& x);
AdjunctionWitness witness_gr_delta(const OplaxRef& x, const VCatRef& a);
// Unit and counit each validate in their own 2-category.
Report validate_witness(const AdjunctionWitness& w);

// eta_X(i) : x |-> ((x,i), 1_i).
Transf unit_gr_gamma(const OplaxRef& x, const GrResult& gx, const Gamma& gamma);
Transf unit_gr_gamma(const OplaxRef& x);
// (e,u,i) |-> e with degree part u.
struct CounitGrGamma {
  Gamma gamma;      // Gamma-left of mu
  GrResult gr;      // Gr of that diagram
  GradedMorphism counit;
};
CounitGrGamma counit_gr_gamma(const GradedRef& g);

// Both triangle identities as strict equalities.
Report check_triangles_gr_gamma(const OplaxRef& x, const GradedRef& g);

// The component inclusions X(i) -> Gr X.
Transf unit_gr_delta(const OplaxRef& x, const GrResult& gx, const OplaxRef& delta_gr);
Transf unit_gr_delta(const OplaxRef& x);
// Forgets the components (finset) or sums them (finvect).
VFunctor counit_gr_delta(const VCatRef& a, const IndexCat& i);

Report check_triangles_gr_delta(const OplaxRef& x, const VCatRef& a);

// The two directions of the hom-category isomorphism Fun(Gr X, A) = Transf(X, Delta A).
Transf transf_of_functor(const GrResult& gx, const OplaxRef& delta_a, const VFunctor& h);
VFunctor functor_of_transf(const GrResult& gx, const VCatRef& a, const Transf& t);

struct HomBijection {
  Report report;
  std::size_t functors = 0;
  std::size_t transfs = 0;
  std::size_t nat_trans = 0;      // 2-cells between functors Gr X -> A
  std::size_t modifications = 0;  // 2-cells between transformations X => Delta A
};

// Finite sets only; throws SizeCap when any enumeration exceeds `cap`.
HomBijection enumerate_hom_bijection(const OplaxRef& x, const VCatRef& a, std::size_t cap);

// Every left transformation X => Y (finite sets), in enumeration order.
std::vector<Transf> enumerate_left_transfs(const OplaxRef& x, const OplaxRef& y, std::size_t cap);

}  // namespace catkit
