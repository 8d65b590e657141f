// Comonoids, comodules, cotensor products and graded V-categories.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "catkit/base.hpp"
#include "catkit/index_cat.hpp"
#include "catkit/report.hpp"
#include "catkit/vcat.hpp"

namespace catkit {

Report validate_comonoid(const Comonoid& c);

struct RightComodule {
  Obj carrier;
  Comonoid over;
  Mor coaction;  // M -> M (x) C
};

struct LeftComodule {
  Obj carrier;
  Comonoid over;
  Mor coaction;  // M -> C (x) M
};

Report validate_comodule(const RightComodule& m);
Report validate_comodule(const LeftComodule& m);

// Equalizer of coaction (x) 1 and 1 (x) coaction inside M (x) N.
Subobject cotensor(const RightComodule& m, const LeftComodule& n);

// A decomposition of `total` into subobjects tagged by the elements of S.
struct Decomposition {
  Obj total;
  std::vector<std::string> tags;
  std::vector<Subobject> parts;
  bool operator==(const Decomposition& o) const;
};

// Projectors p_s = r o (1 (x) delta_s) o coaction (finvect only).
std::vector<Mor> projectors(const RightComodule& m);
Decomposition decomposition_from_comodule(const RightComodule& m);
RightComodule comodule_from_decomposition(const Decomposition& d);
// Re-expresses every part in its canonical basis.
Decomposition canonical(const Decomposition& d);

// Graded V-category stored as block decompositions of every hom object. The blocks of
// hom(x,y) are tagged by the morphisms p(x) -> p(y) of the index category, in list order.
struct GradedVCat {
  VCatRef cat;
  IndexCat index;
  std::vector<std::size_t> degree;
  std::vector<std::vector<TaggedCoproduct>> decomp;

  std::vector<std::size_t> tags(std::size_t x, std::size_t y) const;
  // Index-category morphism labelling basis element k of hom(x,y).
  std::size_t tag_of(std::size_t x, std::size_t y, std::size_t k) const;
  // Tags whose blocks meet the support of e.
  std::vector<std::size_t> support(std::size_t x, std::size_t y, const Elem& e) const;
  // Component of e in block u; nullopt for finset elements outside the block.
  std::optional<Elem> component(std::size_t x, std::size_t y, const Elem& e, std::size_t u) const;
  // Basis indices of hom(x,y) lying in block u.
  std::pair<std::size_t, std::size_t> block_range(std::size_t x, std::size_t y, std::size_t u) const;
  // Block-local coordinates of the u-component of e, and back.
  std::optional<Elem> local(std::size_t x, std::size_t y, const Elem& e, std::size_t u) const;
  Elem inject(std::size_t x, std::size_t y, std::size_t u, const Elem& local) const;
};

using GradedRef = std::shared_ptr<const GradedVCat>;
inline GradedRef share(GradedVCat g) { return std::make_shared<const GradedVCat>(std::move(g)); }

using SizeFn = std::function<std::size_t(std::size_t x, std::size_t y, std::size_t u)>;
GradedVCat make_graded(VCatRef cat, IndexCat index, std::vector<std::size_t> degree, const SizeFn& sizes);

// Coaction hom(x,y) -> hom(x,y) (x) (I (x) 1)(p x, p y).
Mor coaction(const GradedVCat& g, std::size_t x, std::size_t y);
Report validate_grading(const GradedVCat& g);

// I (x) 1 graded over I by identity degrees.
GradedVCat free_graded(const IndexCat& i, const Base& b);
// Opposite of a graded category, graded over the opposite index category.
GradedVCat op(const GradedVCat& g);

// Product-type base: gradings correspond to functors into I (x) 1.
VFunctor functor_from_grading(const GradedVCat& g, const VCatRef& free_i);
GradedVCat grading_from_functor(const VFunctor& p, const IndexCat& i);

// Degree-preserving morphism. Left: phi2(x) : p'(F x) -> p(x). Right: phi2(x) : p(x) -> p'(F x).
struct GradedMorphism {
  GradedRef dom;
  GradedRef cod;
  VFunctor functor;
  std::vector<std::size_t> phi2;
  bool right = false;
};

struct Graded2Morphism {
  GradedMorphism src;
  GradedMorphism tgt;
  VNatTrans nat;
};

Report validate_graded_morphism(const GradedMorphism& m);
Report validate_graded_2morphism(const Graded2Morphism& m);
GradedMorphism identity_graded(const GradedRef& g, bool right = false);
GradedMorphism compose_graded(const GradedMorphism& g, const GradedMorphism& f);  // g o f
Graded2Morphism compose_graded_2(const Graded2Morphism& b, const Graded2Morphism& a);
bool same_graded_morphism(const GradedMorphism& a, const GradedMorphism& b);

}  // namespace catkit
