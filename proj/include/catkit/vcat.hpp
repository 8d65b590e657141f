// Finite enriched categories, enriched functors and natural transformations.
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "catkit/base.hpp"
#include "catkit/index_cat.hpp"
#include "catkit/report.hpp"

namespace catkit {

struct VCat {
  Base base;
  std::vector<std::string> objects;
  std::vector<std::vector<Obj>> hom;                 // hom[x][y]
  std::vector<std::vector<std::vector<Mor>>> comp;   // comp[x][y][z] : hom[y][z] (x) hom[x][y] -> hom[x][z]
  std::vector<Mor> id;                               // id[x] : 1 -> hom[x][x]

  std::size_t size() const { return objects.size(); }
  std::size_t index_of(const std::string& label) const;
  bool operator==(const VCat&) const = default;
};

using VCatRef = std::shared_ptr<const VCat>;

inline VCatRef share(VCat c) { return std::make_shared<const VCat>(std::move(c)); }

// Composite g o f of elements g in hom(y,z) and f in hom(x,y).
Elem compose_in(const VCat& c, std::size_t x, std::size_t y, std::size_t z, const Elem& g, const Elem& f);
Elem identity_in(const VCat& c, std::size_t x);
// Two-sided inverse of f in hom(x,y), when it exists.
std::optional<Elem> inverse_in(const VCat& c, std::size_t x, std::size_t y, const Elem& f);

using CompFn = std::function<Elem(std::size_t x, std::size_t y, std::size_t z, std::size_t g, std::size_t f)>;
using IdFn = std::function<Elem(std::size_t x)>;

// Assembles a V-category from composites of basis elements.
VCat build_vcat(const Base& b, std::vector<std::string> objects, std::vector<std::vector<Obj>> hom,
                const CompFn& comp, const IdFn& id);

// Throws IncompleteData when a table is not total or has the wrong shape.
void check_tables(const VCat& c);
Report validate_vcat(const VCat& c);

// Same composition and identity data, ignoring labels.
bool same_tables(const VCat& a, const VCat& b);

VCat unit_vcat(const Base& b);
VCat free_vcat(const IndexCat& i, const Base& b);
VCat tensor_vcats(const VCat& a, const VCat& b);
VCat op(const VCat& c);
VCat empty_vcat(const Base& b);

IndexCat underlying_category(const VCat& c, std::size_t cap);

// f_* : hom(c,a) -> hom(c,b) and f^* : hom(b,c) -> hom(a,c) for f in hom(a,b).
Mor pushforward(const VCat& x, std::size_t a, std::size_t b, const Elem& f, std::size_t c);
Mor pullback_along(const VCat& x, std::size_t a, std::size_t b, const Elem& f, std::size_t c);

struct VFunctor {
  VCatRef dom;
  VCatRef cod;
  std::vector<std::size_t> f0;
  std::vector<std::vector<Mor>> f1;  // f1[x][y] : dom.hom[x][y] -> cod.hom[f0 x][f0 y]

  Elem operator()(std::size_t x, std::size_t y, const Elem& f) const { return eval(f1[x][y], f); }
  bool operator==(const VFunctor& o) const;
};

using HomFn = std::function<Elem(std::size_t x, std::size_t y, std::size_t k)>;

VFunctor build_vfunctor(VCatRef dom, VCatRef cod, std::vector<std::size_t> f0, const HomFn& f1);
Report validate_vfunctor(const VFunctor& f);
VFunctor identity_functor(const VCatRef& c);
VFunctor compose_functors(const VFunctor& g, const VFunctor& f);  // g o f
VFunctor op(const VFunctor& f);

struct VNatTrans {
  VFunctor src;
  VFunctor tgt;
  std::vector<Elem> comp;  // comp[a] in cod.hom[src a][tgt a]

  bool operator==(const VNatTrans&) const = default;
};

Report validate_nattrans(const VNatTrans& t);
VNatTrans identity_nat(const VFunctor& f);
VNatTrans vertical(const VNatTrans& psi, const VNatTrans& phi);  // psi o phi
VNatTrans whisker_left(const VFunctor& g, const VNatTrans& phi);  // g phi
VNatTrans whisker_right(const VNatTrans& phi, const VFunctor& h); // phi h
VNatTrans horizontal(const VNatTrans& psi, const VNatTrans& phi);
// The opposite transformation, between the opposite functors in reverse.
VNatTrans op(const VNatTrans& t);
bool is_invertible(const VNatTrans& t);
VNatTrans inverse(const VNatTrans& t);  // throws NotIso

// Finite sets only: every functor / transformation, throwing SizeCap past `cap` results.
std::vector<VFunctor> enumerate_functors(const VCatRef& dom, const VCatRef& cod, std::size_t cap);
std::vector<VNatTrans> enumerate_nattrans(const VFunctor& f, const VFunctor& g, std::size_t cap);

}  // namespace catkit
