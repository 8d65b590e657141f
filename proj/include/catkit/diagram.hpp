// Oplax and lax diagrams I -> V-Cat, their transformations and modifications.
#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "catkit/index_cat.hpp"
#include "catkit/report.hpp"
#include "catkit/vcat.hpp"

namespace catkit {

using MorPair = std::pair<std::size_t, std::size_t>;  // (v, u) with v o u defined

struct DiagramData {
  IndexCat index;
  Base base;
  std::vector<VCatRef> cats;             // X(i)
  std::vector<VFunctor> func;            // X(u), one per morphism of the index category
  std::vector<VNatTrans> eta;            // one per object
  std::map<MorPair, VNatTrans> theta;    // one per composable pair

  const VFunctor& at(std::size_t u) const { return func.at(u); }
  const VNatTrans& theta_at(std::size_t v, std::size_t u) const { return theta.at({v, u}); }
};

// eta_i : X(1_i) => 1, theta_{v,u} : X(v o u) => X(v) X(u).
struct OplaxDiagram : DiagramData {};
// eta_i : 1 => X(1_i), theta_{v,u} : X(v) X(u) => X(v o u).
struct LaxDiagram : DiagramData {};

using OplaxRef = std::shared_ptr<const OplaxDiagram>;
using LaxRef = std::shared_ptr<const LaxDiagram>;
inline OplaxRef share(OplaxDiagram d) { return std::make_shared<const OplaxDiagram>(std::move(d)); }
inline LaxRef share(LaxDiagram d) { return std::make_shared<const LaxDiagram>(std::move(d)); }

std::vector<MorPair> composable_pairs(const IndexCat& i);

// Fills eta and theta with identities; func must already be strictly functorial.
OplaxDiagram strict_diagram(IndexCat index, std::vector<VCatRef> cats, std::vector<VFunctor> func);

Report validate_oplax(const OplaxDiagram& x);
Report validate_lax(const LaxDiagram& x);
bool is_strict(const DiagramData& x);

LaxDiagram op(const OplaxDiagram& x);
OplaxDiagram op(const LaxDiagram& x);

OplaxDiagram diagonal(const VCatRef& a, const IndexCat& i);

enum class Side { left, right };

// Left: phi(u) : Y(u) F(i) => F(j) X(u). Right: phi(u) : F(j) X(u) => Y(u) F(i).
template <class D>
struct TransfOf {
  std::shared_ptr<const D> src;
  std::shared_ptr<const D> tgt;
  Side side = Side::left;
  std::vector<VFunctor> comp;
  std::vector<VNatTrans> square;  // one per morphism of the index category
};

using Transf = TransfOf<OplaxDiagram>;
using LaxTransf = TransfOf<LaxDiagram>;
using LeftTransf = Transf;
using RightTransf = Transf;

template <class D>
struct TransfMorphismOf {
  TransfOf<D> src;
  TransfOf<D> tgt;
  std::vector<VNatTrans> comp;  // theta(i) : F(i) => G(i)
};

using TransfMorphism = TransfMorphismOf<OplaxDiagram>;
using LaxTransfMorphism = TransfMorphismOf<LaxDiagram>;

Report validate_transf(const Transf& t);
Report validate_left_transf(const Transf& t);
Report validate_right_transf(const Transf& t);
Report validate_transf(const LaxTransf& t);
Report validate_transf_morphism(const TransfMorphism& m);
Report validate_transf_morphism(const LaxTransfMorphism& m);

// The opposite flips the side.
LaxTransf op(const Transf& t);
Transf op(const LaxTransf& t);
LaxTransfMorphism op(const TransfMorphism& m);
TransfMorphism op(const LaxTransfMorphism& m);

Transf identity_transf(const OplaxRef& x, Side side = Side::left);
Transf compose_transfs(const Transf& g, const Transf& f);  // g o f
bool same_transf(const Transf& a, const Transf& b);

TransfMorphism identity_transf_morphism(const Transf& t);
TransfMorphism vertical(const TransfMorphism& b, const TransfMorphism& a);  // b o a
TransfMorphism horizontal(const TransfMorphism& b, const TransfMorphism& a);

}  // namespace catkit
