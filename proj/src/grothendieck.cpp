#include "catkit/grothendieck.hpp"

namespace catkit {

GrResult::Source GrResult::source(std::size_t a, std::size_t b, std::size_t u) const {
  const auto [i, x] = objects.at(a);
  const auto [j, y] = objects.at(b);
  if (lax) return {i, x, diagram->func.at(u).f0.at(y)};
  return {j, diagram->func.at(u).f0.at(x), y};
}

GrResult grothendieck(const OplaxRef& xr, bool check) {
  const OplaxDiagram& x = *xr;
  if (check) {
    if (auto r = validate_oplax(x); !r) throw Error(Errc::Invalid, "diagram is not oplax: " + r.str());
  }
  const IndexCat& ic = x.index;
  GrResult g;
  g.diagram = xr;
  std::vector<std::string> labels;
  std::vector<std::size_t> degree;
  for (std::size_t i = 0; i < ic.objects.size(); ++i) {
    g.first.push_back(g.objects.size());
    for (std::size_t a = 0; a < x.cats[i]->size(); ++a) {
      g.objects.emplace_back(i, a);
      labels.push_back("(" + x.cats[i]->objects[a] + "," + ic.objects[i] + ")");
      degree.push_back(i);
    }
  }
  const auto n = g.objects.size();
  std::vector<std::vector<TaggedCoproduct>> sums(n, std::vector<TaggedCoproduct>(n));
  std::vector<std::vector<Obj>> hom(n, std::vector<Obj>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto [i, xa] = g.objects[a];
      const auto [j, yb] = g.objects[b];
      std::vector<std::pair<std::string, Obj>> parts;
      for (auto u : ic.hom(i, j)) parts.emplace_back(ic.mors[u].name, x.cats[j]->hom[x.func[u].f0[xa]][yb]);
      sums[a][b] = coproduct(x.base, parts);
      hom[a][b] = sums[a][b].total;
    }
  auto cat = build_vcat(
      x.base, labels, std::move(hom),
      [&](std::size_t a, std::size_t b, std::size_t c, std::size_t gi, std::size_t fi) {
        const auto [i, xa] = g.objects[a];
        const auto [j, yb] = g.objects[b];
        const auto [k, zc] = g.objects[c];
        const auto& sab = sums[a][b];
        const auto& sbc = sums[b][c];
        const auto bu = sab.block_of(fi), bv = sbc.block_of(gi);
        const auto u = ic.hom(i, j)[bu], v = ic.hom(j, k)[bv];
        const Elem f = basis(sab.parts[bu], fi - sab.offsets[bu]);
        const Elem h = basis(sbc.parts[bv], gi - sbc.offsets[bv]);
        const VFunctor &xu = x.func[u], &xv = x.func[v];
        const auto w = ic.compose(v, u);
        const VCat& xk = *x.cats[k];
        const auto o_vu = xv.f0[xu.f0[xa]], o_w = x.func[w].f0[xa], o_vy = xv.f0[yb];
        // h o X(v)(f) o theta_{v,u}(x), in component v o u
        const Elem hf = compose_in(xk, o_vu, o_vy, zc, h, xv(xu.f0[xa], yb, f));
        const Elem e = compose_in(xk, o_w, o_vu, zc, hf, x.theta_at(v, u).comp[xa]);
        return eval(sums[a][c].injections[ic.position_in_hom(w)], e);
      },
      [&](std::size_t a) {
        const auto [i, xa] = g.objects[a];
        return eval(sums[a][a].injections[ic.position_in_hom(ic.ident[i])], x.eta[i].comp[xa]);
      });
  g.graded = share(make_graded(share(std::move(cat)), ic, degree, [&](std::size_t a, std::size_t b, std::size_t u) {
    return sums[a][b].parts[ic.position_in_hom(u)].size();
  }));
  return g;
}

GrResult grothendieck_lax(const LaxRef& x, bool check) {
  if (check) {
    if (auto r = validate_lax(*x); !r) throw Error(Errc::Invalid, "diagram is not lax: " + r.str());
  }
  GrResult g = grothendieck(share(op(*x)), false);
  g.dual = g.graded;
  g.graded = share(op(*g.dual));
  g.lax = true;
  return g;
}

GradedMorphism gr_on_morphism(const GrResult& gx, const GrResult& gy, const Transf& t) {
  if (t.side != Side::left) throw Error(Errc::TagMismatch, "Gr needs a left transformation");
  const OplaxDiagram &x = *gx.diagram, &y = *gy.diagram;
  const IndexCat& ic = x.index;
  const GradedVCat &a = *gx.graded, &b = *gy.graded;
  std::vector<std::size_t> f0;
  for (const auto& [i, xa] : gx.objects) f0.push_back(gy.object_of(i, t.comp[i].f0[xa]));
  auto functor = build_vfunctor(a.cat, b.cat, f0, [&](std::size_t p, std::size_t q, std::size_t k) {
    const auto [i, xa] = gx.objects[p];
    const auto [j, yb] = gx.objects[q];
    const auto u = a.tag_of(p, q, k);
    const Elem f = *a.local(p, q, basis(a.cat->hom[p][q], k), u);
    const VFunctor& fj = t.comp[j];
    const auto o_yuf = y.func[u].f0[t.comp[i].f0[xa]], o_fxu = fj.f0[x.func[u].f0[xa]], o_fy = fj.f0[yb];
    // F(j)(f) o phi(u)(x)
    const Elem e = compose_in(*y.cats[j], o_yuf, o_fxu, o_fy, fj(x.func[u].f0[xa], yb, f), t.square[u].comp[xa]);
    return b.inject(f0[p], f0[q], u, e);
  });
  std::vector<std::size_t> phi2;
  for (const auto& [i, xa] : gx.objects) phi2.push_back(ic.ident[i]);
  return {gx.graded, gy.graded, std::move(functor), std::move(phi2), false};
}

Graded2Morphism gr_on_2morphism(const GrResult& gx, const GrResult& gy, const TransfMorphism& m) {
  auto src = gr_on_morphism(gx, gy, m.src);
  auto tgt = gr_on_morphism(gx, gy, m.tgt);
  const OplaxDiagram& y = *gy.diagram;
  const IndexCat& ic = y.index;
  VNatTrans nat{src.functor, tgt.functor, {}};
  for (std::size_t p = 0; p < gx.objects.size(); ++p) {
    const auto [i, xa] = gx.objects[p];
    const auto fa = m.src.comp[i].f0[xa], ga = m.tgt.comp[i].f0[xa];
    const auto y1fa = y.func[ic.ident[i]].f0[fa];
    // theta(i)(x) o eta_i(F x), in component 1_i
    const Elem e = compose_in(*y.cats[i], y1fa, fa, ga, m.comp[i].comp[xa], y.eta[i].comp[fa]);
    nat.comp.push_back(gy.graded->inject(src.functor.f0[p], tgt.functor.f0[p], ic.ident[i], e));
  }
  return {std::move(src), std::move(tgt), std::move(nat)};
}

GradedMorphism op(const GradedMorphism& m, const GradedRef& dom, const GradedRef& cod) {
  VFunctor f = op(m.functor);
  f.dom = dom->cat;
  f.cod = cod->cat;
  return {dom, cod, std::move(f), m.phi2, !m.right};
}

GradedMorphism gr_lax_on_morphism(const GrResult& gx, const GrResult& gy, const LaxTransf& t) {
  if (!gx.lax || !gy.lax) throw Error(Errc::TagMismatch, "lax Grothendieck results expected");
  GrResult ix = gx, iy = gy;
  ix.graded = gx.dual;
  iy.graded = gy.dual;
  ix.lax = iy.lax = false;
  Transf d = op(t);
  d.src = gx.diagram;
  d.tgt = gy.diagram;
  return op(gr_on_morphism(ix, iy, d), gx.graded, gy.graded);
}

VFunctor projection_functor(const GrResult& g) {
  return functor_from_grading(*g.graded, share(free_vcat(g.graded->index, g.graded->cat->base)));
}

}  // namespace catkit
