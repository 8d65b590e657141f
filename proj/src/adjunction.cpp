#include "catkit/adjunction.hpp"

#include <functional>

namespace catkit {

namespace {

// f o eta_i(x) in the 1_i block of Gr X.
VFunctor component_inclusion(const OplaxDiagram& x, const GrResult& gx, std::size_t i) {
  const IndexCat& ic = x.index;
  const VCat& xi = *x.cats[i];
  const GradedVCat& g = *gx.graded;
  std::vector<std::size_t> f0;
  for (std::size_t a = 0; a < xi.size(); ++a) f0.push_back(gx.object_of(i, a));
  return build_vfunctor(x.cats[i], g.cat, f0, [&](std::size_t a, std::size_t b, std::size_t k) {
    const auto o1 = x.func[ic.ident[i]].f0[a];
    const Elem f = compose_in(xi, o1, a, b, basis(xi.hom[a][b], k), x.eta[i].comp[a]);
    return g.inject(f0[a], f0[b], ic.ident[i], f);
  });
}

// The element 1_{X(u) x} in component u of Gr X((x,i), (X(u) x, j)).
Elem unit_element(const OplaxDiagram& x, const GrResult& gx, std::size_t u, std::size_t a) {
  const auto i = x.index.mors[u].dom, j = x.index.mors[u].cod;
  const auto xa = x.func[u].f0[a];
  return gx.graded->inject(gx.object_of(i, a), gx.object_of(j, xa), u, identity_in(*x.cats[j], xa));
}

// Delta on a V-functor: the same functor at every index object, identity squares.
Transf delta_of(const VFunctor& h, const OplaxRef& src, const OplaxRef& tgt) {
  const IndexCat& ic = src->index;
  Transf t{src, tgt, Side::left, std::vector<VFunctor>(ic.objects.size(), h), {}};
  for (std::size_t u = 0; u < ic.mors.size(); ++u) {
    const VFunctor s = compose_functors(tgt->func[u], h);
    t.square.push_back(VNatTrans{s, compose_functors(h, src->func[u]), identity_nat(s).comp});
  }
  return t;
}

Elem lift_or_throw(const Mor& incl, const Elem& e) {
  auto r = lift(incl, e);
  if (!r) throw Error(Errc::BadElement, "element does not lie in the comma fiber");
  return *r;
}

}  // namespace

Transf unit_gr_gamma(const OplaxRef& xr, const GrResult& gx, const Gamma& gamma) {
  const OplaxDiagram& x = *xr;
  const IndexCat& ic = x.index;
  Transf t{xr, gamma.diagram, Side::left, {}, {}};
  for (std::size_t i = 0; i < ic.objects.size(); ++i) {
    const auto& c = gamma.fibers[i];
    const VFunctor inc = component_inclusion(x, gx, i);
    std::vector<std::size_t> f0;
    for (auto e : inc.f0) f0.push_back(c.index_of(e, ic.ident[i]));
    VFunctor f{x.cats[i], c.cat, f0, {}};
    const auto n = f0.size();
    f.f1.assign(n, std::vector<Mor>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) f.f1[a][b] = lift_mor(c.incl[f0[a]][f0[b]], inc.f1[a][b]);
    t.comp.push_back(std::move(f));
  }
  for (std::size_t u = 0; u < ic.mors.size(); ++u) {
    const auto i = ic.mors[u].dom, j = ic.mors[u].cod;
    const auto& c = gamma.fibers[j];
    VNatTrans s{compose_functors(gamma.diagram->func[u], t.comp[i]), compose_functors(t.comp[j], x.func[u]), {}};
    for (std::size_t a = 0; a < x.cats[i]->size(); ++a)
      s.comp.push_back(lift_or_throw(c.incl[s.src.f0[a]][s.tgt.f0[a]], unit_element(x, gx, u, a)));
    t.square.push_back(std::move(s));
  }
  return t;
}

Transf unit_gr_gamma(const OplaxRef& x) {
  auto gx = grothendieck(x);
  return unit_gr_gamma(x, gx, gamma_left(gx.graded));
}

CounitGrGamma counit_gr_gamma(const GradedRef& g) {
  if (auto r = validate_grading(*g); !r) throw Error(Errc::Invalid, "grading is invalid: " + r.str());
  CounitGrGamma out{gamma_left(g), {}, {}};
  out.gr = grothendieck(out.gamma.diagram, false);
  const GrResult& gr = out.gr;
  const OplaxDiagram& gam = *out.gamma.diagram;
  const GradedVCat& e = *gr.graded;
  std::vector<std::size_t> f0, phi2;
  for (const auto& [i, a] : gr.objects) {
    f0.push_back(out.gamma.fibers[i].objects[a].first);
    phi2.push_back(out.gamma.fibers[i].objects[a].second);
  }
  auto functor = build_vfunctor(e.cat, g->cat, f0, [&](std::size_t p, std::size_t q, std::size_t k) {
    const auto a = gr.objects[p].second;
    const auto [j, b] = gr.objects[q];
    const auto w = e.tag_of(p, q, k);
    const Elem f = *e.local(p, q, basis(e.cat->hom[p][q], k), w);
    return eval(out.gamma.fibers[j].incl[gam.func[w].f0[a]][b], f);
  });
  out.counit = GradedMorphism{gr.graded, g, std::move(functor), std::move(phi2), false};
  return out;
}

Report check_triangles_gr_gamma(const OplaxRef& x, const GradedRef& g) {
  Report r;
  {
    auto gx = grothendieck(x);
    auto c = counit_gr_gamma(gx.graded);
    const Transf eta = unit_gr_gamma(x, gx, c.gamma);
    r.merge(validate_transf(eta));
    r.merge(validate_graded_morphism(c.counit));
    if (!r) return r;
    const GradedMorphism lhs = compose_graded(c.counit, gr_on_morphism(gx, c.gr, eta));
    if (!same_graded_morphism(lhs, identity_graded(gx.graded)))
      r.fail("triangle eps_Gr(X) o Gr(eta_X) = 1", "Gr(X)");
  }
  {
    auto c = counit_gr_gamma(g);
    const Gamma outer = gamma_left(c.gr.graded);
    const Transf eta = unit_gr_gamma(c.gamma.diagram, c.gr, outer);
    r.merge(validate_transf(eta));
    r.merge(validate_graded_morphism(c.counit));
    if (!r) return r;
    const Transf lhs = compose_transfs(gamma_on_morphism(outer, c.gamma, c.counit), eta);
    if (!same_transf(lhs, identity_transf(c.gamma.diagram)))
      r.fail("triangle Gamma(eps_mu) o eta_Gamma(mu) = 1", "Gamma(mu)");
  }
  return r;
}

Transf unit_gr_delta(const OplaxRef& xr, const GrResult& gx, const OplaxRef& delta_gr) {
  const OplaxDiagram& x = *xr;
  const IndexCat& ic = x.index;
  Transf t{xr, delta_gr, Side::left, {}, {}};
  for (std::size_t i = 0; i < ic.objects.size(); ++i) t.comp.push_back(component_inclusion(x, gx, i));
  for (std::size_t u = 0; u < ic.mors.size(); ++u) {
    const auto i = ic.mors[u].dom, j = ic.mors[u].cod;
    VNatTrans s{compose_functors(delta_gr->func[u], t.comp[i]), compose_functors(t.comp[j], x.func[u]), {}};
    for (std::size_t a = 0; a < x.cats[i]->size(); ++a) s.comp.push_back(unit_element(x, gx, u, a));
    t.square.push_back(std::move(s));
  }
  return t;
}

Transf unit_gr_delta(const OplaxRef& x) {
  auto gx = grothendieck(x);
  return unit_gr_delta(x, gx, share(diagonal(gx.graded->cat, x->index)));
}

VFunctor counit_gr_delta(const VCatRef& a, const IndexCat& ic) {
  auto gr = grothendieck(share(diagonal(a, ic)), false);
  const GradedVCat& e = *gr.graded;
  std::vector<std::size_t> f0;
  for (const auto& o : gr.objects) f0.push_back(o.second);
  return build_vfunctor(e.cat, a, f0, [&](std::size_t p, std::size_t q, std::size_t k) {
    const Elem f = basis(e.cat->hom[p][q], k);
    return *e.local(p, q, f, e.tag_of(p, q, k));
  });
}

Report check_triangles_gr_delta(const OplaxRef& x, const VCatRef& a) {
  Report r;
  const IndexCat& ic = x->index;
  {
    auto gx = grothendieck(x);
    auto dgr = share(diagonal(gx.graded->cat, ic));
    const Transf eta = unit_gr_delta(x, gx, dgr);
    r.merge(validate_transf(eta));
    if (!r) return r;
    auto gd = grothendieck(dgr, false);
    const VFunctor eps = counit_gr_delta(gx.graded->cat, ic);
    r.merge(validate_vfunctor(eps));
    if (!r) return r;
    const VFunctor lhs = compose_functors(eps, gr_on_morphism(gx, gd, eta).functor);
    if (!(lhs == identity_functor(gx.graded->cat))) r.fail("triangle eps_Gr(X) o Gr(eta_X) = 1", "Gr(X)");
  }
  {
    auto da = share(diagonal(a, ic));
    auto gda = grothendieck(da, false);
    auto dgda = share(diagonal(gda.graded->cat, ic));
    const Transf eta = unit_gr_delta(da, gda, dgda);
    const VFunctor eps = counit_gr_delta(a, ic);
    const Transf lhs = compose_transfs(delta_of(eps, dgda, da), eta);
    if (!same_transf(lhs, identity_transf(da))) r.fail("triangle Delta(eps_A) o eta_Delta(A) = 1", "Delta(A)");
  }
  return r;
}

AdjunctionWitness witness_gr_gamma(const OplaxRef& x) {
  auto gx = grothendieck(x);
  auto c = counit_gr_gamma(gx.graded);
  AdjunctionWitness w;
  w.kind = AdjunctionKind::gr_gamma;
  w.unit = unit_gr_gamma(x, gx, c.gamma);
  w.counit = c.counit;
  w.x = x;
  w.mu = gx.graded;
  return w;
}

AdjunctionWitness witness_gr_delta(const OplaxRef& x, const VCatRef& a) {
  AdjunctionWitness w;
  w.kind = AdjunctionKind::gr_delta;
  w.unit = unit_gr_delta(x);
  w.counit_delta = counit_gr_delta(a, x->index);
  w.x = x;
  w.a = a;
  return w;
}

Report validate_witness(const AdjunctionWitness& w) {
  Report r = validate_transf(w.unit);
  if (w.counit) r.merge(validate_graded_morphism(*w.counit));
  if (w.counit_delta) r.merge(validate_vfunctor(*w.counit_delta));
  return r;
}

Transf transf_of_functor(const GrResult& gx, const OplaxRef& delta_a, const VFunctor& h) {
  const OplaxRef& x = gx.diagram;
  auto dgr = share(diagonal(gx.graded->cat, x->index));
  return compose_transfs(delta_of(h, dgr, delta_a), unit_gr_delta(x, gx, dgr));
}

VFunctor functor_of_transf(const GrResult& gx, const VCatRef& a, const Transf& t) {
  const OplaxDiagram& x = *gx.diagram;
  const GradedVCat& g = *gx.graded;
  std::vector<std::size_t> f0;
  for (const auto& [i, xa] : gx.objects) f0.push_back(t.comp[i].f0[xa]);
  return build_vfunctor(g.cat, a, f0, [&](std::size_t p, std::size_t q, std::size_t k) {
    const auto xa = gx.objects[p].second;
    const auto [j, yb] = gx.objects[q];
    const auto u = g.tag_of(p, q, k);
    const Elem f = *g.local(p, q, basis(g.cat->hom[p][q], k), u);
    const VFunctor& fj = t.comp[j];
    const auto xu = x.func[u].f0[xa];
    // F(j)(f) o phi(u)(x)
    return compose_in(*a, f0[p], fj.f0[xu], fj.f0[yb], fj(xu, yb, f), t.square[u].comp[xa]);
  });
}

std::vector<Transf> enumerate_left_transfs(const OplaxRef& xr, const OplaxRef& yr, std::size_t cap) {
  const OplaxDiagram &x = *xr, &y = *yr;
  const IndexCat& ic = x.index;
  const auto n = ic.objects.size(), m = ic.mors.size();
  std::vector<std::vector<VFunctor>> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back(enumerate_functors(x.cats[i], y.cats[i], cap));
  std::vector<Transf> out;
  Transf t{xr, yr, Side::left, std::vector<VFunctor>(n), std::vector<VNatTrans>(m)};
  std::function<void(std::size_t)> squares = [&](std::size_t u) {
    if (u == m) {
      if (validate_transf(t)) {
        if (out.size() >= cap) throw Error(Errc::SizeCap, "transformation enumeration exceeds cap " + std::to_string(cap));
        out.push_back(t);
      }
      return;
    }
    const auto i = ic.mors[u].dom, j = ic.mors[u].cod;
    for (auto& s : enumerate_nattrans(compose_functors(y.func[u], t.comp[i]), compose_functors(t.comp[j], x.func[u]), cap)) {
      t.square[u] = std::move(s);
      squares(u + 1);
    }
  };
  std::function<void(std::size_t)> choose = [&](std::size_t i) {
    if (i == n) {
      squares(0);
      return;
    }
    for (const auto& f : comps[i]) {
      t.comp[i] = f;
      choose(i + 1);
    }
  };
  choose(0);
  return out;
}

HomBijection enumerate_hom_bijection(const OplaxRef& x, const VCatRef& a, std::size_t cap) {
  if (!x->base.is_set() || !a->base.is_set()) throw Error(Errc::Unsupported, "hom enumeration needs finite sets");
  HomBijection out;
  auto gx = grothendieck(x);
  auto da = share(diagonal(a, x->index));
  const auto funcs = enumerate_functors(gx.graded->cat, a, cap);
  const auto transfs = enumerate_left_transfs(x, da, cap);
  out.functors = funcs.size();
  out.transfs = transfs.size();
  Report& r = out.report;
  if (funcs.size() != transfs.size())
    r.fail("object bijection", "hom categories",
           std::to_string(funcs.size()) + " functors vs " + std::to_string(transfs.size()) + " transformations");
  std::vector<Transf> image;
  for (std::size_t k = 0; k < funcs.size(); ++k) {
    Transf t = transf_of_functor(gx, da, funcs[k]);
    if (!validate_transf(t)) r.fail("Phi lands in transformations", "functor " + std::to_string(k));
    if (!(functor_of_transf(gx, a, t) == funcs[k])) r.fail("Psi o Phi = 1", "functor " + std::to_string(k));
    image.push_back(std::move(t));
  }
  for (std::size_t k = 0; k < transfs.size(); ++k) {
    const VFunctor h = functor_of_transf(gx, a, transfs[k]);
    if (!validate_vfunctor(h)) r.fail("Psi lands in functors", "transformation " + std::to_string(k));
    if (!same_transf(transf_of_functor(gx, da, h), transfs[k])) r.fail("Phi o Psi = 1", "transformation " + std::to_string(k));
  }
  // 2-cells: tau(x,i) corresponds to the modification component at i and x.
  for (std::size_t p = 0; p < funcs.size(); ++p)
    for (std::size_t q = 0; q < funcs.size(); ++q) {
      const auto nats = enumerate_nattrans(funcs[p], funcs[q], cap);
      out.nat_trans += nats.size();
      const Transf &s = image[p], &t = image[q];
      std::vector<std::vector<VNatTrans>> per;
      for (std::size_t i = 0; i < s.comp.size(); ++i) per.push_back(enumerate_nattrans(s.comp[i], t.comp[i], cap));
      std::size_t mods = 0;
      TransfMorphism mm{s, t, std::vector<VNatTrans>(s.comp.size())};
      std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == per.size()) {
          if (!validate_transf_morphism(mm)) return;
          if (++mods > cap) throw Error(Errc::SizeCap, "modification enumeration exceeds cap " + std::to_string(cap));
          // Back to a transformation of functors.
          VNatTrans tau{funcs[p], funcs[q], {}};
          for (const auto& [i2, xa] : gx.objects) tau.comp.push_back(mm.comp[i2].comp[xa]);
          if (!validate_nattrans(tau)) r.fail("modification gives a transformation", "functors " + std::to_string(p) + "," + std::to_string(q));
          return;
        }
        for (const auto& c : per[i]) {
          mm.comp[i] = c;
          go(i + 1);
        }
      };
      go(0);
      out.modifications += mods;
      for (const auto& tau : nats) {
        TransfMorphism back{s, t, {}};
        for (std::size_t i = 0; i < s.comp.size(); ++i) {
          VNatTrans c{s.comp[i], t.comp[i], {}};
          for (std::size_t xa = 0; xa < x->cats[i]->size(); ++xa) c.comp.push_back(tau.comp[gx.object_of(i, xa)]);
          back.comp.push_back(std::move(c));
        }
        if (!validate_transf_morphism(back))
          r.fail("transformation gives a modification", "functors " + std::to_string(p) + "," + std::to_string(q));
      }
      if (nats.size() != mods)
        r.fail("2-cell bijection", "functors " + std::to_string(p) + "," + std::to_string(q),
               std::to_string(nats.size()) + " vs " + std::to_string(mods));
    }
  return out;
}

}  // namespace catkit
