#include "catkit/fibers.hpp"

#include <algorithm>

namespace catkit {

namespace {

Obj index_hom(const IndexCat& ic, const Base& base, std::size_t a, std::size_t b) {
  std::vector<std::string> out;
  for (auto m : ic.hom(a, b)) out.push_back(ic.mors[m].name);
  return object_like(base, out);
}

// C(a,b) -> C(a,c), post-composition with w : b -> c.
Mor index_push(const IndexCat& ic, const Base& base, std::size_t a, std::size_t b, std::size_t w) {
  const Obj dom = index_hom(ic, base, a, b), cod = index_hom(ic, base, a, ic.mors[w].cod);
  return from_columns(dom, cod, [&](std::size_t k) {
    return basis(cod, ic.position_in_hom(ic.compose(w, ic.hom(a, b)[k])));
  });
}

// Lifts an element of E through a fiber inclusion.
Elem lift_into(const Mor& incl, const Elem& e, const char* what) {
  auto r = lift(incl, e);
  if (!r) throw Error(Errc::BadElement, std::string("element does not lie in the ") + what);
  return *r;
}

CommaFiber transpose(const CommaFiber& c) {
  CommaFiber o{share(op(*c.cat)), c.objects, c.incl, !c.right};
  const auto n = c.objects.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) o.incl[a][b] = c.incl[b][a];
  return o;
}

Gamma as_gamma(const FiberSystem& sys) { return {sys.graded, sys.gamma, sys.comma}; }

Elem sum_over_support(const GradedVCat& g, std::size_t x, std::size_t y, const Elem& e, const Obj& target,
                      const std::function<Elem(std::size_t, const Elem&)>& each) {
  const auto sup = g.support(x, y, e);
  if (g.cat->base.is_set()) return each(sup.at(0), *g.local(x, y, e, sup.at(0)));
  Elem acc = zero_elem(target);
  for (auto v : sup) acc = add(g.cat->base, acc, each(v, *g.local(x, y, e, v)));
  return acc;
}

// L -| R with unit 1 => R L and counit L R => 1.
Report check_adjunction(const VFunctor& l, const VFunctor& r, const VNatTrans& unit, const VNatTrans& counit,
                        const std::string& where) {
  Report rep;
  rep.merge(validate_vfunctor(l));
  rep.merge(validate_vfunctor(r));
  if (!rep) return rep;
  if (!(*l.dom == *r.cod) || !(*l.cod == *r.dom)) {
    rep.fail("adjoint types", where, "functors are not opposed");
    return rep;
  }
  if (!(unit.src == identity_functor(l.dom)) || !(unit.tgt == compose_functors(r, l)))
    rep.fail("unit type", where);
  if (!(counit.src == compose_functors(l, r)) || !(counit.tgt == identity_functor(l.cod)))
    rep.fail("counit type", where);
  if (!rep) return rep;
  rep.merge(validate_nattrans(unit));
  rep.merge(validate_nattrans(counit));
  if (!rep) return rep;
  const VCat &a = *l.dom, &b = *l.cod;
  for (std::size_t x = 0; x < a.size(); ++x) {
    const auto lx = l.f0[x], rlx = r.f0[lx];
    const Elem lhs = compose_in(b, lx, l.f0[rlx], lx, counit.comp[lx], l(x, rlx, unit.comp[x]));
    if (lhs != identity_in(b, lx)) {
      rep.fail("triangle at left adjoint", where + " object " + a.objects[x]);
      return rep;
    }
  }
  for (std::size_t y = 0; y < b.size(); ++y) {
    const auto ry = r.f0[y], lry = l.f0[ry];
    const Elem lhs = compose_in(a, ry, r.f0[lry], ry, r(lry, y, counit.comp[y]), unit.comp[ry]);
    if (lhs != identity_in(a, ry)) {
      rep.fail("triangle at right adjoint", where + " object " + b.objects[y]);
      return rep;
    }
  }
  return rep;
}

}  // namespace

StrictFiber strict_fiber(const GradedVCat& g, std::size_t i) {
  StrictFiber s;
  const IndexCat& ic = g.index;
  for (std::size_t e = 0; e < g.cat->size(); ++e)
    if (g.degree[e] == i) s.objects.push_back(e);
  const auto n = s.objects.size();
  const auto pos = ic.position_in_hom(ic.ident[i]);
  std::vector<std::string> labels;
  std::vector<std::vector<Obj>> hom(n, std::vector<Obj>(n));
  s.incl.assign(n, std::vector<Mor>(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(g.cat->objects[s.objects[a]]);
    for (std::size_t b = 0; b < n; ++b) {
      const auto& d = g.decomp[s.objects[a]][s.objects[b]];
      hom[a][b] = d.parts[pos];
      s.incl[a][b] = d.injections[pos];
    }
  }
  const VCat& e = *g.cat;
  s.cat = share(build_vcat(
      e.base, labels, hom,
      [&](std::size_t a, std::size_t b, std::size_t c, std::size_t gi, std::size_t fi) {
        const Elem h = eval(s.incl[b][c], basis(hom[b][c], gi));
        const Elem f = eval(s.incl[a][b], basis(hom[a][b], fi));
        return *g.local(s.objects[a], s.objects[c], compose_in(e, s.objects[a], s.objects[b], s.objects[c], h, f),
                        ic.ident[i]);
      },
      [&](std::size_t a) { return *g.local(s.objects[a], s.objects[a], identity_in(e, s.objects[a]), ic.ident[i]); }));
  return s;
}

std::size_t CommaFiber::index_of(std::size_t e, std::size_t u) const {
  for (std::size_t k = 0; k < objects.size(); ++k)
    if (objects[k].first == e && objects[k].second == u) return k;
  throw Error(Errc::Reference, "no such comma-fiber object");
}

CommaFiber left_comma_fiber(const GradedVCat& g, std::size_t i) {
  const IndexCat& ic = g.index;
  const VCat& e = *g.cat;
  CommaFiber c;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < e.size(); ++x)
    for (auto u : ic.hom(g.degree[x], i)) {
      c.objects.emplace_back(x, u);
      labels.push_back("(" + e.objects[x] + "; " + ic.mors[u].name + ")");
    }
  const auto n = c.objects.size();
  std::vector<std::vector<Obj>> hom(n, std::vector<Obj>(n));
  c.incl.assign(n, std::vector<Mor>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto [x, u] = c.objects[a];
      const auto [y, v] = c.objects[b];
      const Obj& h = e.hom[x][y];
      const Obj ci = index_hom(ic, e.base, g.degree[x], i);
      const Mor lhs = compose(tensor(identity(h), index_push(ic, e.base, g.degree[x], g.degree[y], v)), coaction(g, x, y));
      const Mor rhs = compose(tensor(identity(h), point(ci, basis(ci, ic.position_in_hom(u)))), right_unitor_inv(h));
      auto sub = equalizer(lhs, rhs);
      hom[a][b] = sub.obj;
      c.incl[a][b] = sub.incl;
    }
  c.cat = share(build_vcat(
      e.base, labels, hom,
      [&](std::size_t a, std::size_t b, std::size_t d, std::size_t gi, std::size_t fi) {
        const auto x = c.objects[a].first, y = c.objects[b].first, z = c.objects[d].first;
        const Elem h = eval(c.incl[b][d], basis(hom[b][d], gi));
        const Elem f = eval(c.incl[a][b], basis(hom[a][b], fi));
        return lift_into(c.incl[a][d], compose_in(e, x, y, z, h, f), "comma fiber");
      },
      [&](std::size_t a) {
        const auto x = c.objects[a].first;
        return lift_into(c.incl[a][a], identity_in(e, x), "comma fiber");
      }));
  return c;
}

CommaFiber right_comma_fiber(const GradedVCat& g, std::size_t i) { return transpose(left_comma_fiber(op(g), i)); }

Subobject comma_hom_pullback(const GradedVCat& g, std::size_t i, std::pair<std::size_t, std::size_t> a,
                             std::pair<std::size_t, std::size_t> b) {
  const IndexCat& ic = g.index;
  const VCat& e = *g.cat;
  const auto [x, u] = a;
  const auto [y, v] = b;
  const Obj& h = e.hom[x][y];
  const Obj ci = index_hom(ic, e.base, g.degree[x], i);
  const Mor push = compose(tensor(identity(h), index_push(ic, e.base, g.degree[x], g.degree[y], v)), coaction(g, x, y));
  const Mor pt = tensor(identity(h), point(ci, basis(ci, ic.position_in_hom(u))));
  const auto pb = pullback(push, pt);
  // The first projection is mono; rewrite its image in canonical form.
  if (e.base.is_set()) {
    std::vector<std::size_t> img(pb.pr1.map);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    std::vector<std::string> labels;
    for (auto k : img) labels.push_back(h.labels[k]);
    Obj o = finset_obj(labels);
    Mor incl{o, h, img, {}};
    return {o, incl};
  }
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < pb.obj.size(); ++k) cols.push_back(as_vec(eval(pb.pr1, basis(pb.obj, k))));
  const auto span = linalg::canonical_span(cols, h.size(), e.base.p);
  std::vector<std::string> labels;
  for (const auto& [piv, vec] : span) labels.push_back(h.labels[piv]);
  Obj o = finvect_obj(e.base.p, labels);
  return {o, from_columns(o, h, [&](std::size_t k) { return Elem{span[k].second}; })};
}

Gamma gamma_left(const GradedRef& g) {
  const IndexCat& ic = g->index;
  Gamma out{g, nullptr, {}};
  std::vector<VCatRef> cats;
  for (std::size_t i = 0; i < ic.objects.size(); ++i) {
    out.fibers.push_back(left_comma_fiber(*g, i));
    cats.push_back(out.fibers.back().cat);
  }
  std::vector<VFunctor> func;
  for (std::size_t w = 0; w < ic.mors.size(); ++w) {
    const auto& src = out.fibers[ic.mors[w].dom];
    const auto& dst = out.fibers[ic.mors[w].cod];
    std::vector<std::size_t> f0;
    for (const auto& [x, u] : src.objects) f0.push_back(dst.index_of(x, ic.compose(w, u)));
    VFunctor f{src.cat, dst.cat, f0, {}};
    const auto n = src.objects.size();
    f.f1.assign(n, std::vector<Mor>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) f.f1[a][b] = lift_mor(dst.incl[f0[a]][f0[b]], src.incl[a][b]);
    func.push_back(std::move(f));
  }
  out.diagram = share(strict_diagram(ic, std::move(cats), std::move(func)));
  return out;
}

GammaRight gamma_right(const GradedRef& g) {
  GammaRight out;
  out.graded = g;
  out.dual = gamma_left(share(op(*g)));
  auto lax = op(*out.dual.diagram);
  for (std::size_t i = 0; i < out.dual.fibers.size(); ++i) {
    out.fibers.push_back(transpose(out.dual.fibers[i]));
    out.fibers.back().cat = lax.cats[i];
  }
  out.diagram = share(std::move(lax));
  return out;
}

Transf gamma_on_morphism(const Gamma& gx, const Gamma& gy, const GradedMorphism& m) {
  if (m.right) throw Error(Errc::TagMismatch, "Gamma_left needs a left graded morphism");
  const IndexCat& ic = gx.graded->index;
  const VFunctor& f = m.functor;
  Transf t{gx.diagram, gy.diagram, Side::left, {}, {}};
  for (std::size_t i = 0; i < ic.objects.size(); ++i) {
    const auto& cx = gx.fibers[i];
    const auto& cy = gy.fibers[i];
    std::vector<std::size_t> f0;
    for (const auto& [x, v] : cx.objects) f0.push_back(cy.index_of(f.f0[x], ic.compose(v, m.phi2[x])));
    VFunctor c{cx.cat, cy.cat, f0, {}};
    const auto n = cx.objects.size();
    c.f1.assign(n, std::vector<Mor>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        c.f1[a][b] = lift_mor(cy.incl[f0[a]][f0[b]], compose(f.f1[cx.objects[a].first][cx.objects[b].first], cx.incl[a][b]));
    t.comp.push_back(std::move(c));
  }
  for (std::size_t u = 0; u < ic.mors.size(); ++u) {
    const auto i = ic.mors[u].dom, j = ic.mors[u].cod;
    VFunctor src = compose_functors(gy.diagram->func[u], t.comp[i]);
    VFunctor tgt = compose_functors(t.comp[j], gx.diagram->func[u]);
    std::vector<Elem> comp;
    for (std::size_t a = 0; a < src.f0.size(); ++a) comp.push_back(identity_in(*src.cod, src.f0[a]));
    t.square.push_back(VNatTrans{std::move(src), std::move(tgt), std::move(comp)});
  }
  return t;
}

TransfMorphism gamma_on_2morphism(const Gamma& gx, const Gamma& gy, const Graded2Morphism& m) {
  TransfMorphism out{gamma_on_morphism(gx, gy, m.src), gamma_on_morphism(gx, gy, m.tgt), {}};
  for (std::size_t i = 0; i < out.src.comp.size(); ++i) {
    const auto& cx = gx.fibers[i];
    const auto& cy = gy.fibers[i];
    const VFunctor &f = out.src.comp[i], &h = out.tgt.comp[i];
    VNatTrans nat{f, h, {}};
    for (std::size_t a = 0; a < cx.objects.size(); ++a)
      nat.comp.push_back(lift_into(cy.incl[f.f0[a]][h.f0[a]], m.nat.comp[cx.objects[a].first], "comma fiber"));
    out.comp.push_back(std::move(nat));
  }
  return out;
}

LaxTransf gamma_right_on_morphism(const GammaRight& gx, const GammaRight& gy, const GradedMorphism& m) {
  if (!m.right) throw Error(Errc::TagMismatch, "Gamma_right needs a right graded morphism");
  Transf d = gamma_on_morphism(gx.dual, gy.dual, op(m, gx.dual.graded, gy.dual.graded));
  LaxTransf t = op(d);
  t.src = gx.diagram;
  t.tgt = gy.diagram;
  return t;
}

static VFunctor comparison(const StrictFiber& s, const CommaFiber& c, std::size_t i, const IndexCat& ic) {
  std::vector<std::size_t> f0;
  for (auto e : s.objects) f0.push_back(c.index_of(e, ic.ident[i]));
  VFunctor f{s.cat, c.cat, f0, {}};
  const auto n = s.objects.size();
  f.f1.assign(n, std::vector<Mor>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) f.f1[a][b] = lift_mor(c.incl[f0[a]][f0[b]], s.incl[a][b]);
  return f;
}

VFunctor comparison_i(const StrictFiber& s, const CommaFiber& c, std::size_t i, const IndexCat& ic) {
  if (c.right) throw Error(Errc::TagMismatch, "i_i maps into a left comma fiber");
  return comparison(s, c, i, ic);
}

VFunctor comparison_j(const StrictFiber& s, const CommaFiber& c, std::size_t i, const IndexCat& ic) {
  if (!c.right) throw Error(Errc::TagMismatch, "j_i maps into a right comma fiber");
  return comparison(s, c, i, ic);
}

FiberSystem fiber_system(const GradedRef& g, bool right) {
  FiberSystem sys;
  sys.graded = g;
  sys.right = right;
  const IndexCat& ic = g->index;
  if (right) {
    auto gr = gamma_right(g);
    sys.comma = gr.fibers;
  } else {
    auto gl = gamma_left(g);
    sys.comma = gl.fibers;
    sys.gamma = gl.diagram;
  }
  for (std::size_t i = 0; i < ic.objects.size(); ++i) {
    sys.strict.push_back(strict_fiber(*g, i));
    sys.compare.push_back(right ? comparison_j(sys.strict[i], sys.comma[i], i, ic)
                                : comparison_i(sys.strict[i], sys.comma[i], i, ic));
  }
  return sys;
}

StructureCheck verify_cofibered_structure(const FiberSystem& sys, const FiberStructure& s) {
  StructureCheck out;
  const IndexCat& ic = sys.graded->index;
  if (s.fibered != sys.right) {
    out.report.fail("structure kind", "fiber system", "cofibered structures need left comma fibers");
    return out;
  }
  if (s.entries.size() != ic.objects.size()) {
    out.report.fail("structure shape", "fiber system", "one adjoint per index object required");
    return out;
  }
  out.flag = true;
  for (std::size_t i = 0; i < ic.objects.size(); ++i) {
    const auto& en = s.entries[i];
    const std::string where = "index object " + ic.objects[i];
    if (s.fibered) {
      out.report.merge(check_adjunction(sys.compare[i], en.adj, en.unit, en.counit, where));
      if (out.report && !is_invertible(en.counit)) out.flag = false;
    } else {
      out.report.merge(check_adjunction(en.adj, sys.compare[i], en.unit, en.counit, where));
      if (out.report && !is_invertible(en.unit)) out.flag = false;
    }
    if (!out.report) {
      out.flag = false;
      return out;
    }
  }
  return out;
}

FiberStructure canonical_cofibered(const GrResult& gr, const FiberSystem& sys) {
  if (gr.lax || sys.right) throw Error(Errc::TagMismatch, "canonical cofibered structure needs an oplax Gr");
  const OplaxDiagram& x = *gr.diagram;
  const IndexCat& ic = x.index;
  const GradedVCat& g = *sys.graded;
  FiberStructure out;
  for (std::size_t i = 0; i < ic.objects.size(); ++i) {
    const auto& c = sys.comma[i];
    const auto& st = sys.strict[i];
    const VCat& xi = *x.cats[i];
    // ((x,j),u) |-> X(u) x
    std::vector<std::size_t> f0;
    for (const auto& [e, u] : c.objects) f0.push_back(x.func[u].f0[gr.objects[e].second]);
    const auto one = ic.ident[i];
    auto s = build_vfunctor(c.cat, st.cat, f0, [&](std::size_t a, std::size_t b, std::size_t k) {
      const auto [ea, u] = c.objects[a];
      const auto [eb, up] = c.objects[b];
      const auto xa = gr.objects[ea].second, yb = gr.objects[eb].second;
      const Elem f = eval(c.incl[a][b], basis(c.cat->hom[a][b], k));
      const Obj& target = st.cat->hom[f0[a]][f0[b]];
      return sum_over_support(g, ea, eb, f, target, [&](std::size_t v, const Elem& fv) {
        const VFunctor& xu = x.func[up];
        const auto xvx = x.func[v].f0[xa];
        const Elem mapped = xu(xvx, yb, fv);
        const auto o_w = x.func[u].f0[xa];
        const auto o_vu = xu.f0[xvx];
        const Elem t = compose_in(xi, o_w, o_vu, xu.f0[yb], mapped, x.theta_at(up, v).comp[xa]);
        const auto o_1w = x.func[one].f0[o_w];
        return compose_in(xi, o_1w, o_w, xu.f0[yb], t, x.eta[i].comp[o_w]);
      });
    });
    const VFunctor& inc = sys.compare[i];
    VNatTrans unit{identity_functor(c.cat), compose_functors(inc, s), {}};
    for (std::size_t a = 0; a < c.objects.size(); ++a) {
      const auto [e, u] = c.objects[a];
      const auto b = inc.f0[f0[a]];
      const auto tgt_e = c.objects[b].first;
      unit.comp.push_back(lift_into(c.incl[a][b], g.inject(e, tgt_e, u, identity_in(xi, f0[a])), "comma fiber"));
    }
    VNatTrans counit{compose_functors(s, inc), identity_functor(st.cat), {}};
    for (std::size_t a = 0; a < st.objects.size(); ++a) {
      const auto o1 = x.func[one].f0[a], o11 = x.func[one].f0[o1];
      counit.comp.push_back(compose_in(xi, o11, o1, a, x.eta[i].comp[a], x.eta[i].comp[o1]));
    }
    out.entries.push_back({std::move(s), std::move(unit), std::move(counit)});
  }
  return out;
}

FiberStructure op(const FiberStructure& s) {
  FiberStructure o{!s.fibered, {}};
  for (const auto& e : s.entries) o.entries.push_back({op(e.adj), op(e.counit), op(e.unit)});
  return o;
}

FiberStructure canonical_fibered(const GrResult& gr) {
  if (!gr.lax) throw Error(Errc::TagMismatch, "canonical fibered structure needs a lax Gr");
  GrResult d = gr;
  d.graded = gr.dual;
  d.lax = false;
  return op(canonical_cofibered(d, fiber_system(gr.dual)));
}

std::optional<AdjointEntry> search_adjoint(const FiberSystem& sys, std::size_t i, std::size_t budget) {
  const auto& st = sys.strict.at(i);
  const auto& c = sys.comma.at(i);
  const VFunctor& cmp = sys.compare[i];
  const auto cands = enumerate_functors(c.cat, st.cat, budget);
  for (const auto& adj : cands) {
    const VFunctor& l = sys.right ? cmp : adj;
    const VFunctor& r = sys.right ? adj : cmp;
    const auto units = enumerate_nattrans(identity_functor(l.dom), compose_functors(r, l), budget);
    if (units.empty()) continue;
    const auto counits = enumerate_nattrans(compose_functors(l, r), identity_functor(l.cod), budget);
    for (const auto& un : units)
      for (const auto& co : counits)
        if (check_adjunction(l, r, un, co, "search")) return AdjointEntry{adj, un, co};
  }
  return std::nullopt;
}

OplaxDiagram gamma_cof(const FiberSystem& sys, const FiberStructure& s) {
  if (sys.right || s.fibered) throw Error(Errc::TagMismatch, "Gamma_cof needs a cofibered structure");
  const OplaxDiagram& gam = *sys.gamma;
  const IndexCat& ic = gam.index;
  OplaxDiagram d;
  d.index = ic;
  d.base = sys.graded->cat->base;
  for (const auto& st : sys.strict) d.cats.push_back(st.cat);
  for (std::size_t u = 0; u < ic.mors.size(); ++u) {
    const auto i = ic.mors[u].dom, j = ic.mors[u].cod;
    d.func.push_back(compose_functors(s.entries[j].adj, compose_functors(gam.func[u], sys.compare[i])));
  }
  for (std::size_t i = 0; i < ic.objects.size(); ++i) {
    VNatTrans e = s.entries[i].counit;
    e.src = d.func[ic.ident[i]];
    d.eta.push_back(std::move(e));
  }
  for (const auto& [v, u] : composable_pairs(ic)) {
    const auto i = ic.mors[u].dom, ip = ic.mors[u].cod, ipp = ic.mors[v].cod;
    const VFunctor &gu = gam.func[u], &gv = gam.func[v];
    const VFunctor& sp = s.entries[ipp].adj;
    const VNatTrans& unit = s.entries[ip].unit;
    VNatTrans t{d.func[ic.compose(v, u)], compose_functors(d.func[v], d.func[u]), {}};
    for (std::size_t a = 0; a < d.cats[i]->size(); ++a) {
      const auto c = gu.f0[sys.compare[i].f0[a]];
      const auto c2 = unit.tgt.f0[c];
      t.comp.push_back(sp(gv.f0[c], gv.f0[c2], gv(c, c2, unit.comp[c])));
    }
    d.theta.emplace(MorPair{v, u}, std::move(t));
  }
  return d;
}

LaxDiagram gamma_fib(const FiberSystem& sys, const FiberStructure& s) {
  if (!sys.right || !s.fibered) throw Error(Errc::TagMismatch, "Gamma_fib needs a fibered structure");
  return op(gamma_cof(fiber_system(share(op(*sys.graded))), op(s)));
}

Comparisons comparison_transformations(const FiberSystem& sys, const FiberStructure& s, const OplaxRef& cof,
                                       bool want_left_s) {
  const OplaxDiagram& gam = *sys.gamma;
  const OplaxDiagram& x = *cof;
  const IndexCat& ic = gam.index;
  Transf ti{cof, sys.gamma, Side::left, sys.compare, {}};
  Transf ts{sys.gamma, cof, Side::right, {}, {}};
  for (const auto& e : s.entries) ts.comp.push_back(e.adj);
  for (std::size_t u = 0; u < ic.mors.size(); ++u) {
    const auto i = ic.mors[u].dom, j = ic.mors[u].cod;
    const VFunctor& gu = gam.func[u];
    // Gamma(u) i_i => i_j s_j Gamma(u) i_i
    VNatTrans a{compose_functors(gu, sys.compare[i]), compose_functors(sys.compare[j], x.func[u]), {}};
    for (std::size_t p = 0; p < x.cats[i]->size(); ++p) a.comp.push_back(s.entries[j].unit.comp[a.src.f0[p]]);
    ti.square.push_back(std::move(a));
    // s_j Gamma(u) => s_j Gamma(u) i_i s_i
    const VFunctor& sj = s.entries[j].adj;
    const VNatTrans& ui = s.entries[i].unit;
    VNatTrans b{compose_functors(sj, gu), compose_functors(x.func[u], s.entries[i].adj), {}};
    for (std::size_t c = 0; c < sys.comma[i].objects.size(); ++c) {
      const auto c2 = ui.tgt.f0[c];
      b.comp.push_back(sj(gu.f0[c], gu.f0[c2], gu(c, c2, ui.comp[c])));
    }
    ts.square.push_back(std::move(b));
  }
  Comparisons out{std::move(ti), std::move(ts), std::nullopt};
  if (want_left_s) {
    for (const auto& e : s.entries)
      if (!is_invertible(e.counit)) throw Error(Errc::NotIso, "counit is not invertible");
    Transf l = out.s;
    l.side = Side::left;
    for (auto& sq : l.square) sq = inverse(sq);
    out.s_left = std::move(l);
  }
  return out;
}

Transf gamma_cof_on_morphism(const FiberSystem& sx, const FiberStructure& x, const OplaxRef& cx,
                             const FiberSystem& sy, const FiberStructure& y, const OplaxRef& cy,
                             const GradedMorphism& m) {
  const Transf gf = gamma_on_morphism(as_gamma(sx), as_gamma(sy), m);
  const IndexCat& ic = sx.graded->index;
  Transf t{cx, cy, Side::left, {}, {}};
  for (std::size_t i = 0; i < ic.objects.size(); ++i)
    t.comp.push_back(compose_functors(y.entries[i].adj, compose_functors(gf.comp[i], sx.compare[i])));
  for (std::size_t u = 0; u < ic.mors.size(); ++u) {
    const auto i = ic.mors[u].dom, j = ic.mors[u].cod;
    const VFunctor &gu = sx.gamma->func[u], &gyu = sy.gamma->func[u];
    const VFunctor &fi = gf.comp[i], &fj = gf.comp[j];
    const VFunctor& syj = y.entries[j].adj;
    VNatTrans sq{compose_functors(cy->func[u], t.comp[i]), compose_functors(t.comp[j], cx->func[u]), {}};
    const VCat& tgt = *sy.strict[j].cat;
    for (std::size_t a = 0; a < sx.strict[i].objects.size(); ++a) {
      const auto c = gu.f0[sx.compare[i].f0[a]];
      const auto& ux = x.entries[j].unit;
      const auto c2 = ux.tgt.f0[c];
      const Elem ea = syj(fj.f0[c], fj.f0[c2], fj(c, c2, ux.comp[c]));
      const auto d = fi.f0[sx.compare[i].f0[a]];
      const auto& uy = y.entries[i].unit;
      const auto d2 = uy.tgt.f0[d];
      const Elem eb = syj(gyu.f0[d], gyu.f0[d2], gyu(d, d2, uy.comp[d]));
      const auto from = syj.f0[gyu.f0[d]];
      const auto to_b = syj.f0[gyu.f0[d2]], to_a = syj.f0[fj.f0[c2]];
      auto binv = inverse_in(tgt, from, to_b, eb);
      if (!binv) throw Error(Errc::NotIso, "unit of the target is not invertible at " + tgt.objects[from]);
      sq.comp.push_back(compose_in(tgt, to_b, from, to_a, ea, *binv));
    }
    t.square.push_back(std::move(sq));
  }
  return t;
}

TransfMorphism gamma_cof_on_2morphism(const FiberSystem& sx, const OplaxRef&, const Transf& f, const FiberSystem& sy,
                                      const FiberStructure& y, const OplaxRef&, const Transf& g,
                                      const Graded2Morphism& m) {
  const TransfMorphism gm = gamma_on_2morphism(as_gamma(sx), as_gamma(sy), m);
  TransfMorphism out{f, g, {}};
  for (std::size_t i = 0; i < f.comp.size(); ++i) {
    const VFunctor& s = y.entries[i].adj;
    const VNatTrans& xi = gm.comp[i];
    VNatTrans nat{f.comp[i], g.comp[i], {}};
    for (std::size_t a = 0; a < sx.strict[i].objects.size(); ++a) {
      const auto c = sx.compare[i].f0[a];
      nat.comp.push_back(s(xi.src.f0[c], xi.tgt.f0[c], xi.comp[c]));
    }
    out.comp.push_back(std::move(nat));
  }
  return out;
}

}  // namespace catkit
