#include "catkit/diagram.hpp"

namespace catkit {

namespace {

bool same_cat(const VCatRef& a, const VCatRef& b) { return a == b || (a && b && *a == *b); }

std::string nm(const IndexCat& i, std::size_t u) { return i.mors[u].name; }

bool same_diagram(const DiagramData& a, const DiagramData& b) {
  if (&a == &b) return true;
  if (!(a.index == b.index) || a.cats.size() != b.cats.size()) return false;
  for (std::size_t i = 0; i < a.cats.size(); ++i)
    if (!same_cat(a.cats[i], b.cats[i])) return false;
  return a.func == b.func && a.eta == b.eta && a.theta == b.theta;
}

// Shape checks shared by both variances; `lax` flips the expected direction of eta and theta.
void check_shape(Report& r, const DiagramData& x, bool lax) {
  const IndexCat& ic = x.index;
  if (x.cats.size() != ic.objects.size() || x.func.size() != ic.mors.size() || x.eta.size() != ic.objects.size()) {
    r.fail("total tables", "diagram");
    return;
  }
  for (const auto& [v, u] : composable_pairs(ic))
    if (!x.theta.count({v, u})) r.fail("total tables", "theta(" + nm(ic, v) + "," + nm(ic, u) + ")");
  if (!r) return;
  for (std::size_t i = 0; i < x.cats.size() && r; ++i) {
    if (!(x.cats[i]->base == x.base)) r.fail("common base", ic.objects[i]);
    r.merge(validate_vcat(*x.cats[i]));
  }
  for (std::size_t u = 0; u < ic.mors.size() && r; ++u) {
    const auto& f = x.func[u];
    if (!same_cat(f.dom, x.cats[ic.mors[u].dom]) || !same_cat(f.cod, x.cats[ic.mors[u].cod]))
      r.fail("functor endpoints", nm(ic, u));
    else if (auto rf = validate_vfunctor(f); !rf)
      r.fail("functor " + rf.law, nm(ic, u) + " " + rf.where, rf.detail);
  }
  for (std::size_t i = 0; i < x.eta.size() && r; ++i) {
    const auto& t = x.eta[i];
    const VFunctor one = identity_functor(x.cats[i]);
    const VFunctor& xi = x.func[ic.ident[i]];
    if (!(lax ? (t.src == one && t.tgt == xi) : (t.src == xi && t.tgt == one)))
      r.fail("unit endpoints", ic.objects[i]);
    else if (auto rt = validate_nattrans(t); !rt)
      r.fail("unit " + rt.law, ic.objects[i] + " " + rt.where, rt.detail);
  }
  for (const auto& [vu, t] : x.theta) {
    if (!r) break;
    const auto [v, u] = vu;
    const std::string where = "(" + nm(ic, v) + "," + nm(ic, u) + ")";
    if (ic.comp.at(v).at(u) < 0) {
      r.fail("theta only on composable pairs", where);
      break;
    }
    const VFunctor both = compose_functors(x.func[v], x.func[u]);
    const VFunctor& whole = x.func[ic.compose(v, u)];
    if (!(lax ? (t.src == both && t.tgt == whole) : (t.src == whole && t.tgt == both)))
      r.fail("comparison endpoints", where);
    else if (auto rt = validate_nattrans(t); !rt)
      r.fail("comparison " + rt.law, where + " " + rt.where, rt.detail);
  }
}

}  // namespace

std::vector<MorPair> composable_pairs(const IndexCat& ic) {
  std::vector<MorPair> out;
  for (std::size_t v = 0; v < ic.mors.size(); ++v)
    for (std::size_t u = 0; u < ic.mors.size(); ++u)
      if (ic.comp[v][u] >= 0) out.emplace_back(v, u);
  return out;
}

OplaxDiagram strict_diagram(IndexCat index, std::vector<VCatRef> cats, std::vector<VFunctor> func) {
  OplaxDiagram d;
  d.base = cats.empty() ? Base::finset() : cats.front()->base;
  d.index = std::move(index);
  d.cats = std::move(cats);
  d.func = std::move(func);
  for (std::size_t i = 0; i < d.cats.size(); ++i) {
    const VFunctor& xi = d.func.at(d.index.ident[i]);
    d.eta.push_back(VNatTrans{xi, identity_functor(d.cats[i]), identity_nat(xi).comp});
  }
  for (const auto& [v, u] : composable_pairs(d.index)) {
    const VFunctor& whole = d.func[d.index.compose(v, u)];
    d.theta.emplace(MorPair{v, u}, VNatTrans{whole, compose_functors(d.func[v], d.func[u]), identity_nat(whole).comp});
  }
  return d;
}

Report validate_oplax(const OplaxDiagram& x) {
  Report r;
  if (auto ri = validate_index(x.index); !ri) return ri;
  check_shape(r, x, false);
  if (!r) return r;
  const IndexCat& ic = x.index;
  for (std::size_t u = 0; u < ic.mors.size() && r; ++u) {
    const auto i = ic.mors[u].dom, j = ic.mors[u].cod;
    const VFunctor &fu = x.func[u], &fi = x.func[ic.ident[i]], &fj = x.func[ic.ident[j]];
    const VCat &xi = *x.cats[i], &xj = *x.cats[j];
    const VNatTrans &tr = x.theta_at(u, ic.ident[i]), &tl = x.theta_at(ic.ident[j], u);
    for (std::size_t a = 0; a < xi.size() && r; ++a) {
      const auto ua = fu.f0[a];
      // X(u)(eta_i) o theta_{u,1} = 1
      const auto u1a = fu.f0[fi.f0[a]];
      const Elem lhs_r = compose_in(xj, ua, u1a, ua, fu(fi.f0[a], a, x.eta[i].comp[a]), tr.comp[a]);
      if (lhs_r != identity_in(xj, ua))
        r.fail("right unit", "u=" + nm(ic, u) + " x=" + xi.objects[a], render(xj.hom[ua][ua], lhs_r));
      // eta_j X(u) o theta_{1,u} = 1
      const auto one_ua = fj.f0[ua];
      const Elem lhs_l = compose_in(xj, ua, one_ua, ua, x.eta[j].comp[ua], tl.comp[a]);
      if (lhs_l != identity_in(xj, ua))
        r.fail("left unit", "u=" + nm(ic, u) + " x=" + xi.objects[a], render(xj.hom[ua][ua], lhs_l));
    }
  }
  for (std::size_t w = 0; w < ic.mors.size() && r; ++w)
    for (std::size_t v = 0; v < ic.mors.size() && r; ++v) {
      if (ic.comp[w][v] < 0) continue;
      for (std::size_t u = 0; u < ic.mors.size() && r; ++u) {
        if (ic.comp[v][u] < 0) continue;
        const auto vu = ic.compose(v, u), wv = ic.compose(w, v), wvu = ic.compose(w, vu);
        const VCat& xd = *x.cats[ic.mors[w].cod];
        const VCat& xa = *x.cats[ic.mors[u].dom];
        const VFunctor &fu = x.func[u], &fv = x.func[v], &fw = x.func[w];
        const VFunctor &fvu = x.func[vu], &fwv = x.func[wv], &fwvu = x.func[wvu];
        for (std::size_t a = 0; a < xa.size() && r; ++a) {
          const auto p_wvu = fwvu.f0[a], p_w_vu = fw.f0[fvu.f0[a]], p_w_v_u = fw.f0[fv.f0[fu.f0[a]]];
          const auto p_wv_u = fwv.f0[fu.f0[a]];
          const Elem lhs = compose_in(xd, p_wvu, p_w_vu, p_w_v_u,
                                      fw(fvu.f0[a], fv.f0[fu.f0[a]], x.theta_at(v, u).comp[a]),
                                      x.theta_at(w, vu).comp[a]);
          const Elem rhs = compose_in(xd, p_wvu, p_wv_u, p_w_v_u, x.theta_at(w, v).comp[fu.f0[a]],
                                      x.theta_at(wv, u).comp[a]);
          if (lhs != rhs)
            r.fail("cocycle", "(" + nm(ic, w) + "," + nm(ic, v) + "," + nm(ic, u) + ") x=" + xa.objects[a],
                   render(xd.hom[p_wvu][p_w_v_u], lhs) + " vs " + render(xd.hom[p_wvu][p_w_v_u], rhs));
        }
      }
    }
  return r;
}

Report validate_lax(const LaxDiagram& x) {
  Report r;
  if (auto ri = validate_index(x.index); !ri) return ri;
  check_shape(r, x, true);
  if (!r) return r;
  return validate_oplax(op(x));
}

bool is_strict(const DiagramData& x) {
  const IndexCat& ic = x.index;
  for (std::size_t i = 0; i < x.cats.size(); ++i) {
    if (!(x.func[ic.ident[i]] == identity_functor(x.cats[i]))) return false;
    for (std::size_t a = 0; a < x.cats[i]->size(); ++a)
      if (x.eta[i].comp[a] != identity_in(*x.cats[i], a)) return false;
  }
  for (const auto& [vu, t] : x.theta) {
    if (!(x.func[ic.compose(vu.first, vu.second)] == compose_functors(x.func[vu.first], x.func[vu.second]))) return false;
    for (std::size_t a = 0; a < t.comp.size(); ++a)
      if (t.comp[a] != identity_in(*t.src.cod, t.src.f0[a])) return false;
  }
  return true;
}

template <class To, class From>
static To op_diagram(const From& x) {
  To o;
  o.index = x.index;
  o.base = x.base;
  for (const auto& c : x.cats) o.cats.push_back(share(op(*c)));
  for (const auto& f : x.func) o.func.push_back(op(f));
  for (const auto& t : x.eta) o.eta.push_back(op(t));
  for (const auto& [k, t] : x.theta) o.theta.emplace(k, op(t));
  return o;
}

LaxDiagram op(const OplaxDiagram& x) { return op_diagram<LaxDiagram>(x); }
OplaxDiagram op(const LaxDiagram& x) { return op_diagram<OplaxDiagram>(x); }

OplaxDiagram diagonal(const VCatRef& a, const IndexCat& i) {
  std::vector<VCatRef> cats(i.objects.size(), a);
  std::vector<VFunctor> func(i.mors.size(), identity_functor(a));
  return strict_diagram(i, std::move(cats), std::move(func));
}

namespace {

// Functor value on an element, with the hom endpoints read off the source objects.
Elem at(const VFunctor& f, std::size_t a, std::size_t b, const Elem& e) { return f(a, b, e); }

}  // namespace

Report validate_transf(const Transf& t) {
  Report r;
  const OplaxDiagram &x = *t.src, &y = *t.tgt;
  const IndexCat& ic = x.index;
  const bool left = t.side == Side::left;
  if (!(ic == y.index)) {
    r.fail("same index category", "transformation");
    return r;
  }
  if (t.comp.size() != ic.objects.size() || t.square.size() != ic.mors.size()) {
    r.fail("total tables", "transformation");
    return r;
  }
  for (std::size_t i = 0; i < t.comp.size() && r; ++i) {
    if (!same_cat(t.comp[i].dom, x.cats[i]) || !same_cat(t.comp[i].cod, y.cats[i])) r.fail("component endpoints", ic.objects[i]);
    else if (auto rf = validate_vfunctor(t.comp[i]); !rf) r.fail("component " + rf.law, ic.objects[i] + " " + rf.where, rf.detail);
  }
  for (std::size_t u = 0; u < ic.mors.size() && r; ++u) {
    const auto i = ic.mors[u].dom, j = ic.mors[u].cod;
    const VFunctor yf = compose_functors(y.func[u], t.comp[i]);
    const VFunctor fx = compose_functors(t.comp[j], x.func[u]);
    const auto& s = t.square[u];
    if (!(left ? (s.src == yf && s.tgt == fx) : (s.src == fx && s.tgt == yf))) r.fail("square endpoints", nm(ic, u));
    else if (auto rs = validate_nattrans(s); !rs) r.fail("square " + rs.law, nm(ic, u) + " " + rs.where, rs.detail);
  }
  if (!r) return r;
  for (std::size_t i = 0; i < ic.objects.size() && r; ++i) {
    const auto one = ic.ident[i];
    const VFunctor &f = t.comp[i], &x1 = x.func[one], &y1 = y.func[one];
    const VCat &xi = *x.cats[i], &yi = *y.cats[i];
    for (std::size_t a = 0; a < xi.size() && r; ++a) {
      const auto fa = f.f0[a], fx1a = f.f0[x1.f0[a]], y1fa = y1.f0[fa];
      const Elem fe = at(f, x1.f0[a], a, x.eta[i].comp[a]);
      const Elem& phi = t.square[one].comp[a];
      Elem lhs, rhs;
      if (left) {
        lhs = compose_in(yi, y1fa, fx1a, fa, fe, phi);
        rhs = y.eta[i].comp[fa];
      } else {
        lhs = compose_in(yi, fx1a, y1fa, fa, y.eta[i].comp[fa], phi);
        rhs = fe;
      }
      if (lhs != rhs) r.fail("transformation unit", ic.objects[i] + " x=" + xi.objects[a], render(yi.hom[left ? y1fa : fx1a][fa], lhs));
    }
  }
  for (const auto& [v, u] : composable_pairs(ic)) {
    if (!r) break;
    const auto i = ic.mors[u].dom, k = ic.mors[v].cod;
    const auto vu = ic.compose(v, u);
    const VFunctor &fi = t.comp[i], &fj = t.comp[ic.mors[u].cod], &fk = t.comp[k];
    const VFunctor &xu = x.func[u], &xv = x.func[v], &xvu = x.func[vu];
    const VFunctor &yu = y.func[u], &yv = y.func[v], &yvu = y.func[vu];
    const VCat &xi = *x.cats[i], &yk = *y.cats[k];
    for (std::size_t a = 0; a < xi.size() && r; ++a) {
      const auto fa = fi.f0[a];
      const auto o_yvu_f = yvu.f0[fa], o_yv_yu_f = yv.f0[yu.f0[fa]];
      const auto o_yv_f_xu = yv.f0[fj.f0[xu.f0[a]]];
      const auto o_f_xvu = fk.f0[xvu.f0[a]], o_f_xv_xu = fk.f0[xv.f0[xu.f0[a]]];
      const Elem f_theta = at(fk, xvu.f0[a], xv.f0[xu.f0[a]], x.theta_at(v, u).comp[a]);
      const Elem& theta_y = y.theta_at(v, u).comp[fa];
      const Elem& phi_vu = t.square[vu].comp[a];
      const Elem& phi_v = t.square[v].comp[xu.f0[a]];
      Elem lhs, rhs;
      if (left) {
        const Elem y_phi_u = at(yv, yu.f0[fa], fj.f0[xu.f0[a]], t.square[u].comp[a]);
        lhs = compose_in(yk, o_yvu_f, o_f_xvu, o_f_xv_xu, f_theta, phi_vu);
        rhs = compose_in(yk, o_yvu_f, o_yv_f_xu, o_f_xv_xu, phi_v,
                         compose_in(yk, o_yvu_f, o_yv_yu_f, o_yv_f_xu, y_phi_u, theta_y));
      } else {
        const Elem y_phi_u = at(yv, fj.f0[xu.f0[a]], yu.f0[fa], t.square[u].comp[a]);
        lhs = compose_in(yk, o_f_xvu, o_yv_f_xu, o_yv_yu_f, y_phi_u,
                         compose_in(yk, o_f_xvu, o_f_xv_xu, o_yv_f_xu, phi_v, f_theta));
        rhs = compose_in(yk, o_f_xvu, o_yvu_f, o_yv_yu_f, theta_y, phi_vu);
      }
      if (lhs != rhs) r.fail("transformation composition", "(" + nm(ic, v) + "," + nm(ic, u) + ") x=" + xi.objects[a]);
    }
  }
  return r;
}

Report validate_left_transf(const Transf& t) {
  if (t.side != Side::left) {
    Report r;
    r.fail("left transformation expected", "transformation");
    return r;
  }
  return validate_transf(t);
}

Report validate_right_transf(const Transf& t) {
  if (t.side != Side::right) {
    Report r;
    r.fail("right transformation expected", "transformation");
    return r;
  }
  return validate_transf(t);
}

Report validate_transf(const LaxTransf& t) {
  Report r = validate_lax(*t.src);
  r.merge(validate_lax(*t.tgt));
  if (!r) return r;
  return validate_transf(op(t));
}

Report validate_transf_morphism(const TransfMorphism& m) {
  Report r;
  if (m.src.side != m.tgt.side || !same_diagram(*m.src.src, *m.tgt.src) || !same_diagram(*m.src.tgt, *m.tgt.tgt)) {
    r.fail("parallel transformations", "modification");
    return r;
  }
  const OplaxDiagram &x = *m.src.src, &y = *m.src.tgt;
  const IndexCat& ic = x.index;
  if (m.comp.size() != ic.objects.size()) {
    r.fail("total tables", "modification");
    return r;
  }
  for (std::size_t i = 0; i < m.comp.size() && r; ++i) {
    if (!(m.comp[i].src == m.src.comp[i]) || !(m.comp[i].tgt == m.tgt.comp[i])) r.fail("component endpoints", ic.objects[i]);
    else if (auto rn = validate_nattrans(m.comp[i]); !rn) r.fail("component " + rn.law, ic.objects[i] + " " + rn.where, rn.detail);
  }
  const bool left = m.src.side == Side::left;
  for (std::size_t u = 0; u < ic.mors.size() && r; ++u) {
    const auto i = ic.mors[u].dom, j = ic.mors[u].cod;
    const VFunctor &f = m.src.comp[i], &g = m.tgt.comp[i], &fj = m.src.comp[j], &gj = m.tgt.comp[j];
    const VFunctor &xu = x.func[u], &yu = y.func[u];
    const VCat &xi = *x.cats[i], &yj = *y.cats[j];
    for (std::size_t a = 0; a < xi.size() && r; ++a) {
      const auto yuf = yu.f0[f.f0[a]], yug = yu.f0[g.f0[a]], fxu = fj.f0[xu.f0[a]], gxu = gj.f0[xu.f0[a]];
      const Elem y_theta = at(yu, f.f0[a], g.f0[a], m.comp[i].comp[a]);
      const Elem& theta_j = m.comp[j].comp[xu.f0[a]];
      const Elem &phi = m.src.square[u].comp[a], &psi = m.tgt.square[u].comp[a];
      Elem lhs, rhs;
      if (left) {
        lhs = compose_in(yj, yuf, yug, gxu, psi, y_theta);
        rhs = compose_in(yj, yuf, fxu, gxu, theta_j, phi);
      } else {
        lhs = compose_in(yj, fxu, yuf, yug, y_theta, phi);
        rhs = compose_in(yj, fxu, gxu, yug, psi, theta_j);
      }
      if (lhs != rhs) r.fail("modification square", "u=" + nm(ic, u) + " x=" + xi.objects[a]);
    }
  }
  return r;
}

Report validate_transf_morphism(const LaxTransfMorphism& m) { return validate_transf_morphism(op(m)); }

template <class To, class FromT>
static To op_transf(const FromT& t) {
  using D = typename decltype(To::src)::element_type;
  To o;
  o.src = std::make_shared<const D>(op(*t.src));
  o.tgt = std::make_shared<const D>(op(*t.tgt));
  o.side = t.side == Side::left ? Side::right : Side::left;
  for (const auto& f : t.comp) o.comp.push_back(op(f));
  for (const auto& s : t.square) o.square.push_back(op(s));
  return o;
}

LaxTransf op(const Transf& t) { return op_transf<LaxTransf>(t); }
Transf op(const LaxTransf& t) { return op_transf<Transf>(t); }

template <class To, class From>
static To op_modification(const From& m) {
  To o{op(m.tgt), op(m.src), {}};
  // Keep the diagrams shared between source and target transformations.
  o.tgt.src = o.src.src;
  o.tgt.tgt = o.src.tgt;
  for (const auto& c : m.comp) o.comp.push_back(op(c));
  return o;
}

LaxTransfMorphism op(const TransfMorphism& m) { return op_modification<LaxTransfMorphism>(m); }
TransfMorphism op(const LaxTransfMorphism& m) { return op_modification<TransfMorphism>(m); }

Transf identity_transf(const OplaxRef& x, Side side) {
  Transf t{x, x, side, {}, {}};
  for (const auto& c : x->cats) t.comp.push_back(identity_functor(c));
  for (const auto& f : x->func) t.square.push_back(identity_nat(f));
  return t;
}

Transf compose_transfs(const Transf& g, const Transf& f) {
  if (g.side != f.side) throw Error(Errc::TagMismatch, "composing transformations of different sides");
  if (!same_diagram(*g.src, *f.tgt)) throw Error(Errc::ShapeMismatch, "transformations not composable");
  const OplaxDiagram &x = *f.src, &z = *g.tgt;
  const IndexCat& ic = x.index;
  Transf h{f.src, g.tgt, f.side, {}, {}};
  for (std::size_t i = 0; i < f.comp.size(); ++i) h.comp.push_back(compose_functors(g.comp[i], f.comp[i]));
  const bool left = f.side == Side::left;
  for (std::size_t u = 0; u < ic.mors.size(); ++u) {
    const auto i = ic.mors[u].dom, j = ic.mors[u].cod;
    const VFunctor zgf = compose_functors(z.func[u], h.comp[i]);
    const VFunctor gfx = compose_functors(h.comp[j], x.func[u]);
    VNatTrans s{left ? zgf : gfx, left ? gfx : zgf, {}};
    const VCat& zj = *z.cats[j];
    const VFunctor &yu = f.tgt->func[u], &gj = g.comp[j];
    for (std::size_t a = 0; a < x.cats[i]->size(); ++a) {
      const auto fa = f.comp[i].f0[a];
      const auto o_zgf = zgf.f0[a], o_gyf = gj.f0[yu.f0[fa]], o_gfx = gfx.f0[a];
      const Elem& psi = g.square[u].comp[fa];
      if (left) {
        const Elem g_phi = gj(yu.f0[fa], f.comp[j].f0[x.func[u].f0[a]], f.square[u].comp[a]);
        s.comp.push_back(compose_in(zj, o_zgf, o_gyf, o_gfx, g_phi, psi));
      } else {
        const Elem g_phi = gj(f.comp[j].f0[x.func[u].f0[a]], yu.f0[fa], f.square[u].comp[a]);
        s.comp.push_back(compose_in(zj, o_gfx, o_gyf, o_zgf, psi, g_phi));
      }
    }
    h.square.push_back(std::move(s));
  }
  return h;
}

bool same_transf(const Transf& a, const Transf& b) {
  return a.side == b.side && a.comp == b.comp && a.square == b.square;
}

TransfMorphism identity_transf_morphism(const Transf& t) {
  TransfMorphism m{t, t, {}};
  for (const auto& f : t.comp) m.comp.push_back(identity_nat(f));
  return m;
}

TransfMorphism vertical(const TransfMorphism& b, const TransfMorphism& a) {
  TransfMorphism m{a.src, b.tgt, {}};
  for (std::size_t i = 0; i < a.comp.size(); ++i) m.comp.push_back(vertical(b.comp[i], a.comp[i]));
  return m;
}

TransfMorphism horizontal(const TransfMorphism& b, const TransfMorphism& a) {
  TransfMorphism m{compose_transfs(b.src, a.src), compose_transfs(b.tgt, a.tgt), {}};
  for (std::size_t i = 0; i < a.comp.size(); ++i) m.comp.push_back(horizontal(b.comp[i], a.comp[i]));
  return m;
}

}  // namespace catkit
