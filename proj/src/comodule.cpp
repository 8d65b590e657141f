#include "catkit/comodule.hpp"

#include <algorithm>
#include <set>

namespace catkit {

namespace {

bool agree(const Mor& a, const Mor& b) {
  return same_shape(a.dom, b.dom) && same_shape(a.cod, b.cod) && a.map == b.map && a.mat == b.mat;
}

void check_endpoints(Report& r, const Mor& f, const Obj& dom, const Obj& cod, const std::string& what) {
  if (!same_shape(f.dom, dom) || !same_shape(f.cod, cod)) r.fail("structure map shape", what);
}

std::vector<std::string> names_of(const IndexCat& ic, const std::vector<std::size_t>& ms) {
  std::vector<std::string> out;
  for (auto m : ms) out.push_back(ic.mors[m].name);
  return out;
}

}  // namespace

Report validate_comonoid(const Comonoid& c) {
  Report r;
  const Obj& a = c.carrier;
  const Obj one = unit_obj(a.base);
  check_endpoints(r, c.delta, a, tensor(a, a), "delta");
  check_endpoints(r, c.eps, a, one, "epsilon");
  if (!r) return r;
  if (!agree(compose(assoc(a, a, a), compose(tensor(c.delta, identity(a)), c.delta)),
             compose(tensor(identity(a), c.delta), c.delta)))
    r.fail("coassociativity", "comonoid");
  if (!agree(compose(left_unitor(a), compose(tensor(c.eps, identity(a)), c.delta)), identity(a)))
    r.fail("left counit", "comonoid");
  if (!agree(compose(right_unitor(a), compose(tensor(identity(a), c.eps), c.delta)), identity(a)))
    r.fail("right counit", "comonoid");
  return r;
}

Report validate_comodule(const RightComodule& m) {
  Report r = validate_comonoid(m.over);
  if (!r) return r;
  const Obj &x = m.carrier, &c = m.over.carrier;
  check_endpoints(r, m.coaction, x, tensor(x, c), "coaction");
  if (!r) return r;
  if (!agree(compose(right_unitor(x), compose(tensor(identity(x), m.over.eps), m.coaction)), identity(x)))
    r.fail("comodule counit", "right comodule");
  if (!agree(compose(assoc(x, c, c), compose(tensor(m.coaction, identity(c)), m.coaction)),
             compose(tensor(identity(x), m.over.delta), m.coaction)))
    r.fail("comodule coassociativity", "right comodule");
  return r;
}

Report validate_comodule(const LeftComodule& m) {
  Report r = validate_comonoid(m.over);
  if (!r) return r;
  const Obj &x = m.carrier, &c = m.over.carrier;
  check_endpoints(r, m.coaction, x, tensor(c, x), "coaction");
  if (!r) return r;
  if (!agree(compose(left_unitor(x), compose(tensor(m.over.eps, identity(x)), m.coaction)), identity(x)))
    r.fail("comodule counit", "left comodule");
  if (!agree(compose(assoc(c, c, x), compose(tensor(m.over.delta, identity(x)), m.coaction)),
             compose(tensor(identity(c), m.coaction), m.coaction)))
    r.fail("comodule coassociativity", "left comodule");
  return r;
}

Subobject cotensor(const RightComodule& m, const LeftComodule& n) {
  if (!same_shape(m.over.carrier, n.over.carrier) || !agree(m.over.delta, n.over.delta))
    throw Error(Errc::TagMismatch, "cotensor: comodules over different comonoids");
  const Obj &x = m.carrier, &y = n.carrier, &c = m.over.carrier;
  const Mor f = tensor(m.coaction, identity(y));
  const Mor g = compose(assoc_inv(x, c, y), tensor(identity(x), n.coaction));
  return equalizer(f, g);
}

bool Decomposition::operator==(const Decomposition& o) const {
  if (!(total == o.total) || tags != o.tags || parts.size() != o.parts.size()) return false;
  for (std::size_t s = 0; s < parts.size(); ++s)
    if (!(parts[s].obj == o.parts[s].obj) || !(parts[s].incl == o.parts[s].incl)) return false;
  return true;
}

static void require_grouplike(const RightComodule& m) {
  const auto free = free_on_set(m.carrier.base, m.over.carrier.labels);
  if (!agree(free.delta, m.over.delta) || !agree(free.eps, m.over.eps))
    throw Error(Errc::Unsupported, "decomposition needs a comonoid free on its basis");
  if (auto r = validate_comodule(m); !r) throw Error(Errc::NotAComodule, r.str());
}

std::vector<Mor> projectors(const RightComodule& m) {
  if (m.carrier.base.is_set()) throw Error(Errc::Unsupported, "projectors need a linear base");
  require_grouplike(m);
  const Obj &x = m.carrier, &c = m.over.carrier;
  const Obj one = unit_obj(x.base);
  std::vector<Mor> out;
  for (std::size_t s = 0; s < c.size(); ++s) {
    Mor delta_s = from_columns(c, one, [&](std::size_t k) { return k == s ? basis(one, 0) : zero_elem(one); });
    out.push_back(compose(right_unitor(x), compose(tensor(identity(x), delta_s), m.coaction)));
  }
  return out;
}

Decomposition decomposition_from_comodule(const RightComodule& m) {
  require_grouplike(m);
  const Obj &x = m.carrier, &c = m.over.carrier;
  Decomposition d{x, c.labels, {}};
  if (x.base.is_set()) {
    Mor grade = from_columns(x, c, [&](std::size_t k) {
      return basis(c, split_index(as_index(eval(m.coaction, basis(x, k))), c).second);
    });
    for (std::size_t s = 0; s < c.size(); ++s)
      d.parts.push_back(equalizer(grade, from_columns(x, c, [&](std::size_t) { return basis(c, s); })));
    return d;
  }
  for (const auto& p : projectors(m)) d.parts.push_back(equalizer(p, identity(x)));
  return d;
}

RightComodule comodule_from_decomposition(const Decomposition& d) {
  const Obj& x = d.total;
  if (d.tags.size() != d.parts.size()) throw Error(Errc::ShapeMismatch, "decomposition: tags and parts differ");
  auto over = free_on_set(x.base, d.tags);
  const Obj& c = over.carrier;
  std::vector<std::pair<std::string, Obj>> named;
  std::vector<Mor> legs;
  for (std::size_t s = 0; s < d.parts.size(); ++s) {
    check_mor(d.parts[s].incl);
    if (!same_shape(d.parts[s].incl.cod, x)) throw Error(Errc::ShapeMismatch, "decomposition: part not in total");
    named.emplace_back(d.tags[s], d.parts[s].obj);
    legs.push_back(d.parts[s].incl);
  }
  const auto sum = coproduct(x.base, named);
  const Mor phi = copair(sum, legs, x);
  if (!is_iso(phi)) throw Error(Errc::NotAComodule, "parts do not decompose the total object");
  const Mor back = inverse(phi);
  Mor co = from_columns(x, tensor(x, c), [&](std::size_t k) {
    const Elem v = eval(back, basis(x, k));
    if (x.base.is_set()) {
      const auto j = as_index(v);
      const auto s = sum.block_of(j);
      return Elem{std::size_t{k * c.size() + s}};
    }
    Elem out = zero_elem(tensor(x, c));
    for (std::size_t s = 0; s < d.parts.size(); ++s) {
      Vec part(sum.parts[s].size());
      for (std::size_t i = 0; i < part.size(); ++i) part[i] = as_vec(v)[sum.offsets[s] + i];
      const Elem w = eval(d.parts[s].incl, Elem{part});
      out = add(x.base, out, tensor_elem(x, w, c, basis(c, s)));
    }
    return out;
  });
  return {x, std::move(over), std::move(co)};
}

Decomposition canonical(const Decomposition& d) {
  Decomposition out{d.total, d.tags, {}};
  const Obj& x = d.total;
  for (const auto& part : d.parts) {
    if (x.base.is_set()) {
      std::vector<std::size_t> keep(part.incl.map);
      std::sort(keep.begin(), keep.end());
      keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
      Obj e{x.base, {}};
      for (auto k : keep) e.labels.push_back(x.labels[k]);
      out.parts.push_back({e, Mor{e, x, keep, {}}});
      continue;
    }
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < part.obj.size(); ++k) cols.push_back(as_vec(eval(part.incl, basis(part.obj, k))));
    const auto span = linalg::canonical_span(cols, x.size(), x.base.p);
    Obj e{x.base, {}};
    for (const auto& [j, v] : span) e.labels.push_back(x.labels[j]);
    out.parts.push_back({e, from_columns(e, x, [&](std::size_t k) { return Elem{span[k].second}; })});
  }
  return out;
}

std::vector<std::size_t> GradedVCat::tags(std::size_t x, std::size_t y) const {
  return index.hom(degree.at(x), degree.at(y));
}

std::pair<std::size_t, std::size_t> GradedVCat::block_range(std::size_t x, std::size_t y, std::size_t u) const {
  const auto& c = decomp.at(x).at(y);
  const auto pos = index.position_in_hom(u);
  return {c.offsets.at(pos), c.offsets.at(pos) + c.parts.at(pos).size()};
}

std::size_t GradedVCat::tag_of(std::size_t x, std::size_t y, std::size_t k) const {
  return tags(x, y).at(decomp.at(x).at(y).block_of(k));
}

std::vector<std::size_t> GradedVCat::support(std::size_t x, std::size_t y, const Elem& e) const {
  if (cat->base.is_set()) return {tag_of(x, y, as_index(e))};
  std::vector<std::size_t> out;
  const auto ts = tags(x, y);
  const auto& v = as_vec(e);
  for (std::size_t b = 0; b < ts.size(); ++b) {
    const auto [lo, hi] = block_range(x, y, ts[b]);
    for (std::size_t k = lo; k < hi; ++k)
      if (v[k] != 0) {
        out.push_back(ts[b]);
        break;
      }
  }
  return out;
}

std::optional<Elem> GradedVCat::component(std::size_t x, std::size_t y, const Elem& e, std::size_t u) const {
  if (cat->base.is_set()) {
    if (tag_of(x, y, as_index(e)) != u) return std::nullopt;
    return e;
  }
  const auto [lo, hi] = block_range(x, y, u);
  Vec v = as_vec(e);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (k < lo || k >= hi) v[k] = 0;
  return Elem{v};
}

std::optional<Elem> GradedVCat::local(std::size_t x, std::size_t y, const Elem& e, std::size_t u) const {
  const auto [lo, hi] = block_range(x, y, u);
  if (cat->base.is_set()) {
    const auto k = as_index(e);
    if (k < lo || k >= hi) return std::nullopt;
    return Elem{k - lo};
  }
  const auto& v = as_vec(e);
  return Elem{Vec(v.begin() + static_cast<long>(lo), v.begin() + static_cast<long>(hi))};
}

Elem GradedVCat::inject(std::size_t x, std::size_t y, std::size_t u, const Elem& e) const {
  return eval(decomp.at(x).at(y).injections.at(index.position_in_hom(u)), e);
}

GradedVCat make_graded(VCatRef cat, IndexCat index, std::vector<std::size_t> degree, const SizeFn& sizes) {
  GradedVCat g{std::move(cat), std::move(index), std::move(degree), {}};
  const auto n = g.cat->size();
  if (g.degree.size() != n) throw Error(Errc::ShapeMismatch, "grading: one degree per object required");
  for (auto d : g.degree)
    if (d >= g.index.objects.size()) throw Error(Errc::Reference, "grading: degree out of range");
  g.decomp.assign(n, std::vector<TaggedCoproduct>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Obj& h = g.cat->hom[x][y];
      std::vector<std::pair<std::string, Obj>> parts;
      std::size_t at = 0;
      for (auto u : g.tags(x, y)) {
        const auto len = sizes(x, y, u);
        if (at + len > h.size()) throw Error(Errc::ShapeMismatch, "grading: blocks exceed hom(" + g.cat->objects[x] + "," + g.cat->objects[y] + ")");
        parts.emplace_back(g.index.mors[u].name,
                           object_like(h.base, {h.labels.begin() + static_cast<long>(at), h.labels.begin() + static_cast<long>(at + len)}));
        at += len;
      }
      if (at != h.size()) throw Error(Errc::ShapeMismatch, "grading: blocks do not cover hom(" + g.cat->objects[x] + "," + g.cat->objects[y] + ")");
      g.decomp[x][y] = coproduct(h.base, parts);
    }
  return g;
}

Mor coaction(const GradedVCat& g, std::size_t x, std::size_t y) {
  const Obj& h = g.cat->hom[x][y];
  const Obj c = object_like(h.base, names_of(g.index, g.tags(x, y)));
  const Obj hc = tensor(h, c);
  return from_columns(h, hc, [&](std::size_t k) {
    return basis(hc, k * c.size() + g.index.position_in_hom(g.tag_of(x, y, k)));
  });
}

Report validate_grading(const GradedVCat& g) {
  Report r;
  const VCat& c = *g.cat;
  const auto n = c.size();
  if (auto ri = validate_index(g.index); !ri) return ri;
  if (g.degree.size() != n) {
    r.fail("one degree per object", "grading");
    return r;
  }
  for (std::size_t x = 0; x < n; ++x)
    if (g.degree[x] >= g.index.objects.size()) r.fail("degree in range", c.objects[x]);
  if (g.decomp.size() != n) r.fail("total tables", "grading");
  if (!r) return r;
  for (std::size_t x = 0; x < n && r; ++x) {
    if (g.decomp[x].size() != n) r.fail("total tables", "grading");
    for (std::size_t y = 0; y < n && r; ++y) {
      const auto& d = g.decomp[x][y];
      const auto where = "hom(" + c.objects[x] + "," + c.objects[y] + ")";
      if (d.tags != names_of(g.index, g.tags(x, y))) r.fail("blocks tagged by I(px,py)", where);
      else if (d.total.size() != c.hom[x][y].size()) r.fail("blocks cover the hom object", where);
      else {
        RightComodule m{c.hom[x][y], free_on_set(c.base, d.tags), coaction(g, x, y)};
        if (auto rm = validate_comodule(m); !rm) r.fail(rm.law, where, rm.detail);
      }
    }
  }
  if (!r) return r;
  for (std::size_t x = 0; x < n; ++x) {
    for (auto u : g.support(x, x, identity_in(c, x)))
      if (u != g.index.ident[g.degree[x]]) r.fail("identity has identity degree", c.objects[x]);
  }
  for (std::size_t x = 0; x < n && r; ++x)
    for (std::size_t y = 0; y < n && r; ++y)
      for (std::size_t z = 0; z < n && r; ++z) {
        const Obj &hyz = c.hom[y][z], &hxy = c.hom[x][y];
        for (std::size_t a = 0; a < hyz.size() && r; ++a)
          for (std::size_t b = 0; b < hxy.size() && r; ++b) {
            const auto v = g.tag_of(y, z, a), u = g.tag_of(x, y, b);
            const auto w = g.index.compose(v, u);
            for (auto t : g.support(x, z, compose_in(c, x, y, z, basis(hyz, a), basis(hxy, b))))
              if (t != w)
                r.fail("composition adds degrees", c.objects[x] + "->" + c.objects[y] + "->" + c.objects[z],
                       "expected " + g.index.mors[w].name + ", found " + g.index.mors[t].name);
          }
      }
  return r;
}

GradedVCat free_graded(const IndexCat& i, const Base& b) {
  std::vector<std::size_t> degree(i.objects.size());
  for (std::size_t k = 0; k < degree.size(); ++k) degree[k] = k;
  return make_graded(share(free_vcat(i, b)), i, degree, [](std::size_t, std::size_t, std::size_t) { return 1; });
}

GradedVCat op(const GradedVCat& g) {
  GradedVCat o{share(op(*g.cat)), op(g.index), g.degree, g.decomp};
  const auto n = g.cat->size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) o.decomp[x][y] = g.decomp[y][x];
  return o;
}

VFunctor functor_from_grading(const GradedVCat& g, const VCatRef& free_i) {
  if (!g.cat->base.is_set()) throw Error(Errc::Unsupported, "gradings are functors only over finite sets");
  return build_vfunctor(g.cat, free_i, g.degree, [&](std::size_t x, std::size_t y, std::size_t k) {
    return basis(free_i->hom[g.degree[x]][g.degree[y]], g.index.position_in_hom(g.tag_of(x, y, k)));
  });
}

GradedVCat grading_from_functor(const VFunctor& p, const IndexCat& i) {
  if (!p.dom->base.is_set()) throw Error(Errc::Unsupported, "gradings are functors only over finite sets");
  const auto n = p.dom->size();
  std::vector<std::vector<std::vector<std::size_t>>> counts(n, std::vector<std::vector<std::size_t>>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto ts = i.hom(p.f0[x], p.f0[y]);
      counts[x][y].assign(ts.size(), 0);
      std::size_t last = 0;
      for (std::size_t k = 0; k < p.dom->hom[x][y].size(); ++k) {
        const auto pos = as_index(p(x, y, basis(p.dom->hom[x][y], k)));
        if (pos < last) throw Error(Errc::Unsupported, "hom elements are not sorted by degree");
        last = pos;
        ++counts[x][y][pos];
      }
    }
  return make_graded(p.dom, i, p.f0, [&](std::size_t x, std::size_t y, std::size_t u) {
    return counts[x][y][i.position_in_hom(u)];
  });
}

Report validate_graded_morphism(const GradedMorphism& m) {
  Report r = validate_vfunctor(m.functor);
  if (!r) return r;
  const GradedVCat &a = *m.dom, &b = *m.cod;
  if (!(a.index == b.index)) r.fail("same index category", "graded morphism");
  if (!(*m.functor.dom == *a.cat) || !(*m.functor.cod == *b.cat)) r.fail("functor between the graded categories", "graded morphism");
  if (m.phi2.size() != a.cat->size()) r.fail("one comparison per object", "graded morphism");
  if (!r) return r;
  const IndexCat& ic = a.index;
  const auto& f0 = m.functor.f0;
  for (std::size_t x = 0; x < a.cat->size(); ++x) {
    const auto want_dom = m.right ? a.degree[x] : b.degree[f0[x]];
    const auto want_cod = m.right ? b.degree[f0[x]] : a.degree[x];
    if (m.phi2[x] >= ic.mors.size() || ic.mors[m.phi2[x]].dom != want_dom || ic.mors[m.phi2[x]].cod != want_cod)
      r.fail("comparison has the right endpoints", a.cat->objects[x]);
  }
  if (!r) return r;
  for (std::size_t x = 0; x < a.cat->size() && r; ++x)
    for (std::size_t y = 0; y < a.cat->size() && r; ++y) {
      const Obj& h = a.cat->hom[x][y];
      for (std::size_t k = 0; k < h.size() && r; ++k) {
        const auto g = a.tag_of(x, y, k);
        for (auto t : b.support(f0[x], f0[y], m.functor(x, y, basis(h, k)))) {
          const bool ok = m.right ? ic.compose(t, m.phi2[x]) == ic.compose(m.phi2[y], g)
                                  : ic.compose(m.phi2[y], t) == ic.compose(g, m.phi2[x]);
          if (!ok) r.fail("degree compatibility", a.cat->objects[x] + "->" + a.cat->objects[y] + ":" + h.labels[k]);
        }
      }
    }
  return r;
}

Report validate_graded_2morphism(const Graded2Morphism& m) {
  Report r = validate_graded_morphism(m.src);
  r.merge(validate_graded_morphism(m.tgt));
  if (!r) return r;
  if (m.src.right != m.tgt.right) r.fail("same variance", "graded 2-morphism");
  if (!(m.nat.src == m.src.functor) || !(m.nat.tgt == m.tgt.functor)) r.fail("transformation between the functors", "graded 2-morphism");
  if (!r) return r;
  r.merge(validate_nattrans(m.nat));
  if (!r) return r;
  const GradedVCat &a = *m.src.dom, &b = *m.src.cod;
  const IndexCat& ic = a.index;
  for (std::size_t x = 0; x < a.cat->size(); ++x) {
    const auto fx = m.src.functor.f0[x], gx = m.tgt.functor.f0[x];
    for (auto t : b.support(fx, gx, m.nat.comp[x])) {
      const bool ok = m.src.right ? ic.compose(t, m.src.phi2[x]) == m.tgt.phi2[x]
                                  : ic.compose(m.tgt.phi2[x], t) == m.src.phi2[x];
      if (!ok) r.fail("degree compatibility", a.cat->objects[x]);
    }
  }
  return r;
}

GradedMorphism identity_graded(const GradedRef& g, bool right) {
  std::vector<std::size_t> phi2;
  for (auto d : g->degree) phi2.push_back(g->index.ident[d]);
  return {g, g, identity_functor(g->cat), std::move(phi2), right};
}

GradedMorphism compose_graded(const GradedMorphism& g, const GradedMorphism& f) {
  if (g.right != f.right) throw Error(Errc::TagMismatch, "composing graded morphisms of different variance");
  const IndexCat& ic = f.dom->index;
  std::vector<std::size_t> phi2;
  for (std::size_t x = 0; x < f.phi2.size(); ++x) {
    const auto gfx = g.phi2.at(f.functor.f0[x]);
    phi2.push_back(f.right ? ic.compose(gfx, f.phi2[x]) : ic.compose(f.phi2[x], gfx));
  }
  return {f.dom, g.cod, compose_functors(g.functor, f.functor), std::move(phi2), f.right};
}

Graded2Morphism compose_graded_2(const Graded2Morphism& b, const Graded2Morphism& a) {
  return {a.src, b.tgt, vertical(b.nat, a.nat)};
}

bool same_graded_morphism(const GradedMorphism& a, const GradedMorphism& b) {
  return a.right == b.right && a.functor == b.functor && a.phi2 == b.phi2;
}

}  // namespace catkit
