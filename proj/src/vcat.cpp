#include "catkit/vcat.hpp"

#include <tuple>

#include <map>

namespace catkit {

std::size_t VCat::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == label) return i;
  throw Error(Errc::Reference, "unknown object " + label);
}

Elem compose_in(const VCat& c, std::size_t x, std::size_t y, std::size_t z, const Elem& g, const Elem& f) {
  return eval(c.comp[x][y][z], tensor_elem(c.hom[y][z], g, c.hom[x][y], f));
}

Elem identity_in(const VCat& c, std::size_t x) { return element_of(c.id[x]); }

VCat build_vcat(const Base& b, std::vector<std::string> objects, std::vector<std::vector<Obj>> hom,
                const CompFn& comp, const IdFn& id) {
  VCat c{b, std::move(objects), std::move(hom), {}, {}};
  const auto n = c.objects.size();
  c.comp.assign(n, std::vector<std::vector<Mor>>(n, std::vector<Mor>(n)));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Obj& fy = c.hom[x][y];
        c.comp[x][y][z] = from_columns(tensor(c.hom[y][z], fy), c.hom[x][z], [&](std::size_t k) {
          return comp(x, y, z, k / fy.size(), k % fy.size());
        });
      }
  for (std::size_t x = 0; x < n; ++x) c.id.push_back(point(c.hom[x][x], id(x)));
  return c;
}

void check_tables(const VCat& c) {
  const auto n = c.objects.size();
  auto bad = [](const std::string& what) { throw Error(Errc::IncompleteData, what); };
  if (c.hom.size() != n || c.comp.size() != n || c.id.size() != n) bad("table sizes differ from object count");
  const Obj one = unit_obj(c.base);
  for (std::size_t x = 0; x < n; ++x) {
    if (c.hom[x].size() != n || c.comp[x].size() != n) bad("row " + c.objects[x]);
    for (std::size_t y = 0; y < n; ++y) {
      if (!(c.hom[x][y].base == c.base)) throw Error(Errc::TagMismatch, "hom base");
      if (c.comp[x][y].size() != n) bad("comp row " + c.objects[x] + "," + c.objects[y]);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    check_mor(c.id[x]);
    if (!same_shape(c.id[x].dom, one) || !same_shape(c.id[x].cod, c.hom[x][x])) bad("identity shape at " + c.objects[x]);
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Mor& m = c.comp[x][y][z];
        check_mor(m);
        if (m.dom.size() != c.hom[y][z].size() * c.hom[x][y].size() || !same_shape(m.cod, c.hom[x][z]))
          bad("composition shape at " + c.objects[x] + "," + c.objects[y] + "," + c.objects[z]);
      }
  }
}

Report validate_vcat(const VCat& c) {
  check_tables(c);
  Report r;
  const auto n = c.objects.size();
  for (std::size_t x = 0; x < n && r; ++x)
    for (std::size_t y = 0; y < n && r; ++y) {
      const Obj& h = c.hom[x][y];
      const Elem ix = identity_in(c, x), iy = identity_in(c, y);
      for (std::size_t k = 0; k < h.size() && r; ++k) {
        const Elem f = basis(h, k);
        const Elem l = compose_in(c, x, y, y, iy, f);
        if (l != f) r.fail("left unit", c.objects[x] + "," + c.objects[y] + ":" + h.labels[k], render(h, l) + " vs " + render(h, f));
        const Elem rr = compose_in(c, x, x, y, f, ix);
        if (rr != f) r.fail("right unit", c.objects[x] + "," + c.objects[y] + ":" + h.labels[k], render(h, rr) + " vs " + render(h, f));
      }
    }
  for (std::size_t x = 0; x < n && r; ++x)
    for (std::size_t y = 0; y < n && r; ++y)
      for (std::size_t z = 0; z < n && r; ++z)
        for (std::size_t w = 0; w < n && r; ++w) {
          const Obj &hzw = c.hom[z][w], &hyz = c.hom[y][z], &hxy = c.hom[x][y];
          for (std::size_t a = 0; a < hzw.size() && r; ++a)
            for (std::size_t b = 0; b < hyz.size() && r; ++b) {
              const Elem ea = basis(hzw, a), eb = basis(hyz, b);
              const Elem ab = compose_in(c, y, z, w, ea, eb);
              for (std::size_t d = 0; d < hxy.size() && r; ++d) {
                const Elem ed = basis(hxy, d);
                const Elem lhs = compose_in(c, x, y, w, ab, ed);
                const Elem rhs = compose_in(c, x, z, w, ea, compose_in(c, x, y, z, eb, ed));
                if (lhs != rhs)
                  r.fail("associativity",
                         c.objects[x] + "," + c.objects[y] + "," + c.objects[z] + "," + c.objects[w] + ":" +
                             hzw.labels[a] + "," + hyz.labels[b] + "," + hxy.labels[d],
                         render(c.hom[x][w], lhs) + " vs " + render(c.hom[x][w], rhs));
              }
            }
        }
  return r;
}

bool same_tables(const VCat& a, const VCat& b) {
  if (!(a.base == b.base) || a.size() != b.size()) return false;
  const auto n = a.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (a.id[x].map != b.id[x].map || a.id[x].mat != b.id[x].mat) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (a.hom[x][y].size() != b.hom[x][y].size()) return false;
      for (std::size_t z = 0; z < n; ++z) {
        const Mor &f = a.comp[x][y][z], &g = b.comp[x][y][z];
        if (f.map != g.map || f.mat != g.mat) return false;
      }
    }
  }
  return true;
}

VCat unit_vcat(const Base& b) {
  return build_vcat(b, {"*"}, {{unit_obj(b)}},
                    [&](auto, auto, auto, auto, auto) { return basis(unit_obj(b), 0); },
                    [&](auto) { return basis(unit_obj(b), 0); });
}

VCat empty_vcat(const Base& b) { return VCat{b, {}, {}, {}, {}}; }

VCat free_vcat(const IndexCat& ic, const Base& b) {
  const auto n = ic.objects.size();
  std::vector<std::vector<std::vector<std::size_t>>> homs(n, std::vector<std::vector<std::size_t>>(n));
  std::vector<std::vector<Obj>> hom(n, std::vector<Obj>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      homs[i][j] = ic.hom(i, j);
      std::vector<std::string> labels;
      for (auto m : homs[i][j]) labels.push_back(ic.mors[m].name);
      hom[i][j] = object_like(b, labels);
    }
  auto h = hom;
  return build_vcat(
      b, ic.objects, std::move(hom),
      [&](std::size_t i, std::size_t j, std::size_t k, std::size_t g, std::size_t f) {
        const auto w = ic.compose(homs[j][k][g], homs[i][j][f]);
        return basis(h[i][k], ic.position_in_hom(w));
      },
      [&](std::size_t i) { return basis(h[i][i], ic.position_in_hom(ic.ident[i])); });
}

VCat tensor_vcats(const VCat& a, const VCat& b) {
  if (!(a.base == b.base)) throw Error(Errc::TagMismatch, "tensor of V-categories over different bases");
  const auto na = a.size(), nb = b.size(), n = na * nb;
  std::vector<std::string> objects;
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) objects.push_back("(" + a.objects[x] + "," + b.objects[y] + ")");
  std::vector<std::vector<Obj>> hom(n, std::vector<Obj>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) hom[s][t] = tensor(a.hom[s / nb][t / nb], b.hom[s % nb][t % nb]);
  return build_vcat(
      a.base, std::move(objects), std::move(hom),
      [&](std::size_t s, std::size_t t, std::size_t u, std::size_t g, std::size_t f) {
        const std::size_t s1 = s / nb, s2 = s % nb, t1 = t / nb, t2 = t % nb, u1 = u / nb, u2 = u % nb;
        const Obj &gb = b.hom[t2][u2], &fb = b.hom[s2][t2];
        const Elem g1 = basis(a.hom[t1][u1], g / gb.size()), g2 = basis(gb, g % gb.size());
        const Elem f1 = basis(a.hom[s1][t1], f / fb.size()), f2 = basis(fb, f % fb.size());
        return tensor_elem(a.hom[s1][u1], compose_in(a, s1, t1, u1, g1, f1), b.hom[s2][u2],
                           compose_in(b, s2, t2, u2, g2, f2));
      },
      [&](std::size_t s) {
        return tensor_elem(a.hom[s / nb][s / nb], identity_in(a, s / nb), b.hom[s % nb][s % nb],
                           identity_in(b, s % nb));
      });
}

VCat op(const VCat& c) {
  const auto n = c.size();
  std::vector<std::vector<Obj>> hom(n, std::vector<Obj>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) hom[x][y] = c.hom[y][x];
  return build_vcat(
      c.base, c.objects, std::move(hom),
      [&](std::size_t x, std::size_t y, std::size_t z, std::size_t g, std::size_t f) {
        return compose_in(c, z, y, x, basis(c.hom[y][x], f), basis(c.hom[z][y], g));
      },
      [&](std::size_t x) { return identity_in(c, x); });
}

IndexCat underlying_category(const VCat& c, std::size_t cap) {
  const auto n = c.size();
  std::vector<IndexMor> mors;
  std::vector<std::vector<std::map<Elem, std::size_t>>> lookup(n, std::vector<std::map<Elem, std::size_t>>(n));
  std::vector<Elem> elems;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (auto& e : underlying_set(c.hom[x][y], cap)) {
        lookup[x][y][e] = mors.size();
        mors.push_back({c.objects[x] + "->" + c.objects[y] + ":" + render(c.hom[x][y], e), x, y});
        elems.push_back(e);
      }
  std::vector<std::size_t> ident;
  for (std::size_t x = 0; x < n; ++x) ident.push_back(lookup[x][x].at(identity_in(c, x)));
  return make_index(c.objects, mors, ident, [&](std::size_t v, std::size_t u) {
    const auto x = mors[u].dom, y = mors[u].cod, z = mors[v].cod;
    return lookup[x][z].at(compose_in(c, x, y, z, elems[v], elems[u]));
  });
}

Mor pushforward(const VCat& x, std::size_t a, std::size_t b, const Elem& f, std::size_t c) {
  require_elem(x.hom[a][b], f, "pushforward: element not in hom(" + x.objects[a] + "," + x.objects[b] + ")");
  const Obj& hca = x.hom[c][a];
  return compose(x.comp[c][a][b], compose(tensor(point(x.hom[a][b], f), identity(hca)), left_unitor_inv(hca)));
}

Mor pullback_along(const VCat& x, std::size_t a, std::size_t b, const Elem& f, std::size_t c) {
  require_elem(x.hom[a][b], f, "pullback: element not in hom(" + x.objects[a] + "," + x.objects[b] + ")");
  const Obj& hbc = x.hom[b][c];
  return compose(x.comp[a][b][c], compose(tensor(identity(hbc), point(x.hom[a][b], f)), right_unitor_inv(hbc)));
}

bool VFunctor::operator==(const VFunctor& o) const {
  auto same = [](const VCatRef& a, const VCatRef& b) { return a == b || (a && b && *a == *b); };
  return f0 == o.f0 && f1 == o.f1 && same(dom, o.dom) && same(cod, o.cod);
}

VFunctor build_vfunctor(VCatRef dom, VCatRef cod, std::vector<std::size_t> f0, const HomFn& f1) {
  VFunctor f{dom, cod, std::move(f0), {}};
  const auto n = dom->size();
  f.f1.assign(n, std::vector<Mor>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      f.f1[x][y] = from_columns(dom->hom[x][y], cod->hom[f.f0[x]][f.f0[y]],
                                [&](std::size_t k) { return f1(x, y, k); });
  return f;
}

Report validate_vfunctor(const VFunctor& f) {
  Report r;
  const VCat &a = *f.dom, &b = *f.cod;
  const auto n = a.size();
  if (f.f0.size() != n || f.f1.size() != n) {
    r.fail("total tables", "functor object map");
    return r;
  }
  for (std::size_t x = 0; x < n && r; ++x) {
    if (f.f0[x] >= b.size()) r.fail("object map in range", a.objects[x]);
    if (f.f1[x].size() != n) r.fail("total tables", a.objects[x]);
  }
  for (std::size_t x = 0; x < n && r; ++x)
    for (std::size_t y = 0; y < n && r; ++y) {
      const Mor& m = f.f1[x][y];
      if (!same_shape(m.dom, a.hom[x][y]) || !same_shape(m.cod, b.hom[f.f0[x]][f.f0[y]]))
        r.fail("hom map shape", a.objects[x] + "," + a.objects[y]);
      else
        check_mor(m);
    }
  if (!r) return r;
  for (std::size_t x = 0; x < n && r; ++x) {
    const Elem lhs = f(x, x, identity_in(a, x)), rhs = identity_in(b, f.f0[x]);
    if (lhs != rhs) r.fail("functor identity", a.objects[x], render(b.hom[f.f0[x]][f.f0[x]], lhs));
  }
  for (std::size_t x = 0; x < n && r; ++x)
    for (std::size_t y = 0; y < n && r; ++y)
      for (std::size_t z = 0; z < n && r; ++z)
        for (std::size_t g = 0; g < a.hom[y][z].size() && r; ++g)
          for (std::size_t k = 0; k < a.hom[x][y].size() && r; ++k) {
            const Elem eg = basis(a.hom[y][z], g), ek = basis(a.hom[x][y], k);
            const Elem lhs = f(x, z, compose_in(a, x, y, z, eg, ek));
            const Elem rhs = compose_in(b, f.f0[x], f.f0[y], f.f0[z], f(y, z, eg), f(x, y, ek));
            if (lhs != rhs)
              r.fail("functor composition", a.objects[x] + "," + a.objects[y] + "," + a.objects[z] + ":" +
                                                a.hom[y][z].labels[g] + "," + a.hom[x][y].labels[k]);
          }
  return r;
}

VFunctor identity_functor(const VCatRef& c) {
  VFunctor f{c, c, {}, {}};
  const auto n = c->size();
  f.f1.assign(n, std::vector<Mor>(n));
  for (std::size_t x = 0; x < n; ++x) {
    f.f0.push_back(x);
    for (std::size_t y = 0; y < n; ++y) f.f1[x][y] = identity(c->hom[x][y]);
  }
  return f;
}

VFunctor compose_functors(const VFunctor& g, const VFunctor& f) {
  if (!(g.dom == f.cod || *g.dom == *f.cod)) throw Error(Errc::ShapeMismatch, "functors not composable");
  VFunctor h{f.dom, g.cod, {}, {}};
  const auto n = f.dom->size();
  h.f1.assign(n, std::vector<Mor>(n));
  for (std::size_t x = 0; x < n; ++x) {
    h.f0.push_back(g.f0[f.f0[x]]);
    for (std::size_t y = 0; y < n; ++y) h.f1[x][y] = compose(g.f1[f.f0[x]][f.f0[y]], f.f1[x][y]);
  }
  return h;
}

VFunctor op(const VFunctor& f) {
  VFunctor o{share(op(*f.dom)), share(op(*f.cod)), f.f0, f.f1};
  const auto n = f.dom->size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) o.f1[x][y] = f.f1[y][x];
  return o;
}

Report validate_nattrans(const VNatTrans& t) {
  Report r;
  const VFunctor &f = t.src, &g = t.tgt;
  const VCat &a = *f.dom, &b = *f.cod;
  if (!(*f.dom == *g.dom) || !(*f.cod == *g.cod)) {
    r.fail("parallel functors", "natural transformation");
    return r;
  }
  if (t.comp.size() != a.size()) {
    r.fail("total tables", "components");
    return r;
  }
  for (std::size_t x = 0; x < a.size() && r; ++x)
    if (!elem_in(b.hom[f.f0[x]][g.f0[x]], t.comp[x])) r.fail("component in hom", a.objects[x]);
  for (std::size_t x = 0; x < a.size() && r; ++x)
    for (std::size_t y = 0; y < a.size() && r; ++y)
      for (std::size_t k = 0; k < a.hom[x][y].size() && r; ++k) {
        const Elem e = basis(a.hom[x][y], k);
        const Elem lhs = compose_in(b, f.f0[x], g.f0[x], g.f0[y], g(x, y, e), t.comp[x]);
        const Elem rhs = compose_in(b, f.f0[x], f.f0[y], g.f0[y], t.comp[y], f(x, y, e));
        if (lhs != rhs)
          r.fail("naturality", a.objects[x] + "," + a.objects[y] + ":" + a.hom[x][y].labels[k],
                 render(b.hom[f.f0[x]][g.f0[y]], lhs) + " vs " + render(b.hom[f.f0[x]][g.f0[y]], rhs));
      }
  return r;
}

VNatTrans identity_nat(const VFunctor& f) {
  VNatTrans t{f, f, {}};
  for (std::size_t x = 0; x < f.dom->size(); ++x) t.comp.push_back(identity_in(*f.cod, f.f0[x]));
  return t;
}

VNatTrans vertical(const VNatTrans& psi, const VNatTrans& phi) {
  if (!(psi.src == phi.tgt)) throw Error(Errc::ShapeMismatch, "vertical composition: functors differ");
  VNatTrans t{phi.src, psi.tgt, {}};
  const VCat& b = *phi.src.cod;
  for (std::size_t x = 0; x < phi.comp.size(); ++x)
    t.comp.push_back(compose_in(b, phi.src.f0[x], phi.tgt.f0[x], psi.tgt.f0[x], psi.comp[x], phi.comp[x]));
  return t;
}

VNatTrans whisker_left(const VFunctor& g, const VNatTrans& phi) {
  VNatTrans t{compose_functors(g, phi.src), compose_functors(g, phi.tgt), {}};
  for (std::size_t x = 0; x < phi.comp.size(); ++x) t.comp.push_back(g(phi.src.f0[x], phi.tgt.f0[x], phi.comp[x]));
  return t;
}

VNatTrans whisker_right(const VNatTrans& phi, const VFunctor& h) {
  VNatTrans t{compose_functors(phi.src, h), compose_functors(phi.tgt, h), {}};
  for (std::size_t x = 0; x < h.dom->size(); ++x) t.comp.push_back(phi.comp[h.f0[x]]);
  return t;
}

VNatTrans horizontal(const VNatTrans& psi, const VNatTrans& phi) {
  return vertical(whisker_right(psi, phi.tgt), whisker_left(psi.src, phi));
}

VNatTrans op(const VNatTrans& t) { return VNatTrans{op(t.tgt), op(t.src), t.comp}; }

std::optional<Elem> inverse_in(const VCat& c, std::size_t x, std::size_t y, const Elem& f) {
  if (c.base.is_set()) {
    for (std::size_t k = 0; k < c.hom[y][x].size(); ++k) {
      const Elem g = basis(c.hom[y][x], k);
      if (compose_in(c, x, y, x, g, f) == identity_in(c, x) && compose_in(c, y, x, y, f, g) == identity_in(c, y))
        return g;
    }
    return std::nullopt;
  }
  // A left inverse of an invertible element is its inverse.
  const auto g = lift(pullback_along(c, x, y, f, x), identity_in(c, x));
  if (!g || compose_in(c, y, x, y, f, *g) != identity_in(c, y)) return std::nullopt;
  return g;
}

bool is_invertible(const VNatTrans& t) {
  const VCat& b = *t.src.cod;
  for (std::size_t x = 0; x < t.comp.size(); ++x)
    if (!inverse_in(b, t.src.f0[x], t.tgt.f0[x], t.comp[x])) return false;
  return true;
}

VNatTrans inverse(const VNatTrans& t) {
  const VCat& b = *t.src.cod;
  VNatTrans o{t.tgt, t.src, {}};
  for (std::size_t x = 0; x < t.comp.size(); ++x) {
    auto g = inverse_in(b, t.src.f0[x], t.tgt.f0[x], t.comp[x]);
    if (!g) throw Error(Errc::NotIso, "component at " + t.src.dom->objects[x] + " is not invertible");
    o.comp.push_back(std::move(*g));
  }
  return o;
}

namespace {

struct FunctorSearch {
  const VCat& a;
  const VCat& b;
  std::size_t cap;
  std::vector<std::size_t> f0;
  // Hom elements of a in a fixed order, with their images once assigned.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> slots;
  std::vector<std::vector<std::vector<long>>> image;  // image[x][y][k] = index in b.hom, or -1
  std::vector<VFunctor> out;
  VCatRef dom, cod;

  bool consistent(std::size_t x, std::size_t y, std::size_t k) const {
    const auto fx = f0[x], fy = f0[y];
    const Elem e = basis(a.hom[x][y], k);
    const auto img = static_cast<std::size_t>(image[x][y][k]);
    if (x == y && e == identity_in(a, x) && basis(b.hom[fx][fy], img) != identity_in(b, fx)) return false;
    const auto n = a.size();
    auto val = [&](std::size_t p, std::size_t q, std::size_t m) { return image[p][q][m]; };
    // e as the first factor (e : x -> y after g : w -> x) and as the second (h : y -> z after e).
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t g = 0; g < a.hom[w][x].size(); ++g) {
        if (val(w, x, g) < 0) continue;
        const auto r = as_index(compose_in(a, w, x, y, e, basis(a.hom[w][x], g)));
        if (val(w, y, r) < 0) continue;
        const auto lhs = as_index(compose_in(b, f0[w], fx, fy, basis(b.hom[fx][fy], img),
                                             basis(b.hom[f0[w]][fx], static_cast<std::size_t>(val(w, x, g)))));
        if (lhs != static_cast<std::size_t>(val(w, y, r))) return false;
      }
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t h = 0; h < a.hom[y][z].size(); ++h) {
        if (val(y, z, h) < 0) continue;
        const auto r = as_index(compose_in(a, x, y, z, basis(a.hom[y][z], h), e));
        if (val(x, z, r) < 0) continue;
        const auto lhs = as_index(compose_in(b, fx, fy, f0[z], basis(b.hom[fy][f0[z]], static_cast<std::size_t>(val(y, z, h))),
                                             basis(b.hom[fx][fy], img)));
        if (lhs != static_cast<std::size_t>(val(x, z, r))) return false;
      }
    // Composites landing on e itself.
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t g = 0; g < a.hom[w][y].size(); ++g)
        for (std::size_t f = 0; f < a.hom[x][w].size(); ++f) {
          if (as_index(compose_in(a, x, w, y, basis(a.hom[w][y], g), basis(a.hom[x][w], f))) != k) continue;
          if (val(w, y, g) < 0 || val(x, w, f) < 0) continue;
          const auto lhs = as_index(compose_in(b, fx, f0[w], fy, basis(b.hom[f0[w]][fy], static_cast<std::size_t>(val(w, y, g))),
                                               basis(b.hom[fx][f0[w]], static_cast<std::size_t>(val(x, w, f)))));
          if (lhs != img) return false;
        }
    return true;
  }

  void assign(std::size_t s) {
    if (s == slots.size()) {
      if (out.size() >= cap) throw Error(Errc::SizeCap, "functor enumeration exceeds cap " + std::to_string(cap));
      out.push_back(build_vfunctor(dom, cod, f0, [&](std::size_t x, std::size_t y, std::size_t k) {
        return basis(b.hom[f0[x]][f0[y]], static_cast<std::size_t>(image[x][y][k]));
      }));
      return;
    }
    const auto [x, y, k] = slots[s];
    for (std::size_t m = 0; m < b.hom[f0[x]][f0[y]].size(); ++m) {
      image[x][y][k] = static_cast<long>(m);
      if (consistent(x, y, k)) assign(s + 1);
    }
    image[x][y][k] = -1;
  }

  void objects(std::size_t x) {
    if (x == a.size()) {
      assign(0);
      return;
    }
    for (std::size_t y = 0; y < b.size(); ++y) {
      f0[x] = y;
      objects(x + 1);
    }
  }
};

}  // namespace

std::vector<VFunctor> enumerate_functors(const VCatRef& dom, const VCatRef& cod, std::size_t cap) {
  if (!dom->base.is_set() || !cod->base.is_set()) throw Error(Errc::Unsupported, "functor enumeration needs finite sets");
  FunctorSearch s{*dom, *cod, cap, std::vector<std::size_t>(dom->size()), {}, {}, {}, dom, cod};
  const auto n = dom->size();
  s.image.assign(n, std::vector<std::vector<long>>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      s.image[x][y].assign(dom->hom[x][y].size(), -1);
      for (std::size_t k = 0; k < dom->hom[x][y].size(); ++k) s.slots.emplace_back(x, y, k);
    }
  s.objects(0);
  return std::move(s.out);
}

std::vector<VNatTrans> enumerate_nattrans(const VFunctor& f, const VFunctor& g, std::size_t cap) {
  const VCat &a = *f.dom, &b = *f.cod;
  if (!b.base.is_set()) throw Error(Errc::Unsupported, "transformation enumeration needs finite sets");
  std::vector<VNatTrans> out;
  std::vector<Elem> comp(a.size());
  std::vector<bool> set(a.size(), false);
  auto natural = [&](std::size_t x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (!set[y]) continue;
      for (std::size_t k = 0; k < a.hom[x][y].size(); ++k) {
        const Elem e = basis(a.hom[x][y], k);
        if (compose_in(b, f.f0[x], g.f0[x], g.f0[y], g(x, y, e), comp[x]) !=
            compose_in(b, f.f0[x], f.f0[y], g.f0[y], comp[y], f(x, y, e)))
          return false;
      }
      for (std::size_t k = 0; k < a.hom[y][x].size(); ++k) {
        const Elem e = basis(a.hom[y][x], k);
        if (compose_in(b, f.f0[y], g.f0[y], g.f0[x], g(y, x, e), comp[y]) !=
            compose_in(b, f.f0[y], f.f0[x], g.f0[x], comp[x], f(y, x, e)))
          return false;
      }
    }
    return true;
  };
  std::function<void(std::size_t)> go = [&](std::size_t x) {
    if (x == a.size()) {
      if (out.size() >= cap) throw Error(Errc::SizeCap, "transformation enumeration exceeds cap " + std::to_string(cap));
      out.push_back(VNatTrans{f, g, comp});
      return;
    }
    const Obj& h = b.hom[f.f0[x]][g.f0[x]];
    for (std::size_t m = 0; m < h.size(); ++m) {
      comp[x] = basis(h, m);
      set[x] = true;
      if (natural(x)) go(x + 1);
      set[x] = false;
    }
  };
  go(0);
  return out;
}

}  // namespace catkit
