// Hand-rolled random generators for small categories, diagrams and comodules.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "catkit/catalog.hpp"
#include "catkit/comodule.hpp"
#include "catkit/diagram.hpp"

namespace gen {

using namespace catkit;

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng); }
  bool coin() { return below(2) == 1; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), eng);
  }
};

inline Elem idx(std::size_t k) { return Elem{k}; }

// One-object category on elements 0..n-1 with 0 the identity; mul(g, f) = g o f.
inline VCatRef monoid(std::vector<std::string> names, std::function<std::size_t(std::size_t, std::size_t)> mul) {
  return share(build_vcat(
      Base::finset(), {"*"}, {{finset_obj(std::move(names))}},
      [mul](std::size_t, std::size_t, std::size_t, std::size_t g, std::size_t f) { return idx(mul(g, f)); },
      [](std::size_t) { return idx(0); }));
}

inline std::vector<VCatRef> make_monoid_catalog() {
  std::vector<VCatRef> out;
  out.push_back(catalog::cyclic_group(1));
  out.push_back(catalog::cyclic_group(2));
  out.push_back(catalog::cyclic_group(3));
  // {1, e} with e e = e
  out.push_back(monoid({"1", "e"}, [](std::size_t g, std::size_t f) { return g == 0 ? f : g; }));
  // {1, x, 0} with x x = 0
  out.push_back(monoid({"1", "x", "0"}, [](std::size_t g, std::size_t f) {
    if (g == 0) return f;
    if (f == 0) return g;
    return std::size_t{2};
  }));
  // {1, a, b} with s t = s for s, t in {a, b}
  out.push_back(monoid({"1", "a", "b"}, [](std::size_t g, std::size_t f) { return g == 0 ? f : g; }));
  return out;
}

inline const std::vector<VCatRef>& monoid_catalog() {
  static const std::vector<VCatRef> all = make_monoid_catalog();
  return all;
}

// A random partial order on n points, as a thin category.
inline VCatRef random_poset(Rng& rng, std::size_t n) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) le[x][x] = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (rng.coin()) le[x][y] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (le[x][k] && le[k][y]) le[x][y] = true;
  std::vector<std::string> objs;
  for (std::size_t k = 0; k < n; ++k) objs.push_back("p" + std::to_string(k));
  std::vector<std::vector<Obj>> hom(n, std::vector<Obj>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      hom[x][y] = finset_obj(le[x][y] ? std::vector<std::string>{"<="} : std::vector<std::string>{});
  return share(build_vcat(
      Base::finset(), objs, hom, [](std::size_t, std::size_t, std::size_t, std::size_t, std::size_t) { return idx(0); },
      [](std::size_t) { return idx(0); }));
}

inline VCatRef disjoint_union(const VCat& a, const VCat& b) {
  const auto n = a.size() + b.size();
  std::vector<std::string> objs;
  for (const auto& o : a.objects) objs.push_back("l." + o);
  for (const auto& o : b.objects) objs.push_back("r." + o);
  auto side = [&](std::size_t x) { return x < a.size() ? std::pair{&a, x} : std::pair{&b, x - a.size()}; };
  std::vector<std::vector<Obj>> hom(n, std::vector<Obj>(n, finset_obj({})));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto [cx, lx] = side(x);
      auto [cy, ly] = side(y);
      if (cx == cy) hom[x][y] = cx->hom[lx][ly];
    }
  return share(build_vcat(
      Base::finset(), objs, hom,
      [&](std::size_t x, std::size_t y, std::size_t z, std::size_t g, std::size_t f) {
        auto [c, lx] = side(x);
        return compose_in(*c, lx, side(y).second, side(z).second, idx(g), idx(f));
      },
      [&](std::size_t x) { return identity_in(*side(x).first, side(x).second); }));
}

// A finite-set category with at most three objects and homs of size at most three.
inline VCatRef random_finset_category(Rng& rng) {
  const auto& monoids = monoid_catalog();
  switch (rng.below(4)) {
    case 0:
      return random_poset(rng, 1 + rng.below(3));
    case 1:
      return monoids[rng.below(monoids.size())];
    case 2:
      return disjoint_union(*monoids[rng.below(monoids.size())], *random_poset(rng, 1 + rng.below(2)));
    default:
      return disjoint_union(*monoids[rng.below(monoids.size())], *monoids[rng.below(monoids.size())]);
  }
}

// a -> b -> c with the composite.
inline IndexCat chain3_index() {
  return make_index({"a", "b", "c"}, {{"1a", 0, 0}, {"1b", 1, 1}, {"1c", 2, 2}, {"u", 0, 1}, {"v", 1, 2}, {"vu", 0, 2}},
                    {0, 1, 2}, [](std::size_t v, std::size_t u) -> std::size_t {
                      if (v < 3) return u;
                      if (u < 3) return v;
                      return 5;
                    });
}

// a <- c -> b
inline IndexCat span_index() {
  return make_index({"a", "b", "c"}, {{"1a", 0, 0}, {"1b", 1, 1}, {"1c", 2, 2}, {"l", 2, 0}, {"r", 2, 1}}, {0, 1, 2},
                    [](std::size_t v, std::size_t u) { return v < 3 ? u : v; });
}

// {1, e} with e e = e
inline IndexCat idempotent_index() {
  return make_index({"*"}, {{"1", 0, 0}, {"e", 0, 0}}, {0},
                    [](std::size_t v, std::size_t u) { return v == 0 ? u : v; });
}

inline std::vector<IndexCat> index_catalog() {
  return {terminal_index(), arrow_index(), chain3_index(), span_index(),
          cyclic_index(2),  cyclic_index(3), idempotent_index()};
}

struct FunctorPool {
  std::map<std::pair<VCatRef, VCatRef>, std::vector<VFunctor>> cache;
  const std::vector<VFunctor>& between(const VCatRef& a, const VCatRef& b) {
    auto& v = cache[{a, b}];
    if (v.empty()) v = enumerate_functors(a, b, 100000);
    return v;
  }
};

inline bool is_identity_mor(const IndexCat& ic, std::size_t u) {
  return std::find(ic.ident.begin(), ic.ident.end(), u) != ic.ident.end();
}

// Backtracking search for X(u) on every non-identity u, in a random candidate order. When
// `strict`, composites must be preserved on the nose.
inline bool assign_functors(Rng& rng, const IndexCat& ic, const std::vector<VCatRef>& cats, FunctorPool& pool,
                            bool strict, std::vector<VFunctor>& func) {
  const auto n = ic.mors.size();
  func.assign(n, VFunctor{});
  std::vector<bool> set(n, false);
  for (std::size_t i = 0; i < ic.objects.size(); ++i) {
    func[ic.ident[i]] = identity_functor(cats[i]);
    set[ic.ident[i]] = true;
  }
  std::vector<std::size_t> todo;
  for (std::size_t u = 0; u < n; ++u)
    if (!set[u]) todo.push_back(u);
  auto consistent = [&](std::size_t u) {
    if (!strict) return true;
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        if (ic.comp[v][w] < 0 || !set[v] || !set[w] || !set[static_cast<std::size_t>(ic.comp[v][w])]) continue;
        if (v != u && w != u && static_cast<std::size_t>(ic.comp[v][w]) != u) continue;
        if (!(compose_functors(func[v], func[w]) == func[static_cast<std::size_t>(ic.comp[v][w])])) return false;
      }
    return true;
  };
  std::size_t steps = 0;
  std::function<bool(std::size_t)> go = [&](std::size_t k) {
    if (k == todo.size()) return true;
    if (++steps > 2000) return false;
    const auto u = todo[k];
    const auto& cands = pool.between(cats[ic.mors[u].dom], cats[ic.mors[u].cod]);
    std::vector<std::size_t> perm(cands.size());
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    for (auto c : perm) {
      func[u] = cands[c];
      set[u] = true;
      if (consistent(u) && go(k + 1)) return true;
      set[u] = false;
    }
    return false;
  };
  return go(0);
}

inline std::vector<VCatRef> random_cats(Rng& rng, const IndexCat& ic) {
  std::vector<VCatRef> cats;
  for (std::size_t i = 0; i < ic.objects.size(); ++i) cats.push_back(random_finset_category(rng));
  return cats;
}

inline OplaxDiagram random_strict(Rng& rng, const IndexCat& ic, FunctorPool& pool) {
  for (;;) {
    auto cats = random_cats(rng, ic);
    std::vector<VFunctor> func;
    if (assign_functors(rng, ic, cats, pool, true, func)) return strict_diagram(ic, cats, func);
  }
}

// Normal oplax diagram with random functors and theta; gives up after `tries` attempts.
inline std::optional<OplaxDiagram> random_oplax(Rng& rng, const IndexCat& ic, FunctorPool& pool, int tries = 30) {
  for (int t = 0; t < tries; ++t) {
    auto cats = random_cats(rng, ic);
    std::vector<VFunctor> func;
    if (!assign_functors(rng, ic, cats, pool, false, func)) continue;
    OplaxDiagram d;
    d.index = ic;
    d.base = Base::finset();
    d.cats = cats;
    d.func = func;
    for (std::size_t i = 0; i < ic.objects.size(); ++i) d.eta.push_back(identity_nat(func[ic.ident[i]]));
    bool ok = true;
    for (auto [v, u] : composable_pairs(ic)) {
      const auto vu = ic.compose(v, u);
      const VFunctor both = compose_functors(func[v], func[u]);
      if (is_identity_mor(ic, v) || is_identity_mor(ic, u)) {
        if (!(func[vu] == both)) ok = false;
        else d.theta.emplace(MorPair{v, u}, identity_nat(both));
        continue;
      }
      auto cands = enumerate_nattrans(func[vu], both, 100000);
      if (cands.empty()) {
        ok = false;
        break;
      }
      d.theta.emplace(MorPair{v, u}, cands[rng.below(cands.size())]);
    }
    if (ok && validate_oplax(d)) return d;
  }
  return std::nullopt;
}

struct Linearizer {
  std::uint32_t p;
  std::map<const VCat*, VCatRef> cats;

  VCatRef cat(const VCatRef& c) {
    auto& l = cats[c.get()];
    if (!l) l = catalog::linearize(*c, p);
    return l;
  }
  VFunctor functor(const VFunctor& f) {
    auto d = cat(f.dom), c = cat(f.cod);
    return build_vfunctor(d, c, f.f0, [&](std::size_t x, std::size_t y, std::size_t k) {
      return basis(c->hom[f.f0[x]][f.f0[y]], f.f1[x][y].map[k]);
    });
  }
  VNatTrans nat(const VNatTrans& t) {
    VNatTrans out{functor(t.src), functor(t.tgt), {}};
    for (std::size_t a = 0; a < t.comp.size(); ++a)
      out.comp.push_back(basis(out.src.cod->hom[t.src.f0[a]][t.tgt.f0[a]], as_index(t.comp[a])));
    return out;
  }
  OplaxDiagram diagram(const OplaxDiagram& x) {
    OplaxDiagram d;
    d.index = x.index;
    d.base = Base::finvect(p);
    for (const auto& c : x.cats) d.cats.push_back(cat(c));
    for (const auto& f : x.func) d.func.push_back(functor(f));
    for (const auto& e : x.eta) d.eta.push_back(nat(e));
    for (const auto& [k, t] : x.theta) d.theta.emplace(k, nat(t));
    return d;
  }
};

// theta'_{v,u} = l_v l_u / l_{vu} theta_{v,u} for random nonzero scalars with l = 1 on identities.
inline OplaxDiagram coboundary_twist(Rng& rng, const OplaxDiagram& x) {
  const auto p = x.base.p;
  std::vector<std::uint32_t> l(x.index.mors.size(), 1);
  for (std::size_t u = 0; u < l.size(); ++u)
    if (!is_identity_mor(x.index, u)) l[u] = static_cast<std::uint32_t>(1 + rng.below(p - 1));
  OplaxDiagram d = x;
  for (auto& [k, t] : d.theta) {
    const auto [v, u] = k;
    const auto c = fp::mul(fp::mul(l[v], l[u], p), fp::inv(l[x.index.compose(v, u)], p), p);
    for (auto& e : t.comp) e = scale(d.base, c, e);
  }
  return d;
}

// A diagram in the ranges of the randomized criteria: strict or oplax, over finite sets or
// linearized over F_2 or F_3.
struct Instance {
  OplaxRef diagram;
  std::string shape;  // index, strictness and base, for failure messages
};

inline Instance random_instance(Rng& rng, FunctorPool& pool) {
  const auto idxs = index_catalog();
  const auto k = rng.below(idxs.size());
  const IndexCat& ic = idxs[k];
  std::string shape = "index#" + std::to_string(k);
  OplaxDiagram d;
  if (rng.coin()) {
    auto o = random_oplax(rng, ic, pool);
    d = o ? *o : random_strict(rng, ic, pool);
    shape += o ? " oplax" : " strict";
  } else {
    d = random_strict(rng, ic, pool);
    shape += " strict";
  }
  switch (rng.below(3)) {
    case 0:
      shape += " finset";
      break;
    case 1:
      d = Linearizer{2, {}}.diagram(d);
      shape += " F2";
      break;
    default:
      d = coboundary_twist(rng, Linearizer{3, {}}.diagram(d));
      shape += " F3";
  }
  return {share(std::move(d)), shape};
}

// Replaces one component of a theta forced by the unit laws; falls back to an element outside
// the hom when no other element exists.
struct Mutation {
  OplaxDiagram diagram;
  MorPair slot;
  bool well_typed = true;
};

inline Mutation corrupt_theta(Rng& rng, const OplaxDiagram& x) {
  std::vector<MorPair> slots;
  for (const auto& [k, t] : x.theta)
    if ((is_identity_mor(x.index, k.first) || is_identity_mor(x.index, k.second)) && !t.comp.empty()) slots.push_back(k);
  rng.shuffle(slots);
  for (const auto& k : slots) {
    const auto& t = x.theta.at(k);
    for (std::size_t a = 0; a < t.comp.size(); ++a) {
      const Obj& h = t.src.cod->hom[t.src.f0[a]][t.tgt.f0[a]];
      std::optional<Elem> alt;
      if (x.base.is_set()) {
        if (h.size() > 1) alt = idx((as_index(t.comp[a]) + 1 + rng.below(h.size() - 1)) % h.size());
      } else if (h.size() > 0) {
        alt = add(x.base, t.comp[a], basis(h, rng.below(h.size())));
      }
      if (!alt) continue;
      Mutation m{x, k, true};
      m.diagram.theta.at(k).comp[a] = *alt;
      return m;
    }
  }
  if (slots.empty()) throw std::logic_error("no theta slot forced by the unit laws");
  const auto k = slots.front();
  Mutation m{x, k, false};
  const auto& t = x.theta.at(k);
  const Obj& h = t.src.cod->hom[t.src.f0[0]][t.tgt.f0[0]];
  m.diagram.theta.at(k).comp[0] = x.base.is_set() ? idx(h.size()) : Elem{Vec(h.size() + 1, 1)};
  return m;
}

// A random direct-sum decomposition of F_p^n into |S| tagged parts, some possibly zero.
inline Decomposition random_decomposition(Rng& rng, std::uint32_t p, std::size_t n, std::size_t s) {
  Vec m(n * n);
  for (;;) {
    for (auto& e : m) e = static_cast<std::uint32_t>(rng.below(p));
    if (linalg::rank(m, n, n, p) == n) break;
  }
  std::vector<std::vector<std::size_t>> cols(s);
  for (std::size_t c = 0; c < n; ++c) cols[rng.below(s)].push_back(c);
  const Obj total = finvect_obj(p, n);
  Decomposition d{total, {}, {}};
  for (std::size_t t = 0; t < s; ++t) {
    d.tags.push_back("s" + std::to_string(t));
    const Obj part = finvect_obj(p, cols[t].size());
    d.parts.push_back({part, from_columns(part, total, [&](std::size_t k) {
                         Vec v(n);
                         for (std::size_t r = 0; r < n; ++r) v[r] = m[r * n + cols[t][k]];
                         return Elem{v};
                       })});
  }
  return d;
}

}  // namespace gen
