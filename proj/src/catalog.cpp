#include "catkit/catalog.hpp"

namespace catkit::catalog {

VCatRef cyclic_group(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t k = 0; k < n; ++k) l.push_back("h" + std::to_string(k));
  return share(build_vcat(
      Base::finset(), {"*"}, {{finset_obj(l)}},
      [n](std::size_t, std::size_t, std::size_t, std::size_t g, std::size_t f) { return Elem{(g + f) % n}; },
      [](std::size_t) { return Elem{std::size_t{0}}; }));
}

VCatRef chain_poset(std::size_t n) {
  std::vector<std::string> objs;
  for (std::size_t k = 0; k < n; ++k) objs.push_back(std::to_string(k));
  std::vector<std::vector<Obj>> hom(n, std::vector<Obj>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) hom[x][y] = finset_obj(x <= y ? std::vector<std::string>{"<="} : std::vector<std::string>{});
  return share(build_vcat(
      Base::finset(), objs, hom, [](std::size_t, std::size_t, std::size_t, std::size_t, std::size_t) { return Elem{std::size_t{0}}; },
      [](std::size_t) { return Elem{std::size_t{0}}; }));
}

VCatRef discrete(std::size_t n) {
  std::vector<std::string> objs;
  for (std::size_t k = 0; k < n; ++k) objs.push_back("d" + std::to_string(k));
  std::vector<std::vector<Obj>> hom(n, std::vector<Obj>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) hom[x][y] = finset_obj(x == y ? std::vector<std::string>{"1"} : std::vector<std::string>{});
  return share(build_vcat(
      Base::finset(), objs, hom, [](std::size_t, std::size_t, std::size_t, std::size_t, std::size_t) { return Elem{std::size_t{0}}; },
      [](std::size_t) { return Elem{std::size_t{0}}; }));
}

VCatRef linearize(const VCat& c, std::uint32_t p) {
  const Base b = Base::finvect(p);
  const auto n = c.size();
  std::vector<std::vector<Obj>> hom(n, std::vector<Obj>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) hom[x][y] = finvect_obj(p, c.hom[x][y].labels);
  return share(build_vcat(
      b, c.objects, hom,
      [&](std::size_t x, std::size_t y, std::size_t z, std::size_t g, std::size_t f) {
        return basis(hom[x][z], as_index(compose_in(c, x, y, z, Elem{g}, Elem{f})));
      },
      [&](std::size_t x) { return basis(hom[x][x], as_index(identity_in(c, x))); }));
}

GradedRef group_algebra(std::uint32_t p, std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t k = 0; k < n; ++k) l.push_back("g" + std::to_string(k));
  const Obj h = finvect_obj(p, l);
  auto cat = share(build_vcat(
      Base::finvect(p), {"*"}, {{h}},
      [&](std::size_t, std::size_t, std::size_t, std::size_t g, std::size_t f) { return basis(h, (g + f) % n); },
      [&](std::size_t) { return basis(h, 0); }));
  return share(make_graded(cat, cyclic_index(n), {0}, [](std::size_t, std::size_t, std::size_t) { return std::size_t{1}; }));
}

OplaxRef z2_on_z3() {
  auto z3 = cyclic_group(3);
  auto inv = build_vfunctor(z3, z3, {0}, [](std::size_t, std::size_t, std::size_t k) { return Elem{(3 - k) % 3}; });
  return share(strict_diagram(cyclic_index(2), {z3}, {identity_functor(z3), inv}));
}

OplaxRef arrow_delta() { return share(diagonal(chain_poset(2), arrow_index())); }

OplaxRef poset_comonad() {
  auto p = chain_poset(2);
  auto t = build_vfunctor(p, p, {0, 0}, [](std::size_t, std::size_t, std::size_t) { return Elem{std::size_t{0}}; });
  OplaxDiagram d;
  d.index = terminal_index();
  d.base = Base::finset();
  d.cats = {p};
  d.func = {t};
  d.eta.push_back(VNatTrans{t, identity_functor(p), {Elem{std::size_t{0}}, Elem{std::size_t{0}}}});
  d.theta.emplace(MorPair{0, 0}, VNatTrans{t, compose_functors(t, t), {Elem{std::size_t{0}}, Elem{std::size_t{0}}}});
  return share(std::move(d));
}

OplaxRef broken_cocycle() {
  auto z2 = cyclic_group(2);
  const IndexCat ic = cyclic_index(3);
  OplaxDiagram d = strict_diagram(ic, {z2}, std::vector<VFunctor>(3, identity_functor(z2)));
  const auto g1 = ic.mor_index("g1");
  d.theta.at({g1, g1}).comp[0] = Elem{std::size_t{1}};
  return share(std::move(d));
}

}  // namespace catkit::catalog
