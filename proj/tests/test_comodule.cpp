#include <catch2/catch_amalgamated.hpp>

#include "catkit/catalog.hpp"
#include "catkit/comodule.hpp"
#include "support/generators.hpp"

using namespace catkit;

TEST_CASE("projectors of a decomposition are orthogonal idempotents summing to one") {
  gen::Rng rng(20);
  for (int run = 0; run < 40; ++run) {
    const std::uint32_t p = run % 3 == 0 ? 2 : (run % 3 == 1 ? 3 : 5);
    const auto d = gen::random_decomposition(rng, p, 1 + rng.below(5), 1 + rng.below(4));
    const auto m = comodule_from_decomposition(d);
    REQUIRE(validate_comodule(m));
    const auto ps = projectors(m);
    Mor sum = zero_mor(d.total, d.total);
    for (std::size_t s = 0; s < ps.size(); ++s) {
      for (std::size_t t = 0; t < ps.size(); ++t)
        CHECK(compose(ps[s], ps[t]) == (s == t ? ps[s] : zero_mor(d.total, d.total)));
      for (std::size_t k = 0; k < sum.mat.size(); ++k) sum.mat[k] = fp::add(sum.mat[k], ps[s].mat[k], p);
      CHECK(linalg::rank(ps[s].mat, d.total.size(), d.total.size(), p) == d.parts[s].obj.size());
    }
    CHECK(sum == identity(d.total));
  }
}

TEST_CASE("finite-set comodules are partitions") {
  const Obj x = finset_obj({"a", "b", "c", "d"});
  auto over = free_on_set(Base::finset(), {"s", "t"});
  // a, c in s; b, d in t
  Mor co = from_columns(x, tensor(x, over.carrier), [&](std::size_t k) { return Elem{k * 2 + k % 2}; });
  RightComodule m{x, over, co};
  REQUIRE(validate_comodule(m));
  const auto d = decomposition_from_comodule(m);
  REQUIRE(d.parts.size() == 2);
  CHECK(d.parts[0].obj.labels == std::vector<std::string>{"a", "c"});
  CHECK(d.parts[1].obj.labels == std::vector<std::string>{"b", "d"});
  CHECK(comodule_from_decomposition(d).coaction == co);
}

TEST_CASE("a non-counital coaction is rejected") {
  const Obj x = finvect_obj(2, 2);
  auto over = free_on_set(Base::finvect(2), {"s", "t"});
  // e0 |-> e0 (x) (s + t) is not counital.
  Mor co = from_columns(x, tensor(x, over.carrier), [&](std::size_t k) {
    Vec v(4, 0);
    v[k * 2] = 1;
    if (k == 0) v[1] = 1;
    return Elem{v};
  });
  RightComodule m{x, over, co};
  CHECK_FALSE(validate_comodule(m));
  CHECK_THROWS_AS(decomposition_from_comodule(m), Error);
}

TEST_CASE("parts that do not span are rejected") {
  Decomposition d{finvect_obj(2, 2), {"s"}, {}};
  const Obj one = finvect_obj(2, 1);
  d.parts.push_back({one, from_columns(one, d.total, [](std::size_t) { return Elem{Vec{1, 1}}; })});
  CHECK_THROWS_AS(comodule_from_decomposition(d), Error);
}

TEST_CASE("cotensor with the regular comodule recovers the comodule") {
  gen::Rng rng(21);
  for (int run = 0; run < 25; ++run) {
    const auto d = gen::random_decomposition(rng, 3, 1 + rng.below(4), 1 + rng.below(3));
    const auto m = comodule_from_decomposition(d);
    const LeftComodule c{m.over.carrier, m.over, m.over.delta};
    REQUIRE(validate_comodule(c));
    CHECK(cotensor(m, c).obj.size() == d.total.size());
  }
}

TEST_CASE("group algebra gradings") {
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
      auto g = catalog::group_algebra(p, n);
      CHECK(validate_grading(*g));
      for (std::size_t k = 0; k < n; ++k) CHECK(g->tag_of(0, 0, k) == k);
      const GradedVCat o = op(*g);
      CHECK(validate_grading(o));
      CHECK(validate_vcat(*o.cat));
    }
}

TEST_CASE("gradings and functors to the free category correspond") {
  for (const auto& i : gen::index_catalog()) {
    const auto f = free_graded(i, Base::finset());
    REQUIRE(validate_grading(f));
    auto free_i = share(free_vcat(i, Base::finset()));
    const VFunctor p = functor_from_grading(f, free_i);
    CHECK(validate_vfunctor(p));
    const auto back = grading_from_functor(p, i);
    CHECK(back.degree == f.degree);
    for (std::size_t x = 0; x < f.cat->size(); ++x)
      for (std::size_t y = 0; y < f.cat->size(); ++y)
        for (std::size_t k = 0; k < f.cat->hom[x][y].size(); ++k) CHECK(back.tag_of(x, y, k) == f.tag_of(x, y, k));
  }
}

TEST_CASE("a grading whose composition leaves its degree is caught") {
  // F2[Z/2] with basis listed as g1, g0, so contiguous blocks put g1 in degree g0.
  const Obj h = finvect_obj(2, {"g1", "g0"});
  auto cat = share(build_vcat(
      Base::finvect(2), {"*"}, {{h}},
      [&](std::size_t, std::size_t, std::size_t, std::size_t g, std::size_t f) { return basis(h, (g + f) % 2 == 0 ? 1 : 0); },
      [&](std::size_t) { return basis(h, 1); }));
  REQUIRE(validate_vcat(*cat));
  const auto bad = make_graded(cat, cyclic_index(2), {0}, [](std::size_t, std::size_t, std::size_t) { return std::size_t{1}; });
  CHECK_FALSE(validate_grading(bad));
}

TEST_CASE("identity and composite graded morphisms") {
  auto g = catalog::group_algebra(3, 3);
  const auto id = identity_graded(g);
  CHECK(validate_graded_morphism(id));
  CHECK(same_graded_morphism(compose_graded(id, id), id));
  const auto rid = identity_graded(g, true);
  CHECK(validate_graded_morphism(rid));
}
