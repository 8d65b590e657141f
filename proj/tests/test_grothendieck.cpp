#include <catch2/catch_amalgamated.hpp>

#include "catkit/adjunction.hpp"
#include "catkit/catalog.hpp"
#include "catkit/grothendieck.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace catkit;

TEST_CASE("hom sizes of the Grothendieck construction") {
  gen::Rng rng(40);
  gen::FunctorPool pool;
  for (int run = 0; run < 40; ++run) {
    const auto inst = gen::random_instance(rng, pool);
    const auto& x = *inst.diagram;
    const auto gr = grothendieck(inst.diagram);
    std::size_t objects = 0;
    for (const auto& c : x.cats) objects += c->size();
    REQUIRE(gr.graded->cat->size() == objects);
    for (std::size_t a = 0; a < objects; ++a)
      for (std::size_t b = 0; b < objects; ++b) {
        const auto [i, xa] = gr.objects[a];
        const auto [j, yb] = gr.objects[b];
        CHECK(gr.graded->cat->hom[a][b].size() == oracle::gr_hom_size(x, i, xa, j, yb));
        CHECK(gr.graded->degree[a] == i);
      }
  }
}

TEST_CASE("Gr of a diagram over the terminal category is its value") {
  gen::Rng rng(41);
  gen::FunctorPool pool;
  for (int run = 0; run < 15; ++run) {
    const auto x = share(gen::random_strict(rng, terminal_index(), pool));
    CHECK(oracle::tables_equal(*grothendieck(x).graded->cat, *x->cats[0]));
  }
}

TEST_CASE("Gr of Z/2 acting on Z/3 is S3") {
  const auto gr = grothendieck(catalog::z2_on_z3());
  const auto t = oracle::endo_table(*gr.graded->cat, 0);
  CHECK(oracle::find_isomorphism(t, oracle::symmetric_group_3()).has_value());
  // Z/6 is not isomorphic: it is commutative.
  const auto z6 = oracle::endo_table(*catalog::cyclic_group(6), 0);
  CHECK_FALSE(oracle::find_isomorphism(t, z6).has_value());
}

TEST_CASE("a corrupted diagram is refused unless checks are off") {
  auto bad = catalog::broken_cocycle();
  CHECK_THROWS_AS(grothendieck(bad), Error);
  const auto gr = grothendieck(bad, false);
  CHECK_FALSE(validate_vcat(*gr.graded->cat));
}

TEST_CASE("lax diagrams through their opposite") {
  gen::Rng rng(42);
  gen::FunctorPool pool;
  for (int run = 0; run < 15; ++run) {
    const auto x = gen::random_instance(rng, pool).diagram;
    const auto l = share(op(*x));
    const auto gr = grothendieck_lax(l);
    CHECK(gr.lax);
    CHECK(validate_vcat(*gr.graded->cat));
    CHECK(validate_grading(*gr.graded));
  }
}

TEST_CASE("Gr on identities, composites and 2-cells") {
  auto x = catalog::arrow_delta();
  const auto gx = grothendieck(x);
  const auto id = gr_on_morphism(gx, gx, identity_transf(x));
  CHECK(validate_graded_morphism(id));
  CHECK(same_graded_morphism(id, identity_graded(gx.graded)));
  const auto ts = enumerate_left_transfs(x, x, 10000);
  for (const auto& a : ts)
    for (const auto& b : ts) {
      const auto lhs = gr_on_morphism(gx, gx, compose_transfs(a, b));
      const auto rhs = compose_graded(gr_on_morphism(gx, gx, a), gr_on_morphism(gx, gx, b));
      CHECK(same_graded_morphism(lhs, rhs));
    }
  const auto m = gr_on_2morphism(gx, gx, identity_transf_morphism(ts.front()));
  CHECK(validate_graded_2morphism(m));
}

TEST_CASE("projection to the index category") {
  const auto gx = grothendieck(catalog::arrow_delta());
  const auto p = projection_functor(gx);
  CHECK(validate_vfunctor(p));
  for (std::size_t a = 0; a < gx.graded->cat->size(); ++a) CHECK(p.f0[a] == gx.graded->degree[a]);
}

TEST_CASE("F_p-linear constructions match the finite-set ones dimensionwise") {
  gen::Rng rng(43);
  gen::FunctorPool pool;
  for (int run = 0; run < 15; ++run) {
    const auto s = gen::random_strict(rng, gen::chain3_index(), pool);
    const auto set = grothendieck(share(s));
    const auto lin = grothendieck(share(gen::Linearizer{2, {}}.diagram(s)));
    REQUIRE(set.graded->cat->size() == lin.graded->cat->size());
    for (std::size_t a = 0; a < set.graded->cat->size(); ++a)
      for (std::size_t b = 0; b < set.graded->cat->size(); ++b)
        CHECK(set.graded->cat->hom[a][b].size() == lin.graded->cat->hom[a][b].size());
    CHECK(validate_grading(*lin.graded));
  }
}
