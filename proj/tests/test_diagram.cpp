#include <catch2/catch_amalgamated.hpp>

#include "catkit/adjunction.hpp"
#include "catkit/catalog.hpp"
#include "catkit/diagram.hpp"
#include "support/generators.hpp"

using namespace catkit;

TEST_CASE("catalog diagrams") {
  CHECK(validate_oplax(*catalog::z2_on_z3()));
  CHECK(is_strict(*catalog::z2_on_z3()));
  CHECK(validate_oplax(*catalog::arrow_delta()));
  CHECK(validate_oplax(*catalog::poset_comonad()));
  CHECK_FALSE(is_strict(*catalog::poset_comonad()));
}

TEST_CASE("the broken cocycle names its failing triple") {
  const auto r = validate_oplax(*catalog::broken_cocycle());
  REQUIRE_FALSE(r);
  CHECK(r.law == "cocycle");
  CHECK(r.where.find("(g1,g1,g2)") != std::string::npos);
}

TEST_CASE("random strict and oplax diagrams validate") {
  gen::Rng rng(30);
  gen::FunctorPool pool;
  std::size_t oplax = 0;
  for (int run = 0; run < 40; ++run) {
    const auto idx = gen::index_catalog();
    const auto& ic = idx[rng.below(idx.size())];
    const auto s = gen::random_strict(rng, ic, pool);
    CHECK(validate_oplax(s));
    CHECK(is_strict(s));
    if (auto o = gen::random_oplax(rng, ic, pool)) {
      CHECK(validate_oplax(*o));
      oplax += !is_strict(*o);
    }
  }
  CHECK(oplax > 0);
}

TEST_CASE("twisting theta by a coboundary keeps the laws") {
  gen::Rng rng(31);
  gen::FunctorPool pool;
  for (int run = 0; run < 20; ++run) {
    const auto s = gen::random_strict(rng, cyclic_index(3), pool);
    const auto lin = gen::Linearizer{3, {}}.diagram(s);
    REQUIRE(validate_oplax(lin));
    CHECK(validate_oplax(gen::coboundary_twist(rng, lin)));
  }
}

TEST_CASE("every corrupted unit-law theta is rejected") {
  gen::Rng rng(32);
  gen::FunctorPool pool;
  for (int run = 0; run < 40; ++run) {
    const auto inst = gen::random_instance(rng, pool);
    const auto m = gen::corrupt_theta(rng, *inst.diagram);
    CHECK_FALSE(validate_oplax(m.diagram));
  }
}

TEST_CASE("opposites exchange oplax and lax") {
  gen::Rng rng(33);
  gen::FunctorPool pool;
  for (int run = 0; run < 20; ++run) {
    const auto inst = gen::random_instance(rng, pool);
    const LaxDiagram l = op(*inst.diagram);
    CHECK(validate_lax(l));
    const OplaxDiagram back = op(l);
    CHECK(back.index == inst.diagram->index);
    for (std::size_t u = 0; u < back.func.size(); ++u) CHECK(back.func[u] == inst.diagram->func[u]);
    for (const auto& [k, t] : back.theta) CHECK(t == inst.diagram->theta.at(k));
  }
}

TEST_CASE("diagonal diagrams are strict") {
  for (const auto& ic : gen::index_catalog()) {
    const auto d = diagonal(catalog::chain_poset(2), ic);
    CHECK(validate_oplax(d));
    CHECK(is_strict(d));
  }
}

TEST_CASE("composable pairs") {
  CHECK(composable_pairs(arrow_index()).size() == 4);
  CHECK(composable_pairs(cyclic_index(3)).size() == 9);
  CHECK(composable_pairs(gen::chain3_index()).size() == 10);
}

TEST_CASE("identity transformations are units for composition") {
  gen::Rng rng(34);
  gen::FunctorPool pool;
  for (int run = 0; run < 20; ++run) {
    const auto x = gen::random_instance(rng, pool).diagram;
    for (Side side : {Side::left, Side::right}) {
      const auto id = identity_transf(x, side);
      CHECK(validate_transf(id));
      CHECK(same_transf(compose_transfs(id, id), id));
      const auto m = identity_transf_morphism(id);
      CHECK(validate_transf_morphism(m));
    }
    CHECK(validate_transf(op(identity_transf(x))));
  }
}

TEST_CASE("enumerated transformations validate and compose") {
  auto x = catalog::arrow_delta();
  const auto ts = enumerate_left_transfs(x, x, 10000);
  REQUIRE_FALSE(ts.empty());
  for (const auto& t : ts) CHECK(validate_left_transf(t));
  for (const auto& a : ts)
    for (const auto& b : ts) CHECK(validate_transf(compose_transfs(a, b)));
  // Transf(Delta P, Delta P) over the arrow: pairs F(a) => F(b) of monotone maps.
  CHECK(ts.size() == 6);
}

TEST_CASE("a transformation with a wrong square is rejected") {
  auto x = catalog::arrow_delta();
  auto ts = enumerate_left_transfs(x, x, 10000);
  bool rejected = false;
  for (auto t : ts)
    for (std::size_t u = 0; u < t.square.size() && !rejected; ++u)
      for (std::size_t a = 0; a < t.square[u].comp.size() && !rejected; ++a) {
        t.square[u].comp[a] = Elem{std::size_t{7}};
        rejected = !validate_transf(t);
      }
  CHECK(rejected);
}
