#include <catch2/catch_amalgamated.hpp>

#include "catkit/catalog.hpp"
#include "catkit/vcat.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace catkit;

namespace {

// Monoid homomorphisms between multiplication tables, counted by brute force.
std::size_t count_homs(const oracle::Table& a, const oracle::Table& b) {
  std::size_t count = 0;
  std::vector<std::size_t> f(a.size(), 0);
  for (;;) {
    bool ok = f[0] == 0;
    for (std::size_t x = 0; x < a.size() && ok; ++x)
      for (std::size_t y = 0; y < a.size() && ok; ++y) ok = f[a[x][y]] == b[f[x]][f[y]];
    count += ok;
    std::size_t k = 0;
    while (k < f.size() && ++f[k] == b.size()) f[k++] = 0;
    if (k == f.size()) return count;
  }
}

}  // namespace

TEST_CASE("generated categories satisfy the category laws") {
  gen::Rng rng(10);
  for (int run = 0; run < 60; ++run) {
    auto c = gen::random_finset_category(rng);
    REQUIRE(validate_vcat(*c));
    CHECK(validate_vcat(*catalog::linearize(*c, 2)));
    CHECK(validate_vcat(*catalog::linearize(*c, 3)));
    CHECK(op(op(*c)) == *c);
    CHECK(validate_vcat(op(*c)));
  }
}

TEST_CASE("built-in categories") {
  CHECK(validate_vcat(unit_vcat(Base::finvect(2))));
  CHECK(validate_vcat(empty_vcat(Base::finset())));
  for (const auto& i : gen::index_catalog()) {
    CHECK(validate_index(i));
    const auto f = free_vcat(i, Base::finvect(3));
    CHECK(validate_vcat(f));
    CHECK(f.size() == i.objects.size());
  }
  auto t = tensor_vcats(*catalog::chain_poset(2), *catalog::cyclic_group(2));
  CHECK(validate_vcat(t));
  CHECK(t.size() == 2);
  CHECK(t.hom[0][1].size() == 2);
}

TEST_CASE("a corrupted composition table is caught") {
  VCat c = *catalog::cyclic_group(3);
  c.comp[0][0][0].map[1 * 3 + 1] = 0;  // h1 h1 = h0 instead of h2
  CHECK_FALSE(validate_vcat(c));
  VCat d = *catalog::cyclic_group(3);
  d.id[0].map[0] = 1;
  const auto r = validate_vcat(d);
  CHECK_FALSE(r);
}

TEST_CASE("same_tables ignores labels only") {
  VCat a = *catalog::cyclic_group(3);
  VCat b = a;
  b.objects = {"other"};
  b.hom[0][0].labels = {"x", "y", "z"};
  CHECK(same_tables(a, b));
  CHECK(oracle::tables_equal(a, b));
  CHECK_FALSE(same_tables(a, *catalog::cyclic_group(2)));
}

TEST_CASE("functor enumeration agrees with homomorphism counts") {
  const std::vector<VCatRef> monoids = gen::monoid_catalog();
  for (const auto& a : monoids)
    for (const auto& b : monoids) {
      const auto fs = enumerate_functors(a, b, 10000);
      CHECK(fs.size() == count_homs(oracle::endo_table(*a, 0), oracle::endo_table(*b, 0)));
      for (const auto& f : fs) CHECK(validate_vfunctor(f));
    }
  // Monotone self-maps of a two-element chain.
  CHECK(enumerate_functors(catalog::chain_poset(2), catalog::chain_poset(2), 100).size() == 3);
  CHECK(enumerate_functors(catalog::chain_poset(3), catalog::discrete(1), 100).size() == 1);
  CHECK_THROWS_AS(enumerate_functors(catalog::chain_poset(3), catalog::chain_poset(3), 2), Error);
  auto lin = catalog::linearize(*catalog::cyclic_group(2), 2);
  CHECK_THROWS_AS(enumerate_functors(lin, lin, 10), Error);
}

TEST_CASE("natural transformations between identities are central elements") {
  auto z3 = catalog::cyclic_group(3);
  CHECK(enumerate_nattrans(identity_functor(z3), identity_functor(z3), 100).size() == 3);
  auto p = catalog::chain_poset(2);
  CHECK(enumerate_nattrans(identity_functor(p), identity_functor(p), 100).size() == 1);
  auto c0 = build_vfunctor(p, p, {0, 0}, [](std::size_t, std::size_t, std::size_t) { return Elem{std::size_t{0}}; });
  CHECK(enumerate_nattrans(c0, identity_functor(p), 100).size() == 1);
  CHECK(enumerate_nattrans(identity_functor(p), c0, 100).empty());
}

TEST_CASE("functor and transformation algebra") {
  gen::Rng rng(11);
  gen::FunctorPool pool;
  for (int run = 0; run < 30; ++run) {
    auto a = gen::random_finset_category(rng);
    auto b = gen::random_finset_category(rng);
    const auto& fs = pool.between(a, b);
    if (fs.empty()) continue;
    const auto& f = fs[rng.below(fs.size())];
    CHECK(compose_functors(f, identity_functor(a)) == f);
    CHECK(compose_functors(identity_functor(b), f) == f);
    CHECK(op(op(f)) == f);
    CHECK(validate_vfunctor(op(f)));
    const auto nats = enumerate_nattrans(f, f, 1000);
    REQUIRE_FALSE(nats.empty());
    for (const auto& t : nats) {
      CHECK(vertical(t, identity_nat(f)) == t);
      CHECK(validate_nattrans(op(t)));
      CHECK(validate_nattrans(whisker_left(identity_functor(b), t)));
    }
    CHECK(is_invertible(identity_nat(f)));
  }
}

TEST_CASE("inverses in a hom") {
  auto z3 = catalog::cyclic_group(3);
  CHECK(inverse_in(*z3, 0, 0, Elem{std::size_t{1}}) == Elem{std::size_t{2}});
  auto p = catalog::chain_poset(2);
  CHECK_FALSE(inverse_in(*p, 0, 1, Elem{std::size_t{0}}).has_value());
  auto lin = catalog::linearize(*catalog::cyclic_group(2), 3);
  // g0 + g1 is a zero divisor in F_3[Z/2]; 2 g1 is a unit.
  CHECK_FALSE(inverse_in(*lin, 0, 0, Elem{Vec{1, 1}}).has_value());
  CHECK(inverse_in(*lin, 0, 0, Elem{Vec{0, 2}}) == Elem{Vec{0, 2}});
  auto c0 = build_vfunctor(p, p, {0, 0}, [](std::size_t, std::size_t, std::size_t) { return Elem{std::size_t{0}}; });
  const VNatTrans t{c0, identity_functor(p), {Elem{std::size_t{0}}, Elem{std::size_t{0}}}};
  CHECK_FALSE(is_invertible(t));
  CHECK_THROWS_AS(inverse(t), Error);
}

TEST_CASE("pushforward and pullback along a morphism") {
  auto z3 = catalog::cyclic_group(3);
  const Mor push = pushforward(*z3, 0, 0, Elem{std::size_t{1}}, 0);
  CHECK(push.map == std::vector<std::size_t>{1, 2, 0});
  auto lin = catalog::linearize(*z3, 2);
  const Mor pull = pullback_along(*lin, 0, 0, Elem{Vec{0, 1, 0}}, 0);
  CHECK(is_iso(pull));
}
