#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "catkit/catalog.hpp"
#include "catkit/io.hpp"
#include "support/generators.hpp"

using namespace catkit;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Errc code_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("document was accepted");
  return Errc::Invalid;
}

const char* kHeader = R"({"base": {"kind": "finset"}, "format_version": 1, "entities": [)";

}  // namespace

TEST_CASE("fixtures round-trip byte for byte") {
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(CATKIT_FIXTURE_DIR)) {
    if (e.path().extension() != ".cat") continue;
    ++n;
    INFO(e.path().filename().string());
    const auto text = slurp(e.path());
    const auto doc = parse_document(text);
    CHECK(serialize(doc) == text);
    CHECK(validate_document(doc));
  }
  CHECK(n >= 5);
}

TEST_CASE("random diagrams round-trip") {
  gen::Rng rng(70);
  gen::FunctorPool pool;
  for (int run = 0; run < 20; ++run) {
    const auto inst = gen::random_instance(rng, pool);
    Document d{inst.diagram->base, {}};
    add_diagram(d, "X", *inst.diagram, false);
    const auto gr = grothendieck(inst.diagram);
    add_grading(d, "GrX", gr.graded);
    const auto text = serialize(d);
    const auto back = parse_document(text);
    CHECK(serialize(back) == text);
    const auto* x = back.get<DiagramEntity>("X");
    REQUIRE(x);
    const auto o = x->oplax();
    for (std::size_t u = 0; u < o->func.size(); ++u) CHECK(o->func[u] == inst.diagram->func[u]);
    for (const auto& [k, t] : o->theta) CHECK(t.comp == inst.diagram->theta.at(k).comp);
    const auto* g = back.get<GradingEntity>("GrX");
    REQUIRE(g);
    CHECK(*g->graded->cat == *gr.graded->cat);
    CHECK(g->graded->degree == gr.graded->degree);
  }
}

TEST_CASE("equal parts are stored once") {
  Document d{Base::finset(), {}};
  add_diagram(d, "X", *catalog::z2_on_z3(), false);
  const auto before = d.entities.size();
  add_vcat(d, "again", catalog::cyclic_group(3));
  CHECK(d.entities.size() == before);
}

TEST_CASE("a broken cocycle is reported with its triple") {
  Document d{Base::finset(), {}};
  add_diagram(d, "X", *catalog::broken_cocycle(), false);
  const auto text = serialize(d);
  try {
    parse_document(text);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Invalid);
    CHECK(std::string(e.what()).find("(g1,g1,g2)") != std::string::npos);
  }
  CHECK_NOTHROW(parse_document(text, false));
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_document("{\n  \"base\": ,\n}");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Parse);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("malformed documents") {
  CHECK(code_of(std::string(kHeader) + R"({"name": "f", "type": "functor", "dom": "nope", "cod": "nope", "objects": {}, "homs": {}}]})") ==
        Errc::Reference);
  CHECK(code_of(std::string(kHeader) +
                R"({"name": "I", "type": "index", "objects": ["a", "a"], "morphisms": []}]})") == Errc::DuplicateTag);
  CHECK(code_of(R"({"base": {"kind": "finset"}, "format_version": 1})") == Errc::Parse);
  CHECK(code_of(R"({"base": {"kind": "finvect", "p": 4}, "format_version": 1, "entities": []})") == Errc::Invalid);
}

TEST_CASE("vector entries are reduced on load") {
  Document d{Base::finvect(3), {}};
  add_vcat(d, "A", catalog::linearize(*catalog::cyclic_group(2), 3));
  std::string text = serialize(d);
  // Every identity [1, 0] becomes [4, 0]; 4 = 1 mod 3.
  const auto pos = text.find("\"identities\"");
  REQUIRE(pos != std::string::npos);
  const auto one = text.find('1', text.find('[', pos));
  text[one] = '4';
  CHECK(*parse_document(text).get<VCatEntity>("A")->cat == *catalog::linearize(*catalog::cyclic_group(2), 3));
}

TEST_CASE("structures round-trip") {
  const auto gr = grothendieck(catalog::arrow_delta());
  const auto sys = fiber_system(gr.graded);
  const auto s = canonical_cofibered(gr, sys);
  Document d{Base::finset(), {}};
  const auto g = add_grading(d, "mu", gr.graded);
  add_structure(d, "canonical", g, s);
  const auto text = serialize(d);
  const auto back = parse_document(text);
  const auto* st = back.get<StructureEntity>("canonical");
  REQUIRE(st);
  REQUIRE(st->structure.entries.size() == s.entries.size());
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    CHECK(st->structure.entries[i].adj == s.entries[i].adj);
    CHECK(st->structure.entries[i].unit.comp == s.entries[i].unit.comp);
    CHECK(st->structure.entries[i].counit.comp == s.entries[i].counit.comp);
  }
}
