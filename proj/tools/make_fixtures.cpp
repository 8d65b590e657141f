// Writes the fixture documents into a directory.
#include <filesystem>
#include <iostream>
#include <string>

#include "catkit/catalog.hpp"
#include "catkit/grothendieck.hpp"
#include "catkit/io.hpp"

using namespace catkit;

namespace {

void write(const std::string& dir, const std::string& file, const Document& d) {
  save_document(d, dir + "/" + file);
  std::cout << file << "\n";
}

Document diagram_doc(const std::string& name, const OplaxRef& x) {
  Document d{x->base, {}};
  add_diagram(d, name, *x, false);
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures DIR\n";
    return 2;
  }
  const std::string dir = argv[1];
  {
    Document d = diagram_doc("X", catalog::z2_on_z3());
    add_vcat(d, "Z6", catalog::cyclic_group(6));
    write(dir, "z2-on-z3.cat", d);
  }
  write(dir, "arrow-delta.cat", diagram_doc("X", catalog::arrow_delta()));
  {
    Document d = diagram_doc("X", share(diagonal(share(unit_vcat(Base::finset())), terminal_index())));
    add_vcat(d, "D2", catalog::discrete(2));
    write(dir, "terminal.cat", d);
  }
  write(dir, "poset-comonad.cat", diagram_doc("X", catalog::poset_comonad()));
  {
    auto g = catalog::group_algebra(2, 2);
    Document d{g->cat->base, {}};
    add_vcat(d, "F2[Z2]", g->cat);
    add_index(d, "Z2", g->index);
    add_grading(d, "mu", g);
    write(dir, "f2-z2.cat", d);
  }
  {
    auto x = catalog::z2_on_z3();
    Document d{x->base, {}};
    add_diagram(d, "Xop", op(*x), true);
    write(dir, "z2-on-z3-lax.cat", d);
  }
  {
    auto x = catalog::arrow_delta();
    auto gx = grothendieck(x);
    Document d{x->base, {}};
    const auto g = add_grading(d, "mu", gx.graded);
    auto sys = fiber_system(gx.graded);
    add_structure(d, "canonical", g, canonical_cofibered(gx, sys));
    write(dir, "arrow-cofibered.cat", d);
  }
  // Documents that load only without validation.
  std::filesystem::create_directories(dir + "/invalid");
  write(dir, "invalid/broken-cocycle.cat", diagram_doc("X", catalog::broken_cocycle()));
  return 0;
}
