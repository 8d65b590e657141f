// catkit: command-line front end for .cat documents.
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "catkit/adjunction.hpp"
#include "catkit/fibers.hpp"
#include "catkit/grothendieck.hpp"
#include "catkit/io.hpp"
#include "json.hpp"

using namespace catkit;
using json = nlohmann::json;

namespace {

bool g_json = false;

int report_out(const std::string& what, const Report& r, json extra = json::object()) {
  if (g_json) {
    json j{{"check", what}, {"ok", r.ok}};
    if (!r.ok) {
      j["law"] = r.law;
      j["where"] = r.where;
      j["detail"] = r.detail;
    }
    j.update(extra);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << what << ": " << r.str() << "\n";
    for (auto it = extra.begin(); it != extra.end(); ++it) std::cout << "  " << it.key() << ": " << it.value().dump() << "\n";
  }
  return r.ok ? 0 : 1;
}

void write_or_print(const Document& d, const std::string& out) {
  if (out.empty() || out == "-") std::cout << serialize(d);
  else save_document(d, out);
}

const DiagramEntity& pick_diagram(const Document& d, const std::string& name) {
  const DiagramEntity* e = name.empty() ? d.first<DiagramEntity>() : d.get<DiagramEntity>(name);
  if (!e) throw Error(Errc::Reference, name.empty() ? "document has no diagram" : "no diagram '" + name + "'");
  return *e;
}

const GradingEntity& pick_grading(const Document& d, const std::string& name) {
  const GradingEntity* e = name.empty() ? d.first<GradingEntity>() : d.get<GradingEntity>(name);
  if (!e) throw Error(Errc::Reference, name.empty() ? "document has no grading" : "no grading '" + name + "'");
  return *e;
}

const VCatEntity& pick_vcat(const Document& d, const std::string& name) {
  const VCatEntity* e = d.get<VCatEntity>(name);
  if (!e) throw Error(Errc::Reference, "no category '" + name + "'");
  return *e;
}

json dims_table(const VCat& c) {
  json rows = json::object();
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y) rows[c.objects[x]][c.objects[y]] = c.hom[x][y].size();
  return rows;
}

void print_dims(const VCat& c) {
  if (g_json) {
    std::cout << json{{"objects", c.objects}, {"dims", dims_table(c)}}.dump() << "\n";
    return;
  }
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y)
      std::cout << "dim hom(" << c.objects[x] << ", " << c.objects[y] << ") = " << c.hom[x][y].size() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catkit: finite enriched categories, Grothendieck constructions and their adjunctions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_json, "Machine-readable reports");

  std::string file, out, diagram, grading, target, at, kind = "strict", adj_kind;
  bool lax = false, right = false;
  std::size_t cap = default_size_cap();

  auto* validate = app.add_subcommand("validate", "Check every entity of a document");
  validate->add_option("file", file)->required();

  auto* info = app.add_subcommand("info", "List the entities of a document");
  info->add_option("file", file)->required();

  auto* gr = app.add_subcommand("gr", "Grothendieck construction of a diagram");
  gr->add_option("file", file)->required();
  gr->add_option("-o,--output", out);
  gr->add_option("--diagram", diagram);
  gr->add_flag("--lax", lax, "Input is a lax diagram");

  auto* gamma = app.add_subcommand("gamma", "Comma-fiber diagram of a grading");
  gamma->add_option("file", file)->required();
  gamma->add_option("-o,--output", out);
  gamma->add_option("--grading", grading);
  gamma->add_flag("--right", right, "Use i|mu instead of mu|i");

  auto* fiber = app.add_subcommand("fiber", "One fiber of a grading");
  fiber->add_option("file", file)->required();
  fiber->add_option("--at", at, "Index object")->required();
  fiber->add_option("--kind", kind)->check(CLI::IsMember({"strict", "left", "right"}));
  fiber->add_option("--grading", grading);
  fiber->add_option("-o,--output", out);

  auto* smash = app.add_subcommand("smash", "Left comma fiber over a one-object index category");
  smash->add_option("file", file)->required();
  smash->add_option("--grading", grading);
  smash->add_option("-o,--output", out);

  auto* check = app.add_subcommand("check", "Law checks");
  check->require_subcommand(1);
  auto* adjunction = check->add_subcommand("adjunction", "Triangle identities");
  adjunction->add_option("--kind", adj_kind)->required()->check(CLI::IsMember({"gr-gamma", "gr-delta"}));
  adjunction->add_option("file", file)->required();
  adjunction->add_option("--diagram", diagram);
  adjunction->add_option("--grading", grading);
  adjunction->add_option("--target", target, "Target category for gr-delta");

  auto* enumerate = app.add_subcommand("enumerate-hom", "Enumerate Fun(Gr X, A) and Transf(X, Delta A)");
  enumerate->add_option("file", file)->required();
  enumerate->add_option("--cap", cap);
  enumerate->add_option("--diagram", diagram);
  enumerate->add_option("--target", target);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) {
      const Document d = load_document(file, false);
      return report_out("validate", validate_document(d));
    }
    if (*info) {
      const Document d = load_document(file, false);
      json ents = json::array();
      for (const auto& e : d.entities) ents.push_back({{"type", entity_type(e)}, {"name", entity_name(e)}});
      if (g_json) {
        std::cout << json{{"base", describe(d.base)}, {"entities", ents}}.dump() << "\n";
      } else {
        std::cout << "base " << describe(d.base) << "\n";
        for (const auto& e : d.entities) std::cout << entity_type(e) << " " << entity_name(e) << "\n";
      }
      return 0;
    }
    const Document d = load_document(file);
    if (*gr) {
      const auto& de = pick_diagram(d, diagram);
      if (de.lax != lax) throw Error(Errc::TagMismatch, lax ? "diagram is oplax; drop --lax" : "diagram is lax; pass --lax");
      const GrResult g = lax ? grothendieck_lax(de.lax_ref()) : grothendieck(de.oplax());
      Document o{d.base, {}};
      add_vcat(o, "Gr(" + de.name + ")", g.graded->cat);
      add_index(o, lax ? de.index + "^op" : de.index, g.graded->index);
      add_grading(o, "mu(" + de.name + ")", g.graded);
      write_or_print(o, out);
      return 0;
    }
    if (*gamma) {
      const auto& ge = pick_grading(d, grading);
      Document o{d.base, {}};
      if (right) {
        auto gr_ = gamma_right(ge.graded);
        add_diagram(o, "GammaRight(" + ge.name + ")", *gr_.diagram, true);
      } else {
        auto gl = gamma_left(ge.graded);
        add_diagram(o, "Gamma(" + ge.name + ")", *gl.diagram, false);
      }
      write_or_print(o, out);
      return 0;
    }
    if (*fiber || *smash) {
      const auto& ge = pick_grading(d, grading);
      const IndexCat& ic = ge.graded->index;
      std::size_t i = 0;
      if (*smash) {
        if (ic.objects.size() != 1) throw Error(Errc::ShapeMismatch, "smash needs a one-object index category");
        kind = "left";
      } else {
        i = ic.object_index(at);
      }
      VCatRef c;
      std::string label;
      if (kind == "strict") {
        c = strict_fiber(*ge.graded, i).cat;
        label = ge.name + "|" + ic.objects[i];
      } else if (kind == "left") {
        c = left_comma_fiber(*ge.graded, i).cat;
        label = ge.name + "|" + ic.objects[i] + "/left";
      } else {
        c = right_comma_fiber(*ge.graded, i).cat;
        label = ge.name + "|" + ic.objects[i] + "/right";
      }
      if (!out.empty()) {
        Document o{d.base, {}};
        add_vcat(o, label, c);
        save_document(o, out);
      }
      print_dims(*c);
      return 0;
    }
    if (*adjunction) {
      const auto& de = pick_diagram(d, diagram);
      const OplaxRef x = de.oplax();
      if (adj_kind == "gr-gamma") {
        const GradedRef g = grading.empty() ? grothendieck(x).graded : pick_grading(d, grading).graded;
        return report_out("adjunction gr-gamma", check_triangles_gr_gamma(x, g));
      }
      const VCatRef a = target.empty() ? x->cats.at(0) : pick_vcat(d, target).cat;
      return report_out("adjunction gr-delta", check_triangles_gr_delta(x, a));
    }
    if (*enumerate) {
      const auto& de = pick_diagram(d, diagram);
      const OplaxRef x = de.oplax();
      const VCatRef a = target.empty() ? x->cats.at(0) : pick_vcat(d, target).cat;
      const auto h = enumerate_hom_bijection(x, a, cap);
      return report_out("enumerate-hom", h.report,
                        {{"functors", h.functors}, {"transformations", h.transfs}, {"nat_trans", h.nat_trans},
                         {"modifications", h.modifications}});
    }
  } catch (const Error& e) {
    std::cerr << "catkit: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::Parse:
      case Errc::Reference:
      case Errc::DuplicateTag:
        return 2;
      default:
        return 1;
    }
  }
  return 2;
}
