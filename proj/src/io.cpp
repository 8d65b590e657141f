#include "catkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace catkit {

using json = nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::Parse, what); }

std::size_t label_index(const std::vector<std::string>& labels, const std::string& l, const std::string& where) {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == l) return k;
  throw Error(Errc::Reference, where + ": unknown label '" + l + "'");
}

void require_unique(const std::vector<std::string>& labels, const std::string& where) {
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw Error(Errc::DuplicateTag, where + ": duplicate label '" + l + "'");
}

json elem_json(const Obj& o, const Elem& e) {
  if (o.base.is_set()) return o.labels.at(as_index(e));
  return as_vec(e);
}

Elem elem_from(const Obj& o, const json& j, const std::string& where) {
  if (o.base.is_set()) {
    if (!j.is_string()) bad(where + ": expected a label");
    return label_index(o.labels, j.get<std::string>(), where);
  }
  if (!j.is_array() || j.size() != o.size()) bad(where + ": expected a vector of length " + std::to_string(o.size()));
  Vec v;
  for (const auto& c : j) {
    if (!c.is_number_integer()) bad(where + ": expected integer coefficients");
    v.push_back(fp::reduce(c.get<std::int64_t>(), o.base.p));
  }
  return v;
}

json mor_json(const Mor& f) {
  if (f.dom.base.is_set()) {
    json m = json::object();
    for (std::size_t k = 0; k < f.dom.size(); ++k) m[f.dom.labels[k]] = f.cod.labels[f.map[k]];
    return m;
  }
  json rows = json::array();
  for (std::size_t r = 0; r < f.cod.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < f.dom.size(); ++c) row.push_back(f.at(r, c));
    rows.push_back(row);
  }
  return rows;
}

Mor mor_from(const Obj& dom, const Obj& cod, const json& j, const std::string& where) {
  if (dom.base.is_set()) {
    if (!j.is_object() || j.size() != dom.size()) bad(where + ": expected a map with one entry per label");
    Mor f{dom, cod, std::vector<std::size_t>(dom.size()), {}};
    for (std::size_t k = 0; k < dom.size(); ++k) {
      if (!j.contains(dom.labels[k])) bad(where + ": missing image of '" + dom.labels[k] + "'");
      f.map[k] = as_index(elem_from(cod, j.at(dom.labels[k]), where));
    }
    return f;
  }
  if (!j.is_array() || j.size() != cod.size()) bad(where + ": expected " + std::to_string(cod.size()) + " rows");
  Mor f{dom, cod, {}, Vec(cod.size() * dom.size())};
  for (std::size_t r = 0; r < cod.size(); ++r) {
    const auto v = elem_from(dom, j[r], where + " row " + std::to_string(r));
    for (std::size_t c = 0; c < dom.size(); ++c) f.mat[r * dom.size() + c] = as_vec(v)[c];
  }
  return f;
}

json base_json(const Base& b) {
  json j{{"kind", b.is_set() ? "finset" : "finvect"}};
  if (!b.is_set()) j["p"] = b.p;
  return j;
}

Base base_from(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "finset") return Base::finset();
  if (kind == "finvect") return Base::finvect(j.at("p").get<std::uint32_t>());
  bad("unknown base kind '" + kind + "'");
}

// The unique morphism out of an empty object.
Mor from_empty(const Obj& dom, const Obj& cod) {
  if (dom.base.is_set()) return Mor{dom, cod, {}, {}};
  return zero_mor(dom, cod);
}

Obj obj_from_labels(const Base& b, const json& j) { return object_like(b, j.get<std::vector<std::string>>()); }

// ---- entities to JSON

json index_json(const IndexEntity& e) {
  const IndexCat& ic = e.index;
  json mors = json::array(), ids = json::object(), comp = json::object();
  for (const auto& m : ic.mors) mors.push_back({{"name", m.name}, {"dom", ic.objects[m.dom]}, {"cod", ic.objects[m.cod]}});
  for (std::size_t i = 0; i < ic.objects.size(); ++i) ids[ic.objects[i]] = ic.mors[ic.ident[i]].name;
  for (std::size_t v = 0; v < ic.mors.size(); ++v)
    for (std::size_t u = 0; u < ic.mors.size(); ++u)
      if (ic.comp[v][u] >= 0) comp[ic.mors[v].name][ic.mors[u].name] = ic.mors[static_cast<std::size_t>(ic.comp[v][u])].name;
  return {{"type", "index"}, {"name", e.name}, {"objects", ic.objects}, {"morphisms", mors}, {"identities", ids},
          {"composition", comp}};
}

json vcat_json(const VCatEntity& e) {
  const VCat& c = *e.cat;
  json homs = json::object(), ids = json::object(), comp = json::object();
  for (std::size_t x = 0; x < c.size(); ++x) {
    ids[c.objects[x]] = elem_json(c.hom[x][x], identity_in(c, x));
    for (std::size_t y = 0; y < c.size(); ++y) homs[c.objects[x]][c.objects[y]] = c.hom[x][y].labels;
  }
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y)
      for (std::size_t z = 0; z < c.size(); ++z) {
        const Obj &g = c.hom[y][z], &f = c.hom[x][y];
        if (g.size() == 0 || f.size() == 0) continue;
        json t;
        if (c.base.is_set()) {
          t = json::object();
          for (std::size_t a = 0; a < g.size(); ++a)
            for (std::size_t b = 0; b < f.size(); ++b)
              t[g.labels[a]][f.labels[b]] = c.hom[x][z].labels[c.comp[x][y][z].map[a * f.size() + b]];
        } else {
          t = mor_json(c.comp[x][y][z]);
        }
        comp[c.objects[x]][c.objects[y]][c.objects[z]] = t;
      }
  return {{"type", "vcat"}, {"name", e.name}, {"objects", c.objects}, {"homs", homs}, {"identities", ids},
          {"composition", comp}};
}

json functor_body(const VFunctor& f) {
  const VCat &a = *f.dom, &b = *f.cod;
  json objs = json::object(), homs = json::object();
  for (std::size_t x = 0; x < a.size(); ++x) objs[a.objects[x]] = b.objects[f.f0[x]];
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.hom[x][y].size() > 0) homs[a.objects[x]][a.objects[y]] = mor_json(f.f1[x][y]);
  return {{"objects", objs}, {"homs", homs}};
}

json components_json(const VNatTrans& t) {
  json c = json::object();
  const VCat &a = *t.src.dom, &b = *t.src.cod;
  for (std::size_t x = 0; x < a.size(); ++x) c[a.objects[x]] = elem_json(b.hom[t.src.f0[x]][t.tgt.f0[x]], t.comp[x]);
  return c;
}

json entity_json(const Document& d, const Entity& e) {
  return std::visit(
      [&](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IndexEntity>) {
          return index_json(v);
        } else if constexpr (std::is_same_v<T, VCatEntity>) {
          return vcat_json(v);
        } else if constexpr (std::is_same_v<T, FunctorEntity>) {
          json j = functor_body(v.functor);
          j["type"] = "functor";
          j["name"] = v.name;
          j["dom"] = v.dom;
          j["cod"] = v.cod;
          return j;
        } else if constexpr (std::is_same_v<T, NatEntity>) {
          return {{"type", "nattrans"}, {"name", v.name}, {"src", v.src}, {"tgt", v.tgt}, {"components", components_json(v.nat)}};
        } else if constexpr (std::is_same_v<T, DiagramEntity>) {
          const DiagramData& x = *v.data;
          const IndexCat& ic = x.index;
          json cats = json::object(), funcs = json::object();
          for (std::size_t i = 0; i < ic.objects.size(); ++i) cats[ic.objects[i]] = v.cats[i];
          for (std::size_t u = 0; u < ic.mors.size(); ++u) funcs[ic.mors[u].name] = v.funcs[u];
          json j{{"type", "diagram"}, {"name", v.name}, {"kind", v.lax ? "lax" : "oplax"}, {"index", v.index},
                 {"categories", cats}, {"functors", funcs}};
          if (!is_strict(x)) {
            json eta = json::object(), theta = json::object();
            for (std::size_t i = 0; i < ic.objects.size(); ++i) eta[ic.objects[i]] = components_json(x.eta[i]);
            for (const auto& [vu, t] : x.theta) theta[ic.mors[vu.first].name][ic.mors[vu.second].name] = components_json(t);
            j["eta"] = eta;
            j["theta"] = theta;
          }
          return j;
        } else if constexpr (std::is_same_v<T, GradingEntity>) {
          const GradedVCat& g = *v.graded;
          const VCat& c = *g.cat;
          json deg = json::object(), tags = json::object();
          for (std::size_t x = 0; x < c.size(); ++x) {
            deg[c.objects[x]] = g.index.objects[g.degree[x]];
            for (std::size_t y = 0; y < c.size(); ++y) {
              if (c.hom[x][y].size() == 0) continue;
              json t = json::array();
              for (std::size_t k = 0; k < c.hom[x][y].size(); ++k) t.push_back(g.index.mors[g.tag_of(x, y, k)].name);
              tags[c.objects[x]][c.objects[y]] = t;
            }
          }
          return {{"type", "grading"}, {"name", v.name}, {"category", v.category}, {"index", v.index},
                  {"degrees", deg}, {"tags", tags}};
        } else {
          json entries = json::object();
          const auto* g = d.template get<GradingEntity>(v.grading);
          if (!g) throw Error(Errc::Reference, "structure '" + v.name + "' names no grading");
          for (std::size_t i = 0; i < v.structure.entries.size(); ++i) {
            const auto& en = v.structure.entries[i];
            entries[g->graded->index.objects.at(i)] = {{"adjoint", functor_body(en.adj)},
                                          {"unit", components_json(en.unit)},
                                          {"counit", components_json(en.counit)}};
          }
          return {{"type", "structure"}, {"name", v.name}, {"grading", v.grading},
                  {"kind", v.structure.fibered ? "fibered" : "cofibered"}, {"entries", entries}};
        }
      },
      e);
}

// ---- JSON to entities

struct Loader {
  Document& doc;
  bool validate;

  template <class T>
  const T& ref(const std::string& name, const char* what) const {
    auto p = doc.get<T>(name);
    if (!p) throw Error(Errc::Reference, std::string("unresolved ") + what + " '" + name + "'");
    return *p;
  }

  void check(const Report& r, const std::string& name) const {
    if (validate && !r) throw Error(Errc::Invalid, "entity '" + name + "': " + r.str());
  }

  IndexEntity index(const json& j, const std::string& name) const {
    const auto objects = j.at("objects").get<std::vector<std::string>>();
    require_unique(objects, name);
    std::vector<IndexMor> mors;
    std::vector<std::string> mnames;
    for (const auto& m : j.at("morphisms")) {
      const auto n = m.at("name").get<std::string>();
      mors.push_back({n, label_index(objects, m.at("dom").get<std::string>(), name),
                      label_index(objects, m.at("cod").get<std::string>(), name)});
      mnames.push_back(n);
    }
    require_unique(mnames, name);
    std::vector<std::size_t> ident;
    for (const auto& o : objects) ident.push_back(label_index(mnames, j.at("identities").at(o).get<std::string>(), name));
    const json& comp = j.at("composition");
    auto ic = make_index(objects, mors, ident, [&](std::size_t v, std::size_t u) {
      const auto where = name + " composite " + mnames[v] + " o " + mnames[u];
      if (!comp.contains(mnames[v]) || !comp.at(mnames[v]).contains(mnames[u])) bad(where + " missing");
      return label_index(mnames, comp.at(mnames[v]).at(mnames[u]).get<std::string>(), where);
    });
    check(validate_index(ic), name);
    return {name, std::move(ic)};
  }

  VCatEntity vcat(const json& j, const std::string& name) const {
    const Base& b = doc.base;
    const auto objects = j.at("objects").get<std::vector<std::string>>();
    require_unique(objects, name);
    const auto n = objects.size();
    std::vector<std::vector<Obj>> hom(n, std::vector<Obj>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        hom[x][y] = obj_from_labels(b, j.at("homs").at(objects[x]).at(objects[y]));
        if (b.is_set()) require_unique(hom[x][y].labels, name + " hom(" + objects[x] + "," + objects[y] + ")");
      }
    VCat c{b, objects, hom, {}, {}};
    c.comp.assign(n, std::vector<std::vector<Mor>>(n, std::vector<Mor>(n)));
    const json& comp = j.at("composition");
    for (std::size_t x = 0; x < n; ++x) {
      c.id.push_back(point(hom[x][x], elem_from(hom[x][x], j.at("identities").at(objects[x]), name + " identity")));
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const Obj dom = tensor(hom[y][z], hom[x][y]);
          const std::string where = name + " composition " + objects[x] + "," + objects[y] + "," + objects[z];
          if (dom.size() == 0) {
            c.comp[x][y][z] = from_empty(dom, hom[x][z]);
            continue;
          }
          const json& t = comp.at(objects[x]).at(objects[y]).at(objects[z]);
          if (!b.is_set()) {
            c.comp[x][y][z] = mor_from(dom, hom[x][z], t, where);
            continue;
          }
          Mor m{dom, hom[x][z], std::vector<std::size_t>(dom.size()), {}};
          const auto nf = hom[x][y].size();
          for (std::size_t a = 0; a < hom[y][z].size(); ++a)
            for (std::size_t f = 0; f < nf; ++f)
              m.map[a * nf + f] = as_index(elem_from(hom[x][z], t.at(hom[y][z].labels[a]).at(hom[x][y].labels[f]), where));
          c.comp[x][y][z] = std::move(m);
        }
    }
    check(validate_vcat(c), name);
    return {name, share(std::move(c))};
  }

  VFunctor functor_body(const json& j, const VCatRef& a, const VCatRef& b, const std::string& name) const {
    const auto n = a->size();
    VFunctor f{a, b, std::vector<std::size_t>(n), std::vector<std::vector<Mor>>(n, std::vector<Mor>(n))};
    for (std::size_t x = 0; x < n; ++x)
      f.f0[x] = label_index(b->objects, j.at("objects").at(a->objects[x]).get<std::string>(), name);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const Obj &d = a->hom[x][y], &c = b->hom[f.f0[x]][f.f0[y]];
        f.f1[x][y] = d.size() == 0 ? from_empty(d, c)
                                   : mor_from(d, c, j.at("homs").at(a->objects[x]).at(a->objects[y]),
                                              name + " hom " + a->objects[x] + "," + a->objects[y]);
      }
    return f;
  }

  VNatTrans components(const json& j, const VFunctor& s, const VFunctor& t, const std::string& name) const {
    VNatTrans n{s, t, {}};
    const VCat &a = *s.dom, &b = *s.cod;
    for (std::size_t x = 0; x < a.size(); ++x)
      n.comp.push_back(elem_from(b.hom[s.f0[x]][t.f0[x]], j.at(a.objects[x]), name + " component " + a.objects[x]));
    return n;
  }

  FunctorEntity functor(const json& j, const std::string& name) const {
    const auto dom = j.at("dom").get<std::string>(), cod = j.at("cod").get<std::string>();
    auto f = functor_body(j, ref<VCatEntity>(dom, "category").cat, ref<VCatEntity>(cod, "category").cat, name);
    check(validate_vfunctor(f), name);
    return {name, dom, cod, std::move(f)};
  }

  NatEntity nat(const json& j, const std::string& name) const {
    const auto src = j.at("src").get<std::string>(), tgt = j.at("tgt").get<std::string>();
    auto t = components(j.at("components"), ref<FunctorEntity>(src, "functor").functor,
                        ref<FunctorEntity>(tgt, "functor").functor, name);
    check(validate_nattrans(t), name);
    return {name, src, tgt, std::move(t)};
  }

  DiagramEntity diagram(const json& j, const std::string& name) const {
    DiagramEntity e;
    e.name = name;
    const auto kind = j.at("kind").get<std::string>();
    if (kind != "oplax" && kind != "lax") bad(name + ": kind must be oplax or lax");
    e.lax = kind == "lax";
    e.index = j.at("index").get<std::string>();
    const IndexCat& ic = ref<IndexEntity>(e.index, "index category").index;
    std::vector<VCatRef> cats;
    std::vector<VFunctor> funcs;
    for (const auto& o : ic.objects) {
      e.cats.push_back(j.at("categories").at(o).get<std::string>());
      cats.push_back(ref<VCatEntity>(e.cats.back(), "category").cat);
    }
    for (const auto& m : ic.mors) {
      e.funcs.push_back(j.at("functors").at(m.name).get<std::string>());
      funcs.push_back(ref<FunctorEntity>(e.funcs.back(), "functor").functor);
    }
    DiagramData d;
    d.index = ic;
    d.base = doc.base;
    d.cats = cats;
    d.func = funcs;
    const bool strict = !j.contains("eta") && !j.contains("theta");
    for (std::size_t i = 0; i < ic.objects.size(); ++i) {
      const VFunctor one = identity_functor(cats[i]);
      const VFunctor& xi = funcs[ic.ident[i]];
      const VFunctor &s = e.lax ? one : xi, &t = e.lax ? xi : one;
      if (strict && xi.f0 != one.f0)
        throw Error(Errc::Invalid, name + " eta " + ic.objects[i] + ": diagram without eta/theta is not strict");
      d.eta.push_back(strict ? VNatTrans{s, t, identity_nat(one).comp}
                             : components(j.at("eta").at(ic.objects[i]), s, t, name + " eta " + ic.objects[i]));
    }
    for (const auto& [v, u] : composable_pairs(ic)) {
      const VFunctor both = compose_functors(funcs[v], funcs[u]);
      const VFunctor& whole = funcs[ic.compose(v, u)];
      const VFunctor &s = e.lax ? both : whole, &t = e.lax ? whole : both;
      const std::string where = name + " theta " + ic.mors[v].name + "," + ic.mors[u].name;
      VNatTrans th{s, t, {}};
      if (strict) {
        for (std::size_t a = 0; a < s.f0.size(); ++a) {
          if (s.f0[a] != t.f0[a]) throw Error(Errc::Invalid, where + ": diagram without eta/theta is not strict");
          th.comp.push_back(identity_in(*s.cod, s.f0[a]));
        }
      } else {
        th = components(j.at("theta").at(ic.mors[v].name).at(ic.mors[u].name), s, t, where);
      }
      d.theta.emplace(MorPair{v, u}, std::move(th));
    }
    if (e.lax) {
      auto l = std::make_shared<LaxDiagram>();
      static_cast<DiagramData&>(*l) = std::move(d);
      check(validate_lax(*l), name);
      e.data = std::move(l);
    } else {
      auto o = std::make_shared<OplaxDiagram>();
      static_cast<DiagramData&>(*o) = std::move(d);
      check(validate_oplax(*o), name);
      e.data = std::move(o);
    }
    return e;
  }

  GradingEntity grading(const json& j, const std::string& name) const {
    GradingEntity e{name, j.at("category").get<std::string>(), j.at("index").get<std::string>(), nullptr};
    const VCatRef& c = ref<VCatEntity>(e.category, "category").cat;
    const IndexCat& ic = ref<IndexEntity>(e.index, "index category").index;
    std::vector<std::size_t> degree;
    for (const auto& o : c->objects) degree.push_back(label_index(ic.objects, j.at("degrees").at(o).get<std::string>(), name));
    std::vector<std::string> mnames;
    for (const auto& m : ic.mors) mnames.push_back(m.name);
    // Per hom: tag of every basis element, which must run through I(p x, p y) in order.
    const auto n = c->size();
    std::vector<std::vector<std::vector<std::size_t>>> tags(n, std::vector<std::vector<std::size_t>>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (c->hom[x][y].size() == 0) continue;
        const std::string where = name + " tags " + c->objects[x] + "," + c->objects[y];
        const json& t = j.at("tags").at(c->objects[x]).at(c->objects[y]);
        if (!t.is_array() || t.size() != c->hom[x][y].size()) bad(where + ": one tag per basis element required");
        long last = -1;
        for (const auto& tag : t) {
          const auto u = label_index(mnames, tag.get<std::string>(), where);
          if (ic.mors[u].dom != degree[x] || ic.mors[u].cod != degree[y]) bad(where + ": tag has the wrong endpoints");
          const auto pos = static_cast<long>(ic.position_in_hom(u));
          if (pos < last) throw Error(Errc::Unsupported, where + ": blocks must be contiguous and in index order");
          last = pos;
          tags[x][y].push_back(u);
        }
      }
    GradedVCat g = make_graded(c, ic, degree, [&](std::size_t x, std::size_t y, std::size_t u) {
      return static_cast<std::size_t>(std::count(tags[x][y].begin(), tags[x][y].end(), u));
    });
    check(validate_grading(g), name);
    e.graded = share(std::move(g));
    return e;
  }

  StructureEntity structure(const json& j, const std::string& name) const {
    StructureEntity e{name, j.at("grading").get<std::string>(), {}};
    const auto kind = j.at("kind").get<std::string>();
    if (kind != "cofibered" && kind != "fibered") bad(name + ": kind must be cofibered or fibered");
    e.structure.fibered = kind == "fibered";
    const GradedRef& g = ref<GradingEntity>(e.grading, "grading").graded;
    const FiberSystem sys = fiber_system(g, e.structure.fibered);
    for (std::size_t i = 0; i < g->index.objects.size(); ++i) {
      const std::string where = name + " entry " + g->index.objects[i];
      const json& en = j.at("entries").at(g->index.objects[i]);
      const VCatRef &comma = sys.comma[i].cat, &strict = sys.strict[i].cat;
      VFunctor adj = functor_body(en.at("adjoint"), comma, strict, where);
      const VFunctor& cmp = sys.compare[i];
      const VFunctor &l = e.structure.fibered ? cmp : adj, &r = e.structure.fibered ? adj : cmp;
      VNatTrans unit = components(en.at("unit"), identity_functor(l.dom), compose_functors(r, l), where + " unit");
      VNatTrans counit = components(en.at("counit"), compose_functors(l, r), identity_functor(l.cod), where + " counit");
      e.structure.entries.push_back({std::move(adj), std::move(unit), std::move(counit)});
    }
    check(verify_cofibered_structure(sys, e.structure).report, name);
    return e;
  }
};

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::string fresh_name(const Document& d, const std::string& want) {
  if (!d.find(want)) return want;
  for (std::size_t k = 2;; ++k) {
    const auto n = want + "#" + std::to_string(k);
    if (!d.find(n)) return n;
  }
}

}  // namespace

OplaxRef DiagramEntity::oplax() const {
  if (lax) throw Error(Errc::TagMismatch, "diagram '" + name + "' is lax");
  return std::static_pointer_cast<const OplaxDiagram>(data);
}

LaxRef DiagramEntity::lax_ref() const {
  if (!lax) throw Error(Errc::TagMismatch, "diagram '" + name + "' is oplax");
  return std::static_pointer_cast<const LaxDiagram>(data);
}

const std::string& entity_name(const Entity& e) {
  return std::visit([](const auto& v) -> const std::string& { return v.name; }, e);
}

const char* entity_type(const Entity& e) {
  static const char* names[] = {"index", "vcat", "functor", "nattrans", "diagram", "grading", "structure"};
  return names[e.index()];
}

const Entity* Document::find(const std::string& name) const {
  for (const auto& e : entities)
    if (entity_name(e) == name) return &e;
  return nullptr;
}

Document parse_document(const std::string& text, bool validate) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(Errc::Parse, "syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  Document d;
  std::string current = "document";
  try {
    if (!j.is_object()) bad("document must be an object");
    if (j.at("format_version").get<int>() != kFormatVersion) bad("unsupported format_version");
    d.base = base_from(j.at("base"));
    Loader ld{d, validate};
    for (const auto& e : j.at("entities")) {
      const auto type = e.at("type").get<std::string>();
      current = e.at("name").get<std::string>();
      if (d.find(current)) throw Error(Errc::DuplicateTag, "duplicate entity name '" + current + "'");
      if (type == "index") d.entities.emplace_back(ld.index(e, current));
      else if (type == "vcat") d.entities.emplace_back(ld.vcat(e, current));
      else if (type == "functor") d.entities.emplace_back(ld.functor(e, current));
      else if (type == "nattrans") d.entities.emplace_back(ld.nat(e, current));
      else if (type == "diagram") d.entities.emplace_back(ld.diagram(e, current));
      else if (type == "grading") d.entities.emplace_back(ld.grading(e, current));
      else if (type == "structure") d.entities.emplace_back(ld.structure(e, current));
      else bad("entity '" + current + "' has unknown type '" + type + "'");
    }
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, "entity '" + current + "': " + e.what());
  }
  return d;
}

std::string serialize(const Document& d) {
  json ents = json::array();
  for (const auto& e : d.entities) ents.push_back(entity_json(d, e));
  json j{{"format_version", kFormatVersion}, {"base", base_json(d.base)}, {"entities", ents}};
  return j.dump(2) + "\n";
}

Document load_document(const std::string& path, bool validate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), validate);
}

void save_document(const Document& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Parse, "cannot write " + path);
  out << serialize(d);
}

Report validate_document(const Document& d) {
  Report r;
  auto named = [&](const std::string& name, const Report& x) {
    if (!x) r.fail(x.law, name + ": " + x.where, x.detail);
  };
  for (const auto& e : d.entities) {
    if (!r) break;
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, IndexEntity>) named(v.name, validate_index(v.index));
          else if constexpr (std::is_same_v<T, VCatEntity>) named(v.name, validate_vcat(*v.cat));
          else if constexpr (std::is_same_v<T, FunctorEntity>) named(v.name, validate_vfunctor(v.functor));
          else if constexpr (std::is_same_v<T, NatEntity>) named(v.name, validate_nattrans(v.nat));
          else if constexpr (std::is_same_v<T, DiagramEntity>)
            named(v.name, v.lax ? validate_lax(*v.lax_ref()) : validate_oplax(*v.oplax()));
          else if constexpr (std::is_same_v<T, GradingEntity>) named(v.name, validate_grading(*v.graded));
          else {
            const auto& g = d.get<GradingEntity>(v.grading)->graded;
            named(v.name, verify_cofibered_structure(fiber_system(g, v.structure.fibered), v.structure).report);
          }
        },
        e);
  }
  return r;
}

std::string add_index(Document& d, const std::string& name, const IndexCat& i) {
  for (const auto& e : d.entities)
    if (auto p = std::get_if<IndexEntity>(&e); p && p->index == i) return p->name;
  const auto n = fresh_name(d, name);
  d.entities.emplace_back(IndexEntity{n, i});
  return n;
}

std::string add_vcat(Document& d, const std::string& name, const VCatRef& c) {
  for (const auto& e : d.entities)
    if (auto p = std::get_if<VCatEntity>(&e); p && (p->cat == c || *p->cat == *c)) return p->name;
  const auto n = fresh_name(d, name);
  d.entities.emplace_back(VCatEntity{n, c});
  return n;
}

std::string add_functor(Document& d, const std::string& name, const VFunctor& f) {
  const auto dom = add_vcat(d, name + ".dom", f.dom);
  const auto cod = add_vcat(d, name + ".cod", f.cod);
  for (const auto& e : d.entities)
    if (auto p = std::get_if<FunctorEntity>(&e); p && p->functor == f) return p->name;
  const auto n = fresh_name(d, name);
  d.entities.emplace_back(FunctorEntity{n, dom, cod, f});
  return n;
}

std::string add_nat(Document& d, const std::string& name, const VNatTrans& t) {
  const auto s = add_functor(d, name + ".src", t.src);
  const auto g = add_functor(d, name + ".tgt", t.tgt);
  const auto n = fresh_name(d, name);
  d.entities.emplace_back(NatEntity{n, s, g, t});
  return n;
}

std::string add_diagram(Document& d, const std::string& name, const DiagramData& x, bool lax) {
  const IndexCat& ic = x.index;
  DiagramEntity e;
  e.lax = lax;
  e.index = add_index(d, name + ".index", ic);
  for (std::size_t i = 0; i < ic.objects.size(); ++i) e.cats.push_back(add_vcat(d, name + "(" + ic.objects[i] + ")", x.cats[i]));
  for (std::size_t u = 0; u < ic.mors.size(); ++u) e.funcs.push_back(add_functor(d, name + "(" + ic.mors[u].name + ")", x.func[u]));
  e.name = fresh_name(d, name);
  if (lax) {
    auto l = std::make_shared<LaxDiagram>();
    static_cast<DiagramData&>(*l) = x;
    e.data = std::move(l);
  } else {
    auto o = std::make_shared<OplaxDiagram>();
    static_cast<DiagramData&>(*o) = x;
    e.data = std::move(o);
  }
  const auto n = e.name;
  d.entities.emplace_back(std::move(e));
  return n;
}

std::string add_grading(Document& d, const std::string& name, const GradedRef& g) {
  GradingEntity e{{}, add_vcat(d, name + ".category", g->cat), add_index(d, name + ".index", g->index), g};
  e.name = fresh_name(d, name);
  const auto n = e.name;
  d.entities.emplace_back(std::move(e));
  return n;
}

std::string add_structure(Document& d, const std::string& name, const std::string& grading, const FiberStructure& s) {
  const auto n = fresh_name(d, name);
  d.entities.emplace_back(StructureEntity{n, grading, s});
  return n;
}

}  // namespace catkit
