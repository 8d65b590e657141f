#include "catkit/index_cat.hpp"

#include <set>

#include "catkit/base.hpp"

namespace catkit {

std::size_t IndexCat::compose(std::size_t v, std::size_t u) const {
  const long w = comp.at(v).at(u);
  if (w < 0) throw Error(Errc::ShapeMismatch, "morphisms " + mors[v].name + ", " + mors[u].name + " not composable");
  return static_cast<std::size_t>(w);
}

std::vector<std::size_t> IndexCat::hom(std::size_t i, std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < mors.size(); ++m)
    if (mors[m].dom == i && mors[m].cod == j) out.push_back(m);
  return out;
}

std::size_t IndexCat::object_index(const std::string& name) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return i;
  throw Error(Errc::Reference, "unknown index object " + name);
}

std::size_t IndexCat::mor_index(const std::string& name) const {
  for (std::size_t m = 0; m < mors.size(); ++m)
    if (mors[m].name == name) return m;
  throw Error(Errc::Reference, "unknown index morphism " + name);
}

std::size_t IndexCat::position_in_hom(std::size_t u) const {
  std::size_t k = 0;
  for (std::size_t m = 0; m < u; ++m)
    if (mors[m].dom == mors[u].dom && mors[m].cod == mors[u].cod) ++k;
  return k;
}

IndexCat make_index(std::vector<std::string> objects, std::vector<IndexMor> mors,
                    std::vector<std::size_t> ident,
                    const std::function<std::size_t(std::size_t, std::size_t)>& compose) {
  IndexCat c{std::move(objects), std::move(mors), std::move(ident), {}};
  const auto n = c.mors.size();
  c.comp.assign(n, std::vector<long>(n, -1));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u)
      if (c.mors[u].cod == c.mors[v].dom) c.comp[v][u] = static_cast<long>(compose(v, u));
  return c;
}

Report validate_index(const IndexCat& c) {
  Report r;
  const auto n = c.mors.size();
  std::set<std::string> names;
  for (const auto& m : c.mors) {
    if (!names.insert(m.name).second) r.fail("distinct names", m.name);
    if (m.dom >= c.objects.size() || m.cod >= c.objects.size()) r.fail("endpoints", m.name);
  }
  if (c.ident.size() != c.objects.size() || c.comp.size() != n) {
    r.fail("total tables", "index category");
    return r;
  }
  if (!r) return r;
  for (std::size_t i = 0; i < c.objects.size(); ++i) {
    const auto e = c.ident[i];
    if (e >= n || c.mors[e].dom != i || c.mors[e].cod != i) r.fail("identity endpoints", c.objects[i]);
  }
  if (!r) return r;
  for (std::size_t v = 0; v < n; ++v) {
    if (c.comp[v].size() != n) {
      r.fail("total tables", c.mors[v].name);
      return r;
    }
    for (std::size_t u = 0; u < n; ++u) {
      const long w = c.comp[v][u];
      const bool composable = c.mors[u].cod == c.mors[v].dom;
      if (composable != (w >= 0)) r.fail("composition defined exactly on composable pairs", c.mors[v].name + " o " + c.mors[u].name);
      else if (composable && (static_cast<std::size_t>(w) >= n || c.mors[w].dom != c.mors[u].dom || c.mors[w].cod != c.mors[v].cod))
        r.fail("composite endpoints", c.mors[v].name + " o " + c.mors[u].name);
    }
  }
  if (!r) return r;
  for (std::size_t u = 0; u < n; ++u) {
    if (c.compose(c.ident[c.mors[u].cod], u) != u) r.fail("left unit", c.mors[u].name);
    if (c.compose(u, c.ident[c.mors[u].dom]) != u) r.fail("right unit", c.mors[u].name);
  }
  for (std::size_t w = 0; w < n && r; ++w)
    for (std::size_t v = 0; v < n && r; ++v) {
      if (c.comp[w][v] < 0) continue;
      for (std::size_t u = 0; u < n && r; ++u) {
        if (c.comp[v][u] < 0) continue;
        if (c.compose(c.compose(w, v), u) != c.compose(w, c.compose(v, u)))
          r.fail("associativity", c.mors[w].name + "," + c.mors[v].name + "," + c.mors[u].name);
      }
    }
  return r;
}

IndexCat terminal_index() {
  return make_index({"*"}, {{"1", 0, 0}}, {0}, [](std::size_t, std::size_t) { return std::size_t{0}; });
}

IndexCat arrow_index() {
  return make_index({"a", "b"}, {{"1a", 0, 0}, {"1b", 1, 1}, {"u", 0, 1}}, {0, 1},
                    [](std::size_t v, std::size_t u) {
                      if (v == 0) return u;  // 1a o u
                      if (v == 1) return u;  // 1b o u
                      return v;              // u o 1a
                    });
}

IndexCat group_index(const std::vector<std::string>& elems,
                     const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  std::vector<IndexMor> mors;
  for (const auto& e : elems) mors.push_back({e, 0, 0});
  return make_index({"*"}, std::move(mors), {0}, mul);
}

IndexCat cyclic_index(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("g" + std::to_string(k));
  return group_index(names, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

IndexCat op(const IndexCat& c) {
  IndexCat o = c;
  for (auto& m : o.mors) std::swap(m.dom, m.cod);
  const auto n = c.mors.size();
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u) o.comp[v][u] = c.comp[u][v];
  return o;
}

}  // namespace catkit
