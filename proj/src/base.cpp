#include "catkit/base.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace catkit {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::TagMismatch: return "TagMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::DuplicateTag: return "DuplicateTag";
    case Errc::SizeCap: return "SizeCap";
    case Errc::IncompleteData: return "IncompleteData";
    case Errc::BadElement: return "BadElement";
    case Errc::NotAComodule: return "NotAComodule";
    case Errc::Unsupported: return "Unsupported";
    case Errc::NotIso: return "NotIso";
    case Errc::Parse: return "Parse";
    case Errc::Reference: return "Reference";
    case Errc::Invalid: return "Invalid";
  }
  return "?";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

Base Base::finvect(std::uint32_t p) {
  if (!fp::is_prime(p) || p >= (1u << 16))
    throw Error(Errc::Invalid, "finvect needs a prime below 65536, got " + std::to_string(p));
  return {Kind::finvect, p};
}

std::string describe(const Base& b) {
  return b.is_set() ? "finset" : "finvect(F_" + std::to_string(b.p) + ")";
}

namespace fp {
std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error(Errc::NotIso, "zero has no inverse");
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(std::int64_t a, std::uint32_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace fp

std::size_t as_index(const Elem& e) {
  if (auto* i = std::get_if<std::size_t>(&e)) return *i;
  throw Error(Errc::TagMismatch, "expected a finset element");
}

const Vec& as_vec(const Elem& e) {
  if (auto* v = std::get_if<Vec>(&e)) return *v;
  throw Error(Errc::TagMismatch, "expected a finvect element");
}

Obj finset_obj(std::vector<std::string> labels) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw Error(Errc::Invalid, "duplicate element label");
  return {Base::finset(), std::move(labels)};
}

Obj finvect_obj(std::uint32_t p, std::size_t dim) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < dim; ++k) labels.push_back("e" + std::to_string(k));
  return {Base::finvect(p), std::move(labels)};
}

Obj finvect_obj(std::uint32_t p, std::vector<std::string> labels) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw Error(Errc::Invalid, "duplicate basis label");
  return {Base::finvect(p), std::move(labels)};
}

Obj unit_obj(const Base& b) { return {b, {b.is_set() ? "*" : "1"}}; }
Obj zero_obj(const Base& b) { return {b, {}}; }
Obj object_like(const Base& b, std::vector<std::string> labels) {
  return b.is_set() ? finset_obj(std::move(labels)) : finvect_obj(b.p, std::move(labels));
}

bool same_shape(const Obj& a, const Obj& b) { return a.base == b.base && a.size() == b.size(); }

static void require_same_base(const Base& a, const Base& b) {
  if (!(a == b)) throw Error(Errc::TagMismatch, describe(a) + " vs " + describe(b));
}

void check_mor(const Mor& f) {
  require_same_base(f.dom.base, f.cod.base);
  if (f.dom.base.is_set()) {
    if (f.map.size() != f.dom.size()) throw Error(Errc::ShapeMismatch, "map length");
    for (auto v : f.map)
      if (v >= f.cod.size()) throw Error(Errc::ShapeMismatch, "map value out of range");
  } else {
    if (f.mat.size() != f.dom.size() * f.cod.size()) throw Error(Errc::ShapeMismatch, "matrix shape");
    for (auto v : f.mat)
      if (v >= f.dom.base.p) throw Error(Errc::ShapeMismatch, "matrix entry not reduced");
  }
}

Mor identity(const Obj& x) {
  Mor f{x, x, {}, {}};
  if (x.base.is_set()) {
    for (std::size_t k = 0; k < x.size(); ++k) f.map.push_back(k);
  } else {
    f.mat.assign(x.size() * x.size(), 0);
    for (std::size_t k = 0; k < x.size(); ++k) f.mat[k * x.size() + k] = 1;
  }
  return f;
}

Mor zero_mor(const Obj& dom, const Obj& cod) {
  require_same_base(dom.base, cod.base);
  if (dom.base.is_set()) throw Error(Errc::Unsupported, "finset has no zero morphisms");
  return {dom, cod, {}, Vec(dom.size() * cod.size(), 0)};
}

Mor compose(const Mor& g, const Mor& f) {
  if (!same_shape(f.cod, g.dom)) throw Error(Errc::ShapeMismatch, "compose: codomain/domain differ");
  Mor h{f.dom, g.cod, {}, {}};
  if (f.dom.base.is_set()) {
    h.map.resize(f.dom.size());
    for (std::size_t k = 0; k < f.dom.size(); ++k) h.map[k] = g.map[f.map[k]];
    return h;
  }
  const auto p = f.dom.base.p;
  const std::size_t n = f.dom.size(), m = f.cod.size(), r = g.cod.size();
  h.mat.assign(r * n, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint64_t a = g.mat[i * m + j];
      if (!a) continue;
      for (std::size_t k = 0; k < n; ++k)
        h.mat[i * n + k] = static_cast<std::uint32_t>((h.mat[i * n + k] + a * f.mat[j * n + k]) % p);
    }
  return h;
}

Mor from_columns(const Obj& dom, const Obj& cod, const std::function<Elem(std::size_t)>& col) {
  require_same_base(dom.base, cod.base);
  Mor f{dom, cod, {}, {}};
  if (dom.base.is_set()) {
    f.map.resize(dom.size());
    for (std::size_t k = 0; k < dom.size(); ++k) {
      f.map[k] = as_index(col(k));
      if (f.map[k] >= cod.size()) throw Error(Errc::ShapeMismatch, "column value out of range");
    }
    return f;
  }
  f.mat.assign(dom.size() * cod.size(), 0);
  for (std::size_t k = 0; k < dom.size(); ++k) {
    const Elem e = col(k);
    const Vec& v = as_vec(e);
    if (v.size() != cod.size()) throw Error(Errc::ShapeMismatch, "column length");
    for (std::size_t r = 0; r < cod.size(); ++r) f.mat[r * dom.size() + k] = v[r];
  }
  return f;
}

Elem basis(const Obj& x, std::size_t k) {
  if (k >= x.size()) throw Error(Errc::BadElement, "basis index out of range");
  if (x.base.is_set()) return k;
  Vec v(x.size(), 0);
  v[k] = 1;
  return v;
}

Elem unit_elem(const Base& b) {
  if (b.is_set()) return std::size_t{0};
  return Vec{1};
}

Elem zero_elem(const Obj& x) {
  if (x.base.is_set()) throw Error(Errc::Unsupported, "finset has no zero element");
  return Vec(x.size(), 0);
}

Elem eval(const Mor& f, const Elem& e) {
  if (f.dom.base.is_set()) {
    const auto k = as_index(e);
    if (k >= f.dom.size()) throw Error(Errc::BadElement, "element outside domain");
    return f.map[k];
  }
  const Vec& v = as_vec(e);
  if (v.size() != f.dom.size()) throw Error(Errc::BadElement, "vector length differs from domain");
  const auto p = f.dom.base.p;
  const std::size_t n = f.dom.size(), m = f.cod.size();
  std::vector<std::uint64_t> acc(m, 0);
  for (std::size_t c = 0; c < n; ++c) {
    if (!v[c]) continue;
    for (std::size_t r = 0; r < m; ++r) acc[r] = (acc[r] + std::uint64_t{f.mat[r * n + c]} * v[c]) % p;
  }
  return Vec(acc.begin(), acc.end());
}

Elem add(const Base& b, const Elem& x, const Elem& y) {
  const Vec &a = as_vec(x), &c = as_vec(y);
  if (a.size() != c.size()) throw Error(Errc::ShapeMismatch, "add: lengths differ");
  Vec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = fp::add(a[k], c[k], b.p);
  return r;
}

Elem scale(const Base& b, std::uint32_t c, const Elem& x) {
  Vec r = as_vec(x);
  for (auto& v : r) v = fp::mul(v, c, b.p);
  return r;
}

bool is_zero(const Elem& e) {
  const Vec& v = as_vec(e);
  return std::all_of(v.begin(), v.end(), [](auto a) { return a == 0; });
}

bool elem_in(const Obj& x, const Elem& e) {
  if (x.base.is_set()) {
    auto* k = std::get_if<std::size_t>(&e);
    return k && *k < x.size();
  }
  auto* v = std::get_if<Vec>(&e);
  if (!v || v->size() != x.size()) return false;
  return std::all_of(v->begin(), v->end(), [&](auto a) { return a < x.base.p; });
}

void require_elem(const Obj& x, const Elem& e, const std::string& where) {
  if (!elem_in(x, e)) throw Error(Errc::BadElement, where);
}

std::string render(const Obj& x, const Elem& e) {
  if (x.base.is_set()) return x.labels.at(as_index(e));
  std::ostringstream os;
  os << '[';
  const Vec& v = as_vec(e);
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ']';
  return os.str();
}

Mor point(const Obj& x, const Elem& e) {
  require_elem(x, e, "point");
  const Obj one = unit_obj(x.base);
  return from_columns(one, x, [&](std::size_t) { return e; });
}

Elem element_of(const Mor& m) { return eval(m, unit_elem(m.dom.base)); }

Obj tensor(const Obj& x, const Obj& y) {
  require_same_base(x.base, y.base);
  Obj t{x.base, {}};
  t.labels.reserve(x.size() * y.size());
  for (const auto& a : x.labels)
    for (const auto& b : y.labels) t.labels.push_back("(" + a + "," + b + ")");
  return t;
}

Mor tensor(const Mor& f, const Mor& g) {
  Mor h{tensor(f.dom, g.dom), tensor(f.cod, g.cod), {}, {}};
  const std::size_t n1 = f.dom.size(), n2 = g.dom.size(), m1 = f.cod.size(), m2 = g.cod.size();
  if (f.dom.base.is_set()) {
    h.map.resize(n1 * n2);
    for (std::size_t a = 0; a < n1; ++a)
      for (std::size_t b = 0; b < n2; ++b) h.map[a * n2 + b] = f.map[a] * m2 + g.map[b];
    return h;
  }
  const auto p = f.dom.base.p;
  const std::size_t n = n1 * n2;
  h.mat.assign(m1 * m2 * n, 0);
  for (std::size_t r1 = 0; r1 < m1; ++r1)
    for (std::size_t c1 = 0; c1 < n1; ++c1) {
      const auto a = f.mat[r1 * n1 + c1];
      if (!a) continue;
      for (std::size_t r2 = 0; r2 < m2; ++r2)
        for (std::size_t c2 = 0; c2 < n2; ++c2)
          h.mat[(r1 * m2 + r2) * n + c1 * n2 + c2] = fp::mul(a, g.mat[r2 * n2 + c2], p);
    }
  return h;
}

Elem tensor_elem(const Obj& x, const Elem& a, const Obj& y, const Elem& b) {
  if (x.base.is_set()) return as_index(a) * y.size() + as_index(b);
  const Vec &u = as_vec(a), &v = as_vec(b);
  Vec r(u.size() * v.size(), 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i]) continue;
    for (std::size_t j = 0; j < v.size(); ++j) r[i * v.size() + j] = fp::mul(u[i], v[j], x.base.p);
  }
  return r;
}

// Under the row-major layout the associator and unitors act as the identity on indices.
static Mor reindex(const Obj& dom, const Obj& cod, const std::function<std::size_t(std::size_t)>& f) {
  return from_columns(dom, cod, [&](std::size_t k) { return basis(cod, f(k)); });
}

Mor assoc(const Obj& a, const Obj& b, const Obj& c) {
  return reindex(tensor(tensor(a, b), c), tensor(a, tensor(b, c)), [](std::size_t k) { return k; });
}
Mor assoc_inv(const Obj& a, const Obj& b, const Obj& c) {
  return reindex(tensor(a, tensor(b, c)), tensor(tensor(a, b), c), [](std::size_t k) { return k; });
}
Mor left_unitor(const Obj& a) {
  return reindex(tensor(unit_obj(a.base), a), a, [](std::size_t k) { return k; });
}
Mor left_unitor_inv(const Obj& a) {
  return reindex(a, tensor(unit_obj(a.base), a), [](std::size_t k) { return k; });
}
Mor right_unitor(const Obj& a) {
  return reindex(tensor(a, unit_obj(a.base)), a, [](std::size_t k) { return k; });
}
Mor right_unitor_inv(const Obj& a) {
  return reindex(a, tensor(a, unit_obj(a.base)), [](std::size_t k) { return k; });
}
Mor symmetry(const Obj& a, const Obj& b) {
  const std::size_t nb = b.size(), na = a.size();
  return reindex(tensor(a, b), tensor(b, a), [=](std::size_t k) { return (k % nb) * na + k / nb; });
}

std::size_t TaggedCoproduct::block_of(std::size_t k) const {
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (k >= offsets[i] && k < offsets[i] + parts[i].size()) return i;
  throw Error(Errc::BadElement, "index outside coproduct");
}

TaggedCoproduct coproduct(const Base& b, const std::vector<std::pair<std::string, Obj>>& parts) {
  TaggedCoproduct c;
  std::set<std::string> seen;
  std::vector<std::string> labels;
  std::size_t off = 0;
  for (const auto& [tag, obj] : parts) {
    require_same_base(b, obj.base);
    if (!seen.insert(tag).second) throw Error(Errc::DuplicateTag, tag);
    c.tags.push_back(tag);
    c.parts.push_back(obj);
    c.offsets.push_back(off);
    for (const auto& l : obj.labels) labels.push_back(tag + ":" + l);
    off += obj.size();
  }
  c.total = Obj{b, std::move(labels)};
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    const auto o = c.offsets[i];
    c.injections.push_back(reindex(c.parts[i], c.total, [o](std::size_t k) { return o + k; }));
  }
  return c;
}

Mor copair(const TaggedCoproduct& c, const std::vector<Mor>& legs, const Obj& t) {
  if (legs.size() != c.parts.size()) throw Error(Errc::ShapeMismatch, "copair: leg count");
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (!same_shape(legs[i].dom, c.parts[i]) || !same_shape(legs[i].cod, t))
      throw Error(Errc::ShapeMismatch, "copair: leg shape");
  }
  return from_columns(c.total, t, [&](std::size_t k) {
    const auto i = c.block_of(k);
    return eval(legs[i], basis(c.parts[i], k - c.offsets[i]));
  });
}

std::pair<TaggedCoproduct, Mor> distributor(const TaggedCoproduct& c, const Obj& n) {
  std::vector<std::pair<std::string, Obj>> parts;
  for (std::size_t i = 0; i < c.parts.size(); ++i) parts.emplace_back(c.tags[i], tensor(c.parts[i], n));
  auto d = coproduct(c.total.base, parts);
  const std::size_t nn = n.size();
  Mor iso = reindex(tensor(c.total, n), d.total, [&](std::size_t k) {
    const auto [m, y] = split_index(k, n);
    const auto i = c.block_of(m);
    return d.offsets[i] + (m - c.offsets[i]) * nn + y;
  });
  return {std::move(d), std::move(iso)};
}

namespace linalg {
std::vector<std::size_t> rref(Vec& m, std::size_t rows, std::size_t cols, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t s = r;
    while (s < rows && m[s * cols + c] == 0) ++s;
    if (s == rows) continue;
    if (s != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m[s * cols + k], m[r * cols + k]);
    const auto iv = fp::inv(m[r * cols + c], p);
    for (std::size_t k = 0; k < cols; ++k) m[r * cols + k] = fp::mul(m[r * cols + k], iv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i * cols + c] == 0) continue;
      const auto f = m[i * cols + c];
      for (std::size_t k = 0; k < cols; ++k)
        m[i * cols + k] = fp::sub(m[i * cols + k], fp::mul(f, m[r * cols + k], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::pair<std::size_t, Vec>> kernel(const Vec& m0, std::size_t rows, std::size_t cols,
                                                std::uint32_t p) {
  Vec m = m0;
  const auto piv = rref(m, rows, cols, p);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::pair<std::size_t, Vec>> out;
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_piv[j]) continue;
    Vec v(cols, 0);
    v[j] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = fp::neg(m[r * cols + j], p);
    out.emplace_back(j, std::move(v));
  }
  return out;
}

std::vector<std::pair<std::size_t, Vec>> canonical_span(const std::vector<Vec>& vs, std::size_t n,
                                                        std::uint32_t p) {
  // Row-reduce with coordinates reversed so pivots are trailing entries.
  Vec m(vs.size() * n);
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m[r * n + c] = vs[r][n - 1 - c];
  const auto piv = rref(m, vs.size(), n, p);
  std::vector<std::pair<std::size_t, Vec>> out;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    Vec v(n);
    for (std::size_t c = 0; c < n; ++c) v[n - 1 - c] = m[r * n + c];
    out.emplace_back(n - 1 - piv[r], std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::optional<Vec> solve(const Vec& m0, std::size_t rows, std::size_t cols, const Vec& y,
                         std::uint32_t p) {
  const std::size_t w = cols + 1;
  Vec m(rows * w);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r * w + c] = m0[r * cols + c];
    m[r * w + cols] = y[r];
  }
  const auto piv = rref(m, rows, w, p);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  Vec x(cols, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m[r * w + cols];
  return x;
}

std::size_t rank(Vec m, std::size_t rows, std::size_t cols, std::uint32_t p) {
  return rref(m, rows, cols, p).size();
}
}  // namespace linalg

static Vec difference(const Mor& f, const Mor& g) {
  Vec d(f.mat.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = fp::sub(f.mat[k], g.mat[k], f.dom.base.p);
  return d;
}

Subobject equalizer(const Mor& f, const Mor& g) {
  if (!same_shape(f.dom, g.dom) || !same_shape(f.cod, g.cod))
    throw Error(Errc::ShapeMismatch, "equalizer: morphisms are not parallel");
  const Obj& a = f.dom;
  if (a.base.is_set()) {
    std::vector<std::string> labels;
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (f.map[k] == g.map[k]) {
        keep.push_back(k);
        labels.push_back(a.labels[k]);
      }
    Obj e{a.base, std::move(labels)};
    return {e, Mor{e, a, keep, {}}};
  }
  const auto ker = linalg::kernel(difference(f, g), f.cod.size(), a.size(), a.base.p);
  Obj e{a.base, {}};
  for (const auto& [j, v] : ker) e.labels.push_back(a.labels[j]);
  Mor incl = from_columns(e, a, [&](std::size_t k) { return Elem{ker[k].second}; });
  return {e, std::move(incl)};
}

PullbackResult pullback(const Mor& f, const Mor& g) {
  if (!same_shape(f.cod, g.cod)) throw Error(Errc::ShapeMismatch, "pullback: codomains differ");
  const Obj &a = f.dom, &b = g.dom;
  Mor p1, p2;
  if (a.base.is_set()) {
    const Obj ab = tensor(a, b);
    p1 = reindex(ab, a, [&](std::size_t k) { return k / b.size(); });
    p2 = reindex(ab, b, [&](std::size_t k) { return k % b.size(); });
  } else {
    auto s = coproduct(a.base, {{"1", a}, {"2", b}});
    p1 = from_columns(s.total, a, [&](std::size_t k) {
      return k < a.size() ? basis(a, k) : zero_elem(a);
    });
    p2 = from_columns(s.total, b, [&](std::size_t k) {
      return k >= a.size() ? basis(b, k - a.size()) : zero_elem(b);
    });
  }
  auto eq = equalizer(compose(f, p1), compose(g, p2));
  return {eq.obj, compose(p1, eq.incl), compose(p2, eq.incl)};
}

std::optional<Elem> lift(const Mor& mono, const Elem& y) {
  if (mono.dom.base.is_set()) {
    const auto t = as_index(y);
    for (std::size_t k = 0; k < mono.map.size(); ++k)
      if (mono.map[k] == t) return Elem{k};
    return std::nullopt;
  }
  auto x = linalg::solve(mono.mat, mono.cod.size(), mono.dom.size(), as_vec(y), mono.dom.base.p);
  if (!x) return std::nullopt;
  return Elem{std::move(*x)};
}

Mor lift_mor(const Mor& mono, const Mor& h) {
  if (!same_shape(h.cod, mono.cod)) throw Error(Errc::ShapeMismatch, "lift: codomains differ");
  return from_columns(h.dom, mono.dom, [&](std::size_t k) {
    auto x = lift(mono, eval(h, basis(h.dom, k)));
    if (!x) throw Error(Errc::BadElement, "morphism does not factor through the subobject");
    return *x;
  });
}

bool is_iso(const Mor& f) {
  if (f.dom.size() != f.cod.size()) return false;
  if (f.dom.base.is_set()) {
    std::vector<bool> hit(f.cod.size(), false);
    for (auto v : f.map) {
      if (hit[v]) return false;
      hit[v] = true;
    }
    return true;
  }
  return linalg::rank(f.mat, f.cod.size(), f.dom.size(), f.dom.base.p) == f.dom.size();
}

Mor inverse(const Mor& f) {
  if (!is_iso(f)) throw Error(Errc::NotIso, "morphism is not invertible");
  return lift_mor(f, identity(f.cod));
}

Comonoid free_on_set(const Base& b, const std::vector<std::string>& s) {
  Obj c = object_like(b, s);
  const Obj cc = tensor(c, c);
  const Obj one = unit_obj(b);
  const std::size_t n = s.size();
  Mor delta = from_columns(c, cc, [&](std::size_t k) { return basis(cc, k * n + k); });
  Mor eps = from_columns(c, one, [&](std::size_t) { return basis(one, 0); });
  return {std::move(c), std::move(delta), std::move(eps)};
}

std::size_t default_size_cap() {
  if (const char* env = std::getenv("CATKIT_SIZE_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

std::vector<Elem> underlying_set(const Obj& x, std::size_t cap) {
  std::vector<Elem> out;
  if (x.base.is_set()) {
    if (x.size() > cap) throw Error(Errc::SizeCap, "underlying set larger than cap");
    for (std::size_t k = 0; k < x.size(); ++k) out.emplace_back(k);
    return out;
  }
  std::size_t total = 1;
  for (std::size_t k = 0; k < x.size(); ++k) {
    total *= x.base.p;
    if (total > cap) throw Error(Errc::SizeCap, "p^dim exceeds cap " + std::to_string(cap));
  }
  Vec v(x.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    out.emplace_back(v);
    for (std::size_t k = x.size(); k-- > 0;) {
      if (++v[k] < x.base.p) break;
      v[k] = 0;
    }
  }
  return out;
}

std::vector<Elem> underlying_set(const Obj& x) { return underlying_set(x, default_size_cap()); }

}  // namespace catkit
