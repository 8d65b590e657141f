// Symmetric monoidal base: finite sets or finite-dimensional F_p vector spaces.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace catkit {

enum class Errc {
  TagMismatch,
  ShapeMismatch,
  DuplicateTag,
  SizeCap,
  IncompleteData,
  BadElement,
  NotAComodule,
  Unsupported,
  NotIso,
  Parse,
  Reference,
  Invalid,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

enum class Kind { finset, finvect };

struct Base {
  Kind kind = Kind::finset;
  std::uint32_t p = 0;  // 0 for finset

  static Base finset() { return {Kind::finset, 0}; }
  static Base finvect(std::uint32_t p);
  bool is_set() const { return kind == Kind::finset; }
  bool operator==(const Base&) const = default;
};

std::string describe(const Base& b);

namespace fp {
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} + p - b) % p);
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce(std::int64_t a, std::uint32_t p);
bool is_prime(std::uint32_t p);
}  // namespace fp

using Vec = std::vector<std::uint32_t>;

// An element of an object: an index for finset, a coefficient vector for finvect.
using Elem = std::variant<std::size_t, Vec>;

std::size_t as_index(const Elem& e);
const Vec& as_vec(const Elem& e);

struct Obj {
  Base base;
  std::vector<std::string> labels;

  std::size_t size() const { return labels.size(); }
  bool operator==(const Obj&) const = default;
};

Obj finset_obj(std::vector<std::string> labels);
Obj finvect_obj(std::uint32_t p, std::size_t dim);
Obj finvect_obj(std::uint32_t p, std::vector<std::string> labels);
Obj unit_obj(const Base& b);
Obj zero_obj(const Base& b);
Obj object_like(const Base& b, std::vector<std::string> labels);

bool same_shape(const Obj& a, const Obj& b);

// finset: `map` is used; finvect: `mat` is row-major, cod.size() x dom.size().
struct Mor {
  Obj dom;
  Obj cod;
  std::vector<std::size_t> map;
  Vec mat;

  std::uint32_t at(std::size_t r, std::size_t c) const { return mat[r * dom.size() + c]; }
  bool operator==(const Mor&) const = default;
};

void check_mor(const Mor& f);
Mor identity(const Obj& x);
Mor zero_mor(const Obj& dom, const Obj& cod);
Mor compose(const Mor& g, const Mor& f);
Mor from_columns(const Obj& dom, const Obj& cod, const std::function<Elem(std::size_t)>& col);

Elem basis(const Obj& x, std::size_t k);
Elem unit_elem(const Base& b);
Elem zero_elem(const Obj& x);
Elem eval(const Mor& f, const Elem& e);
Elem add(const Base& b, const Elem& x, const Elem& y);
Elem scale(const Base& b, std::uint32_t c, const Elem& x);
bool is_zero(const Elem& e);
bool elem_in(const Obj& x, const Elem& e);
void require_elem(const Obj& x, const Elem& e, const std::string& where);
std::string render(const Obj& x, const Elem& e);

// Morphism 1 -> x picking out e, and back.
Mor point(const Obj& x, const Elem& e);
Elem element_of(const Mor& m);

Obj tensor(const Obj& x, const Obj& y);
Mor tensor(const Mor& f, const Mor& g);
Elem tensor_elem(const Obj& x, const Elem& a, const Obj& y, const Elem& b);
// Splits a basis index of x (x) y into its two factors.
inline std::pair<std::size_t, std::size_t> split_index(std::size_t k, const Obj& y) {
  return {k / y.size(), k % y.size()};
}

Mor assoc(const Obj& a, const Obj& b, const Obj& c);      // (a b) c -> a (b c)
Mor assoc_inv(const Obj& a, const Obj& b, const Obj& c);  // a (b c) -> (a b) c
Mor left_unitor(const Obj& a);                             // 1 a -> a
Mor left_unitor_inv(const Obj& a);
Mor right_unitor(const Obj& a);                            // a 1 -> a
Mor right_unitor_inv(const Obj& a);
Mor symmetry(const Obj& a, const Obj& b);                  // a b -> b a

struct TaggedCoproduct {
  std::vector<std::string> tags;
  std::vector<Obj> parts;
  std::vector<std::size_t> offsets;
  Obj total;
  std::vector<Mor> injections;

  std::size_t block_of(std::size_t k) const;  // summand containing basis index k
};

TaggedCoproduct coproduct(const Base& b, const std::vector<std::pair<std::string, Obj>>& parts);
Mor copair(const TaggedCoproduct& c, const std::vector<Mor>& legs, const Obj& target);
// (+_i M_i) (x) N -> +_i (M_i (x) N)
std::pair<TaggedCoproduct, Mor> distributor(const TaggedCoproduct& c, const Obj& n);

struct Subobject {
  Obj obj;
  Mor incl;
};

struct PullbackResult {
  Obj obj;
  Mor pr1;
  Mor pr2;
};

Subobject equalizer(const Mor& f, const Mor& g);
PullbackResult pullback(const Mor& f, const Mor& g);

// Returns x with mono(x) = y when it exists.
std::optional<Elem> lift(const Mor& mono, const Elem& y);
// Factors h through mono; throws BadElement when impossible.
Mor lift_mor(const Mor& mono, const Mor& h);

bool is_iso(const Mor& f);
Mor inverse(const Mor& f);

struct Comonoid {
  Obj carrier;
  Mor delta;
  Mor eps;
};

Comonoid free_on_set(const Base& b, const std::vector<std::string>& s);

std::size_t default_size_cap();
std::vector<Elem> underlying_set(const Obj& x, std::size_t cap);
std::vector<Elem> underlying_set(const Obj& x);

namespace linalg {
// Row-reduces a rows x cols row-major matrix in place; returns pivot columns.
std::vector<std::size_t> rref(Vec& m, std::size_t rows, std::size_t cols, std::uint32_t p);
// Kernel basis, one vector per free column in increasing order.
std::vector<std::pair<std::size_t, Vec>> kernel(const Vec& m, std::size_t rows, std::size_t cols,
                                                std::uint32_t p);
// Basis of the span normalised so each vector ends in a 1 that no other vector touches.
std::vector<std::pair<std::size_t, Vec>> canonical_span(const std::vector<Vec>& vs, std::size_t n,
                                                        std::uint32_t p);
std::optional<Vec> solve(const Vec& m, std::size_t rows, std::size_t cols, const Vec& y,
                         std::uint32_t p);
std::size_t rank(Vec m, std::size_t rows, std::size_t cols, std::uint32_t p);
}  // namespace linalg

}  // namespace catkit
