// Small presented categories with total composition tables.
#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "catkit/report.hpp"

namespace catkit {

struct IndexMor {
  std::string name;
  std::size_t dom = 0;
  std::size_t cod = 0;
  bool operator==(const IndexMor&) const = default;
};

struct IndexCat {
  std::vector<std::string> objects;
  std::vector<IndexMor> mors;
  std::vector<std::size_t> ident;          // identity morphism of each object
  std::vector<std::vector<long>> comp;     // comp[v][u] = v o u, or -1 when not composable

  std::size_t compose(std::size_t v, std::size_t u) const;
  std::vector<std::size_t> hom(std::size_t i, std::size_t j) const;
  std::size_t object_index(const std::string& name) const;
  std::size_t mor_index(const std::string& name) const;
  std::size_t position_in_hom(std::size_t u) const;  // index of u within hom(dom u, cod u)
  bool operator==(const IndexCat&) const = default;
};

// Builds the composition table from a function on composable pairs.
IndexCat make_index(std::vector<std::string> objects, std::vector<IndexMor> mors,
                    std::vector<std::size_t> ident,
                    const std::function<std::size_t(std::size_t, std::size_t)>& compose);

Report validate_index(const IndexCat& c);

IndexCat terminal_index();
IndexCat arrow_index();  // a --u--> b
// One-object category of a finite group given by names and a product table.
IndexCat group_index(const std::vector<std::string>& elems,
                     const std::function<std::size_t(std::size_t, std::size_t)>& mul);
IndexCat cyclic_index(std::size_t n);  // elements g0..g{n-1}, identity g0
IndexCat op(const IndexCat& c);

}  // namespace catkit
