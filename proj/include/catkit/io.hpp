// The .cat document format: named, typed entities over one base, in canonical JSON.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "catkit/diagram.hpp"
#include "catkit/fibers.hpp"

namespace catkit {

inline constexpr int kFormatVersion = 1;

struct IndexEntity {
  std::string name;
  IndexCat index;
};

struct VCatEntity {
  std::string name;
  VCatRef cat;
};

struct FunctorEntity {
  std::string name;
  std::string dom;
  std::string cod;
  VFunctor functor;
};

struct NatEntity {
  std::string name;
  std::string src;
  std::string tgt;
  VNatTrans nat;
};

// Categories and functors are referenced by name; eta and theta are stored inline and may be
// omitted for strict diagrams.
struct DiagramEntity {
  std::string name;
  bool lax = false;
  std::string index;
  std::vector<std::string> cats;   // per index object
  std::vector<std::string> funcs;  // per index morphism
  std::shared_ptr<const DiagramData> data;

  OplaxRef oplax() const;
  LaxRef lax_ref() const;
};

struct GradingEntity {
  std::string name;
  std::string category;
  std::string index;
  GradedRef graded;
};

// Adjoints to the comparison functors of a grading's fibers.
struct StructureEntity {
  std::string name;
  std::string grading;
  FiberStructure structure;
};

using Entity = std::variant<IndexEntity, VCatEntity, FunctorEntity, NatEntity, DiagramEntity, GradingEntity,
                            StructureEntity>;

const std::string& entity_name(const Entity& e);
const char* entity_type(const Entity& e);

struct Document {
  Base base;
  std::vector<Entity> entities;

  const Entity* find(const std::string& name) const;
  template <class T>
  const T* get(const std::string& name) const {
    const Entity* e = find(name);
    return e ? std::get_if<T>(e) : nullptr;
  }
  template <class T>
  const T* first() const {
    for (const auto& e : entities)
      if (auto p = std::get_if<T>(&e)) return p;
    return nullptr;
  }
};

// Throws Parse (with line and column), Reference, or, when `validate` is set, Invalid naming the
// entity and its first failing law.
Document parse_document(const std::string& text, bool validate = true);
std::string serialize(const Document& d);

Document load_document(const std::string& path, bool validate = true);
void save_document(const Document& d, const std::string& path);

// Every entity's laws, in document order.
Report validate_document(const Document& d);

// Builders; each returns the entity name. Diagrams, gradings and structures add their parts under
// derived names unless an equal part is already present.
std::string add_index(Document& d, const std::string& name, const IndexCat& i);
std::string add_vcat(Document& d, const std::string& name, const VCatRef& c);
std::string add_functor(Document& d, const std::string& name, const VFunctor& f);
std::string add_nat(Document& d, const std::string& name, const VNatTrans& t);
std::string add_diagram(Document& d, const std::string& name, const DiagramData& x, bool lax);
std::string add_grading(Document& d, const std::string& name, const GradedRef& g);
std::string add_structure(Document& d, const std::string& name, const std::string& grading,
                          const FiberStructure& s);

}  // namespace catkit
