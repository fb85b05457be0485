#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lam/term.hpp"

// Simple-type inference for every term species, built on one first-order
// unification engine. Types live in an arena of nodes (base `x`, arrows,
// metavariables); bindings are recorded on a trail so generators can roll
// back to a mark and explore alternatives.

namespace lam {

class TypeEngine {
 public:
  using Ref = std::int32_t;
  static constexpr Ref kNone = -1;

  TypeEngine();

  Ref base() const { return 0; }
  Ref fresh();
  Ref arrow(Ref arg, Ref res);
  Ref from_tree(const TreeRef& t);

  Ref deref(Ref r) const;
  bool is_base(Ref r) const;
  bool is_meta(Ref r) const;
  bool is_arrow(Ref r) const;
  Ref arg(Ref r) const;
  Ref res(Ref r) const;

  struct Mark {
    std::size_t trail;
    std::size_t nodes;
  };
  Mark mark() const;
  void undo(const Mark& m);

  // With occurs_check the bind step refuses self-embedding (keeping every
  // binding acyclic); without it, cyclic bindings are allowed and the
  // unification still terminates on the rational trees they create.
  bool unify(Ref a, Ref b, bool occurs_check);

  void bind_base(Ref r);          // bind every unbound meta under r to base
  bool is_cyclic(Ref r) const;
  TreeRef to_tree(Ref r) const;   // pre: ground, acyclic
  std::string show(Ref r) const;  // metas lettered A,B,... by first use; pre: acyclic
  Ref instantiate(Ref r);         // copy with fresh metas (schema instance)

 private:
  enum class Kind : std::uint8_t { Base, Meta, Arrow };
  struct Node {
    Kind kind;
    Ref a;  // Meta: binding or kNone; Arrow: argument
    Ref b;  // Arrow: result
  };
  std::vector<Node> nodes_;
  std::vector<Ref> trail_;

  void bind(Ref v, Ref t);
  bool occurs(Ref v, Ref t) const;
  bool unify_checked(Ref a, Ref b);
  bool unify_rational(Ref a, Ref b, std::vector<std::pair<Ref, Ref>>& seen);
};

// An inferred type that may still contain metavariables, together with the
// engine that owns its bindings.
struct PolyType {
  std::shared_ptr<TypeEngine> eng;
  TypeEngine::Ref root = TypeEngine::kNone;
  std::string str() const { return eng->show(root); }
  bool cyclic() const { return eng->is_cyclic(root); }
};

// Binds the remaining metavariables to the base type and returns the ground
// tree. The PolyType's own bindings are updated in the process.
TreeRef bind_base(const PolyType& t);

std::optional<PolyType> infer_std(const StdRef& t);
std::optional<TreeRef> infer_db(const DbRef& t);
std::optional<TreeRef> infer_compressed(const CompRef& t);
bool typable(const CompRef& t);
bool typable_db(const DbRef& t);

std::optional<PolyType> infer_sk(const SkRef& t);
std::optional<TreeRef> infer_sk_simple(const SkRef& t);
bool typable_sk(const SkRef& t);

enum class XMode { Borrowed, Direct };
std::optional<TreeRef> infer_x(const TreeRef& t, XMode mode);

// Same shape of inference as infer_sk but with cycle-tolerant unification,
// so it succeeds on every SK term; the result may be a cyclic scheme.
PolyType useless_type(const SkRef& t);

// Checking (not inference): does the term admit the given ground type?
bool checks_db(const DbRef& t, const TreeRef& type);
bool checks_sk(const SkRef& t, const TreeRef& type);

}  // namespace lam
