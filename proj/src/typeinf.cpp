#include "lam/typeinf.hpp"

#include <stdexcept>
#include <unordered_map>

#include "lam/reduce.hpp"

namespace lam {

TypeEngine::TypeEngine() { nodes_.push_back({Kind::Base, kNone, kNone}); }

TypeEngine::Ref TypeEngine::fresh() {
  nodes_.push_back({Kind::Meta, kNone, kNone});
  return static_cast<Ref>(nodes_.size() - 1);
}

TypeEngine::Ref TypeEngine::arrow(Ref arg, Ref res) {
  nodes_.push_back({Kind::Arrow, arg, res});
  return static_cast<Ref>(nodes_.size() - 1);
}

TypeEngine::Ref TypeEngine::from_tree(const TreeRef& t) {
  if (is_leaf(t)) return base();
  Ref a = from_tree(t->l);
  Ref b = from_tree(t->r);
  return arrow(a, b);
}

TypeEngine::Ref TypeEngine::deref(Ref r) const {
  while (nodes_[r].kind == Kind::Meta && nodes_[r].a != kNone) r = nodes_[r].a;
  return r;
}

bool TypeEngine::is_base(Ref r) const { return nodes_[deref(r)].kind == Kind::Base; }
bool TypeEngine::is_meta(Ref r) const { return nodes_[deref(r)].kind == Kind::Meta; }
bool TypeEngine::is_arrow(Ref r) const { return nodes_[deref(r)].kind == Kind::Arrow; }
TypeEngine::Ref TypeEngine::arg(Ref r) const { return nodes_[deref(r)].a; }
TypeEngine::Ref TypeEngine::res(Ref r) const { return nodes_[deref(r)].b; }

TypeEngine::Mark TypeEngine::mark() const { return {trail_.size(), nodes_.size()}; }

void TypeEngine::undo(const Mark& m) {
  while (trail_.size() > m.trail) {
    nodes_[trail_.back()].a = kNone;
    trail_.pop_back();
  }
  nodes_.resize(m.nodes);
}

void TypeEngine::bind(Ref v, Ref t) {
  nodes_[v].a = t;
  trail_.push_back(v);
}

bool TypeEngine::occurs(Ref v, Ref t) const {
  t = deref(t);
  if (t == v) return true;
  if (nodes_[t].kind != Kind::Arrow) return false;
  return occurs(v, nodes_[t].a) || occurs(v, nodes_[t].b);
}

bool TypeEngine::unify_checked(Ref a, Ref b) {
  a = deref(a);
  b = deref(b);
  if (a == b) return true;
  if (nodes_[a].kind == Kind::Meta) {
    if (occurs(a, b)) return false;
    bind(a, b);
    return true;
  }
  if (nodes_[b].kind == Kind::Meta) {
    if (occurs(b, a)) return false;
    bind(b, a);
    return true;
  }
  if (nodes_[a].kind != nodes_[b].kind) return false;
  if (nodes_[a].kind == Kind::Arrow)
    return unify_checked(nodes_[a].a, nodes_[b].a) &&
           unify_checked(nodes_[a].b, nodes_[b].b);
  return true;
}

bool TypeEngine::unify_rational(Ref a, Ref b, std::vector<std::pair<Ref, Ref>>& seen) {
  a = deref(a);
  b = deref(b);
  if (a == b) return true;
  if (nodes_[a].kind == Kind::Meta) {
    bind(a, b);
    return true;
  }
  if (nodes_[b].kind == Kind::Meta) {
    bind(b, a);
    return true;
  }
  if (nodes_[a].kind != nodes_[b].kind) return false;
  if (nodes_[a].kind != Kind::Arrow) return true;
  for (auto& [x, y] : seen)
    if ((x == a && y == b) || (x == b && y == a)) return true;
  seen.emplace_back(a, b);
  return unify_rational(nodes_[a].a, nodes_[b].a, seen) &&
         unify_rational(nodes_[a].b, nodes_[b].b, seen);
}

bool TypeEngine::unify(Ref a, Ref b, bool occurs_check) {
  if (occurs_check) return unify_checked(a, b);
  std::vector<std::pair<Ref, Ref>> seen;
  return unify_rational(a, b, seen);
}

void TypeEngine::bind_base(Ref r) {
  std::vector<Ref> stack{r};
  std::vector<char> visited(nodes_.size(), 0);
  while (!stack.empty()) {
    Ref t = deref(stack.back());
    stack.pop_back();
    if (nodes_[t].kind == Kind::Meta) {
      bind(t, base());
    } else if (nodes_[t].kind == Kind::Arrow && !visited[t]) {
      visited[t] = 1;
      stack.push_back(nodes_[t].a);
      stack.push_back(nodes_[t].b);
    }
  }
}

namespace {
enum : char { kWhite = 0, kGrey = 1, kBlack = 2 };
}

static bool cyclic_dfs(const TypeEngine& E, TypeEngine::Ref r, std::vector<char>& color) {
  r = E.deref(r);
  if (!E.is_arrow(r)) return false;
  if (color[r] == kGrey) return true;
  if (color[r] == kBlack) return false;
  color[r] = kGrey;
  if (cyclic_dfs(E, E.arg(r), color) || cyclic_dfs(E, E.res(r), color)) return true;
  color[r] = kBlack;
  return false;
}

bool TypeEngine::is_cyclic(Ref r) const {
  std::vector<char> color(nodes_.size(), kWhite);
  return cyclic_dfs(*this, r, color);
}

TreeRef TypeEngine::to_tree(Ref r) const {
  r = deref(r);
  switch (nodes_[r].kind) {
    case Kind::Base: return leaf();
    case Kind::Arrow: {
      TreeRef a = to_tree(nodes_[r].a);
      TreeRef b = to_tree(nodes_[r].b);
      return node(std::move(a), std::move(b));
    }
    case Kind::Meta: throw std::logic_error("type is not ground");
  }
  return nullptr;
}

static void show_rec(const TypeEngine& E, TypeEngine::Ref r, std::string& out,
                     std::unordered_map<TypeEngine::Ref, int>& letters) {
  r = E.deref(r);
  if (E.is_base(r)) {
    out += 'x';
    return;
  }
  if (E.is_meta(r)) {
    auto [it, fresh] = letters.try_emplace(r, static_cast<int>(letters.size()));
    int id = it->second;
    out += static_cast<char>('A' + id % 26);
    if (id >= 26) out += std::to_string(id / 26);
    return;
  }
  auto side = [&](TypeEngine::Ref c) {
    if (E.is_arrow(c)) {
      out += '(';
      show_rec(E, c, out, letters);
      out += ')';
    } else {
      show_rec(E, c, out, letters);
    }
  };
  side(E.arg(r));
  out += '>';
  side(E.res(r));
}

std::string TypeEngine::show(Ref r) const {
  std::string out;
  std::unordered_map<Ref, int> letters;
  show_rec(*this, r, out, letters);
  return out;
}

static TypeEngine::Ref inst_rec(TypeEngine& E, TypeEngine::Ref r,
                                std::unordered_map<TypeEngine::Ref, TypeEngine::Ref>& map) {
  r = E.deref(r);
  if (E.is_base(r)) return E.base();
  if (E.is_meta(r)) {
    auto it = map.find(r);
    if (it != map.end()) return it->second;
    TypeEngine::Ref f = E.fresh();
    map.emplace(r, f);
    return f;
  }
  TypeEngine::Ref a = inst_rec(E, E.arg(r), map);
  TypeEngine::Ref b = inst_rec(E, E.res(r), map);
  return E.arrow(a, b);
}

TypeEngine::Ref TypeEngine::instantiate(Ref r) {
  std::unordered_map<Ref, Ref> map;
  return inst_rec(*this, r, map);
}

// ---------------------------------------------------------------- inference

namespace {

using Ref = TypeEngine::Ref;

bool db_poly(TypeEngine& E, const DbRef& t, Ref expected, std::vector<Ref>& env) {
  switch (t->tag) {
    case DbTerm::Tag::Var: {
      int i = t->idx;
      if (i >= static_cast<int>(env.size())) return false;
      return E.unify(expected, env[env.size() - 1 - i], true);
    }
    case DbTerm::Tag::Lam: {
      Ref x = E.fresh();
      Ref b = E.fresh();
      if (!E.unify(expected, E.arrow(x, b), true)) return false;
      env.push_back(x);
      bool ok = db_poly(E, t->a, b, env);
      env.pop_back();
      return ok;
    }
    case DbTerm::Tag::App: {
      Ref x = E.fresh();
      if (!db_poly(E, t->a, E.arrow(x, expected), env)) return false;
      return db_poly(E, t->b, x, env);
    }
  }
  return false;
}

struct StdEnv {
  std::vector<std::pair<Name, Ref>> bound;
  std::vector<std::pair<Name, Ref>> free;
};

bool std_poly(TypeEngine& E, const StdRef& t, Ref expected, StdEnv& env) {
  switch (t->tag) {
    case StdTerm::Tag::Var: {
      for (auto it = env.bound.rbegin(); it != env.bound.rend(); ++it)
        if (it->first == t->name) return E.unify(expected, it->second, true);
      for (auto& [n, r] : env.free)
        if (n == t->name) return E.unify(expected, r, true);
      Ref f = E.fresh();
      env.free.emplace_back(t->name, f);
      return E.unify(expected, f, true);
    }
    case StdTerm::Tag::Lam: {
      Ref x = E.fresh();
      Ref b = E.fresh();
      if (!E.unify(expected, E.arrow(x, b), true)) return false;
      env.bound.emplace_back(t->name, x);
      bool ok = std_poly(E, t->a, b, env);
      env.bound.pop_back();
      return ok;
    }
    case StdTerm::Tag::App: {
      Ref x = E.fresh();
      if (!std_poly(E, t->a, E.arrow(x, expected), env)) return false;
      return std_poly(E, t->b, x, env);
    }
  }
  return false;
}

Ref k_axiom(TypeEngine& E) {
  Ref a = E.fresh();
  Ref b = E.fresh();
  return E.arrow(a, E.arrow(b, a));
}

Ref s_axiom(TypeEngine& E) {
  Ref a = E.fresh();
  Ref b = E.fresh();
  Ref c = E.fresh();
  Ref abc = E.arrow(a, E.arrow(b, c));
  Ref ab = E.arrow(a, b);
  Ref ac = E.arrow(a, c);
  return E.arrow(abc, E.arrow(ab, ac));
}

bool sk_poly(TypeEngine& E, const SkRef& t, Ref expected, bool occ) {
  switch (t->tag) {
    case SkTerm::Tag::K: return E.unify(expected, k_axiom(E), occ);
    case SkTerm::Tag::S: return E.unify(expected, s_axiom(E), occ);
    case SkTerm::Tag::Hole: return false;
    case SkTerm::Tag::Ap: {
      Ref ta = E.fresh();
      Ref tb = E.fresh();
      if (!sk_poly(E, t->l, ta, occ)) return false;
      if (!sk_poly(E, t->r, tb, occ)) return false;
      return E.unify(ta, E.arrow(tb, expected), occ);
    }
  }
  return false;
}

bool x_poly(TypeEngine& E, const TreeRef& t, Ref expected, Ref x_schema) {
  if (is_leaf(t)) return E.unify(expected, E.instantiate(x_schema), true);
  Ref ta = E.fresh();
  Ref tb = E.fresh();
  if (!x_poly(E, t->l, ta, x_schema)) return false;
  if (!x_poly(E, t->r, tb, x_schema)) return false;
  return E.unify(ta, E.arrow(tb, expected), true);
}

}  // namespace

TreeRef bind_base(const PolyType& t) {
  t.eng->bind_base(t.root);
  return t.eng->to_tree(t.root);
}

std::optional<PolyType> infer_std(const StdRef& t) {
  PolyType p{std::make_shared<TypeEngine>(), 0};
  p.root = p.eng->fresh();
  StdEnv env;
  if (!std_poly(*p.eng, t, p.root, env)) return std::nullopt;
  return p;
}

std::optional<TreeRef> infer_db(const DbRef& t) {
  TypeEngine E;
  Ref root = E.fresh();
  std::vector<Ref> env;
  if (!db_poly(E, t, root, env)) return std::nullopt;
  E.bind_base(root);
  return E.to_tree(root);
}

std::optional<TreeRef> infer_compressed(const CompRef& t) {
  return infer_db(compressed_to_db(t));
}

bool typable(const CompRef& t) { return infer_compressed(t).has_value(); }
bool typable_db(const DbRef& t) { return infer_db(t).has_value(); }

std::optional<PolyType> infer_sk(const SkRef& t) {
  PolyType p{std::make_shared<TypeEngine>(), 0};
  p.root = p.eng->fresh();
  if (!sk_poly(*p.eng, t, p.root, true)) return std::nullopt;
  return p;
}

std::optional<TreeRef> infer_sk_simple(const SkRef& t) {
  auto p = infer_sk(t);
  if (!p) return std::nullopt;
  return bind_base(*p);
}

bool typable_sk(const SkRef& t) { return infer_sk(t).has_value(); }

std::optional<TreeRef> infer_x(const TreeRef& t, XMode mode) {
  if (mode == XMode::Borrowed) return infer_db(x_to_db(t));
  TypeEngine E;
  Ref x_schema = E.fresh();
  std::vector<Ref> env;
  if (!db_poly(E, x_db(), x_schema, env)) return std::nullopt;
  Ref root = E.fresh();
  if (!x_poly(E, t, root, x_schema)) return std::nullopt;
  E.bind_base(root);
  return E.to_tree(root);
}

PolyType useless_type(const SkRef& t) {
  PolyType p{std::make_shared<TypeEngine>(), 0};
  p.root = p.eng->fresh();
  sk_poly(*p.eng, t, p.root, false);
  return p;
}

bool checks_db(const DbRef& t, const TreeRef& type) {
  TypeEngine E;
  Ref root = E.from_tree(type);
  std::vector<Ref> env;
  return db_poly(E, t, root, env);
}

bool checks_sk(const SkRef& t, const TreeRef& type) {
  TypeEngine E;
  Ref root = E.from_tree(type);
  return sk_poly(E, t, root, true);
}

}  // namespace lam
