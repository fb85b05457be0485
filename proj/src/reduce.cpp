#include "lam/reduce.hpp"

namespace lam {

DbRef shift_var(int inc, int cutoff, const DbRef& t) {
  switch (t->tag) {
    case DbTerm::Tag::Var:
      return t->idx >= cutoff ? dv(t->idx + inc) : t;
    case DbTerm::Tag::Lam:
      return dl(shift_var(inc, cutoff + 1, t->a));
    case DbTerm::Tag::App:
      return da(shift_var(inc, cutoff, t->a), shift_var(inc, cutoff, t->b));
  }
  return nullptr;
}

DbRef subst(const DbRef& body, int idx, const DbRef& arg) {
  switch (body->tag) {
    case DbTerm::Tag::Var: {
      int n = body->idx;
      if (n > idx) return dv(n - 1);
      if (n < idx) return body;
      return shift_var(idx, 0, arg);
    }
    case DbTerm::Tag::Lam:
      return dl(subst(body->a, idx + 1, arg));
    case DbTerm::Tag::App:
      return da(subst(body->a, idx, arg), subst(body->b, idx, arg));
  }
  return nullptr;
}

DbRef beta(const DbRef& lam, const DbRef& arg) { return subst(lam->a, 0, arg); }

namespace {

// Countdown shared by one evaluation; step() throws when it hits bottom.
struct FuelOut {};

struct Fuel {
  long long left;
  void step() {
    if (left < 0) return;
    if (left == 0) throw FuelOut{};
    --left;
  }
};

DbRef wh_nf(const DbRef& t, Fuel& f);

DbRef wh_nf1(const DbRef& fun, const DbRef& arg, Fuel& f) {
  switch (fun->tag) {
    case DbTerm::Tag::Var:
      return da(fun, arg);
    case DbTerm::Tag::Lam:
      f.step();
      return wh_nf(beta(fun, arg), f);
    case DbTerm::Tag::App:
      return da(fun, arg);
  }
  return nullptr;
}

// Weak head normal form: no reduction under lambdas or in arguments.
DbRef wh_nf(const DbRef& t, Fuel& f) {
  if (t->tag != DbTerm::Tag::App) return t;
  return wh_nf1(wh_nf(t->a, f), t->b, f);
}

DbRef to_nf(const DbRef& t, Fuel& f) {
  switch (t->tag) {
    case DbTerm::Tag::Var:
      return t;
    case DbTerm::Tag::Lam:
      return dl(to_nf(t->a, f));
    case DbTerm::Tag::App: {
      DbRef head = wh_nf(t->a, f);
      switch (head->tag) {
        case DbTerm::Tag::Var:
          return da(head, to_nf(t->b, f));
        case DbTerm::Tag::Lam:
          f.step();
          return to_nf(beta(head, t->b), f);
        case DbTerm::Tag::App:
          return da(to_nf(head, f), to_nf(t->b, f));
      }
      return nullptr;
    }
  }
  return nullptr;
}

}  // namespace

std::optional<DbRef> whnf(const DbRef& t, long long fuel) {
  Fuel f{fuel};
  try {
    return wh_nf(t, f);
  } catch (FuelOut&) {
    return std::nullopt;
  }
}

std::optional<DbRef> nf_db(const DbRef& t, long long fuel) {
  Fuel f{fuel};
  try {
    return to_nf(t, f);
  } catch (FuelOut&) {
    return std::nullopt;
  }
}

std::optional<StdRef> eval_std(const StdRef& t, long long fuel) {
  auto r = nf_db(std_to_db(t), fuel);
  if (!r) return std::nullopt;
  return db_to_std(*r);
}

std::optional<CompRef> eval_compressed(const CompRef& t, long long fuel) {
  auto r = nf_db(compressed_to_db(t), fuel);
  if (!r) return std::nullopt;
  return db_to_compressed(*r);
}

// ---------------------------------------------------------------- SK trees

namespace {

bool is_ap(const SkRef& t) { return t->tag == SkTerm::Tag::Ap; }

SkRef ap_sk(const SkRef& f, const SkRef& g, Fuel& fu) {
  // (s*X)*Y applied to Z rewrites to (X Z)(Y Z); the rule is tried first.
  if (is_ap(f) && is_ap(f->l) && f->l->l->tag == SkTerm::Tag::S) {
    fu.step();
    SkRef r1 = ap_sk(f->l->r, g, fu);
    SkRef r2 = ap_sk(f->r, g, fu);
    return ap_sk(r1, r2, fu);
  }
  if (is_ap(f) && f->l->tag == SkTerm::Tag::K) {
    fu.step();
    return f->r;
  }
  return sk_ap(f, g);
}

SkRef ev_sk(const SkRef& t, Fuel& fu) {
  if (!is_ap(t)) return t;
  SkRef f = ev_sk(t->l, fu);
  SkRef g = ev_sk(t->r, fu);
  return ap_sk(f, g, fu);
}

}  // namespace

std::optional<SkRef> eval_sk(const SkRef& t, long long fuel) {
  Fuel f{fuel};
  try {
    return ev_sk(t, f);
  } catch (FuelOut&) {
    return std::nullopt;
  }
}

std::optional<SkRef> app_sk(const SkRef& f, const SkRef& g, long long fuel) {
  Fuel fu{fuel};
  try {
    return ap_sk(f, g, fu);
  } catch (FuelOut&) {
    return std::nullopt;
  }
}

DbRef k_db() {
  static const DbRef k = dl(dl(dv(1)));
  return k;
}

DbRef s_db() {
  static const DbRef s = dl(dl(dl(da(da(dv(2), dv(0)), da(dv(1), dv(0))))));
  return s;
}

DbRef sk_to_db(const SkRef& t) {
  switch (t->tag) {
    case SkTerm::Tag::S: return s_db();
    case SkTerm::Tag::K: return k_db();
    case SkTerm::Tag::Ap: return da(sk_to_db(t->l), sk_to_db(t->r));
    case SkTerm::Tag::Hole:
      throw std::invalid_argument("cannot expand a term with holes");
  }
  return nullptr;
}

// ---------------------------------------------------------------- X trees

namespace {

// X K = K-behavior, X S = S-behavior; the rule patterns below are the
// images of K and S under the encoding:  K-tree = (x>x)>x,  S-tree = x>(x>x).
bool is_k_tree(const TreeRef& t) {
  return !is_leaf(t) && !is_leaf(t->l) && is_leaf(t->l->l) && is_leaf(t->l->r) &&
         is_leaf(t->r);
}

bool is_s_tree(const TreeRef& t) {
  return !is_leaf(t) && is_leaf(t->l) && !is_leaf(t->r) && is_leaf(t->r->l) &&
         is_leaf(t->r->r);
}

TreeRef ap_x(const TreeRef& f, const TreeRef& g, Fuel& fu) {
  // ((K-tree)>X) applied to Y gives X; tried before the S rule.
  if (!is_leaf(f) && is_k_tree(f->l)) {
    fu.step();
    return f->r;
  }
  // (((S-tree)>X)>Y) applied to Z gives (X Z)(Y Z).
  if (!is_leaf(f) && !is_leaf(f->l) && is_s_tree(f->l->l)) {
    fu.step();
    TreeRef r1 = ap_x(f->l->r, g, fu);
    TreeRef r2 = ap_x(f->r, g, fu);
    return ap_x(r1, r2, fu);
  }
  return node(f, g);
}

TreeRef ev_x(const TreeRef& t, Fuel& fu) {
  if (is_leaf(t)) return t;
  TreeRef f = ev_x(t->l, fu);
  TreeRef g = ev_x(t->r, fu);
  return ap_x(f, g, fu);
}

}  // namespace

std::optional<TreeRef> eval_x(const TreeRef& t, long long fuel) {
  Fuel f{fuel};
  try {
    return ev_x(t, f);
  } catch (FuelOut&) {
    return std::nullopt;
  }
}

std::optional<TreeRef> app_x(const TreeRef& f, const TreeRef& g, long long fuel) {
  Fuel fu{fuel};
  try {
    return ap_x(f, g, fu);
  } catch (FuelOut&) {
    return std::nullopt;
  }
}

DbRef x_db() {
  static const DbRef x = dl(da(da(da(dv(0), k_db()), s_db()), k_db()));
  return x;
}

DbRef x_to_db(const TreeRef& t) {
  if (is_leaf(t)) return x_db();
  return da(x_to_db(t->l), x_to_db(t->r));
}

std::optional<DbRef> eval_as_t(const TreeRef& t, long long fuel) {
  auto r = eval_x(t, fuel);
  if (!r) return std::nullopt;
  return x_to_db(*r);
}

std::optional<DbRef> eval_as_b(const TreeRef& t, long long fuel) {
  return nf_db(x_to_db(t), fuel);
}

}  // namespace lam
