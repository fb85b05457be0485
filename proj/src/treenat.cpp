#include "lam/treenat.hpp"

#include <limits>
#include <stdexcept>

namespace lam {

namespace {

constexpr long long kMaxShift = 1 << 20;  // result width guard, in bits

TreeRef x() { return leaf(); }

TreeRef one() { return node(leaf(), leaf()); }

bool leaf_p(const TreeRef& t) { return is_leaf(t); }

}  // namespace

Nat cons(const Nat& i, const Nat& j) {
  if (i < 0 || j < 0) throw std::invalid_argument("naturals only");
  if (i >= kMaxShift) throw std::overflow_error("tree natural too wide");
  long long sh = i.convert_to<long long>() + 1;
  long long d = j % 2 == 0 ? 1 : 0;
  return ((j + d) << sh) - d;
}

std::pair<Nat, Nat> decons(const Nat& c) {
  if (c < 1) throw std::domain_error("decons needs a positive number");
  long long b = (c % 2).convert_to<long long>();
  Nat kb = c + b;
  long long i = static_cast<long long>(boost::multiprecision::lsb(kb));
  Nat j = kb >> i;
  return {Nat(i > 0 ? i - 1 : 0), j - b};
}

TreeRef tree_of_nat(const Nat& k) {
  if (k < 0) throw std::invalid_argument("naturals only");
  if (k == 0) return x();
  auto [i, j] = decons(k);
  return node(tree_of_nat(i), tree_of_nat(j));
}

Nat nat_of_tree(const TreeRef& t) {
  if (leaf_p(t)) return 0;
  return cons(nat_of_tree(t->l), nat_of_tree(t->r));
}

int parity(const TreeRef& t) {
  int spine = 0;
  for (TreeRef c = t; !leaf_p(c); c = c->r) ++spine;
  return spine % 2;
}

bool tree_even(const TreeRef& t) { return parity(t) == 0; }

bool tree_odd(const TreeRef& t) { return parity(t) == 1; }

TreeRef tree_succ(const TreeRef& t) {
  if (leaf_p(t)) return one();
  if (leaf_p(t->r)) return node(t->l, one());
  const TreeRef& h = t->l;
  const TreeRef& ts = t->r;
  if (parity(t) == 0) {
    if (leaf_p(h)) return node(tree_succ(ts->l), ts->r);
    return node(x(), node(tree_pred(h), ts));
  }
  if (leaf_p(ts->l)) return node(h, node(tree_succ(ts->r->l), ts->r->r));
  return node(h, node(x(), node(tree_pred(ts->l), ts->r)));
}

TreeRef tree_pred(const TreeRef& t) {
  if (leaf_p(t)) throw std::domain_error("predecessor of zero");
  if (leaf_p(t->l) && leaf_p(t->r)) return x();
  if (!leaf_p(t->r) && leaf_p(t->r->l) && leaf_p(t->r->r))
    return node(t->l, x());
  const TreeRef& h = t->l;
  const TreeRef& ts = t->r;
  if (parity(t) == 0) {
    if (leaf_p(ts->l)) return node(h, node(tree_succ(ts->r->l), ts->r->r));
    return node(h, node(x(), node(tree_pred(ts->l), ts->r)));
  }
  if (leaf_p(h)) return node(tree_succ(ts->l), ts->r);
  return node(x(), node(tree_pred(h), ts));
}

TreeRef tree_add(const TreeRef& a, const TreeRef& b) {
  return tree_of_nat(nat_of_tree(a) + nat_of_tree(b));
}

TreeRef tree_sub(const TreeRef& a, const TreeRef& b) {
  Nat d = nat_of_tree(a) - nat_of_tree(b);
  if (d < 0) throw std::domain_error("negative difference");
  return tree_of_nat(d);
}

TreeRef rank_db(const DbRef& t, bool succ_indices) {
  switch (t->tag) {
    case DbTerm::Tag::Var: {
      if (t->idx == 0) return x();
      TreeRef k;
      if (succ_indices) {
        k = x();
        for (int i = 0; i < t->idx; ++i) k = tree_succ(k);
      } else {
        k = tree_of_nat(t->idx);
      }
      return node(k, x());
    }
    case DbTerm::Tag::Lam:
      return node(x(), rank_db(t->a, succ_indices));
    case DbTerm::Tag::App:
    default:
      return node(tree_succ(rank_db(t->a, succ_indices)),
                  tree_succ(rank_db(t->b, succ_indices)));
  }
}

DbRef unrank_db(const TreeRef& t) {
  if (leaf_p(t)) return dv(0);
  if (leaf_p(t->l)) return dl(unrank_db(t->r));
  if (leaf_p(t->r)) {
    Nat k = nat_of_tree(t->l);
    if (k > std::numeric_limits<int>::max())
      throw std::overflow_error("variable index exceeds machine range");
    return dv(k.convert_to<int>());
  }
  return da(unrank_db(tree_pred(t->l)), unrank_db(tree_pred(t->r)));
}

}  // namespace lam
