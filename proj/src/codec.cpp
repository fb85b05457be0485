#include "lam/codec.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "lam/typeinf.hpp"

namespace lam {

namespace {

// Floor division, matching integer // on possibly negative operands.
Nat fdiv(const Nat& a, const Nat& b) {
  Nat q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

long long to_ll(const Nat& n, const char* what) {
  if (n < 0 || n > std::numeric_limits<long long>::max())
    throw std::overflow_error(std::string(what) + " out of range");
  return n.convert_to<long long>();
}

void parens(const TreeRef& t, ParenWord& w);

void parens_body(const TreeRef& t, ParenWord& w) {
  if (is_leaf(t)) {
    w.push_back(1);
  } else {
    parens(t->l, w);
    parens_body(t->r, w);
  }
}

void parens(const TreeRef& t, ParenWord& w) {
  w.push_back(0);
  parens_body(t, w);
}

struct ParenReader {
  const ParenWord& w;
  std::size_t at = 0;

  int next() {
    if (at >= w.size()) throw std::invalid_argument("unbalanced parentheses");
    int d = w[at++];
    if (d != 0 && d != 1) throw std::invalid_argument("parens digits must be 0 or 1");
    return d;
  }

  TreeRef tree() {
    if (next() != 0) throw std::invalid_argument("unbalanced parentheses");
    return body();
  }

  TreeRef body() {
    if (at >= w.size()) throw std::invalid_argument("unbalanced parentheses");
    if (w[at] == 1) {
      ++at;
      return leaf();
    }
    TreeRef a = tree();
    TreeRef b = body();
    return node(a, b);
  }
};

// Within one word length: the number of paths from position x at height y
// to a completed balanced word, as a difference of two binomials.
Nat bin_dif(long long n, long long x, long long y) {
  Nat n1 = 2 * n - x;
  Nat r1 = Nat(n) - fdiv(Nat(x + y), 2);
  Nat r2 = r1 - 1;
  return binomial(n1, r1) - binomial(n1, r2);
}

Nat local_rank(long long n, const ParenWord& as) {
  Nat lo = 0;
  Nat hi = bin_dif(n, 0, 0) - 1;
  long long y = 0;
  for (long long x = 1; x < 2 * n; ++x) {
    if (as[static_cast<std::size_t>(x)] == 0) {
      hi -= bin_dif(n, x, y - 1);
      y += 1;
    } else {
      lo += bin_dif(n, x, y + 1);
      y -= 1;
    }
  }
  (void)hi;
  return lo;
}

void local_unrank(long long n, const Nat& r, ParenWord& as) {
  Nat lo = 0;
  Nat hi = bin_dif(n, 0, 0) - 1;
  long long y = 0;
  for (long long x = 1; x <= 2 * n; ++x) {
    Nat lk = lo + bin_dif(n, x, y + 1);
    if (r < lk) {
      hi = lk - 1;
      y += 1;
      as[static_cast<std::size_t>(x)] = 0;
    } else {
      lo = lk;
      y -= 1;
      as[static_cast<std::size_t>(x)] = 1;
    }
  }
  (void)hi;
}

// Sum of Catalan numbers below index i, stepping c through cat(0..i).
Nat catalans_below(long long i) {
  Nat s = 0, c = 1;
  for (long long j = 0; j < i; ++j) {
    s += c;
    c = c * 2 * (2 * j + 1) / (j + 2);
  }
  return s;
}

// Smallest m with binomial(m, k) > n, by doubling then bisection.
Nat upper_binomial(long long k, const Nat& n) {
  Nat s = n + k;
  Nat m = k;
  while (binomial(m, k) <= s) m *= 2;
  Nat from = fdiv(m, 2), to = m;
  while (from < to) {
    Nat mid = fdiv(from + to, 2);
    if (binomial(mid, k) > n)
      to = mid;
    else
      from = mid + 1;
  }
  return from;
}

std::vector<Nat> to_kset(long long k, const Nat& r) {
  std::vector<Nat> ds;
  Nat n = r;
  for (long long i = k; i >= 1; --i) {
    Nat m1 = upper_binomial(i, n) - 1;
    n -= binomial(m1, i);
    ds.push_back(m1);
  }
  if (n != 0) throw std::invalid_argument("rank not reachable with this width");
  std::reverse(ds.begin(), ds.end());
  return ds;
}

Nat from_kset(const std::vector<Nat>& xs) {
  Nat n = 0;
  long long i = 1;
  for (const Nat& x : xs) n += binomial(x, i++);
  return n;
}

TreeRef skel_of(const CompRef& t, LabelList& ns) {
  if (t->tag == CompTerm::Tag::Var) {
    ns.push_back(t->k);
    ns.push_back(t->n);
    return leaf();
  }
  ns.push_back(t->k);
  TreeRef a = skel_of(t->x, ns);
  TreeRef b = skel_of(t->y, ns);
  return node(a, b);
}

struct LabelReader {
  const LabelList& ns;
  std::size_t at = 0;

  long long next() {
    if (at >= ns.size()) throw std::invalid_argument("label list too short");
    return to_ll(ns[at++], "label");
  }

  CompRef build(const TreeRef& skel) {
    if (is_leaf(skel)) {
      long long k = next();
      long long n = next();
      return cv(k, n);
    }
    long long k = next();
    CompRef a = build(skel->l);
    CompRef b = build(skel->r);
    return ca(k, a, b);
  }
};

Nat random_bits(std::mt19937_64& rng, int bits) {
  Nat r = 0;
  for (int i = 0; i < bits; i += 32) {
    int take = std::min(32, bits - i);
    std::uint64_t chunk = rng() & ((1ull << take) - 1);
    r |= Nat(chunk) << i;
  }
  return r;
}

}  // namespace

ParenWord tree_to_parens(const TreeRef& t) {
  ParenWord w;
  parens(t, w);
  return w;
}

TreeRef parens_to_tree(const ParenWord& w) {
  ParenReader rd{w};
  TreeRef t = rd.tree();
  if (rd.at != w.size()) throw std::invalid_argument("unbalanced parentheses");
  return t;
}

Nat binomial(const Nat& n, const Nat& k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Nat kk = k;
  if (n - kk < kk) kk = n - kk;
  Nat p = 1;
  for (Nat i = 0; i < kk; ++i) p = (n - i) * p / (i + 1);
  return p;
}

Nat catalan_num(long long n) {
  Nat c = 1;
  for (long long j = 0; j < n; ++j) c = c * 2 * (2 * j + 1) / (j + 2);
  return c;
}

Nat rank_catalan(const ParenWord& w) {
  if (w.size() < 2 || w.size() % 2 != 0)
    throw std::invalid_argument("not a balanced word");
  long long i = (static_cast<long long>(w.size()) - 2) / 2;
  return catalans_below(i) + local_rank(i, w);
}

ParenWord unrank_catalan(const Nat& r) {
  if (r < 0) throw std::invalid_argument("rank must be nonnegative");
  Nat s = 0, c = 1;
  long long i = 0;
  while (s + c <= r) {
    s += c;
    c = c * 2 * (2 * i + 1) / (i + 2);
    ++i;
  }
  ParenWord as(static_cast<std::size_t>(2 * i + 1), 0);
  local_unrank(i, r - s, as);
  ParenWord w;
  w.reserve(as.size() + 1);
  w.push_back(0);
  w.insert(w.end(), as.begin() + 1, as.end());
  w.push_back(1);
  return w;
}

Nat rank_type(const TreeRef& t) { return rank_catalan(tree_to_parens(t)); }

TreeRef unrank_type(const Nat& r) { return parens_to_tree(unrank_catalan(r)); }

std::pair<ParenWord, LabelList> to_skel(const CompRef& t) {
  LabelList ns;
  TreeRef skel = skel_of(t, ns);
  return {tree_to_parens(skel), ns};
}

CompRef from_skel(const ParenWord& w, const LabelList& labels) {
  TreeRef skel = parens_to_tree(w);
  LabelReader rd{labels};
  CompRef t = rd.build(skel);
  if (rd.at != labels.size()) throw std::invalid_argument("label list too long");
  return t;
}

std::vector<Nat> list_to_set(const std::vector<Nat>& ns) {
  std::vector<Nat> xs;
  xs.reserve(ns.size());
  Nat y = -1;
  for (const Nat& n : ns) {
    if (n < 0) throw std::invalid_argument("naturals only");
    y = n + y + 1;
    xs.push_back(y);
  }
  return xs;
}

std::vector<Nat> set_to_list(const std::vector<Nat>& xs) {
  std::vector<Nat> ns;
  ns.reserve(xs.size());
  Nat y = -1;
  for (const Nat& x : xs) {
    if (x <= y) throw std::invalid_argument("not strictly increasing");
    ns.push_back(x - y - 1);
    y = x;
  }
  return ns;
}

Nat from_cantor(const std::vector<Nat>& ns) { return from_kset(list_to_set(ns)); }

std::vector<Nat> to_cantor(long long k, const Nat& r) {
  if (r < 0) throw std::invalid_argument("rank must be nonnegative");
  if (k == 0) {
    if (r > 0) throw std::invalid_argument("width 0 only encodes 0");
    return {};
  }
  if (k < 0) throw std::invalid_argument("width must be nonnegative");
  return set_to_list(to_kset(k, r));
}

Nat rank_term(const CompRef& t) {
  auto [w, ns] = to_skel(t);
  return from_cantor({rank_catalan(w), from_cantor(ns)});
}

CompRef unrank_term(const Nat& r) {
  std::vector<Nat> pair = to_cantor(2, r);
  ParenWord w = unrank_catalan(pair[0]);
  long long l = (static_cast<long long>(w.size()) - 2) / 2;
  LabelList ns = to_cantor(3 * l + 2, pair[1]);
  return from_skel(w, ns);
}

void ogen(const Nat& max, const CompSink& sink) {
  for (Nat i = 0; i <= max; ++i)
    if (!sink(unrank_term(i))) return;
}

void cgen(const Nat& max, const CompSink& sink) {
  ogen(max, [&](const CompRef& t) { return !is_closed(t) || sink(t); });
}

void tgen(const Nat& max, const CompSink& sink) {
  ogen(max, [&](const CompRef& t) {
    return !(is_closed(t) && typable(t)) || sink(t);
  });
}

std::optional<CompRef> ran_term(RanKind kind, int bits, std::uint64_t seed) {
  if (bits < 0) throw std::invalid_argument("bits must be nonnegative");
  std::mt19937_64 rng(seed);
  Nat x = Nat(1) << bits;
  Nat n = x + random_bits(rng, bits);
  Nat m = n + x;
  for (Nat i = n; i <= m; ++i) {
    CompRef t = unrank_term(i);
    switch (kind) {
      case RanKind::Open:
        return t;
      case RanKind::Closed:
        if (is_closed(t)) return t;
        break;
      case RanKind::Typed:
        if (is_closed(t) && typable(t)) return t;
        break;
    }
  }
  return std::nullopt;
}

}  // namespace lam
