#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lam/codec.hpp"
#include "lam/gen.hpp"
#include "lam/lab.hpp"
#include "lam/reduce.hpp"
#include "lam/treenat.hpp"
#include "lam/typeinf.hpp"

using namespace lam;

namespace {

std::vector<DbRef> siblings_of(const char* s) {
  std::vector<DbRef> out;
  type_siblings(parse_db(s), [&](const DbRef& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

long long count_self_typed(int n) {
  long long c = 0;
  gen_self_typed(n, true, [&](const TreeRef&) {
    ++c;
    return true;
  });
  return c;
}

// The maximal typable subtrees, outside-in; the independent reading of what
// a frontier should contain.
void maximal_typable(const SkRef& t, std::vector<SkRef>& out) {
  if (typable_sk(t)) {
    out.push_back(t);
    return;
  }
  maximal_typable(t->l, out);
  maximal_typable(t->r, out);
}

// A bound inferred type is its term's shape with leaves where the
// metavariables were, so it must match the tree from the root down.
bool prefix_of(const TreeRef& p, const TreeRef& t) {
  if (is_leaf(p)) return true;
  if (is_leaf(t)) return false;
  return prefix_of(p->l, t->l) && prefix_of(p->r, t->r);
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

TEST_CASE("type siblings") {
  auto got = siblings_of("l(l(a(v(0),a(v(0),v(1)))))");
  REQUIRE(got.size() == 2);
  CHECK(show(got[0]) == "l(l(a(v(0),v(1))))");
  CHECK(show(got[1]) == "l(l(a(v(0),a(v(0),v(1)))))");
  auto want = infer_db(parse_db("l(l(a(v(0),a(v(0),v(1)))))"));
  for (auto& s : got) {
    auto ty = infer_db(s);
    REQUIRE(ty.has_value());
    CHECK(eq(*ty, *want));
    CHECK(term_size(s) <= 4);
  }

  auto ks = siblings_of("l(l(v(1)))");
  REQUIRE(ks.size() == 2);
  CHECK(show(ks[0]) == "l(l(v(0)))");
  CHECK(show(ks[1]) == "l(l(v(1)))");

  auto id = siblings_of("l(v(0))");
  REQUIRE(id.size() == 1);
  CHECK(show(id[0]) == "l(v(0))");

  CHECK_THROWS_AS(type_siblings(parse_db("l(a(v(0),v(0)))"),
                                [](const DbRef&) { return true; }),
                  std::domain_error);
}

TEST_CASE("typed queries by type") {
  std::vector<std::string> got;
  query_typed(3, parse_tree("x>x"), true, [&](const DbRef& t) {
    got.push_back(show(t));
    return true;
  });
  std::vector<std::string> want = {"a(l(v(0)),l(v(0)))", "l(a(l(v(0)),v(0)))",
                                   "l(a(l(v(1)),v(0)))"};
  CHECK(got == want);

  long long hits = 0;
  query_typed(12, parse_tree("(x>x)>x"), false, [&](const DbRef&) {
    ++hits;
    return true;
  });
  CHECK(hits == 0);
}

TEST_CASE("growth sequences") {
  using seq = std::vector<long long>;
  CHECK(growth_sequence(parse_tree("x>(x>x)"), 11) ==
        seq{0, 2, 0, 14, 12, 201, 445, 4632, 17789, 158271, 891635});
  CHECK(growth_sequence(parse_tree("x>x"), 10) ==
        seq{1, 0, 3, 3, 31, 78, 596, 2500, 18474, 110265});
  CHECK(growth_sequence(parse_tree("(x>x)>(x>x)"), 10) ==
        seq{0, 0, 1, 1, 18, 52, 503, 2381, 19855, 125599});
  CHECK(growth_sequence(parse_tree("(x>x)>((x>x)>(x>x))"), 10) ==
        seq{0, 0, 0, 0, 2, 6, 96, 505, 5287, 36769});
  CHECK(growth_sequence(parse_tree("((x>x)>(x>x))>((x>x)>(x>x))"), 10) ==
        seq{0, 0, 0, 0, 0, 6, 23, 432, 2450, 29924});
  CHECK(growth_sequence(parse_tree("(x>x)>x"), 11) == seq(11, 0));
}

TEST_CASE("type census") {
  auto rows = type_census(9, 10);
  REQUIRE(rows.size() == 10);

  long long types[] = {1, 1, 5, 16, 55, 235, 1102, 5757, 33251};
  long long terms[] = {1, 2, 9, 40, 238, 1564, 11807, 98529, 904318};
  for (int i = 0; i < 9; ++i) {
    CAPTURE(i);
    CHECK(rows[i].size == i + 1);
    CHECK_FALSE(rows[i].cumulative);
    CHECK(rows[i].types == types[i]);
    CHECK(rows[i].terms == terms[i]);
    CHECK(rows[i].ratio ==
          doctest::Approx((double)types[i] / terms[i]).epsilon(1e-9));
  }
  CHECK(rows[8].ratio == doctest::Approx(0.036).epsilon(0.03));

  CHECK(rows[3].top.at(0) ==
        std::pair<std::string, long long>{"x>(x>x)", 14});
  CHECK(rows[6].top.at(0) ==
        std::pair<std::string, long long>{"x>(x>(x>x))", 732});
  CHECK(rows[6].top.at(1) == std::pair<std::string, long long>{"x>x", 596});
  CHECK(rows[8].top.at(0) ==
        std::pair<std::string, long long>{"x>(x>(x>x))", 20214});
  CHECK(rows[8].top.at(1) ==
        std::pair<std::string, long long>{"(x>x)>(x>x)", 19855});

  auto& cum = rows[9];
  CHECK(cum.cumulative);
  CHECK(cum.size == 9);
  CHECK(cum.types == 33972);
  CHECK(cum.terms == 1016508);
  std::vector<std::pair<std::string, long long>> top = {
      {"x>(x>x)", 23095},
      {"(x>x)>(x>x)", 22811},
      {"x>(x>(x>x))", 22514},
      {"x>x", 21686},
      {"x>((x>x)>x)", 18271},
      {"(x>x)>(x>(x>x))", 14159},
      {"((x>x)>x)>((x>x)>x)", 13254},
      {"x>((x>x)>(x>x))", 12921},
      {"(x>x)>(((x>x)>x)>x)", 11541},
      {"(x>(x>x))>(x>(x>x))", 10919},
  };
  CHECK(cum.top == top);
}

TEST_CASE("census matches the typed generator") {
  auto rows = type_census(7, 1);
  for (int n = 1; n <= 7; ++n) {
    long long terms = 0;
    std::set<std::string> types;
    gen_typed(n, true, [&](const DbRef&, const TreeRef& ty) {
      ++terms;
      types.insert(show(ty));
      return true;
    });
    CAPTURE(n);
    CHECK(rows[n - 1].terms == terms);
    CHECK(rows[n - 1].types == (long long)types.size());
  }
}

TEST_CASE("census sharding changes nothing") {
  auto a = type_census(6, 5, 1);
  auto b = type_census(6, 5, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CAPTURE(i);
    CHECK(a[i].size == b[i].size);
    CHECK(a[i].cumulative == b[i].cumulative);
    CHECK(a[i].types == b[i].types);
    CHECK(a[i].terms == b[i].terms);
    CHECK(a[i].top == b[i].top);
  }
}

TEST_CASE("queries by type partition the typed terms") {
  for (int n = 3; n <= 6; ++n) {
    std::map<std::string, TreeRef> types;
    long long terms = 0;
    gen_typed(n, true, [&](const DbRef&, const TreeRef& ty) {
      ++terms;
      types.emplace(show(ty), ty);
      return true;
    });
    long long sum = 0;
    for (auto& [_, ty] : types)
      query_typed(n, ty, true, [&](const DbRef&) {
        ++sum;
        return true;
      });
    CAPTURE(n);
    CHECK(sum == terms);
  }
}

TEST_CASE("combinator density tables") {
  auto sk = sk_density(9);
  REQUIRE(sk.size() == 10);
  long long sk_typed[] = {2,     4,     14,     67,     337,
                          1867,  10699, 63567,  387080, 2401657};
  for (int n = 0; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(sk[n].size == n);
    CHECK(sk[n].typed == sk_typed[n]);
    CHECK(Nat(sk[n].total) == catalan_num(n) * (Nat(1) << (n + 1)));
    CHECK(sk[n].ratio ==
          doctest::Approx((double)sk[n].typed / sk[n].total).epsilon(1e-9));
  }
  for (int n = 0; n <= 5; ++n) {
    long long typed = 0, total = 0;
    gen_sk(n, true, [&](const SkRef& t) {
      ++total;
      if (typable_sk(t)) ++typed;
      return true;
    });
    CAPTURE(n);
    CHECK(sk[n].typed == typed);
    CHECK(sk[n].total == total);
  }

  auto x = x_density(12);
  REQUIRE(x.size() == 13);
  long long x_typed[] = {1,    1,    2,     5,     12,    38,   113,
                         357,  1148, 3794,  12706, 43074, 147697};
  for (int n = 0; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(x[n].typed == x_typed[n]);
    CHECK(Nat(x[n].total) == catalan_num(n));
  }
  CHECK(x[4].ratio == doctest::Approx(12.0 / 14).epsilon(1e-9));
  // the other inference route must agree on every count it contributes to
  for (int n = 0; n <= 6; ++n) {
    long long typed = 0;
    gen_tree(n, true, [&](const TreeRef& t) {
      if (infer_x(t, XMode::Direct)) ++typed;
      return true;
    });
    CAPTURE(n);
    CHECK(x[n].typed == typed);
  }
}

TEST_CASE("well-typed frontier") {
  auto t = parse_sk("s*s*(s*k*k)*(s*s*(s*k*k))");
  auto d = well_typed_frontier(t);
  CHECK(show(d.trunk) == "A*B*(C*D)");
  REQUIRE(d.equations.size() == 4);
  const char* eqs[] = {"s*s", "s*k*k", "s*s", "s*k*k"};
  for (int i = 0; i < 4; ++i) {
    CAPTURE(i);
    CHECK(d.equations[i].first == i);
    CHECK(show(d.equations[i].second) == eqs[i]);
  }
  CHECK(eq(fuse_frontier(d), t));

  auto f = extract_frontier(t);
  REQUIRE(f.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(show(f[i]) == eqs[i]);

  auto typ = parse_sk("k*s");
  auto dt = well_typed_frontier(typ);
  CHECK(show(dt.trunk) == "A");
  REQUIRE(dt.equations.size() == 1);
  CHECK(dt.equations[0].first == 0);
  CHECK(eq(dt.equations[0].second, typ));
  CHECK(eq(fuse_frontier(dt), typ));
}

TEST_CASE("frontier members are maximal") {
  for (int n = 0; n <= 6; ++n)
    gen_sk(n, true, [&](const SkRef& t) {
      auto got = extract_frontier(t);
      std::vector<SkRef> want;
      maximal_typable(t, want);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(eq(got[i], want[i]));
        CHECK(typable_sk(got[i]));
      }
      CHECK(eq(fuse_frontier(well_typed_frontier(t)), t));
      return true;
    });
}

TEST_CASE("simplifying sk terms") {
  CHECK(show(simplify_sk(parse_sk("s*s*s*(s*s)*s*(k*s*k)"))) ==
        "s*s*s*(s*s)*s*s");
  CHECK(show(simplify_sk(parse_sk("k*(s*s*s*(s*s)*s*(k*s*k))"))) ==
        "k*(s*s*s*(s*s)*s*s)");

  auto t = parse_sk("s*k*k*s");
  CHECK(eq(simplify_sk(t), sk_s()));
  CHECK(eq(simplify_sk(t), *eval_sk(t)));

  auto t0 = std::chrono::steady_clock::now();
  for (int n = 0; n <= 8; ++n)
    gen_sk(n, true, [&](const SkRef& u) {
      simplify_sk(u);
      return true;
    });
  CHECK(elapsed_since(t0) < 60.0);
}

TEST_CASE("frontier statistics") {
  auto rows = frontier_stats(8);
  REQUIRE(rows.size() == 8);
  for (int i = 0; i < 8; ++i) {
    CAPTURE(i);
    CHECK(rows[i].size == i + 1);
    CHECK(rows[i].trunk + rows[i].frontier ==
          doctest::Approx((double)(i + 1)).epsilon(1e-9));
    CHECK(rows[i].trunk_pct + rows[i].frontier_pct ==
          doctest::Approx(100.0).epsilon(1e-9));
  }
  CHECK(rows[0].trunk == doctest::Approx(0.0));
  CHECK(rows[0].frontier == doctest::Approx(1.0));
  CHECK(rows[1].trunk == doctest::Approx(0.125));
  CHECK(rows[1].frontier == doctest::Approx(1.875));
  CHECK(std::abs(rows[3].trunk - 0.47) <= 0.01);
  CHECK(std::abs(rows[3].frontier - 3.53) <= 0.01);
  CHECK(std::abs(rows[3].trunk_pct - 11.77) <= 0.25);
  CHECK(std::abs(rows[3].frontier_pct - 88.23) <= 0.25);
  CHECK(std::abs(rows[7].trunk - 1.58) <= 0.01);
  CHECK(std::abs(rows[7].frontier - 6.42) <= 0.01);
}

TEST_CASE("iterated type maps") {
  auto [kt, ks] = iter_type(parse_tree("(x>x)>x"));
  CHECK(ks == 3);
  REQUIRE(kt.size() == 3);
  CHECK(show(kt[0]) == "x>(x>x)");
  CHECK(show(kt[1]) == "(x>(x>x))>((x>x)>(x>x))");
  CHECK(show(kt[2]) == "(x>x)>(x>x)");

  auto [st, ss] = iter_type(parse_tree("((x>(x>x))>((x>x)>x))>((x>x)>x)"));
  CHECK(ss == 5);
  REQUIRE(st.size() == 5);
  CHECK(show(st[0]) == "x>x");
  CHECK(show(st[4]) == "(x>x)>(x>x)");

  auto [ct, cs] = iter_type(parse_tree("(x>x)>x"), 2);
  CHECK(cs == 2);
  REQUIRE(ct.size() == 2);
  CHECK(eq(ct[0], kt[0]));
  CHECK(eq(ct[1], kt[1]));

  auto [ut, us] = iter_type(parse_tree("x>((x>(x>x))>x)"));
  CHECK(us == 0);
  CHECK(ut.empty());

  for (int n = 0; n <= 5; ++n)
    gen_tree(n, true, [&](const TreeRef& t) {
      auto [types, steps] = iter_type(t);
      CHECK(steps == (int)types.size());
      std::set<std::string> seen;
      for (auto& ty : types) CHECK(seen.insert(show(ty)).second);
      return true;
    });
}

TEST_CASE("self-typed trees") {
  long long want[] = {0, 0, 0, 1, 2, 4, 14, 34, 101, 315, 1017};
  for (int n = 1; n <= 11; ++n) {
    CAPTURE(n);
    CHECK(count_self_typed(n) == want[n - 1]);
  }

  std::vector<std::string> six;
  gen_self_typed(6, true, [&](const TreeRef& t) {
    six.push_back(show(t));
    return true;
  });
  std::vector<std::string> expect = {
      "x>((x>x)>((x>x)>(x>x)))",
      "x>(((x>(x>x))>(x>x))>x)",
      "(x>x)>((x>(x>x))>(x>x))",
      "(x>x)>(((x>x)>x)>(x>x))",
  };
  CHECK(six == expect);

  for (int n = 1; n <= 8; ++n)
    gen_self_typed(n, true, [&](const TreeRef& t) {
      CHECK(checks_db(x_to_db(t), t));
      auto ty = infer_x(t, XMode::Borrowed);
      REQUIRE(ty.has_value());
      CHECK(prefix_of(*ty, t));
      return true;
    });
}

TEST_CASE("size-inflating injections") {
  int sizes[] = {27, 57, 86, 86};
  for (long long i = 0; i <= 3; ++i) {
    CAPTURE(i);
    CHECK(term_size(inflate_t2t(tree_of_nat(i))) == sizes[i]);
  }
  CHECK(show(inflate_t2t(leaf())) ==
        "x>((((x>x)>(((x>x)>x)>x))>((x>(x>x))>((x>(((x>(x>x))>x)>(x>x)))>"
        "(x>(((x>x)>x)>(x>x))))))>(x>((x>(x>x))>x)))");

  auto skk = da(da(s_db(), k_db()), k_db());
  CHECK(term_size(skk) == 12);
  CHECK(term_size(inflate_b2b(skk)) == 374);

  std::set<std::string> seen;
  long long n_trees = 0;
  gen_tree(4, false, [&](const TreeRef& t) {
    ++n_trees;
    seen.insert(show(inflate_t2t(t)));
    return true;
  });
  CHECK((long long)seen.size() == n_trees);

  std::set<std::string> seen_db;
  long long n_db = 0;
  for (int n = 1; n <= 4; ++n)
    gen_db(n, true, [&](const DbRef& t) {
      ++n_db;
      seen_db.insert(show(inflate_b2b(t)));
      return true;
    });
  CHECK((long long)seen_db.size() == n_db);
}

TEST_CASE("eval-or-successor orbits") {
  auto o = orbit(x_db(), 20);
  REQUIRE(o.size() == 21);
  CHECK(eq(o[0], x_db()));
  int sizes[] = {14, 11, 10, 13, 15, 10, 9, 9, 9, 7, 7,
                 6,  5,  5,  5,  6,  6,  6, 4, 5, 7};
  for (int i = 0; i <= 20; ++i) {
    CAPTURE(i);
    CHECK(term_size(o[i]) == sizes[i]);
  }
  for (int i = 0; i < 20; ++i) {
    CAPTURE(i);
    if (typable_db(o[i]) && !eq(*nf_db(o[i]), o[i]))
      CHECK(eq(o[i + 1], *nf_db(o[i])));
    else
      CHECK(eq(o[i + 1], unrank_db(tree_succ(rank_db(o[i])))));
  }

  auto k = orbit(k_db(), 2);
  REQUIRE(k.size() == 3);
  CHECK(show(k[1]) == "l(v(2))");
  CHECK(show(k[2]) == "v(3)");
  CHECK(eq(k[1], unrank_db(tree_succ(rank_db(k_db())))));

  auto u = orbit(parse_db("l(a(v(0),v(0)))"), 3);
  REQUIRE(u.size() == 4);
  CHECK(show(u[1]) == "l(l(l(l(v(0)))))");
  CHECK(show(u[2]) == "a(v(0),l(v(0)))");
  CHECK(show(u[3]) == "a(v(0),l(l(v(0))))");
}
