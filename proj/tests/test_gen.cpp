#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "lam/gen.hpp"
#include "lam/typeinf.hpp"
#include "oracles.hpp"

using namespace lam;

namespace {

std::vector<std::string> tree_list(int n, bool exact) {
  std::vector<std::string> out;
  gen_tree(n, exact, [&](const TreeRef& t) {
    out.push_back(show(t));
    return true;
  });
  return out;
}

std::vector<std::string> comp_list(void (*gen)(int, bool, const CompSink&), int n, bool exact) {
  std::vector<std::string> out;
  gen(n, exact, [&](const CompRef& t) {
    out.push_back(show(t));
    return true;
  });
  return out;
}

std::vector<std::string> typed_pairs(void (*gen)(int, bool, const PairSink&), int n, bool exact) {
  std::vector<std::string> out;
  gen(n, exact, [&](const DbRef& t, const TreeRef& ty) {
    out.push_back(show(t) + " : " + show(ty));
    return out.size() < 2000000;
  });
  return out;
}

long long db_gen_count(int n, bool exact) {
  long long c = 0;
  gen_db(n, exact, [&](const DbRef&) {
    ++c;
    return true;
  });
  return c;
}

int tree_depth(const TreeRef& t) {
  if (is_leaf(t)) return 0;
  return 1 + std::max(tree_depth(t->l), tree_depth(t->r));
}

long long mot_size(const MotRef& t) {
  switch (t->tag) {
    case Mot::Tag::U: return 1;
    case Mot::Tag::L: return 1 + mot_size(t->a);
    case Mot::Tag::A: return 1 + mot_size(t->a) + mot_size(t->b);
  }
  return 0;
}

long long mot_ops(const MotRef& t) {
  switch (t->tag) {
    case Mot::Tag::U: return 0;
    case Mot::Tag::L: return 1 + mot_ops(t->a);
    case Mot::Tag::A: return 1 + mot_ops(t->a) + mot_ops(t->b);
  }
  return 0;
}

// Trees with free leaves and unit-cost unary/binary nodes, counted by the
// obvious recurrence; first values 1, 2, 6, 22, 90, 394.
long long two_op_tree_count(int n) {
  std::vector<long long> c{1};
  for (int m = 1; m <= n; ++m) {
    long long v = c[m - 1];
    for (int i = 0; i < m; ++i) v += c[i] * c[m - 1 - i];
    c.push_back(v);
  }
  return c[n];
}

long long occurrences(const DbRef& t, long long i) {
  switch (t->tag) {
    case DbTerm::Tag::Var: return t->idx == i ? 1 : 0;
    case DbTerm::Tag::Lam: return occurrences(t->a, i + 1);
    case DbTerm::Tag::App: return occurrences(t->a, i) + occurrences(t->b, i);
  }
  return 0;
}

bool binder_uses_within(const DbRef& t, long long lo, long long hi) {
  switch (t->tag) {
    case DbTerm::Tag::Var: return true;
    case DbTerm::Tag::Lam: {
      long long n = occurrences(t->a, 0);
      return n >= lo && n <= hi && binder_uses_within(t->a, lo, hi);
    }
    case DbTerm::Tag::App:
      return binder_uses_within(t->a, lo, hi) && binder_uses_within(t->b, lo, hi);
  }
  return false;
}

int max_lams_on_path(const DbRef& t) {
  switch (t->tag) {
    case DbTerm::Tag::Var: return 0;
    case DbTerm::Tag::Lam: return 1 + max_lams_on_path(t->a);
    case DbTerm::Tag::App:
      return std::max(max_lams_on_path(t->a), max_lams_on_path(t->b));
  }
  return 0;
}

// Independent reading of a binary code: 00 lambda, 01 application, then a
// unary block of x ones and a zero for variable x.
DbRef decode_code(const std::vector<int>& code, std::size_t& at) {
  REQUIRE(at < code.size());
  if (code[at] == 1) {
    long long x = 0;
    while (at < code.size() && code[at] == 1) {
      ++x;
      ++at;
    }
    REQUIRE(at < code.size());
    ++at;  // closing zero
    return dv(x);
  }
  ++at;
  REQUIRE(at < code.size());
  if (code[at] == 0) {
    ++at;
    return dl(decode_code(code, at));
  }
  ++at;
  DbRef a = decode_code(code, at);
  DbRef b = decode_code(code, at);
  return da(a, b);
}

}  // namespace

TEST_CASE("trees bounded by depth") {
  std::vector<long long> want = {1, 2, 5, 26, 677};
  for (int d = 0; d < (int)want.size(); ++d) {
    std::vector<std::string> got;
    gen_tree_by_depth(d, [&](const TreeRef& t) {
      CHECK(tree_depth(t) <= d);
      got.push_back(show(t));
      return true;
    });
    CHECK((long long)got.size() == want[d]);
    CHECK(oracle::depth_bounded_trees(d) == want[d]);
    std::set<std::string> uniq(got.begin(), got.end());
    CHECK(uniq.size() == got.size());
  }
  std::vector<std::string> d2;
  gen_tree_by_depth(2, [&](const TreeRef& t) {
    d2.push_back(show(t));
    return true;
  });
  CHECK(d2 == std::vector<std::string>{"x", "x>x", "x>(x>x)", "(x>x)>x", "(x>x)>(x>x)"});
  // same set as a size-bounded enumeration filtered by depth
  std::set<std::string> byfilter;
  for (int n = 0; n <= 7; ++n)
    for (auto& t : oracle::all_trees(n))
      if (tree_depth(t) <= 3) byfilter.insert(show(t));
  std::set<std::string> bydepth;
  gen_tree_by_depth(3, [&](const TreeRef& t) {
    bydepth.insert(show(t));
    return true;
  });
  CHECK(bydepth == byfilter);
}

TEST_CASE("trees by size") {
  long long upto = 0;
  for (int n = 0; n <= 8; ++n) {
    auto got = tree_list(n, true);
    CHECK((long long)got.size() == oracle::catalan(n));
    std::set<std::string> want;
    for (auto& t : oracle::all_trees(n)) want.insert(show(t));
    CHECK(std::set<std::string>(got.begin(), got.end()) == want);
    CHECK(got.size() == want.size());
    upto += got.size();
    CHECK((long long)tree_list(n, false).size() == upto);
  }
  CHECK(tree_list(3, true) ==
        std::vector<std::string>{"x>(x>(x>x))", "x>((x>x)>x)", "(x>x)>(x>x)", "(x>(x>x))>x",
                                 "((x>x)>x)>x"});
}

TEST_CASE("unary-binary trees") {
  for (int n = 1; n <= 9; ++n) {
    long long c = 0;
    gen_motzkin(n, true, [&](const MotRef& t) {
      CHECK(mot_size(t) == n);
      ++c;
      return true;
    });
    CHECK(c == oracle::motzkin_count(n));
  }
  std::vector<std::string> upto3;
  gen_motzkin(3, false, [&](const MotRef& t) {
    upto3.push_back(show(t));
    return true;
  });
  CHECK(upto3 == std::vector<std::string>{"u", "l(u)", "l(l(u))", "a(u,u)"});

  // free-leaf variant: only unary/binary nodes cost fuel
  for (int n = 0; n <= 5; ++n) {
    long long c = 0;
    gen_motzkin(n, true, [&](const MotRef& t) {
      CHECK(mot_ops(t) == n);
      ++c;
      return true;
    }, true);
    CHECK(c == two_op_tree_count(n));
  }
}

TEST_CASE("closed terms: counts and exhaustiveness") {
  std::vector<long long> want = {1, 3, 14, 82, 579, 4741, 43977};
  long long cum = 0;
  for (int n = 1; n <= 7; ++n) {
    CHECK(db_gen_count(n, true) == want[n - 1]);
    CHECK(oracle::db_count(n, 0) == want[n - 1]);
    cum += want[n - 1];
    CHECK(db_gen_count(n, false) == cum);
  }
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> got;
    gen_db(n, true, [&](const DbRef& t) {
      CHECK(is_closed(t));
      got.insert(show(t));
      return true;
    });
    std::set<std::string> want_set;
    for (auto& t : oracle::db_terms(n, 0)) want_set.insert(show(t));
    CHECK(got == want_set);
  }
  CHECK(comp_list(gen_compressed, 2, true) ==
        std::vector<std::string>{"v(2,0)", "v(2,1)", "a(1,v(0,0),v(0,0))"});
}

TEST_CASE("named, de Bruijn and compressed enumerations align") {
  for (int n = 1; n <= 5; ++n) {
    for (bool exact : {true, false}) {
      std::vector<std::string> via_db, direct, comp, from_db;
      gen_standard(n, exact, [&](const StdRef& t) {
        via_db.push_back(show(t));
        return true;
      });
      gen_lambda_std(n, exact, [&](const StdRef& t) {
        direct.push_back(show(t));
        return true;
      });
      CHECK(via_db == direct);
      gen_compressed(n, exact, [&](const CompRef& t) {
        comp.push_back(show(t));
        return true;
      });
      gen_db(n, exact, [&](const DbRef& t) {
        from_db.push_back(show(db_to_compressed(t)));
        return true;
      });
      CHECK(comp == from_db);
    }
  }
}

TEST_CASE("normal forms") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::string> got;
    gen_nf(n, true, [&](const CompRef& t) {
      CHECK(oracle::is_nf(compressed_to_db(t)));
      got.push_back(show(t));
      return true;
    });
    std::set<std::string> want;
    for (auto& t : oracle::db_terms(n, 0))
      if (oracle::is_nf(t)) want.insert(show(db_to_compressed(t)));
    CHECK(got.size() == want.size());
    CHECK(std::set<std::string>(got.begin(), got.end()) == want);
  }
  CHECK(comp_list(gen_nf, 2, true) ==
        std::vector<std::string>{"v(2,0)", "v(2,1)", "a(1,v(0,0),v(0,0))"});
  // upto mode accumulates the exact slices in order
  std::vector<std::string> upto, slices;
  gen_nf(4, false, [&](const CompRef& t) {
    upto.push_back(show(t));
    return true;
  });
  for (int n = 1; n <= 4; ++n)
    for (auto& s : comp_list(gen_nf, n, true)) slices.push_back(s);
  CHECK(upto.size() == slices.size());
  std::multiset<std::string> a(upto.begin(), upto.end()), b(slices.begin(), slices.end());
  CHECK(a == b);
}

TEST_CASE("linear terms") {
  std::vector<std::string> l3;
  gen_linear(3, [&](const CompRef& t) {
    l3.push_back(show(t));
    return true;
  });
  CHECK(l3 == std::vector<std::string>{"a(2,v(0,1),v(0,0))", "a(2,v(0,0),v(0,1))",
                                       "a(1,v(0,0),v(1,0))", "a(1,v(1,0),v(0,0))",
                                       "a(0,v(1,0),v(1,0))"});
  // exactly the closed terms using every binder exactly once
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> got;
    gen_linear(n, [&](const CompRef& t) {
      got.insert(show(t));
      return true;
    });
    std::set<std::string> want;
    for (auto& t : oracle::db_terms(n, 0))
      if (binder_uses_within(t, 1, 1)) want.insert(show(db_to_compressed(t)));
    CHECK(got == want);
  }
}

TEST_CASE("affine terms") {
  std::vector<std::string> a3;
  gen_affine(3, [&](const CompRef& t) {
    a3.push_back(show(t));
    return true;
  });
  CHECK(a3 == std::vector<std::string>{"v(3,0)", "a(2,v(0,1),v(0,0))", "a(2,v(0,0),v(0,1))",
                                       "a(1,v(0,0),v(1,0))", "a(1,v(1,0),v(0,0))",
                                       "a(0,v(1,0),v(1,0))"});
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> affine, linear;
    gen_affine(n, [&](const CompRef& t) {
      CHECK(binder_uses_within(compressed_to_db(t), 0, 1));
      affine.insert(show(t));
      return true;
    });
    gen_linear(n, [&](const CompRef& t) {
      linear.insert(show(t));
      return true;
    });
    CHECK(std::includes(affine.begin(), affine.end(), linear.begin(), linear.end()));
  }
}

TEST_CASE("terms with bounded lambda runs") {
  std::vector<std::string> got;
  gen_bounded_unary(1, 3, false, [&](const CompRef& t) {
    got.push_back(show(t));
    return true;
  });
  CHECK(got == std::vector<std::string>{"v(1,0)", "a(1,v(0,0),v(0,0))",
                                        "a(1,v(0,0),a(0,v(0,0),v(0,0)))",
                                        "a(1,a(0,v(0,0),v(0,0)),v(0,0))",
                                        "a(0,v(1,0),v(1,0))"});
  for (int bound : {1, 2}) {
    for (int n = 1; n <= 5; ++n) {
      std::set<std::string> gen_set;
      gen_bounded_unary(bound, n, true, [&](const CompRef& t) {
        gen_set.insert(show(t));
        return true;
      });
      std::set<std::string> want;
      for (auto& t : oracle::db_terms(n, 0))
        if (max_lams_on_path(t) <= bound) want.insert(show(db_to_compressed(t)));
      CHECK(gen_set == want);
    }
  }
}

TEST_CASE("terms by code length") {
  std::set<std::string> seen;
  long long n8 = 0;
  gen_blc(8, [&](const CompRef& t, const std::vector<int>& code) {
    CHECK(code.size() == 8);
    std::size_t at = 0;
    DbRef back = decode_code(code, at);
    CHECK(at == code.size());
    CHECK(show(db_to_compressed(back)) == show(t));
    std::string key = show(t) + " @ ";
    for (int b : code) key += char('0' + b);
    seen.insert(key);
    ++n8;
    return true;
  });
  CHECK((long long)seen.size() == n8);
  CHECK(seen.count("v(3,1) @ 00000010") == 1);
  CHECK(seen.count("a(1,v(0,1),v(0,1)) @ 00011010") == 1);
}

TEST_CASE("typed generation: goldens and counts") {
  auto got = typed_pairs(gen_typed, 3, true);
  CHECK(got == std::vector<std::string>{
                   "a(l(v(0)),l(v(0))) : x>x",
                   "l(a(v(0),l(v(0)))) : ((x>x)>x)>x",
                   "l(a(l(v(0)),v(0))) : x>x",
                   "l(a(l(v(1)),v(0))) : x>x",
                   "l(l(a(v(0),v(1)))) : x>((x>x)>x)",
                   "l(l(a(v(1),v(0)))) : (x>x)>(x>x)",
                   "l(l(l(v(0)))) : x>(x>(x>x))",
                   "l(l(l(v(1)))) : x>(x>(x>x))",
                   "l(l(l(v(2)))) : x>(x>(x>x))",
               });
  std::vector<long long> want = {1, 2, 9, 40, 238, 1564, 11807};
  for (int n = 1; n <= 7; ++n) {
    long long c = 0;
    gen_typed(n, true, [&](const DbRef& t, const TreeRef& ty) {
      if (n <= 5) {
        auto pt = infer_db(t);
        REQUIRE(pt.has_value());
        CHECK(eq(*pt, ty));
      }
      ++c;
      return true;
    });
    CHECK(c == want[n - 1]);
  }
}

TEST_CASE("typed generation agrees with generate-then-filter") {
  for (int n = 1; n <= 5; ++n) {
    for (bool exact : {true, false}) {
      auto a = typed_pairs(gen_typed, n, exact);
      auto b = typed_pairs(gen_typed_naive, n, exact);
      std::multiset<std::string> am(a.begin(), a.end()), bm(b.begin(), b.end());
      CHECK(a.size() == b.size());
      CHECK(am == bm);

      std::multiset<std::string> typable, typed_terms;
      gen_typable(n, exact, [&](const CompRef& t) {
        typable.insert(show(t));
        return true;
      });
      gen_typed(n, exact, [&](const DbRef& t, const TreeRef&) {
        typed_terms.insert(show(db_to_compressed(t)));
        return true;
      });
      CHECK(typable == typed_terms);
    }
  }
}

TEST_CASE("typed terms with free variables") {
  std::vector<long long> want = {3, 10, 45, 256, 1688};
  for (int n = 1; n <= 5; ++n) {
    long long c = 0;
    gen_typed_with_free(n, 1, [&](const DbRef&, const TreeRef&) {
      ++c;
      return true;
    });
    CHECK(c == want[n - 1]);
  }
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::string> closed_only, typed;
    gen_typed_with_free(n, 0, [&](const DbRef& t, const TreeRef& ty) {
      closed_only.push_back(show(t) + " : " + show(ty));
      return true;
    });
    typed = typed_pairs(gen_typed, n, true);
    CHECK(closed_only == typed);
  }
}

TEST_CASE("inhabitants of a query type") {
  TreeRef idty = node(leaf(), leaf());  // x>x
  std::vector<std::string> got;
  query_typed(3, idty, true, [&](const DbRef& t) {
    got.push_back(show(t));
    return true;
  });
  CHECK(got == std::vector<std::string>{"a(l(v(0)),l(v(0)))", "l(a(l(v(0)),v(0)))",
                                        "l(a(l(v(1)),v(0)))"});
  std::vector<std::string> upto;
  query_typed(3, idty, false, [&](const DbRef& t) {
    upto.push_back(show(t));
    return true;
  });
  CHECK(upto == std::vector<std::string>{"a(l(v(0)),l(v(0)))", "l(v(0))", "l(a(l(v(0)),v(0)))",
                                         "l(a(l(v(1)),v(0)))"});
  // nothing of that type: (x>x)>x
  TreeRef vacant = node(node(leaf(), leaf()), leaf());
  long long c = 0;
  query_typed(10, vacant, false, [&](const DbRef&) {
    ++c;
    return true;
  });
  CHECK(c == 0);
  // agrees with filtering the full typed enumeration on the type
  for (auto& q : {std::string("x>x"), std::string("x>(x>x)"), std::string("(x>x)>(x>x)")}) {
    TreeRef ty = parse_tree(q);
    for (int n = 1; n <= 5; ++n) {
      std::vector<std::string> seeded, filtered;
      query_typed(n, ty, false, [&](const DbRef& t) {
        seeded.push_back(show(t));
        return true;
      });
      gen_typed_naive(n, false, [&](const DbRef& t, const TreeRef& got_ty) {
        if (eq(got_ty, ty)) filtered.push_back(show(t));
        return true;
      });
      std::multiset<std::string> sm(seeded.begin(), seeded.end()),
          fm(filtered.begin(), filtered.end());
      CHECK(sm == fm);
    }
  }
}

TEST_CASE("terms listed by type") {
  std::vector<std::string> got;
  gen_by_type(3, [&](const DbRef& t, const TreeRef& ty) {
    got.push_back(show(t) + " : " + show(ty));
    return true;
  });
  CHECK(got == std::vector<std::string>{
                   "l(l(l(v(0)))) : x>(x>(x>x))",
                   "l(l(l(v(1)))) : x>(x>(x>x))",
                   "l(l(l(v(2)))) : x>(x>(x>x))",
                   "l(l(a(v(0),v(1)))) : x>((x>x)>x)",
                   "l(l(a(v(1),v(0)))) : (x>x)>(x>x)",
                   "l(a(v(0),l(v(0)))) : ((x>x)>x)>x",
               });
  std::vector<long long> want = {1, 2, 6, 18, 84, 376};
  for (int n = 1; n <= 6; ++n) {
    long long c = 0;
    gen_by_type(n, [&](const DbRef&, const TreeRef&) {
      ++c;
      return true;
    });
    CHECK(c == want[n - 1]);
  }
}

TEST_CASE("SK terms listed by type") {
  std::vector<std::string> got;
  gen_by_type_sk(2, [&](const SkRef& t, const TreeRef& ty) {
    got.push_back(show(t) + " : " + show(ty));
    return true;
  });
  CHECK(got == std::vector<std::string>{"k : x>(x>x)", "k*k*k : x>(x>x)", "k*k*s : x>(x>x)"});
  std::vector<long long> want = {0, 3, 29, 250};
  for (int n = 1; n <= 4; ++n) {
    long long c = 0;
    gen_by_type_sk(n, [&](const SkRef&, const TreeRef&) {
      ++c;
      return true;
    });
    CHECK(c == want[n - 1]);
  }
}

TEST_CASE("SK generation") {
  std::vector<std::string> upto1;
  gen_sk(1, false, [&](const SkRef& t) {
    upto1.push_back(show(t));
    return true;
  });
  CHECK(upto1 == std::vector<std::string>{"k", "s", "k*k", "k*s", "s*k", "s*s"});
  std::vector<long long> totals = {2, 4, 16, 80, 448, 2688, 16896};
  for (int n = 0; n <= 6; ++n) {
    long long c = 0;
    gen_sk(n, true, [&](const SkRef& t) {
      CHECK(term_size(t) == n);
      ++c;
      return true;
    });
    CHECK(c == totals[n]);
    if (n <= 5) {
      std::set<std::string> got, want;
      gen_sk(n, true, [&](const SkRef& t) {
        got.insert(show(t));
        return true;
      });
      for (auto& t : oracle::all_sk(n)) want.insert(show(t));
      CHECK(got == want);
    }
  }
}

TEST_CASE("typed and untypable SK terms partition the family") {
  std::vector<std::string> t1;
  gen_typed_sk(1, true, [&](const SkRef& t, const TreeRef& ty) {
    t1.push_back(show(t) + " : " + show(ty));
    return true;
  });
  CHECK(t1 == std::vector<std::string>{
                  "k*k : x>(x>(x>x))",
                  "k*s : x>((x>(x>x))>((x>x)>(x>x)))",
                  "s*k : (x>x)>(x>x)",
                  "s*s : ((x>(x>x))>(x>x))>((x>(x>x))>(x>x))",
              });
  std::vector<long long> typed = {2, 4, 14, 67, 337, 1867};
  std::vector<long long> totals = {2, 4, 16, 80, 448, 2688};
  for (int n = 0; n <= 5; ++n) {
    long long ct = 0, cu = 0;
    gen_typed_sk(n, true, [&](const SkRef& t, const TreeRef& ty) {
      auto want = infer_sk_simple(t);
      REQUIRE(want.has_value());
      CHECK(eq(*want, ty));
      ++ct;
      return true;
    });
    gen_untypable_sk(n, true, [&](const SkRef& t) {
      CHECK(!typable_sk(t));
      ++cu;
      return true;
    });
    CHECK(ct == typed[n]);
    CHECK(ct + cu == totals[n]);
  }
}

TEST_CASE("sinks can stop the enumeration") {
  int n = 0;
  gen_db(5, false, [&](const DbRef&) {
    ++n;
    return false;
  });
  CHECK(n == 1);
  n = 0;
  gen_typed(5, false, [&](const DbRef&, const TreeRef&) {
    ++n;
    return false;
  });
  CHECK(n == 1);
  n = 0;
  gen_by_type(4, [&](const DbRef&, const TreeRef&) {
    ++n;
    return false;
  });
  CHECK(n == 1);
  n = 0;
  gen_blc(8, [&](const CompRef&, const std::vector<int>&) {
    ++n;
    return false;
  });
  CHECK(n == 1);
}
