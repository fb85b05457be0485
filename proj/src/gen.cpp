#include "lam/gen.hpp"

#include <cstdint>
#include <memory>
#include <type_traits>
#include <utility>

#include "lam/typeinf.hpp"

namespace lam {

MotRef mu() {
  static const MotRef t = std::make_shared<Mot>(Mot{Mot::Tag::U, nullptr, nullptr});
  return t;
}
MotRef ml(MotRef a) { return std::make_shared<Mot>(Mot{Mot::Tag::L, std::move(a), nullptr}); }
MotRef ma(MotRef a, MotRef b) {
  return std::make_shared<Mot>(Mot{Mot::Tag::A, std::move(a), std::move(b)});
}

bool eq(const MotRef& x, const MotRef& y) {
  if (x == y) return true;
  if (x->tag != y->tag) return false;
  switch (x->tag) {
    case Mot::Tag::U: return true;
    case Mot::Tag::L: return eq(x->a, y->a);
    case Mot::Tag::A: return eq(x->a, y->a) && eq(x->b, y->b);
  }
  return false;
}

std::string show(const MotRef& t) {
  switch (t->tag) {
    case Mot::Tag::U: return "u";
    case Mot::Tag::L: return "l(" + show(t->a) + ")";
    case Mot::Tag::A: return "a(" + show(t->a) + "," + show(t->b) + ")";
  }
  return {};
}

namespace {

// Non-owning callable reference: continuations live on the stack of the
// enclosing recursion, so no allocation or copying is needed. The referenced
// callable must outlive the call, which holds for the nested-lambda pattern
// used below (a temporary lives to the end of the full expression).
template <class... A>
class Cont {
 public:
  template <class F,
            class = std::enable_if_t<!std::is_same_v<std::remove_cvref_t<F>, Cont>>>
  Cont(F&& f)
      : obj_(const_cast<void*>(static_cast<const void*>(std::addressof(f)))),
        call_([](void* o, A... a) {
          (*static_cast<std::remove_reference_t<F>*>(o))(static_cast<A>(a)...);
        }) {}
  void operator()(A... a) const { call_(obj_, static_cast<A>(a)...); }

 private:
  void* obj_;
  void (*call_)(void*, A...);
};

// ---------------------------------------------------------------- trees

struct TreeByDepth {
  bool stop = false;
  using K = Cont<const TreeRef&>;
  void go(int d, const K& k) {
    if (stop) return;
    k(leaf());
    if (stop || d <= 0) return;
    go(d - 1, K([&](const TreeRef& l) {
      go(d - 1, K([&](const TreeRef& r) { k(node(l, r)); }));
    }));
  }
};

struct TreeGen {
  bool stop = false;
  using K = Cont<const TreeRef&, int>;
  void go(int fuel, const K& k) {
    if (stop) return;
    k(leaf(), fuel);
    if (stop || fuel <= 0) return;
    go(fuel - 1, K([&](const TreeRef& l, int f1) {
      go(f1, K([&](const TreeRef& r, int f2) { k(node(l, r), f2); }));
    }));
  }
};

struct MotGen {
  bool stop = false;
  bool free_leaves = false;
  using K = Cont<const MotRef&, int>;
  void go(int fuel, const K& k) {
    if (stop) return;
    if (free_leaves)
      k(mu(), fuel);
    else if (fuel > 0)
      k(mu(), fuel - 1);
    if (stop || fuel <= 0) return;
    go(fuel - 1, K([&](const MotRef& a, int f1) { k(ml(a), f1); }));
    if (stop) return;
    go(fuel - 1, K([&](const MotRef& a, int f1) {
      go(f1, K([&](const MotRef& b, int f2) { k(ma(a, b), f2); }));
    }));
  }
};

// ---------------------------------------------------------------- lambdas

struct DbGen {
  bool stop = false;
  using K = Cont<const DbRef&, int>;
  void go(int fuel, int depth, const K& k) {
    if (stop) return;
    for (int x = 0; x < depth; ++x) {
      k(dv(x), fuel);
      if (stop) return;
    }
    if (fuel <= 0) return;
    go(fuel - 1, depth + 1, K([&](const DbRef& b, int f1) { k(dl(b), f1); }));
    if (stop) return;
    go(fuel - 1, depth, K([&](const DbRef& a, int f1) {
      go(f1, depth, K([&](const DbRef& b, int f2) { k(da(a, b), f2); }));
    }));
  }
};

// Named terms generated directly: variables come from the binder context,
// innermost first, so the order matches the de Bruijn generator.
struct StdGen {
  bool stop = false;
  std::vector<Name> env;
  using K = Cont<const StdRef&, int>;
  void go(int fuel, const K& k) {
    if (stop) return;
    for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i) {
      k(sv(env[i]), fuel);
      if (stop) return;
    }
    if (fuel <= 0) return;
    Name v{false, static_cast<long long>(env.size())};
    env.push_back(v);
    go(fuel - 1, K([&](const StdRef& b, int f1) { k(sl(v, b), f1); }));
    env.pop_back();
    if (stop) return;
    // The right branch of an application starts from this node's context,
    // not from whatever the left branch pushed while being explored.
    std::size_t scope = env.size();
    go(fuel - 1, K([&](const StdRef& a, int f1) {
      std::vector<Name> inner(env.begin() + scope, env.end());
      env.resize(scope);
      go(f1, K([&](const StdRef& b, int f2) { k(sa(a, b), f2); }));
      env.insert(env.end(), inner.begin(), inner.end());
    }));
  }
};

// Normal forms: the left branch of an application may not be a lambda, which
// the grammar enforces by restricting that branch to variables and
// applications (the `app` entry point).
struct NfGen {
  bool stop = false;
  using K = Cont<const DbRef&, int>;
  void go(int fuel, int depth, const K& k) {
    if (stop) return;
    for (int x = 0; x < depth; ++x) {
      k(dv(x), fuel);
      if (stop) return;
    }
    if (fuel <= 0) return;
    go(fuel - 1, depth + 1, K([&](const DbRef& b, int f1) { k(dl(b), f1); }));
    if (stop) return;
    app(fuel, depth, k);
  }
  void app(int fuel, int depth, const K& k) {
    if (stop || fuel <= 0) return;
    for (int x = 0; x < depth; ++x) {
      go(fuel - 1, depth, K([&](const DbRef& b, int f1) { k(da(dv(x), b), f1); }));
      if (stop) return;
    }
    app(fuel - 1, depth, K([&](const DbRef& a, int f1) {
      go(f1, depth, K([&](const DbRef& b, int f2) { k(da(a, b), f2); }));
    }));
  }
};

// Linear / affine terms carry an explicit context of usable binders; an
// application splits it between the two sides, every split in turn. The
// splits come out in binary-counter order: all-left first, the innermost
// binder toggling fastest, a set bit sending the binder right.
struct LinGen {
  bool stop = false;
  bool affine = false;
  long long names = 0;
  using Ctx = std::vector<Name>;  // innermost at the back
  using K = Cont<const StdRef&, int>;
  void go(int fuel, const Ctx& ctx, const K& k) {
    if (stop) return;
    if (affine) {
      if (!ctx.empty()) k(sv(ctx.back()), fuel);
    } else if (ctx.size() == 1) {
      k(sv(ctx[0]), fuel);
    }
    if (stop || fuel <= 0) return;
    {
      Ctx c2 = ctx;
      Name v{false, names++};
      c2.push_back(v);
      go(fuel - 1, c2, K([&](const StdRef& b, int f1) { k(sl(v, b), f1); }));
    }
    if (stop) return;
    int n = static_cast<int>(ctx.size());
    for (std::uint32_t bits = 0; bits < (1u << n) && !stop; ++bits) {
      Ctx as, bs;
      for (int i = 0; i < n; ++i)
        ((bits >> (n - 1 - i)) & 1 ? bs : as).push_back(ctx[i]);
      go(fuel - 1, as, K([&](const StdRef& a, int f1) {
        go(f1, bs, K([&](const StdRef& b, int f2) { k(sa(a, b), f2); }));
      }));
    }
  }
};

struct BoundedUnaryGen {
  bool stop = false;
  using K = Cont<const DbRef&, int>;
  void go(int fuel, int bound, int depth, const K& k) {
    if (stop) return;
    for (int x = 0; x < depth; ++x) {
      k(dv(x), fuel);
      if (stop) return;
    }
    if (fuel <= 0) return;
    if (bound > 0) {
      go(fuel - 1, bound - 1, depth + 1, K([&](const DbRef& b, int f1) { k(dl(b), f1); }));
      if (stop) return;
    }
    go(fuel - 1, bound, depth, K([&](const DbRef& a, int f1) {
      go(f1, bound, depth, K([&](const DbRef& b, int f2) { k(da(a, b), f2); }));
    }));
  }
};

// Binary-coded terms: fuel is the remaining code length. A variable with
// 1-based index x costs x+1 bits (unary index and terminator), lambda and
// application two bits each; the code is kept in emission order on a shared
// stack. Indices stay 1-based in the resulting term.
struct BlcGen {
  bool stop = false;
  std::vector<int> code;
  using K = Cont<const DbRef&, int>;
  void go(int bits, int v, const K& k) {
    if (stop) return;
    for (int x = 1; x <= v && x + 1 <= bits; ++x) {
      for (int i = 0; i < x; ++i) code.push_back(1);
      code.push_back(0);
      k(dv(x), bits - (x + 1));
      code.resize(code.size() - (x + 1));
      if (stop) return;
    }
    if (bits < 2) return;
    code.push_back(0);
    code.push_back(0);
    go(bits - 2, v + 1, K([&](const DbRef& b, int r) { k(dl(b), r); }));
    code.pop_back();
    code.pop_back();
    if (stop) return;
    code.push_back(0);
    code.push_back(1);
    go(bits - 2, v, K([&](const DbRef& a, int r1) {
      go(r1, v, K([&](const DbRef& b, int r2) { k(da(a, b), r2); }));
    }));
    code.pop_back();
    code.pop_back();
  }
};

// ---------------------------------------------------------------- SK

struct SkGen {
  bool stop = false;
  using K = Cont<const SkRef&, int>;
  void go(int fuel, const K& k) {
    if (stop) return;
    k(sk_k(), fuel);
    if (stop) return;
    k(sk_s(), fuel);
    if (stop || fuel <= 0) return;
    go(fuel - 1, K([&](const SkRef& a, int f1) {
      go(f1, K([&](const SkRef& b, int f2) { k(sk_ap(a, b), f2); }));
    }));
  }
};

// ---------------------------------------------------------------- typed

// Generation interleaved with inference: each node alternative runs under a
// trail mark and is rolled back, so only type-consistent prefixes are ever
// extended. Variables are tried innermost-out (ascending de Bruijn index),
// then application, then lambda; that order is part of the contract.
struct TypedGen {
  TypeEngine eng;
  std::vector<TypeEngine::Ref> env;  // innermost at the back
  bool stop = false;
  using K = Cont<const DbRef&, int>;

  void go(TypeEngine::Ref ty, int fuel, const K& k) {
    if (stop) return;
    for (std::size_t i = 0; i < env.size() && !stop; ++i) {
      auto m = eng.mark();
      if (eng.unify(ty, env[env.size() - 1 - i], true)) k(dv(static_cast<long long>(i)), fuel);
      eng.undo(m);
    }
    if (stop || fuel <= 0) return;
    {
      auto m = eng.mark();
      auto x = eng.fresh();
      auto fn = eng.arrow(x, ty);
      // The argument is generated under the bindings the function branch
      // established, but in this node's variable scope.
      std::size_t scope = env.size();
      go(fn, fuel - 1, K([&](const DbRef& a, int f1) {
        std::vector<TypeEngine::Ref> inner(env.begin() + scope, env.end());
        env.resize(scope);
        go(x, f1, K([&](const DbRef& b, int f2) { k(da(a, b), f2); }));
        env.insert(env.end(), inner.begin(), inner.end());
      }));
      eng.undo(m);
    }
    if (stop) return;
    {
      auto m = eng.mark();
      auto x = eng.fresh();
      auto y = eng.fresh();
      if (eng.unify(ty, eng.arrow(x, y), true)) {
        env.push_back(x);
        go(y, fuel - 1, K([&](const DbRef& b, int f1) { k(dl(b), f1); }));
        env.pop_back();
      }
      eng.undo(m);
    }
  }
};

}  // namespace

void gen_tree_by_depth(int depth, const TreeSink& sink) {
  TreeByDepth g;
  auto top = [&](const TreeRef& t) {
    if (!sink(t)) g.stop = true;
  };
  g.go(depth, TreeByDepth::K(top));
}

void gen_tree(int n, bool exact, const TreeSink& sink) {
  TreeGen g;
  auto top = [&](const TreeRef& t, int f) {
    if (exact && f != 0) return;
    if (!sink(t)) g.stop = true;
  };
  g.go(n, TreeGen::K(top));
}

void gen_motzkin(int n, bool exact, const MotSink& sink, bool zero_cost_leaves) {
  MotGen g;
  g.free_leaves = zero_cost_leaves;
  auto top = [&](const MotRef& t, int f) {
    if (exact && f != 0) return;
    if (!sink(t)) g.stop = true;
  };
  g.go(n, MotGen::K(top));
}

void gen_lambda_std(int n, bool exact, const StdSink& sink) {
  StdGen g;
  auto top = [&](const StdRef& t, int f) {
    if (exact && f != 0) return;
    if (!sink(db_to_std(std_to_db(t)))) g.stop = true;
  };
  g.go(n, StdGen::K(top));
}

void gen_db(int n, bool exact, const DbSink& sink) {
  DbGen g;
  auto top = [&](const DbRef& t, int f) {
    if (exact && f != 0) return;
    if (!sink(t)) g.stop = true;
  };
  g.go(n, 0, DbGen::K(top));
}

void gen_standard(int n, bool exact, const StdSink& sink) {
  gen_db(n, exact, [&](const DbRef& t) { return sink(db_to_std(t)); });
}

void gen_compressed(int n, bool exact, const CompSink& sink) {
  gen_db(n, exact, [&](const DbRef& t) { return sink(db_to_compressed(t)); });
}

void gen_nf(int n, bool exact, const CompSink& sink) {
  NfGen g;
  auto top = [&](const DbRef& t, int f) {
    if (exact && f != 0) return;
    if (!sink(db_to_compressed(t))) g.stop = true;
  };
  g.go(n, 0, NfGen::K(top));
}

static void gen_lin_or_affine(int n, bool affine, const CompSink& sink) {
  LinGen g;
  g.affine = affine;
  auto top = [&](const StdRef& t, int f) {
    if (f != 0) return;
    if (!sink(db_to_compressed(std_to_db(t)))) g.stop = true;
  };
  g.go(n, {}, LinGen::K(top));
}

void gen_linear(int n, const CompSink& sink) { gen_lin_or_affine(n, false, sink); }
void gen_affine(int n, const CompSink& sink) { gen_lin_or_affine(n, true, sink); }

void gen_bounded_unary(int bound, int n, bool exact, const CompSink& sink) {
  BoundedUnaryGen g;
  auto top = [&](const DbRef& t, int f) {
    if (exact && f != 0) return;
    if (!sink(db_to_compressed(t))) g.stop = true;
  };
  g.go(n, bound, 0, BoundedUnaryGen::K(top));
}

void gen_blc(int bits, const BlcSink& sink) {
  BlcGen g;
  auto top = [&](const DbRef& t, int r) {
    if (r != 0) return;
    if (!sink(db_to_compressed(t), g.code)) g.stop = true;
  };
  g.go(bits, 0, BlcGen::K(top));
}

void gen_typed(int n, bool exact, const PairSink& sink) {
  TypedGen g;
  auto root = g.eng.fresh();
  auto top = [&](const DbRef& t, int f) {
    if (exact && f != 0) return;
    auto m = g.eng.mark();
    g.eng.bind_base(root);
    TreeRef ty = g.eng.to_tree(root);
    g.eng.undo(m);
    if (!sink(t, ty)) g.stop = true;
  };
  g.go(root, n, TypedGen::K(top));
}

void gen_typed_naive(int n, bool exact, const PairSink& sink) {
  gen_db(n, exact, [&](const DbRef& t) {
    auto ty = infer_db(t);
    return !ty || sink(t, *ty);
  });
}

void gen_typable(int n, bool exact, const CompSink& sink) {
  gen_db(n, exact, [&](const DbRef& t) {
    return !typable_db(t) || sink(db_to_compressed(t));
  });
}

void gen_typed_with_free(int n, int max_free, const PairSink& sink) {
  for (int nv = 0; nv <= max_free; ++nv) {
    TypedGen g;
    auto root = g.eng.fresh();
    for (int i = 0; i < nv; ++i) g.env.push_back(g.eng.fresh());
    auto top = [&](const DbRef& t, int f) {
      if (f != 0) return;
      auto m = g.eng.mark();
      g.eng.bind_base(root);
      TreeRef ty = g.eng.to_tree(root);
      g.eng.undo(m);
      if (!sink(t, ty)) g.stop = true;
    };
    g.go(root, n, TypedGen::K(top));
    if (g.stop) return;
  }
}

void gen_sk(int n, bool exact, const SkSink& sink) {
  SkGen g;
  auto top = [&](const SkRef& t, int f) {
    if (exact && f != 0) return;
    if (!sink(t)) g.stop = true;
  };
  g.go(n, SkGen::K(top));
}

void gen_typed_sk(int n, bool exact, const SkPairSink& sink) {
  gen_sk(n, exact, [&](const SkRef& x) {
    auto ty = infer_sk_simple(x);
    return !ty || sink(x, *ty);
  });
}

void gen_untypable_sk(int n, bool exact, const SkSink& sink) {
  gen_sk(n, exact, [&](const SkRef& x) { return typable_sk(x) || sink(x); });
}

void gen_type(int n, bool exact, const TreeSink& sink) { gen_tree(n, exact, sink); }

void query_typed(int n, const TreeRef& type, bool exact, const DbSink& sink) {
  TypedGen g;
  auto root = g.eng.from_tree(type);
  auto top = [&](const DbRef& t, int f) {
    if (exact && f != 0) return;
    auto pt = infer_db(t);
    if (pt && eq(*pt, type) && !sink(t)) g.stop = true;
  };
  g.go(root, n, TypedGen::K(top));
}

void gen_by_type(int n, const PairSink& sink) {
  bool stop = false;
  gen_type(n, true, [&](const TreeRef& ty) {
    query_typed(n, ty, false, [&](const DbRef& t) {
      if (!sink(t, ty)) stop = true;
      return !stop;
    });
    return !stop;
  });
}

void gen_by_type_sk(int n, const SkPairSink& sink) {
  bool stop = false;
  gen_type(n, true, [&](const TreeRef& ty) {
    gen_sk(n, false, [&](const SkRef& x) {
      if (checks_sk(x, ty) && !sink(x, ty)) stop = true;
      return !stop;
    });
    return !stop;
  });
}

}  // namespace lam
