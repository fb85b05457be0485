#include "lam/term.hpp"

#include <cctype>
#include <unordered_map>
#include <vector>

namespace lam {

// ---------------------------------------------------------------- factories

DbRef dv(int idx) {
  auto t = std::make_shared<DbTerm>();
  t->tag = DbTerm::Tag::Var;
  t->idx = idx;
  return t;
}

DbRef dl(DbRef body) {
  auto t = std::make_shared<DbTerm>();
  t->tag = DbTerm::Tag::Lam;
  t->a = std::move(body);
  return t;
}

DbRef da(DbRef fun, DbRef arg) {
  auto t = std::make_shared<DbTerm>();
  t->tag = DbTerm::Tag::App;
  t->a = std::move(fun);
  t->b = std::move(arg);
  return t;
}

CompRef cv(long long k, long long n) {
  auto t = std::make_shared<CompTerm>();
  t->tag = CompTerm::Tag::Var;
  t->k = k;
  t->n = n;
  return t;
}

CompRef ca(long long k, CompRef x, CompRef y) {
  auto t = std::make_shared<CompTerm>();
  t->tag = CompTerm::Tag::App;
  t->k = k;
  t->x = std::move(x);
  t->y = std::move(y);
  return t;
}

StdRef sv(Name v) {
  auto t = std::make_shared<StdTerm>();
  t->tag = StdTerm::Tag::Var;
  t->name = v;
  return t;
}

StdRef sl(Name v, StdRef body) {
  auto t = std::make_shared<StdTerm>();
  t->tag = StdTerm::Tag::Lam;
  t->name = v;
  t->a = std::move(body);
  return t;
}

StdRef sa(StdRef fun, StdRef arg) {
  auto t = std::make_shared<StdTerm>();
  t->tag = StdTerm::Tag::App;
  t->a = std::move(fun);
  t->b = std::move(arg);
  return t;
}

TreeRef leaf() {
  static const TreeRef x = std::make_shared<BinTree>();
  return x;
}

TreeRef node(TreeRef l, TreeRef r) {
  auto t = std::make_shared<BinTree>();
  t->l = std::move(l);
  t->r = std::move(r);
  return t;
}

SkRef sk_s() {
  static const SkRef s = [] {
    auto t = std::make_shared<SkTerm>();
    t->tag = SkTerm::Tag::S;
    return t;
  }();
  return s;
}

SkRef sk_k() {
  static const SkRef k = [] {
    auto t = std::make_shared<SkTerm>();
    t->tag = SkTerm::Tag::K;
    return t;
  }();
  return k;
}

SkRef sk_ap(SkRef l, SkRef r) {
  auto t = std::make_shared<SkTerm>();
  t->tag = SkTerm::Tag::Ap;
  t->l = std::move(l);
  t->r = std::move(r);
  return t;
}

SkRef sk_hole(int id) {
  auto t = std::make_shared<SkTerm>();
  t->tag = SkTerm::Tag::Hole;
  t->idx = id;
  return t;
}

// ---------------------------------------------------------------- equality

bool eq(const DbRef& x, const DbRef& y) {
  if (x == y) return true;
  if (x->tag != y->tag) return false;
  switch (x->tag) {
    case DbTerm::Tag::Var: return x->idx == y->idx;
    case DbTerm::Tag::Lam: return eq(x->a, y->a);
    case DbTerm::Tag::App: return eq(x->a, y->a) && eq(x->b, y->b);
  }
  return false;
}

bool eq(const CompRef& x, const CompRef& y) {
  if (x == y) return true;
  if (x->tag != y->tag || x->k != y->k) return false;
  if (x->tag == CompTerm::Tag::Var) return x->n == y->n;
  return eq(x->x, y->x) && eq(x->y, y->y);
}

bool eq(const StdRef& x, const StdRef& y) {
  if (x == y) return true;
  if (x->tag != y->tag) return false;
  switch (x->tag) {
    case StdTerm::Tag::Var: return x->name == y->name;
    case StdTerm::Tag::Lam: return x->name == y->name && eq(x->a, y->a);
    case StdTerm::Tag::App: return eq(x->a, y->a) && eq(x->b, y->b);
  }
  return false;
}

bool eq(const TreeRef& x, const TreeRef& y) {
  if (x == y) return true;
  if (is_leaf(x) || is_leaf(y)) return is_leaf(x) && is_leaf(y);
  return eq(x->l, y->l) && eq(x->r, y->r);
}

bool eq(const SkRef& x, const SkRef& y) {
  if (x == y) return true;
  if (x->tag != y->tag) return false;
  if (x->tag == SkTerm::Tag::Ap) return eq(x->l, y->l) && eq(x->r, y->r);
  if (x->tag == SkTerm::Tag::Hole) return x->idx == y->idx;
  return true;
}

// ---------------------------------------------------------------- sizes

int term_size(const DbRef& t) {
  switch (t->tag) {
    case DbTerm::Tag::Var: return 0;
    case DbTerm::Tag::Lam: return 1 + term_size(t->a);
    case DbTerm::Tag::App: return 1 + term_size(t->a) + term_size(t->b);
  }
  return 0;
}

int term_size(const CompTerm& t) {
  int k = static_cast<int>(t.k);
  if (t.tag == CompTerm::Tag::Var) return k;
  return k + 1 + term_size(*t.x) + term_size(*t.y);
}

int term_size(const CompRef& t) { return term_size(*t); }

int term_size(const TreeRef& t) {
  if (is_leaf(t)) return 0;
  return 1 + term_size(t->l) + term_size(t->r);
}

int term_size(const SkRef& t) {
  if (t->tag != SkTerm::Tag::Ap) return 0;
  return 1 + term_size(t->l) + term_size(t->r);
}

// ---------------------------------------------------------------- closedness

static bool is_closed_at(const DbRef& t, int depth) {
  switch (t->tag) {
    case DbTerm::Tag::Var: return t->idx < depth;
    case DbTerm::Tag::Lam: return is_closed_at(t->a, depth + 1);
    case DbTerm::Tag::App:
      return is_closed_at(t->a, depth) && is_closed_at(t->b, depth);
  }
  return false;
}

bool is_closed(const DbRef& t) { return is_closed_at(t, 0); }

static bool is_closed_at(const CompRef& t, long long depth) {
  if (t->tag == CompTerm::Tag::Var) return t->n < depth + t->k;
  return is_closed_at(t->x, depth + t->k) && is_closed_at(t->y, depth + t->k);
}

bool is_closed(const CompRef& t) { return is_closed_at(t, 0); }

// ---------------------------------------------------------------- printing

static void show(const DbRef& t, std::string& out) {
  switch (t->tag) {
    case DbTerm::Tag::Var:
      out += "v(";
      out += std::to_string(t->idx);
      out += ')';
      return;
    case DbTerm::Tag::Lam:
      out += "l(";
      show(t->a, out);
      out += ')';
      return;
    case DbTerm::Tag::App:
      out += "a(";
      show(t->a, out);
      out += ',';
      show(t->b, out);
      out += ')';
      return;
  }
}

std::string show(const DbRef& t) {
  std::string out;
  show(t, out);
  return out;
}

static void show(const CompRef& t, std::string& out) {
  if (t->tag == CompTerm::Tag::Var) {
    out += "v(";
    out += std::to_string(t->k);
    out += ',';
    out += std::to_string(t->n);
    out += ')';
    return;
  }
  out += "a(";
  out += std::to_string(t->k);
  out += ',';
  show(t->x, out);
  out += ',';
  show(t->y, out);
  out += ')';
}

std::string show(const CompRef& t) {
  std::string out;
  show(t, out);
  return out;
}

static void show(const Name& v, std::string& out) {
  out += v.free ? 'f' : 'x';
  out += std::to_string(v.n);
}

static void show(const StdRef& t, std::string& out) {
  switch (t->tag) {
    case StdTerm::Tag::Var:
      show(t->name, out);
      return;
    case StdTerm::Tag::Lam:
      out += "l(";
      show(t->name, out);
      out += ',';
      show(t->a, out);
      out += ')';
      return;
    case StdTerm::Tag::App:
      out += "a(";
      show(t->a, out);
      out += ',';
      show(t->b, out);
      out += ')';
      return;
  }
}

std::string show(const StdRef& t) {
  std::string out;
  show(t, out);
  return out;
}

// Every internal node used as a child is parenthesized, on both sides of >.
static void show(const TreeRef& t, std::string& out) {
  if (is_leaf(t)) {
    out += 'x';
    return;
  }
  if (is_leaf(t->l)) {
    out += 'x';
  } else {
    out += '(';
    show(t->l, out);
    out += ')';
  }
  out += '>';
  if (is_leaf(t->r)) {
    out += 'x';
  } else {
    out += '(';
    show(t->r, out);
    out += ')';
  }
}

std::string show(const TreeRef& t) {
  std::string out;
  show(t, out);
  return out;
}

// * is left-associative: the right child needs parens only when it is an Ap.
static void show(const SkRef& t, std::string& out) {
  switch (t->tag) {
    case SkTerm::Tag::S: out += 's'; return;
    case SkTerm::Tag::K: out += 'k'; return;
    case SkTerm::Tag::Hole:
      out += static_cast<char>('A' + t->idx % 26);
      if (t->idx >= 26) out += std::to_string(t->idx / 26);
      return;
    case SkTerm::Tag::Ap:
      show(t->l, out);
      out += '*';
      if (t->r->tag == SkTerm::Tag::Ap) {
        out += '(';
        show(t->r, out);
        out += ')';
      } else {
        show(t->r, out);
      }
      return;
  }
}

std::string show(const SkRef& t) {
  std::string out;
  show(t, out);
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

// Shared cursor for the five term grammars. All of them are whitespace
// insensitive; errors carry the byte offset of the offending character.
struct Cursor {
  std::string_view s;
  std::size_t at = 0;

  void skip_ws() {
    while (at < s.size() && std::isspace(static_cast<unsigned char>(s[at]))) ++at;
  }

  bool done() {
    skip_ws();
    return at == s.size();
  }

  char peek() {
    skip_ws();
    if (at == s.size()) throw ParseError("unexpected end of input", at);
    return s[at];
  }

  char take() {
    char c = peek();
    ++at;
    return c;
  }

  void expect(char c) {
    char got = peek();
    if (got != c)
      throw ParseError(std::string("expected '") + c + "', got '" + got + "'", at);
    ++at;
  }

  long long number() {
    skip_ws();
    std::size_t start = at;
    while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) ++at;
    if (at == start) throw ParseError("expected a number", at);
    long long n = 0;
    for (std::size_t i = start; i < at; ++i) {
      n = n * 10 + (s[i] - '0');
      if (n < 0) throw ParseError("number out of range", start);
    }
    return n;
  }

  void finish() {
    if (!done()) throw ParseError("trailing input", at);
  }
};

DbRef parse_db(Cursor& c) {
  char f = c.take();
  switch (f) {
    case 'v': {
      c.expect('(');
      long long n = c.number();
      c.expect(')');
      return dv(static_cast<int>(n));
    }
    case 'l': {
      c.expect('(');
      DbRef body = parse_db(c);
      c.expect(')');
      return dl(std::move(body));
    }
    case 'a': {
      c.expect('(');
      DbRef x = parse_db(c);
      c.expect(',');
      DbRef y = parse_db(c);
      c.expect(')');
      return da(std::move(x), std::move(y));
    }
    default:
      throw ParseError("expected v, l or a", c.at - 1);
  }
}

CompRef parse_comp(Cursor& c) {
  char f = c.take();
  switch (f) {
    case 'v': {
      c.expect('(');
      long long k = c.number();
      c.expect(',');
      long long n = c.number();
      c.expect(')');
      return cv(k, n);
    }
    case 'a': {
      c.expect('(');
      long long k = c.number();
      c.expect(',');
      CompRef x = parse_comp(c);
      c.expect(',');
      CompRef y = parse_comp(c);
      c.expect(')');
      return ca(k, std::move(x), std::move(y));
    }
    default:
      throw ParseError("expected v or a", c.at - 1);
  }
}

Name parse_name(Cursor& c) {
  char f = c.take();
  if (f != 'x' && f != 'f') throw ParseError("expected a variable name", c.at - 1);
  Name v;
  v.free = (f == 'f');
  v.n = c.number();
  return v;
}

StdRef parse_std(Cursor& c) {
  char f = c.peek();
  if (f == 'x' || f == 'f') return sv(parse_name(c));
  c.take();
  if (f == 'l') {
    c.expect('(');
    Name v = parse_name(c);
    c.expect(',');
    StdRef body = parse_std(c);
    c.expect(')');
    return sl(v, std::move(body));
  }
  if (f == 'a') {
    c.expect('(');
    StdRef x = parse_std(c);
    c.expect(',');
    StdRef y = parse_std(c);
    c.expect(')');
    return sa(std::move(x), std::move(y));
  }
  throw ParseError("expected a variable, l or a", c.at - 1);
}

TreeRef parse_tree(Cursor& c);

TreeRef parse_tree_primary(Cursor& c) {
  char f = c.peek();
  if (f == 'x') {
    c.take();
    return leaf();
  }
  if (f == '(') {
    c.take();
    TreeRef t = parse_tree(c);
    c.expect(')');
    return t;
  }
  throw ParseError("expected x or (", c.at);
}

// > is right-associative.
TreeRef parse_tree(Cursor& c) {
  TreeRef l = parse_tree_primary(c);
  c.skip_ws();
  if (c.at < c.s.size() && c.s[c.at] == '>') {
    ++c.at;
    return node(std::move(l), parse_tree(c));
  }
  return l;
}

SkRef parse_sk(Cursor& c);

SkRef parse_sk_primary(Cursor& c) {
  char f = c.peek();
  if (f == 's') {
    c.take();
    return sk_s();
  }
  if (f == 'k') {
    c.take();
    return sk_k();
  }
  if (f == '(') {
    c.take();
    SkRef t = parse_sk(c);
    c.expect(')');
    return t;
  }
  throw ParseError("expected s, k or (", c.at);
}

// * is left-associative.
SkRef parse_sk(Cursor& c) {
  SkRef t = parse_sk_primary(c);
  for (;;) {
    c.skip_ws();
    if (c.at < c.s.size() && c.s[c.at] == '*') {
      ++c.at;
      t = sk_ap(std::move(t), parse_sk_primary(c));
    } else {
      return t;
    }
  }
}

}  // namespace

DbRef parse_db(std::string_view s) {
  Cursor c{s};
  DbRef t = parse_db(c);
  c.finish();
  return t;
}

CompRef parse_comp(std::string_view s) {
  Cursor c{s};
  CompRef t = parse_comp(c);
  c.finish();
  return t;
}

StdRef parse_std(std::string_view s) {
  Cursor c{s};
  StdRef t = parse_std(c);
  c.finish();
  return t;
}

TreeRef parse_tree(std::string_view s) {
  Cursor c{s};
  TreeRef t = parse_tree(c);
  c.finish();
  return t;
}

SkRef parse_sk(std::string_view s) {
  Cursor c{s};
  SkRef t = parse_sk(c);
  c.finish();
  return t;
}

// ---------------------------------------------------------------- conversions

static StdRef db_to_std(const DbRef& t, std::vector<Name>& env, long long& next) {
  switch (t->tag) {
    case DbTerm::Tag::Var: {
      int i = t->idx;
      long long d = static_cast<long long>(env.size());
      if (i < d) return sv(env[env.size() - 1 - i]);
      return sv(Name{true, i - d});
    }
    case DbTerm::Tag::Lam: {
      Name v{false, next++};
      env.push_back(v);
      StdRef body = db_to_std(t->a, env, next);
      env.pop_back();
      return sl(v, std::move(body));
    }
    case DbTerm::Tag::App: {
      StdRef x = db_to_std(t->a, env, next);
      StdRef y = db_to_std(t->b, env, next);
      return sa(std::move(x), std::move(y));
    }
  }
  return nullptr;
}

StdRef db_to_std(const DbRef& t) {
  std::vector<Name> env;
  long long next = 0;
  return db_to_std(t, env, next);
}

static DbRef std_to_db(const StdRef& t, std::vector<Name>& env) {
  switch (t->tag) {
    case StdTerm::Tag::Var: {
      const Name& v = t->name;
      if (v.free) return dv(static_cast<int>(v.n + env.size()));
      for (std::size_t i = 0; i < env.size(); ++i)
        if (env[env.size() - 1 - i] == v) return dv(static_cast<int>(i));
      throw std::invalid_argument("unbound variable " + std::string(1, 'x') +
                                  std::to_string(v.n));
    }
    case StdTerm::Tag::Lam: {
      env.push_back(t->name);
      DbRef body = std_to_db(t->a, env);
      env.pop_back();
      return dl(std::move(body));
    }
    case StdTerm::Tag::App: {
      DbRef x = std_to_db(t->a, env);
      DbRef y = std_to_db(t->b, env);
      return da(std::move(x), std::move(y));
    }
  }
  return nullptr;
}

DbRef std_to_db(const StdRef& t) {
  std::vector<Name> env;
  return std_to_db(t, env);
}

static CompRef db_to_compressed(const DbRef& t, long long k) {
  switch (t->tag) {
    case DbTerm::Tag::Var:
      return cv(k, t->idx);
    case DbTerm::Tag::Lam:
      return db_to_compressed(t->a, k + 1);
    case DbTerm::Tag::App:
      return ca(k, db_to_compressed(t->a, 0), db_to_compressed(t->b, 0));
  }
  return nullptr;
}

CompRef db_to_compressed(const DbRef& t) { return db_to_compressed(t, 0); }

static DbRef wrap_lams(long long k, DbRef t) {
  while (k-- > 0) t = dl(std::move(t));
  return t;
}

DbRef compressed_to_db(const CompRef& t) {
  if (t->tag == CompTerm::Tag::Var)
    return wrap_lams(t->k, dv(static_cast<int>(t->n)));
  return wrap_lams(t->k, da(compressed_to_db(t->x), compressed_to_db(t->y)));
}

}  // namespace lam
