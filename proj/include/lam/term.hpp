#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <stdexcept>
#include <cstdint>

// Core term representations:
//
//   DbTerm   de Bruijn terms            v(N) | l(T) | a(T,T)
//   CompTerm compressed de Bruijn terms v(K,N) | a(K,T,T), K = run of binders
//   StdTerm  named terms                xN | fN | l(xN,T) | a(T,T)
//   BinTree  binary trees               x | T>T   (types, X-combinator trees,
//                                                  tree-represented naturals)
//   SkTerm   SK-combinator trees        s | k | T*T
//
// All values are immutable and shared; the factory functions below are the
// only way to build them.

namespace lam {

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t at)
      : std::runtime_error(msg + " at byte " + std::to_string(at)), offset(at) {}
};

// ---------------------------------------------------------------- DbTerm

struct DbTerm;
using DbRef = std::shared_ptr<const DbTerm>;

struct DbTerm {
  enum class Tag { Var, Lam, App };
  Tag tag;
  int idx = 0;   // Var
  DbRef a, b;    // Lam: a = body; App: a = fun, b = arg
};

DbRef dv(int idx);
DbRef dl(DbRef body);
DbRef da(DbRef fun, DbRef arg);

bool eq(const DbRef& x, const DbRef& y);
int term_size(const DbRef& t);       // counts Lam and App nodes
bool is_closed(const DbRef& t);
std::string show(const DbRef& t);
DbRef parse_db(std::string_view s);

// ---------------------------------------------------------------- CompTerm

struct CompTerm;
using CompRef = std::shared_ptr<const CompTerm>;

struct CompTerm {
  enum class Tag { Var, App };
  Tag tag;
  long long k = 0;   // number of binders wrapped around this node
  long long n = 0;   // Var: de Bruijn index
  CompRef x, y;      // App children
};

CompRef cv(long long k, long long n);
CompRef ca(long long k, CompRef x, CompRef y);

bool eq(const CompRef& x, const CompRef& y);
int term_size(const CompRef& t);     // size of the de Bruijn expansion
bool is_closed(const CompRef& t);
std::string show(const CompRef& t);
CompRef parse_comp(std::string_view s);

// ---------------------------------------------------------------- StdTerm

struct StdTerm;
using StdRef = std::shared_ptr<const StdTerm>;

// Variable names: bound names print as x0,x1,..., free names as f0,f1,...
struct Name {
  bool free = false;
  long long n = 0;
  bool operator==(const Name&) const = default;
};

struct StdTerm {
  enum class Tag { Var, Lam, App };
  Tag tag;
  Name name;      // Var: the variable; Lam: the binder
  StdRef a, b;    // Lam: a = body; App: a = fun, b = arg
};

StdRef sv(Name v);
StdRef sl(Name v, StdRef body);
StdRef sa(StdRef fun, StdRef arg);

bool eq(const StdRef& x, const StdRef& y);
std::string show(const StdRef& t);
StdRef parse_std(std::string_view s);

// ---------------------------------------------------------------- BinTree

struct BinTree;
using TreeRef = std::shared_ptr<const BinTree>;

struct BinTree {
  TreeRef l, r;   // both null for the leaf x
};

TreeRef leaf();
TreeRef node(TreeRef l, TreeRef r);
inline bool is_leaf(const TreeRef& t) { return t->l == nullptr; }

bool eq(const TreeRef& x, const TreeRef& y);
int term_size(const TreeRef& t);     // internal nodes
std::string show(const TreeRef& t);
TreeRef parse_tree(std::string_view s);

// ---------------------------------------------------------------- SkTerm

struct SkTerm;
using SkRef = std::shared_ptr<const SkTerm>;

struct SkTerm {
  enum class Tag { S, K, Ap, Hole };
  Tag tag;
  int idx = 0;    // Hole: marker id (used by frontier decompositions)
  SkRef l, r;     // Ap children
};

SkRef sk_s();
SkRef sk_k();
SkRef sk_ap(SkRef l, SkRef r);
SkRef sk_hole(int id);

bool eq(const SkRef& x, const SkRef& y);
int term_size(const SkRef& t);       // Ap nodes
std::string show(const SkRef& t);    // holes print as A,B,C,...
SkRef parse_sk(std::string_view s);

// ---------------------------------------------------------------- conversions

// Bound binders are renamed x0,x1,... in first-traversal order. A free index
// i occurring at binder depth d maps to the free name f(i-d), which
// std_to_db reverses, so open terms survive the round-trip.
StdRef db_to_std(const DbRef& t);
DbRef std_to_db(const StdRef& t);    // throws std::invalid_argument on unbound xN

CompRef db_to_compressed(const DbRef& t);
DbRef compressed_to_db(const CompRef& t);

}  // namespace lam
