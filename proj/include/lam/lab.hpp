#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lam/codec.hpp"
#include "lam/gen.hpp"
#include "lam/term.hpp"

// The playground: type-directed queries and censuses over the generators,
// density tables for the combinator calculi, well-typed frontiers of SK
// terms, iterated type maps, self-typed trees, size-inflating injections,
// and eval-or-successor orbits.

namespace lam {

// Closed terms of size <= size(t) sharing t's principal type, t included.
// Throws std::domain_error when t has no type.
void type_siblings(const DbRef& t, const DbSink& sink);

struct CensusRow {
  int size = 0;
  bool cumulative = false;
  long long types = 0;
  long long terms = 0;
  double ratio = 0;  // distinct types per term
  std::vector<std::pair<std::string, long long>> top;
};

// Tallies typed closed terms per size 1..max_size by principal type, plus a
// final cumulative row. jobs > 1 spreads sizes across threads; the merged
// output is identical either way.
std::vector<CensusRow> type_census(int max_size, int top_k, int jobs = 1);

// Exact-size inhabitant counts of one type, sizes 1..max_size.
std::vector<long long> growth_sequence(const TreeRef& type, int max_size);

struct DensityRow {
  int size = 0;
  long long typed = 0;
  long long total = 0;
  double ratio = 0;
};

// Typable fractions per size 0..max_size: SK trees over the 2^(n+1)*Cat(n)
// leaf labelings, X trees over the Cat(n) shapes.
std::vector<DensityRow> sk_density(int max_size);
std::vector<DensityRow> x_density(int max_size);

// An SK term split at its maximal typable subtrees: the untypable trunk
// keeps numbered holes (pre-order), the equations carry what each hole
// replaced. A typable term is a single hole.
struct FrontierDecomposition {
  SkRef trunk;
  std::vector<std::pair<int, SkRef>> equations;
};

FrontierDecomposition well_typed_frontier(const SkRef& t);
std::vector<SkRef> extract_frontier(const SkRef& t);  // just the members
SkRef fuse_frontier(const FrontierDecomposition& d);

// Normalize every frontier member, then graft the results back in.
SkRef simplify_sk(const SkRef& t);

struct FrontierStatsRow {
  int size = 0;
  double trunk = 0;
  double frontier = 0;
  double trunk_pct = 0;
  double frontier_pct = 0;
};

// Average trunk/frontier split over all SK terms of each size 1..max_size.
std::vector<FrontierStatsRow> frontier_stats(int max_size);

// Iterate t -> its type (borrowed X inference) until inference fails, a
// type repeats, or max_steps; returns the fresh types in order. An
// untypable start yields an empty list.
std::pair<std::vector<TreeRef>, int> iter_type(const TreeRef& t,
                                               int max_steps = 100);

// X trees that check against themselves read as a type.
void gen_self_typed(int n, bool exact, const TreeSink& sink);

// Size-inflating injections: a term's tree numeral read back as an
// X-combinator tree and expanded, and the same trip starting from a tree.
DbRef inflate_b2b(const DbRef& t);
TreeRef inflate_t2t(const TreeRef& t);

// Trajectory of length steps+1: normalize when typable and reducible,
// otherwise step to the successor tree numeral.
std::vector<DbRef> orbit(const DbRef& t, int steps);

}  // namespace lam
