#pragma once

#include <functional>
#include <vector>

#include "lam/term.hpp"

// Exhaustive enumeration of term families, ordered depth-first with the
// alternatives at each node tried in a fixed clause order; callers rely on
// that order being stable. Each family threads a fuel counter: lambda and
// application nodes cost one unit, variables are free (the binary-code
// family is the exception: there the fuel is the bit length of the code).
//
// `exact` keeps only terms using all the fuel; otherwise sizes up to the
// bound are produced, still in depth-first order. Sinks return false to
// stop the enumeration early.

namespace lam {

// Motzkin trees: unary-binary trees.
struct Mot;
using MotRef = std::shared_ptr<const Mot>;
struct Mot {
  enum class Tag { U, L, A };
  Tag tag;
  MotRef a, b;
};
MotRef mu();
MotRef ml(MotRef a);
MotRef ma(MotRef a, MotRef b);
bool eq(const MotRef& x, const MotRef& y);
std::string show(const MotRef& t);

using TreeSink = std::function<bool(const TreeRef&)>;
using MotSink = std::function<bool(const MotRef&)>;
using StdSink = std::function<bool(const StdRef&)>;
using DbSink = std::function<bool(const DbRef&)>;
using CompSink = std::function<bool(const CompRef&)>;
using SkSink = std::function<bool(const SkRef&)>;
using PairSink = std::function<bool(const DbRef&, const TreeRef&)>;
using SkPairSink = std::function<bool(const SkRef&, const TreeRef&)>;
using BlcSink = std::function<bool(const CompRef&, const std::vector<int>&)>;

// Binary trees: all of them up to a depth, or by node count (Catalan).
void gen_tree_by_depth(int depth, const TreeSink& sink);
void gen_tree(int n, bool exact, const TreeSink& sink);

// Unary leaves cost one unit like everything else, so there are
// Motzkin(n-1) trees of size n. With `zero_cost_leaves` the leaves are
// free and the counts follow the large Schröder numbers instead.
void gen_motzkin(int n, bool exact, const MotSink& sink, bool zero_cost_leaves = false);

// Closed lambda terms: named, de Bruijn, compressed; plus normal forms.
void gen_lambda_std(int n, bool exact, const StdSink& sink);
void gen_db(int n, bool exact, const DbSink& sink);
void gen_standard(int n, bool exact, const StdSink& sink);
void gen_compressed(int n, bool exact, const CompSink& sink);
void gen_nf(int n, bool exact, const CompSink& sink);

// Restricted families, all exact-size, in compressed form.
void gen_linear(int n, const CompSink& sink);
void gen_affine(int n, const CompSink& sink);
void gen_bounded_unary(int bound, int n, bool exact, const CompSink& sink);

// Terms whose binary-code length is exactly `bits`; variables are encoded
// in unary with 1-based indices kept literally in the term.
void gen_blc(int bits, const BlcSink& sink);

// Well-typed closed terms. gen_typed interleaves generation with type
// inference (pruning untypable prefixes); gen_typed_naive generates
// everything and filters, and gen_typable filters on the compressed form.
// The two routes must agree and the tests hold them to that.
void gen_typed(int n, bool exact, const PairSink& sink);
void gen_typed_naive(int n, bool exact, const PairSink& sink);
void gen_typable(int n, bool exact, const CompSink& sink);

// Exact-size typed terms with at most `max_free` free variables; the same
// term reappears for every context size that admits it.
void gen_typed_with_free(int n, int max_free, const PairSink& sink);

// SK-combinator trees and their typed/untypable refinements.
void gen_sk(int n, bool exact, const SkSink& sink);
void gen_typed_sk(int n, bool exact, const SkPairSink& sink);
void gen_untypable_sk(int n, bool exact, const SkSink& sink);

// Types are binary trees; gen_type exists so call sites say what they mean.
void gen_type(int n, bool exact, const TreeSink& sink);

// Inhabitants of a given type: generation is seeded with the query type and
// every candidate's principal type is re-checked against it afterwards
// (seeding alone would admit more general terms).
void query_typed(int n, const TreeRef& type, bool exact, const DbSink& sink);

// For every type of size n, its inhabitants of size <= n (principal type
// equal to it).
void gen_by_type(int n, const PairSink& sink);
// For every type of size n, the SK terms of size <= n admitting it.
void gen_by_type_sk(int n, const SkPairSink& sink);

}  // namespace lam
