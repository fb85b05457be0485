#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lam/term.hpp"

// Size-proportionate bijections between terms/types and naturals: binary
// trees go through balanced-parentheses words ranked within the Catalan
// families, node labels are packed with a generalized Cantor tupling based
// on the combinatorial number system. Ranks are arbitrary-precision.

namespace lam {

using Nat = boost::multiprecision::cpp_int;
using ParenWord = std::vector<int>;  // 0 = open, 1 = close; self-delimiting
using LabelList = std::vector<Nat>;  // depth-first: 2 per leaf, 1 per node
using CompSink = std::function<bool(const CompRef&)>;

// Trees <-> balanced parentheses (with an outer pair, so |w| = 2(size+1)).
ParenWord tree_to_parens(const TreeRef& t);
TreeRef parens_to_tree(const ParenWord& w);  // throws on unbalanced input

Nat binomial(const Nat& n, const Nat& k);  // 0 for k < 0 or k > n
Nat catalan_num(long long n);

// Balanced words of all lengths, ordered by length then locally.
Nat rank_catalan(const ParenWord& w);  // pre: balanced, length >= 2
ParenWord unrank_catalan(const Nat& r);

// Types are binary trees; these are the parens codec composed with ranking.
Nat rank_type(const TreeRef& t);
TreeRef unrank_type(const Nat& r);

// A compressed term split into its applicative skeleton and node labels;
// the label list has 3L+2 entries for L internal skeleton nodes.
std::pair<ParenWord, LabelList> to_skel(const CompRef& t);
CompRef from_skel(const ParenWord& w, const LabelList& labels);

// Lists of naturals <-> strictly increasing lists (prefix sums plus one).
std::vector<Nat> list_to_set(const std::vector<Nat>& ns);
std::vector<Nat> set_to_list(const std::vector<Nat>& xs);

// Generalized Cantor tupling: k naturals <-> one natural.
Nat from_cantor(const std::vector<Nat>& ns);
std::vector<Nat> to_cantor(long long k, const Nat& r);

// Possibly-open compressed de Bruijn terms <-> naturals.
Nat rank_term(const CompRef& t);
CompRef unrank_term(const Nat& r);

// Enumeration by unranking 0..max: all terms, closed ones, typable ones.
void ogen(const Nat& max, const CompSink& sink);
void cgen(const Nat& max, const CompSink& sink);
void tgen(const Nat& max, const CompSink& sink);

// A random term with a rank of about `bits` bits: draw a start uniformly in
// [2^bits, 2^(bits+1)) and scan a window of 2^bits ranks for the first term
// passing the filter; empty-handed scans return nothing (possible for the
// sparser kinds at large sizes).
enum class RanKind { Open, Closed, Typed };
std::optional<CompRef> ran_term(RanKind kind, int bits, std::uint64_t seed);

}  // namespace lam
