#pragma once

#include <utility>

#include "lam/codec.hpp"
#include "lam/term.hpp"

// Binary trees read as natural numbers: node(a,b) pairs the numbers of its
// subtrees with a run-length flavored pairing, so succ/pred can work on
// whole blocks of digits structurally, without converting to integers.

namespace lam {

// cons(i,j) = 2^(i+1)*j for odd j, 2^(i+1)*(j+1)-1 for even j; decons is its
// inverse via the largest power of 2 dividing (c rounded up to even).
// cons throws std::overflow_error when the result would be absurdly wide
// (shift amounts beyond ~10^6 bits), which deep left spines can demand.
Nat cons(const Nat& i, const Nat& j);
std::pair<Nat, Nat> decons(const Nat& c);  // throws std::domain_error on 0

TreeRef tree_of_nat(const Nat& k);
Nat nat_of_tree(const TreeRef& t);  // may throw like cons on monster trees

int parity(const TreeRef& t);  // nat_of_tree(t) mod 2, computed structurally
bool tree_even(const TreeRef& t);
bool tree_odd(const TreeRef& t);

TreeRef tree_succ(const TreeRef& t);
TreeRef tree_pred(const TreeRef& t);  // throws std::domain_error on x

// Addition/subtraction borrowed through the naturals; enough for the
// playground demos, not a native tree arithmetic.
TreeRef tree_add(const TreeRef& a, const TreeRef& b);
TreeRef tree_sub(const TreeRef& a, const TreeRef& b);  // throws if b > a

// De Bruijn terms as tree naturals: v(0) is x, a lambda hangs its body to
// the right of an x, v(k>0) hangs the numeral k to the left of an x, and an
// application pairs the successors of its branches (never x on either side,
// so the four decode shapes are disjoint).
//
// With succ_indices set, variable-index numerals are built by iterated
// tree_succ instead of the direct pairing arithmetic, keeping the whole
// codec at the tree level; kept as a documented variant, not exercised by
// the test suite.
TreeRef rank_db(const DbRef& t, bool succ_indices = false);
DbRef unrank_db(const TreeRef& t);  // throws std::overflow_error when a
                                    // variable index exceeds machine range

}  // namespace lam
