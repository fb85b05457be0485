#pragma once

#include <optional>

#include "lam/term.hpp"

// Normal-order evaluation of de Bruijn terms, evaluators for SK- and
// X-combinator trees, and the expansions of combinator trees into plain
// lambda terms.
//
// fuel < 0 means unbounded. One unit pays for one beta step (or one
// combinator rewrite); running out yields nullopt, a distinguished outcome
// rather than an error.

namespace lam {

DbRef shift_var(int inc, int cutoff, const DbRef& t);
DbRef subst(const DbRef& body, int idx, const DbRef& arg);
DbRef beta(const DbRef& lam, const DbRef& arg);  // pre: lam is l(_)

std::optional<DbRef> whnf(const DbRef& t, long long fuel = -1);
std::optional<DbRef> nf_db(const DbRef& t, long long fuel = -1);
std::optional<StdRef> eval_std(const StdRef& t, long long fuel = -1);
std::optional<CompRef> eval_compressed(const CompRef& t, long long fuel = -1);

// SK-combinator trees. app_sk applies one evaluated term to another.
std::optional<SkRef> eval_sk(const SkRef& t, long long fuel = -1);
std::optional<SkRef> app_sk(const SkRef& f, const SkRef& g, long long fuel = -1);

DbRef k_db();                      // l(l(v(1)))
DbRef s_db();                      // l(l(l(a(a(v(2),v(0)),a(v(1),v(0))))))
DbRef sk_to_db(const SkRef& t);

// X-combinator trees, with X f = f K S K.
std::optional<TreeRef> eval_x(const TreeRef& t, long long fuel = -1);
std::optional<TreeRef> app_x(const TreeRef& f, const TreeRef& g, long long fuel = -1);

DbRef x_db();                      // l(a(a(a(v(0),kB),sB),kB))
DbRef x_to_db(const TreeRef& t);   // size law: N internal nodes -> 15N+14

// Evaluate an X-combinator tree, then expand; or expand, then normalize.
std::optional<DbRef> eval_as_t(const TreeRef& t, long long fuel = -1);
std::optional<DbRef> eval_as_b(const TreeRef& t, long long fuel = -1);

}  // namespace lam
