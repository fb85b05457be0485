#include "lam/lab.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "lam/reduce.hpp"
#include "lam/treenat.hpp"
#include "lam/typeinf.hpp"

namespace lam {

void type_siblings(const DbRef& t, const DbSink& sink) {
  auto ty = infer_db(t);
  if (!ty) throw std::domain_error("term has no type");
  query_typed(term_size(t), *ty, false, sink);
}

namespace {

struct TypeTally {
  long long terms = 0;
  std::unordered_map<std::string, long long> by_type;
};

TypeTally tally_size(int n) {
  TypeTally s;
  gen_typed(n, true, [&](const DbRef&, const TreeRef& ty) {
    ++s.terms;
    ++s.by_type[show(ty)];
    return true;
  });
  return s;
}

std::vector<std::pair<std::string, long long>> top_of(
    const std::unordered_map<std::string, long long>& m, int k) {
  std::vector<std::pair<std::string, long long>> v(m.begin(), m.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (static_cast<int>(v.size()) > k) v.resize(k);
  return v;
}

CensusRow row_of(int size, bool cumulative, const TypeTally& s, int top_k) {
  CensusRow r;
  r.size = size;
  r.cumulative = cumulative;
  r.types = static_cast<long long>(s.by_type.size());
  r.terms = s.terms;
  r.ratio = s.terms == 0 ? 0 : static_cast<double>(r.types) / r.terms;
  r.top = top_of(s.by_type, top_k);
  return r;
}

}  // namespace

std::vector<CensusRow> type_census(int max_size, int top_k, int jobs) {
  std::vector<TypeTally> per(max_size + 1);
  if (jobs <= 1) {
    for (int n = 1; n <= max_size; ++n) per[n] = tally_size(n);
  } else {
    std::vector<std::thread> ws;
    for (int w = 0; w < jobs; ++w)
      ws.emplace_back([&, w] {
        for (int n = 1 + w; n <= max_size; n += jobs) per[n] = tally_size(n);
      });
    for (auto& t : ws) t.join();
  }
  std::vector<CensusRow> rows;
  TypeTally all;
  for (int n = 1; n <= max_size; ++n) {
    rows.push_back(row_of(n, false, per[n], top_k));
    all.terms += per[n].terms;
    for (const auto& [ty, c] : per[n].by_type) all.by_type[ty] += c;
  }
  rows.push_back(row_of(max_size, true, all, top_k));
  return rows;
}

std::vector<long long> growth_sequence(const TreeRef& type, int max_size) {
  std::vector<long long> out;
  for (int n = 1; n <= max_size; ++n) {
    long long c = 0;
    query_typed(n, type, true, [&](const DbRef&) {
      ++c;
      return true;
    });
    out.push_back(c);
  }
  return out;
}

namespace {

long long ll_pow2(int e) { return 1LL << e; }

}  // namespace

std::vector<DensityRow> sk_density(int max_size) {
  std::vector<DensityRow> rows;
  for (int n = 0; n <= max_size; ++n) {
    DensityRow r;
    r.size = n;
    gen_typed_sk(n, true, [&](const SkRef&, const TreeRef&) {
      ++r.typed;
      return true;
    });
    r.total = (catalan_num(n) * ll_pow2(n + 1)).convert_to<long long>();
    r.ratio = static_cast<double>(r.typed) / r.total;
    rows.push_back(r);
  }
  return rows;
}

std::vector<DensityRow> x_density(int max_size) {
  std::vector<DensityRow> rows;
  for (int n = 0; n <= max_size; ++n) {
    DensityRow r;
    r.size = n;
    gen_tree(n, true, [&](const TreeRef& t) {
      ++r.total;
      if (infer_x(t, XMode::Borrowed)) ++r.typed;
      return true;
    });
    r.ratio = static_cast<double>(r.typed) / r.total;
    rows.push_back(r);
  }
  return rows;
}

namespace {

SkRef wtf_walk(const SkRef& t, int& next,
               std::vector<std::pair<int, SkRef>>& eqs) {
  if (typable_sk(t)) {
    int id = next++;
    eqs.emplace_back(id, t);
    return sk_hole(id);
  }
  // an untypable term is an application: s and k type on their own
  SkRef l = wtf_walk(t->l, next, eqs);
  SkRef r = wtf_walk(t->r, next, eqs);
  return sk_ap(l, r);
}

SkRef graft(const SkRef& t, const std::vector<std::pair<int, SkRef>>& eqs) {
  switch (t->tag) {
    case SkTerm::Tag::Hole:
      for (const auto& [id, m] : eqs)
        if (id == t->idx) return m;
      throw std::invalid_argument("unmatched hole");
    case SkTerm::Tag::Ap:
      return sk_ap(graft(t->l, eqs), graft(t->r, eqs));
    default:
      return t;
  }
}

}  // namespace

FrontierDecomposition well_typed_frontier(const SkRef& t) {
  FrontierDecomposition d;
  int next = 0;
  d.trunk = wtf_walk(t, next, d.equations);
  return d;
}

std::vector<SkRef> extract_frontier(const SkRef& t) {
  std::vector<SkRef> out;
  for (auto& [id, m] : well_typed_frontier(t).equations) out.push_back(m);
  return out;
}

SkRef fuse_frontier(const FrontierDecomposition& d) {
  return graft(d.trunk, d.equations);
}

SkRef simplify_sk(const SkRef& t) {
  FrontierDecomposition d = well_typed_frontier(t);
  for (auto& [id, m] : d.equations) m = *eval_sk(m);
  return fuse_frontier(d);
}

std::vector<FrontierStatsRow> frontier_stats(int max_size) {
  std::vector<FrontierStatsRow> rows;
  for (int n = 1; n <= max_size; ++n) {
    long long terms = 0, trunk_total = 0;
    gen_sk(n, true, [&](const SkRef& t) {
      ++terms;
      trunk_total += term_size(well_typed_frontier(t).trunk);
      return true;
    });
    FrontierStatsRow r;
    r.size = n;
    r.trunk = static_cast<double>(trunk_total) / terms;
    r.frontier = n - r.trunk;
    r.trunk_pct = 100.0 * r.trunk / n;
    r.frontier_pct = 100.0 - r.trunk_pct;
    rows.push_back(r);
  }
  return rows;
}

std::pair<std::vector<TreeRef>, int> iter_type(const TreeRef& t,
                                               int max_steps) {
  std::vector<TreeRef> types;
  TreeRef cur = t;
  while (static_cast<int>(types.size()) < max_steps) {
    auto ty = infer_x(cur, XMode::Borrowed);
    if (!ty) break;
    bool seen = false;
    for (const TreeRef& old : types)
      if (eq(old, *ty)) {
        seen = true;
        break;
      }
    if (seen) break;
    types.push_back(*ty);
    cur = *ty;
  }
  int steps = static_cast<int>(types.size());
  return {std::move(types), steps};
}

void gen_self_typed(int n, bool exact, const TreeSink& sink) {
  gen_tree(n, exact, [&](const TreeRef& t) {
    if (checks_db(x_to_db(t), t)) return sink(t);
    return true;
  });
}

DbRef inflate_b2b(const DbRef& t) { return x_to_db(rank_db(t)); }

TreeRef inflate_t2t(const TreeRef& t) { return rank_db(x_to_db(t)); }

std::vector<DbRef> orbit(const DbRef& t, int steps) {
  std::vector<DbRef> tr{t};
  DbRef cur = t;
  for (int i = 0; i < steps; ++i) {
    DbRef next;
    if (typable_db(cur)) {
      DbRef nf = *nf_db(cur);
      next = eq(nf, cur) ? unrank_db(tree_succ(rank_db(cur))) : nf;
    } else {
      next = unrank_db(tree_succ(rank_db(cur)));
    }
    tr.push_back(next);
    cur = next;
  }
  return tr;
}

}  // namespace lam
