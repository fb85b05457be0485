#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "lam/codec.hpp"
#include "lam/gen.hpp"
#include "lam/lab.hpp"
#include "lam/reduce.hpp"
#include "lam/term.hpp"
#include "lam/treenat.hpp"
#include "lam/typeinf.hpp"

// One verb per library capability; exit codes: 0 ok, 1 usage, 2 domain
// (bad term, untypable, unbalanced, fuel), 3 nothing found.

using namespace lam;
using nlohmann::json;

namespace {

struct NothingFound {};

Nat parse_nat(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("not a decimal natural: " + s);
  return Nat(s);
}

ParenWord parse_word(const std::string& s) {
  ParenWord w;
  for (char c : s) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("parentheses words are over {0,1}");
    w.push_back(c - '0');
  }
  return w;
}

std::string word_str(const ParenWord& w) {
  std::string s;
  for (int b : w) s += char('0' + b);
  return s;
}

void emit(const std::string& term, const std::string& fmt) {
  if (fmt == "json")
    std::cout << json{{"term", term}}.dump() << "\n";
  else
    std::cout << term << "\n";
}

void emit_pair(const std::string& term, const std::string& type,
               const std::string& fmt) {
  if (fmt == "json")
    std::cout << json{{"term", term}, {"type", type}}.dump() << "\n";
  else if (fmt == "pairs")
    std::cout << term << " : " << type << "\n";
  else
    std::cout << term << "\n";
}

// The enumerable families, shared by `gen` and `count`. Plain families feed
// show() through one sink; paired families carry the inferred type along.
struct Family {
  int first_size = 1;
  bool paired = false;
  std::function<void(int, bool, const std::function<bool(const std::string&)>&)> run;
  std::function<void(int, bool, const std::function<bool(const std::string&, const std::string&)>&)> run_pairs;
};

template <typename Gen>
Family plain_family(int first, Gen gen) {
  Family f;
  f.first_size = first;
  f.run = [gen](int n, bool exact, const std::function<bool(const std::string&)>& out) {
    gen(n, exact, [&](const auto& t) { return out(show(t)); });
  };
  return f;
}

template <typename Gen>
Family pair_family(int first, Gen gen) {
  Family f;
  f.first_size = first;
  f.paired = true;
  f.run = [gen](int n, bool exact, const std::function<bool(const std::string&)>& out) {
    gen(n, exact, [&](const auto& t, const auto&) { return out(show(t)); });
  };
  f.run_pairs = [gen](int n, bool exact,
                      const std::function<bool(const std::string&, const std::string&)>& out) {
    gen(n, exact, [&](const auto& t, const auto& ty) { return out(show(t), show(ty)); });
  };
  return f;
}

std::map<std::string, Family> families() {
  std::map<std::string, Family> m;
  m["tree"] = plain_family(0, [](int n, bool e, const TreeSink& s) { gen_tree(n, e, s); });
  m["motzkin"] = plain_family(1, [](int n, bool e, const MotSink& s) { gen_motzkin(n, e, s); });
  m["db"] = plain_family(1, [](int n, bool e, const DbSink& s) { gen_db(n, e, s); });
  m["std"] = plain_family(1, [](int n, bool e, const StdSink& s) { gen_standard(n, e, s); });
  m["compressed"] = plain_family(1, [](int n, bool e, const CompSink& s) { gen_compressed(n, e, s); });
  m["nf"] = plain_family(1, [](int n, bool e, const CompSink& s) { gen_nf(n, e, s); });
  m["typable"] = plain_family(1, [](int n, bool e, const CompSink& s) { gen_typable(n, e, s); });
  m["linear"] = plain_family(1, [](int n, bool e, const CompSink& s) {
    if (!e) throw CLI::ValidationError("--upto", "linear terms are exact-size only");
    gen_linear(n, s);
  });
  m["affine"] = plain_family(1, [](int n, bool e, const CompSink& s) {
    if (!e) throw CLI::ValidationError("--upto", "affine terms are exact-size only");
    gen_affine(n, s);
  });
  m["sk"] = plain_family(0, [](int n, bool e, const SkSink& s) { gen_sk(n, e, s); });
  m["sk-untypable"] = plain_family(0, [](int n, bool e, const SkSink& s) { gen_untypable_sk(n, e, s); });
  m["type"] = plain_family(0, [](int n, bool e, const TreeSink& s) { gen_type(n, e, s); });
  m["self-typed"] = plain_family(1, [](int n, bool e, const TreeSink& s) { gen_self_typed(n, e, s); });
  m["typed"] = pair_family(1, [](int n, bool e, const PairSink& s) { gen_typed(n, e, s); });
  m["typed-naive"] = pair_family(1, [](int n, bool e, const PairSink& s) { gen_typed_naive(n, e, s); });
  m["sk-typed"] = pair_family(0, [](int n, bool e, const SkPairSink& s) { gen_typed_sk(n, e, s); });
  m["by-type"] = pair_family(1, [](int n, bool e, const PairSink& s) {
    if (!e) throw CLI::ValidationError("--upto", "by-type enumerates per type size");
    gen_by_type(n, s);
  });
  m["by-type-sk"] = pair_family(1, [](int n, bool e, const SkPairSink& s) {
    if (!e) throw CLI::ValidationError("--upto", "by-type-sk enumerates per type size");
    gen_by_type_sk(n, s);
  });
  return m;
}

Family pick_family(const std::string& name) {
  auto fams = families();
  auto it = fams.find(name);
  if (it == fams.end()) throw CLI::ValidationError("--family", "unknown family " + name);
  return it->second;
}

long long family_count(const Family& fam, int n) {
  long long c = 0;
  fam.run(n, true, [&](const std::string&) {
    ++c;
    return true;
  });
  return c;
}

DbRef nf_or_throw(const DbRef& t, long long fuel) {
  auto r = nf_db(t, fuel);
  if (!r) throw std::domain_error("fuel exhausted after " + std::to_string(fuel) + " steps");
  return *r;
}

std::string hole_name(int id) { return show(sk_hole(id)); }

void cmd_census(int max, int top, int jobs, const std::string& fmt) {
  for (auto& r : type_census(max, top, jobs)) {
    if (fmt == "json") {
      json top_j = json::array();
      for (auto& [ty, c] : r.top) top_j.push_back({ty, c});
      std::cout << json{{"size", r.size},
                        {"cumulative", r.cumulative},
                        {"types", r.types},
                        {"terms", r.terms},
                        {"ratio", r.ratio},
                        {"top", top_j}}
                       .dump()
                << "\n";
    } else {
      std::cout << (r.cumulative ? "cumulative" : "exact") << "\t" << r.size
                << "\t" << r.types << "\t" << r.terms << "\t";
      std::cout << std::fixed << std::setprecision(4) << r.ratio
                << std::defaultfloat << "\t";
      for (std::size_t i = 0; i < r.top.size(); ++i)
        std::cout << (i ? "," : "") << r.top[i].second << ":" << r.top[i].first;
      std::cout << "\n";
    }
  }
}

void cmd_density(const std::string& calculus, int max, const std::string& fmt) {
  auto rows = calculus == "sk" ? sk_density(max) : x_density(max);
  for (auto& r : rows) {
    if (fmt == "json")
      std::cout << json{{"size", r.size},
                        {"typed", r.typed},
                        {"total", r.total},
                        {"ratio", r.ratio}}
                       .dump()
                << "\n";
    else
      std::cout << r.size << "\t" << r.typed << "\t" << r.total << "\t"
                << std::fixed << std::setprecision(4) << r.ratio
                << std::defaultfloat << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lambda calculus and combinator playground"};
  app.require_subcommand(1);

  std::string family = "db", format = "plain", scheme = "term", engine = "db";
  std::string table_format = "tsv", orbit_format = "csv";
  std::string calculus = "sk", kind = "closed", from = "db", to = "db";
  std::string arg, type_str;
  int size = 3, max = 5, top = 5, jobs = 1, steps = 20, max_steps = 100;
  int bits = 10;
  bool upto = false;
  long long fuel = 100000;
  std::uint64_t seed = 0;

  auto* g = app.add_subcommand("gen", "enumerate a term family by size");
  g->add_option("--family", family, "family to enumerate")->required();
  g->add_option("--size", size, "size (fuel units)")->required();
  g->add_flag("--upto", upto, "sizes up to --size instead of exact");
  g->add_option("--format", format)->check(CLI::IsMember({"plain", "pairs", "json"}));
  g->callback([&] {
    auto fam = pick_family(family);
    if (format == "pairs" && !fam.paired)
      throw CLI::ValidationError("--format", "family " + family + " has no types to pair");
    if (fam.paired)
      fam.run_pairs(size, !upto, [&](const std::string& t, const std::string& ty) {
        emit_pair(t, ty, format);
        return true;
      });
    else
      fam.run(size, !upto, [&](const std::string& t) {
        emit(t, format);
        return true;
      });
  });

  auto* c = app.add_subcommand("count", "count a family per size");
  c->add_option("--family", family)->required();
  c->add_option("--max", max, "largest size")->required();
  c->add_option("--jobs", jobs, "shard sizes across threads");
  c->callback([&] {
    auto fam = pick_family(family);
    int lo = fam.first_size;
    std::vector<long long> counts(std::max(0, max - lo + 1), 0);
    if (jobs > 1) {
      std::vector<std::thread> ws;
      for (int w = 0; w < jobs; ++w)
        ws.emplace_back([&, w] {
          for (int n = lo + w; n <= max; n += jobs)
            counts[n - lo] = family_count(fam, n);
        });
      for (auto& t : ws) t.join();
    } else {
      for (int n = lo; n <= max; ++n) counts[n - lo] = family_count(fam, n);
    }
    for (std::size_t i = 0; i < counts.size(); ++i)
      std::cout << (i ? " " : "") << counts[i];
    std::cout << "\n";
  });

  auto* rk = app.add_subcommand("rank", "term/word to its rank");
  rk->add_option("--scheme", scheme)->check(CLI::IsMember({"term", "catalan", "type", "tree"}));
  rk->add_option("input", arg, "term or parentheses word")->required();
  rk->callback([&] {
    if (scheme == "term")
      std::cout << rank_term(parse_comp(arg)) << "\n";
    else if (scheme == "catalan")
      std::cout << rank_catalan(parse_word(arg)) << "\n";
    else if (scheme == "type")
      std::cout << rank_type(parse_tree(arg)) << "\n";
    else
      std::cout << nat_of_tree(parse_tree(arg)) << "\n";
  });

  auto* urk = app.add_subcommand("unrank", "rank to its term/word");
  urk->add_option("--scheme", scheme)->check(CLI::IsMember({"term", "catalan", "type", "tree"}));
  urk->add_option("rank", arg, "decimal rank")->required();
  urk->callback([&] {
    Nat r = parse_nat(arg);
    if (scheme == "term")
      std::cout << show(unrank_term(r)) << "\n";
    else if (scheme == "catalan")
      std::cout << word_str(unrank_catalan(r)) << "\n";
    else if (scheme == "type")
      std::cout << show(unrank_type(r)) << "\n";
    else
      std::cout << show(tree_of_nat(r)) << "\n";
  });

  auto* e = app.add_subcommand("eval", "normalize a term");
  e->add_option("--engine", engine)->check(CLI::IsMember({"db", "sk", "x"}));
  e->add_option("--fuel", fuel, "step budget, < 0 unbounded");
  e->add_option("term", arg)->required();
  e->callback([&] {
    if (engine == "db") {
      std::cout << show(nf_or_throw(parse_db(arg), fuel)) << "\n";
    } else if (engine == "sk") {
      auto r = eval_sk(parse_sk(arg), fuel);
      if (!r) throw std::domain_error("fuel exhausted after " + std::to_string(fuel) + " steps");
      std::cout << show(*r) << "\n";
    } else {
      auto r = eval_x(parse_tree(arg), fuel);
      if (!r) throw std::domain_error("fuel exhausted after " + std::to_string(fuel) + " steps");
      std::cout << show(*r) << "\n";
    }
  });

  auto* ty = app.add_subcommand("type", "infer a principal type");
  ty->add_option("--engine", engine)->check(CLI::IsMember({"std", "db", "sk", "x", "x-direct"}));
  ty->add_option("term", arg)->required();
  ty->callback([&] {
    if (engine == "std") {
      auto r = infer_std(parse_std(arg));
      if (!r) throw std::domain_error("untypable term");
      std::cout << r->str() << "\n";
      return;
    }
    std::optional<TreeRef> r;
    if (engine == "db")
      r = infer_db(parse_db(arg));
    else if (engine == "sk")
      r = infer_sk_simple(parse_sk(arg));
    else
      r = infer_x(parse_tree(arg), engine == "x" ? XMode::Borrowed : XMode::Direct);
    if (!r) throw std::domain_error("untypable term");
    std::cout << show(*r) << "\n";
  });

  auto* cs = app.add_subcommand("census", "typed-term census by principal type");
  cs->add_option("--max", max)->required();
  cs->add_option("--top", top, "most frequent types per row");
  cs->add_option("--jobs", jobs);
  cs->add_option("--format", table_format)->check(CLI::IsMember({"tsv", "json"}));
  cs->callback([&] { cmd_census(max, top, jobs, table_format); });

  auto* gr = app.add_subcommand("growth", "exact-size inhabitant counts of a type");
  gr->add_option("--type", type_str)->required();
  gr->add_option("--max", max)->required();
  gr->callback([&] {
    auto counts = growth_sequence(parse_tree(type_str), max);
    for (std::size_t i = 0; i < counts.size(); ++i)
      std::cout << (i ? " " : "") << counts[i];
    std::cout << "\n";
  });

  auto* d = app.add_subcommand("density", "typable fraction per size");
  d->add_option("--calculus", calculus)->check(CLI::IsMember({"sk", "x"}));
  d->add_option("--max", max)->required();
  d->add_option("--format", table_format)->check(CLI::IsMember({"tsv", "json"}));
  d->callback([&] { cmd_density(calculus, max, table_format); });

  auto* fr = app.add_subcommand("frontier", "well-typed frontier of an SK term");
  fr->add_option("term", arg)->required();
  fr->callback([&] {
    auto dec = well_typed_frontier(parse_sk(arg));
    std::cout << "trunk: " << show(dec.trunk) << "\n";
    for (auto& [id, t] : dec.equations)
      std::cout << hole_name(id) << " = " << show(t) << "\n";
  });

  auto* sim = app.add_subcommand("simplify-sk", "normalize the frontier in place");
  sim->add_option("term", arg)->required();
  sim->callback([&] { std::cout << show(simplify_sk(parse_sk(arg))) << "\n"; });

  auto* sib = app.add_subcommand("siblings", "terms sharing the principal type");
  sib->add_option("term", arg)->required();
  sib->callback([&] {
    type_siblings(parse_db(arg), [&](const DbRef& t) {
      std::cout << show(t) << "\n";
      return true;
    });
  });

  auto* it = app.add_subcommand("itertype", "iterate tree -> type until a repeat");
  it->add_option("term", arg)->required();
  it->add_option("--max-steps", max_steps);
  it->callback([&] {
    auto trace = iter_type(parse_tree(arg), max_steps);
    for (auto& t : trace.first) std::cout << show(t) << "\n";
  });

  auto* st = app.add_subcommand("selftyped", "trees that check against themselves");
  st->add_option("--size", size)->required();
  st->add_flag("--upto", upto);
  st->callback([&] {
    gen_self_typed(size, !upto, [&](const TreeRef& t) {
      std::cout << show(t) << "\n";
      return true;
    });
  });

  auto* ob = app.add_subcommand("orbit", "eval-or-successor trajectory");
  ob->add_option("term", arg)->required();
  ob->add_option("--steps", steps);
  ob->add_option("--format", orbit_format)->check(CLI::IsMember({"csv", "plain"}));
  ob->callback([&] {
    auto o = orbit(parse_db(arg), steps);
    for (std::size_t i = 0; i < o.size(); ++i)
      if (orbit_format == "plain")
        std::cout << show(o[i]) << "\n";
      else
        std::cout << i << "," << term_size(o[i]) << "\n";
  });

  auto* rn = app.add_subcommand("random", "random term by rank window");
  rn->add_option("--kind", kind)->check(CLI::IsMember({"open", "closed", "typed"}));
  rn->add_option("--bits", bits, "rank width in bits");
  rn->add_option("--seed", seed);
  rn->callback([&] {
    auto k = kind == "open"   ? RanKind::Open
             : kind == "typed" ? RanKind::Typed
                                : RanKind::Closed;
    auto t = ran_term(k, bits, seed);
    if (!t) throw NothingFound{};
    std::cout << show(*t) << "\n";
  });

  auto* cv = app.add_subcommand("convert", "translate between representations");
  cv->add_option("--from", from)
      ->check(CLI::IsMember({"std", "db", "comp", "tree", "nat", "sk", "x"}));
  cv->add_option("--to", to)->check(CLI::IsMember({"std", "db", "comp", "tree", "nat"}));
  cv->add_option("term", arg)->required();
  cv->callback([&] {
    DbRef db;
    if (from == "std")
      db = std_to_db(parse_std(arg));
    else if (from == "db")
      db = parse_db(arg);
    else if (from == "comp")
      db = compressed_to_db(parse_comp(arg));
    else if (from == "sk")
      db = sk_to_db(parse_sk(arg));
    else if (from == "x")
      db = x_to_db(parse_tree(arg));
    else if (from == "tree" || from == "nat") {
      TreeRef t = from == "tree" ? parse_tree(arg) : tree_of_nat(parse_nat(arg));
      if (to == "tree")
        std::cout << show(t) << "\n";
      else if (to == "nat")
        std::cout << nat_of_tree(t) << "\n";
      else if (to == "db")
        std::cout << show(unrank_db(t)) << "\n";
      else
        throw CLI::ValidationError("--to", "tree/nat inputs convert to tree, nat, or db");
      return;
    }
    if (to == "db")
      std::cout << show(db) << "\n";
    else if (to == "std")
      std::cout << show(db_to_std(db)) << "\n";
    else if (to == "comp")
      std::cout << show(db_to_compressed(db)) << "\n";
    else if (to == "tree")
      std::cout << show(rank_db(db)) << "\n";
    else
      std::cout << nat_of_tree(rank_db(db)) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int rc = app.exit(err);
    return rc == 0 ? 0 : 1;
  } catch (const NothingFound&) {
    std::cerr << "no term found in the sampled rank window\n";
    return 3;
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return 2;
  } catch (const std::domain_error& err) {
    std::cerr << err.what() << "\n";
    return 2;
  } catch (const std::overflow_error& err) {
    std::cerr << err.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << err.what() << "\n";
    return 2;
  }
  return 0;
}
