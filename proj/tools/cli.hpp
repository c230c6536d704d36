#pragma once

// Command-line front end. `run` takes the argument vector and two streams so the whole
// surface can be driven from tests.
//
// Exit codes: 0 satisfied / equivalent / all pass, 2 not satisfied / not equivalent /
// some law failed, 1 on any error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tml/catalog.hpp"
#include "tml/checker.hpp"
#include "tml/formula.hpp"
#include "tml/laws.hpp"
#include "tml/model.hpp"
#include "tml/transforms.hpp"

namespace tml::cli {

struct Options {
  std::vector<std::string> models;
  std::vector<std::string> worlds;
  std::vector<std::size_t> indices;
  std::string formula;
  std::size_t depth = 2;
  std::size_t degree = 2;
  std::size_t bound = 6;
  std::size_t max_level = kDefaultMaxLevel;
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  bool explain = false;
  bool extended = false;
  std::string name;
};

/// A catalog name, else a path to a model document.
inline KripkeModel resolve_model(const std::string& spec, const Options& o) {
  if (auto m = catalog::lookup(spec, o.extended, o.max_level)) return *m;
  std::ifstream in(spec, std::ios::binary);
  if (!in) throw ModelError("'" + spec + "' is neither a catalog name nor a readable file");
  std::ostringstream text;
  text << in.rdbuf();
  return load_model(text.str(), o.max_level);
}

inline WorldIndex resolve_world(const KripkeModel& m, const Options& o, std::size_t which = 0) {
  if (o.worlds.size() > which) return m.index_of(o.worlds[which]);
  return m.designated();
}

inline const std::string& one_model(const Options& o) {
  if (o.models.size() != 1) throw Error("expected exactly one --model");
  return o.models.front();
}

inline int cmd_check(const Options& o, std::ostream& out) {
  const KripkeModel m = resolve_model(one_model(o), o);
  const Formula f = parse_formula(o.formula);
  Checker checker(m);
  checker.record_traces(o.explain);
  const auto truth = checker.eval_all(f);
  const WorldIndex target = resolve_world(m, o);
  if (o.worlds.empty()) {
    for (WorldIndex w = 0; w < m.world_count(); ++w) out << m.world(w).id << ": " << (truth[w] ? "true" : "false") << "\n";
  } else {
    out << m.world(target).id << ": " << (truth[target] ? "true" : "false") << "\n";
  }
  if (o.explain)
    for (const RankTrace& t : checker.traces())
      if (o.worlds.empty() || t.world == m.world(target).id) out << format_trace(t);
  return truth[target] ? 0 : 2;
}

inline int cmd_parse(const Options& o, std::ostream& out) {
  const Formula f = parse_formula(o.formula);
  out << to_string(f) << "\n";
  out << "degree: " << f.degree() << "\n";
  out << "size: " << f.size() << "\n";
  return 0;
}

inline int cmd_unravel(const Options& o, std::ostream& out) {
  const KripkeModel m = resolve_model(one_model(o), o);
  out << dump_model(unravel(m, resolve_world(m, o), o.depth)) << "\n";
  return 0;
}

inline int cmd_compress(const Options& o, std::ostream& out, std::ostream& err) {
  const KripkeModel m = resolve_model(one_model(o), o);
  const WorldIndex s = resolve_world(m, o);
  const std::size_t n = o.indices.empty() ? min_base_index(m, s, o.depth) : o.indices.front();
  const Compression c = compress(m, s, o.depth, n, CompressOptions{o.max_level});
  out << dump_model(c.model) << "\n";
  if (o.explain) err << format_plan(c.plan);
  return 0;
}

inline int cmd_equiv(const Options& o, std::ostream& out) {
  if (o.models.size() != 2) throw Error("equiv expects --model twice");
  const KripkeModel a = resolve_model(o.models[0], o);
  const KripkeModel b = resolve_model(o.models[1], o);
  const std::size_t alpha = o.indices.size() > 0 ? o.indices[0] : 0;
  const std::size_t beta = o.indices.size() > 1 ? o.indices[1] : alpha;
  const auto r = modal_equiv_enum({a, resolve_world(a, o, 0)}, {b, resolve_world(b, o, 1)}, o.depth, alpha, beta,
                                  o.bound);
  if (r.equivalent) {
    out << "EQUIV_UP_TO_BOUND (" << r.formulas_checked << " formulas, size <= " << o.bound << ")\n";
    return 0;
  }
  out << "NOT_EQUIV witness: " << to_string(*r.witness) << "\n";
  out << "clause " << r.clause << ": " << r.reason << "\n";
  return 2;
}

inline int cmd_examples(const Options& o, std::ostream& out) {
  if (o.name.empty()) {
    for (const auto& n : catalog::names()) out << n << "\n";
    return 0;
  }
  auto m = catalog::lookup(o.name, o.extended, o.max_level);
  if (!m) throw ModelError("unknown example '" + o.name + "'");
  out << dump_model(*m) << "\n";
  return 0;
}

inline int cmd_selftest(const Options& o, std::ostream& out) {
  const std::string suite = o.name.empty() ? "all" : o.name;
  if (suite != "all" && suite != "ordinal" && suite != "laws") throw Error("unknown suite '" + suite + "'");
  bool ok = true;
  if (suite == "all" || suite == "ordinal") {
    const auto results = laws::oracle_agreement(o.seed, o.count * 10);
    std::size_t passed = 0, total = 0;
    for (const auto& r : results) {
      out << laws::format(r, "agree") << "\n";
      passed += r.passed;
      total += r.total;
      ok = ok && r.ok();
    }
    out << "level-0 oracle: " << passed << "/" << total << " agree\n";
  }
  if (suite == "all" || suite == "laws") {
    for (const auto& r : laws::ordinal_laws(o.seed, o.count)) {
      out << laws::format(r) << "\n";
      ok = ok && r.ok();
    }
  }
  return ok ? 0 : 2;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Transfinite modal logic model checker"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-level", o.max_level, "Number of aleph levels available")->check(CLI::Range(1, 64));

  auto model_opt = [&](CLI::App* sub, bool many) {
    auto* opt = sub->add_option("--model", o.models, "Model file or catalog name");
    opt->required();
    if (!many) opt->expected(1);
  };

  auto* check = app.add_subcommand("check", "Evaluate a formula on a model");
  model_opt(check, false);
  check->add_option("--formula", o.formula, "Formula text")->required();
  check->add_option("--world", o.worlds, "Report only this world")->expected(1);
  check->add_flag("--explain", o.explain, "Print duplex box rank traces");
  check->add_flag("--extended", o.extended, "Extend ex_det by one generation");

  auto* parse = app.add_subcommand("parse", "Print the core form of a formula");
  parse->add_option("--formula", o.formula, "Formula text")->required();

  auto* unravel_cmd = app.add_subcommand("unravel", "Unravel a pointed model to a tree");
  model_opt(unravel_cmd, false);
  unravel_cmd->add_option("--world", o.worlds, "Start world")->expected(1);
  unravel_cmd->add_option("--depth", o.depth, "Walk length bound");
  unravel_cmd->add_flag("--extended", o.extended, "Extend ex_det by one generation");

  auto* compress_cmd = app.add_subcommand("compress", "Compress a pointed tree to finitely indexed multiplicities");
  model_opt(compress_cmd, false);
  compress_cmd->add_option("--world", o.worlds, "Root world")->expected(1);
  compress_cmd->add_option("--depth,--degree", o.depth, "Formula degree to preserve");
  compress_cmd->add_option("--index", o.indices, "Base index n (default: the minimum)")->expected(1);
  compress_cmd->add_flag("--explain", o.explain, "Write the compression plan to standard error");
  compress_cmd->add_flag("--extended", o.extended, "Extend ex_det by one generation");

  auto* equiv = app.add_subcommand("equiv", "Bounded (k, alpha, beta) modal equivalence");
  model_opt(equiv, true);
  equiv->add_option("--world", o.worlds, "Worlds of the first and second model");
  equiv->add_option("--depth,--degree", o.depth, "Degree k");
  equiv->add_option("--index", o.indices, "alpha, then beta");
  equiv->add_option("--bound", o.bound, "Formula size bound");
  equiv->add_flag("--extended", o.extended, "Extend ex_det by one generation");

  auto* examples = app.add_subcommand("examples", "List built-in models or print one");
  examples->add_option("name", o.name, "Example name");
  examples->add_flag("--extended", o.extended, "Extend ex_det by one generation");

  auto* selftest = app.add_subcommand("selftest", "Run the oracle agreement and ordinal law suites");
  selftest->add_option("suite", o.name, "ordinal, laws or all");
  selftest->add_option("--seed", o.seed, "Random seed");
  selftest->add_option("--count", o.count, "Instances per law");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*parse) return cmd_parse(o, out);
    if (*unravel_cmd) return cmd_unravel(o, out);
    if (*compress_cmd) return cmd_compress(o, out, err);
    if (*equiv) return cmd_equiv(o, out);
    if (*examples) return cmd_examples(o, out);
    if (*selftest) return cmd_selftest(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace tml::cli
