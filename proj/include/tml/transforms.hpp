#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tml/cardinal.hpp"
#include "tml/checker.hpp"
#include "tml/error.hpp"
#include "tml/formula.hpp"
#include "tml/model.hpp"
#include "tml/ordinal.hpp"

namespace tml {

// ---------------------------------------------------------------------------
// Unravelling

/// Tree of bundle walks of length <= k from s. Each step keeps the bundle's multiplicity.
/// The root keeps s's id; a walk extended along edge e to t gets id "<parent>/<e>:<t>".
inline KripkeModel unravel(const KripkeModel& m, WorldIndex s, std::size_t k) {
  std::vector<std::string> props(m.props().begin(), m.props().end());
  std::vector<World> worlds;
  std::vector<Edge> edges;
  struct Walk {
    WorldIndex source;
    std::size_t depth;
  };
  std::vector<Walk> walks;
  worlds.push_back(World{m.world(s).id, m.world(s).props});
  walks.push_back({s, 0});
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const Walk walk = walks[i];
    if (walk.depth == k) continue;
    for (std::size_t e : m.outgoing(walk.source)) {
      const Edge& edge = m.edge(e);
      const World& target = m.world(edge.to);
      edges.push_back(Edge{i, worlds.size(), edge.multiplicity});
      worlds.push_back(World{worlds[i].id + "/" + std::to_string(e) + ":" + target.id, target.props});
      walks.push_back({edge.to, walk.depth + 1});
    }
  }
  return KripkeModel(std::move(props), std::move(worlds), std::move(edges), WorldIndex{0});
}

/// Throws NonTreeError if a cycle is reachable from s. Shared subtrees are accepted: a
/// bundle already stands for independent copies.
inline void require_tree(const KripkeModel& m, WorldIndex s) {
  enum : char { White, Grey, Black };
  std::vector<char> colour(m.world_count(), White);
  std::vector<std::pair<WorldIndex, std::size_t>> stack{{s, 0}};
  colour[s] = Grey;
  while (!stack.empty()) {
    auto& [w, next] = stack.back();
    auto out = m.outgoing(w);
    if (next == out.size()) {
      colour[w] = Black;
      stack.pop_back();
      continue;
    }
    WorldIndex t = m.edge(out[next++]).to;
    if (colour[t] == Grey) throw NonTreeError("cycle through world '" + m.world(t).id + "' below '" + m.world(s).id + "'");
    if (colour[t] == White) {
      colour[t] = Grey;
      stack.emplace_back(t, 0);
    }
  }
}

// ---------------------------------------------------------------------------
// Signatures

/// Depth-bounded description of a pointed tree: valuation plus child signatures with the
/// total multiplicity of bundles reaching each.
struct Signature {
  std::size_t depth = 0;
  std::vector<std::string> valuation;
  std::vector<std::pair<Signature, Cardinal>> children;  // ordered by text form

  friend bool operator==(const Signature& a, const Signature& b);
};

inline std::string to_string(const Signature& sig) {
  std::string out = "{";
  for (std::size_t i = 0; i < sig.valuation.size(); ++i) out += (i ? "," : "") + sig.valuation[i];
  out += "}";
  if (!sig.children.empty()) {
    out += "[";
    for (std::size_t i = 0; i < sig.children.size(); ++i)
      out += (i ? ", " : "") + to_string(sig.children[i].first) + "*" + to_string(sig.children[i].second);
    out += "]";
  }
  return out;
}

inline bool operator==(const Signature& a, const Signature& b) {
  return a.depth == b.depth && to_string(a) == to_string(b);
}

/// Interns signatures of (world, depth) pairs as small integers.
class SignatureTable {
 public:
  using Id = std::size_t;

  explicit SignatureTable(const KripkeModel& m) : model_(m) {}

  Id id(WorldIndex w, std::size_t depth) {
    if (auto it = cache_.find({w, depth}); it != cache_.end()) return it->second;
    Key key;
    key.depth = depth;
    for (std::size_t p = 0; p < model_.props().size(); ++p) key.valuation.push_back(model_.holds(w, p));
    if (depth > 0) {
      std::map<Id, Cardinal> counts;
      for (std::size_t e : model_.outgoing(w)) counts[id(model_.edge(e).to, depth - 1)] += model_.edge(e).multiplicity;
      key.children.assign(counts.begin(), counts.end());
    }
    auto [it, inserted] = ids_.emplace(std::move(key), keys_.size());
    if (inserted) keys_.push_back(it->first);
    cache_.emplace(std::make_pair(w, depth), it->second);
    return it->second;
  }

  Signature describe(Id id) const {
    const Key& key = keys_[id];
    Signature sig;
    sig.depth = key.depth;
    for (std::size_t p = 0; p < key.valuation.size(); ++p)
      if (key.valuation[p]) sig.valuation.push_back(model_.props()[p]);
    for (const auto& [child, count] : key.children) sig.children.emplace_back(describe(child), count);
    std::sort(sig.children.begin(), sig.children.end(),
              [](const auto& a, const auto& b) { return to_string(a.first) < to_string(b.first); });
    return sig;
  }

 private:
  struct Key {
    std::size_t depth = 0;
    std::vector<bool> valuation;
    std::vector<std::pair<Id, Cardinal>> children;
    auto operator<=>(const Key&) const = default;
  };

  const KripkeModel& model_;
  std::map<Key, Id> ids_;
  std::vector<Key> keys_;
  std::map<std::pair<WorldIndex, std::size_t>, Id> cache_;
};

inline Signature signature(const KripkeModel& m, WorldIndex s, std::size_t depth) {
  require_tree(m, s);
  SignatureTable table(m);
  return table.describe(table.id(s, depth));
}

// ---------------------------------------------------------------------------
// Modal equivalence by bounded enumeration

struct EquivalenceResult {
  bool equivalent = true;
  std::optional<Formula> witness;
  int clause = 0;  // 1: truth values differ, 2: successor counts differ in magnitude
  std::size_t formulas_checked = 0;
  std::string reason;
};

/// (k, alpha, beta)-modal equivalence over the shared propositions, quantifying over every
/// enumerated formula of at most `size_bound` nodes. Agreement is only up to that bound.
inline EquivalenceResult modal_equiv_enum(const PointedModel& a, const PointedModel& b, std::size_t k,
                                          std::size_t alpha, std::size_t beta, std::size_t size_bound) {
  std::vector<std::string> shared;
  for (const auto& p : a.model.props())
    if (b.model.prop_index(p)) shared.push_back(p);
  if (shared.empty()) throw ModelError("the two models share no proposition");

  const auto formulas = enumerate_formulas(shared, k, size_bound);
  Checker ca(a.model);
  Checker cb(b.model);
  EquivalenceResult r;
  for (const Formula& f : formulas) {
    ++r.formulas_checked;
    const bool va = ca.eval(a.world, f);
    if (va != cb.eval(b.world, f)) {
      r.equivalent = false;
      r.witness = f;
      r.clause = 1;
      r.reason = to_string(f) + " is " + (va ? "true" : "false") + " on the left only";
      return r;
    }
  }
  auto satisfying = [](Checker& c, const PointedModel& pm, const Formula& f) {
    Cardinal total;
    const auto column = c.eval_all(f);
    for (std::size_t e : pm.model.outgoing(pm.world))
      if (column[pm.model.edge(e).to]) total += pm.model.edge(e).multiplicity;
    return total;
  };
  for (const Formula& f : formulas) {
    if (f.degree() >= k) continue;
    const Cardinal na = satisfying(ca, a, f);
    const Cardinal nb = satisfying(cb, b, f);
    if (na.is_zero() && nb.is_zero()) continue;
    bool same = !na.is_zero() && !nb.is_zero() && log_of_cardinal(na, alpha) == log_of_cardinal(nb, beta);
    if (!same) {
      r.equivalent = false;
      r.witness = f;
      r.clause = 2;
      r.reason = "successors satisfying " + to_string(f) + ": " + to_string(na) + " against " + to_string(nb);
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Compression into a model with finitely indexed multiplicities

namespace detail {

inline std::size_t min_base(const KripkeModel& m, WorldIndex w, std::size_t k,
                            std::map<std::pair<WorldIndex, std::size_t>, std::size_t>& memo) {
  if (k == 0 || m.is_dead_end(w)) return 0;
  if (auto it = memo.find({w, k}); it != memo.end()) return it->second;
  std::size_t best = 0;
  for (std::size_t e : m.outgoing(w)) best = std::max(best, min_base(m, m.edge(e).to, k - 1, memo));
  memo[{w, k}] = best + 3;
  return best + 3;
}

}  // namespace detail

/// Smallest n accepted by compress: 0 at leaves, three more than the largest child value above.
inline std::size_t min_base_index(const KripkeModel& m, WorldIndex s, std::size_t k) {
  require_tree(m, s);
  std::map<std::pair<WorldIndex, std::size_t>, std::size_t> memo;
  return detail::min_base(m, s, k, memo);
}

struct ClassPlan {
  std::string representative;  // id of the source world standing for the class
  Cardinal size;               // total multiplicity of the class in the source
  Cardinal assigned;           // multiplicity in the output
  int step = 4;                // 1..4, the rule that fixed `assigned`
};

struct NodePlan {
  std::string id;  // output world id
  std::string source;
  std::size_t depth = 0;
  std::size_t n = 0;
  std::size_t alpha = 0;
  std::optional<std::size_t> beta;  // index of the grandchild cardinal when infinite
  std::size_t l = 0;
  std::size_t c = 0;
  std::size_t m0 = 0;
  std::vector<ClassPlan> classes;
};

struct CompressionPlan {
  std::vector<NodePlan> nodes;
};

struct Compression {
  KripkeModel model;
  CompressionPlan plan;
};

struct CompressOptions {
  std::size_t max_level = kDefaultMaxLevel;  // every output index must stay below this
};

namespace detail {

class Compressor {
 public:
  Compressor(const KripkeModel& m, CompressOptions options) : m_(m), options_(options), table_(m) {}

  void run(WorldIndex s, std::size_t k, std::size_t n, std::size_t alpha) {
    worlds_.push_back(World{m_.world(s).id, m_.world(s).props});
    node(s, 0, k, n, alpha);
  }

  Compression finish() {
    std::vector<std::string> props(m_.props().begin(), m_.props().end());
    return Compression{KripkeModel(std::move(props), std::move(worlds_), std::move(edges_), WorldIndex{0}),
                       std::move(plan_)};
  }

 private:
  struct Class {
    WorldIndex rep;
    Cardinal size;
    bool live;
    std::optional<Cardinal> assigned;
    int step = 4;
  };

  Cardinal aleph(std::size_t index) const {
    if (index >= options_.max_level)
      throw CompressionError("compression needs aleph_" + std::to_string(index) + " but the maximum level is " +
                             std::to_string(options_.max_level));
    return Cardinal::aleph(index, options_.max_level);
  }

  void node(WorldIndex w, WorldIndex out, std::size_t k, std::size_t n, std::size_t alpha) {
    if (k == 0 || m_.is_dead_end(w)) return;

    std::map<SignatureTable::Id, std::size_t> by_signature;
    std::vector<Class> classes;
    Cardinal kappa;
    Cardinal grand;
    for (std::size_t e : m_.outgoing(w)) {
      const Edge& edge = m_.edge(e);
      kappa += edge.multiplicity;
      if (!m_.is_dead_end(edge.to)) grand += edge.multiplicity * successor_cardinality(m_, edge.to);
      auto id = table_.id(edge.to, k - 1);
      auto [it, fresh] = by_signature.emplace(id, classes.size());
      if (fresh) classes.push_back(Class{edge.to, edge.multiplicity, !m_.is_dead_end(edge.to), std::nullopt});
      else classes[it->second].size += edge.multiplicity;
    }

    NodePlan plan;
    plan.id = worlds_[out].id;
    plan.source = m_.world(w).id;
    plan.depth = k;
    plan.n = n;
    plan.alpha = alpha;
    for (const Class& cls : classes) plan.m0 = std::max(plan.m0, min_base(m_, cls.rep, k - 1, min_base_memo_));
    if (n < plan.m0 + 3)
      throw CompressionError("index " + std::to_string(n) + " is below the floor " + std::to_string(plan.m0 + 3) +
                             " at world '" + plan.source + "'");

    std::size_t child_alpha = 0;
    std::size_t child_n = n;
    plan.l = n;
    if (grand.is_infinite()) {
      const std::size_t beta = grand.index();
      plan.beta = beta;
      plan.l = alpha < beta ? n + 1 : alpha == beta ? n : n - 2;
      child_alpha = beta;
      child_n = plan.l;
    }

    for (Class& cls : classes)
      if (cls.size.is_aleph(alpha)) cls.assigned = aleph(n), cls.step = 1;

    bool processed = false;
    plan.c = plan.m0;
    if (plan.beta && k > 1) {
      for (Class& cls : classes) {
        if (cls.assigned || !cls.live || !cls.size.is_aleph(*plan.beta)) continue;
        cls.assigned = aleph(plan.l);
        cls.step = 2;
        if (!processed) plan.c = cls.size == kappa ? plan.l : plan.l + 1;
        processed = true;
      }
    }
    if (kappa.is_infinite())
      for (Class& cls : classes)
        if (!cls.assigned && cls.size == kappa) cls.assigned = aleph(plan.c), cls.step = 3;
    for (Class& cls : classes)
      if (!cls.assigned) cls.assigned = Cardinal::finite(1), cls.step = 4;

    for (const Class& cls : classes) {
      plan.classes.push_back(ClassPlan{m_.world(cls.rep).id, cls.size, *cls.assigned, cls.step});
      const WorldIndex child = worlds_.size();
      worlds_.push_back(World{worlds_[out].id + "/" + m_.world(cls.rep).id, m_.world(cls.rep).props});
      edges_.push_back(Edge{out, child, *cls.assigned});
    }
    const std::size_t first_child = worlds_.size() - classes.size();
    plan_.nodes.push_back(std::move(plan));
    for (std::size_t i = 0; i < classes.size(); ++i) node(classes[i].rep, first_child + i, k - 1, child_n, child_alpha);
  }

  const KripkeModel& m_;
  CompressOptions options_;
  SignatureTable table_;
  std::map<std::pair<WorldIndex, std::size_t>, std::size_t> min_base_memo_;
  std::vector<World> worlds_;
  std::vector<Edge> edges_;
  CompressionPlan plan_;
};

}  // namespace detail

/// Rebuilds the tree below s, keeping one representative per signature class at every node
/// and giving each class a multiplicity from {1, aleph_c, aleph_l, aleph_n}. Children reached
/// through an infinite grandchild cardinal aleph_beta are rebuilt with index l and base beta;
/// with finitely many grandchildren they are rebuilt with the parent's index and base 0.
inline Compression compress(const KripkeModel& m, WorldIndex s, std::size_t k, std::size_t n,
                            CompressOptions options = {}) {
  require_tree(m, s);
  const std::size_t floor = min_base_index(m, s, k);
  if (n < floor)
    throw CompressionError("index " + std::to_string(n) + " is below the minimum " + std::to_string(floor));
  const Cardinal kappa = successor_cardinality(m, s);
  const std::size_t alpha = kappa.is_infinite() ? kappa.index() : 0;
  detail::Compressor c(m, options);
  c.run(s, k, n, alpha);
  return c.finish();
}

inline std::string format_plan(const CompressionPlan& plan) {
  std::ostringstream os;
  for (const NodePlan& node : plan.nodes) {
    os << node.id << " (from " << node.source << ", depth " << node.depth << "): n=" << node.n
       << " alpha=" << node.alpha << " beta=" << (node.beta ? std::to_string(*node.beta) : std::string("-"))
       << " l=" << node.l << " c=" << node.c << " m0=" << node.m0 << "\n";
    for (const ClassPlan& cls : node.classes)
      os << "  class " << cls.representative << ": " << cls.size << " -> " << cls.assigned << " (step " << cls.step
         << ")\n";
  }
  return os.str();
}

}  // namespace tml
