#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tml/cardinal.hpp"
#include "tml/error.hpp"
#include "tml/formula.hpp"
#include "tml/model.hpp"
#include "tml/ordinal.hpp"

namespace tml {

enum class BoxBoxBranch { Infinite, FiniteFallback };

/// Record of one duplex-box evaluation. Rank -1 stands for the class of 0.
struct RankTrace {
  std::string world;
  std::string formula;  // the operand of the duplex box
  Cardinal kappa;
  Cardinal lambda;
  Cardinal grand_total;
  std::optional<std::size_t> zeta;
  Ordinal sum_h;
  Ordinal sum_h_pos;
  Ordinal sum_h_neg;
  std::optional<int> rank_pos;
  std::optional<int> rank_neg;
  bool verdict = false;
  BoxBoxBranch branch = BoxBoxBranch::FiniteFallback;
};

/// Evaluates formulas over every world at once, one column per subformula.
/// Columns are memoized for the lifetime of the checker.
class Checker {
 public:
  /// With `verify`, each duplex box is also decided through the ordinal sums and a
  /// disagreement with the rank shortcut throws std::logic_error.
  explicit Checker(const KripkeModel& model, bool verify = true) : model_(model), verify_(verify) {}

  const KripkeModel& model() const noexcept { return model_; }

  /// Collect a RankTrace for every duplex box computed from now on.
  void record_traces(bool on) { record_ = on; }
  const std::vector<RankTrace>& traces() const noexcept { return traces_; }

  bool eval(WorldIndex w, const Formula& f) { return column(f)[w] != 0; }

  /// Truth value at every world, indexed by WorldIndex.
  std::vector<bool> eval_all(const Formula& f) {
    const auto& col = column(f);
    return std::vector<bool>(col.begin(), col.end());
  }

  bool box_sat(WorldIndex s, const Formula& operand) { return box_from(s, column(operand)); }

  RankTrace boxbox_sat(WorldIndex s, const Formula& operand) {
    const auto& col = column(operand);
    return boxbox_from(s, col, to_string(operand));
  }

  std::size_t rank_checks() const noexcept { return rank_checks_; }

 private:
  using Column = std::vector<std::uint8_t>;

  const Column& column(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second.second;
    Column col(model_.world_count(), 0);
    const std::size_t n = model_.world_count();
    switch (f.connective()) {
      case Connective::Prop: {
        auto p = model_.prop_index(f.name());
        if (!p) throw EvaluationError("undeclared proposition '" + f.name() + "'");
        for (WorldIndex w = 0; w < n; ++w) col[w] = model_.holds(w, *p);
        break;
      }
      case Connective::Top:
        std::fill(col.begin(), col.end(), 1);
        break;
      case Connective::Not: {
        const Column& a = column(f.operand());
        for (WorldIndex w = 0; w < n; ++w) col[w] = !a[w];
        break;
      }
      case Connective::And: {
        const Column& a = column(f.left());
        const Column& b = column(f.right());
        for (WorldIndex w = 0; w < n; ++w) col[w] = a[w] && b[w];
        break;
      }
      case Connective::Box: {
        const Column& a = column(f.operand());
        for (WorldIndex w = 0; w < n; ++w) col[w] = box_from(w, a);
        break;
      }
      case Connective::BoxBox: {
        const Column& a = column(f.operand());
        const std::string text = record_ ? to_string(f.operand()) : std::string();
        for (WorldIndex w = 0; w < n; ++w) {
          RankTrace t = boxbox_from(w, a, text);
          col[w] = t.verdict;
          if (record_) traces_.push_back(std::move(t));
        }
        break;
      }
    }
    auto [it, inserted] = memo_.emplace(f.id(), std::make_pair(f, std::move(col)));
    return it->second.second;
  }

  Cardinal count(WorldIndex t, const Column& sat, bool polarity) const {
    Cardinal c;
    for (std::size_t e : model_.outgoing(t))
      if ((sat[model_.edge(e).to] != 0) == polarity) c += model_.edge(e).multiplicity;
    return c;
  }

  bool box_from(WorldIndex s, const Column& sat) const {
    if (successor_cardinality(model_, s).is_infinite()) return count(s, sat, true) > count(s, sat, false);
    for (std::size_t e : model_.outgoing(s))
      if (!sat[model_.edge(e).to]) return false;
    return true;
  }

  RankTrace boxbox_from(WorldIndex s, const Column& sat, const std::string& operand) {
    RankTrace t;
    t.world = model_.world(s).id;
    t.formula = operand;
    t.kappa = successor_cardinality(model_, s);
    t.lambda = live_successor_cardinality(model_, s);

    std::vector<std::size_t> live;
    std::vector<Bundle> h;
    for (std::size_t e : model_.outgoing(s)) {
      const Edge& edge = model_.edge(e);
      if (model_.is_dead_end(edge.to)) continue;
      live.push_back(e);
      const Cardinal kt = successor_cardinality(model_, edge.to);
      t.grand_total += edge.multiplicity * kt;
      h.emplace_back(edge.multiplicity, Ordinal::from_cardinal(kt));
    }
    t.sum_h = transfinite_sum(h);

    if (t.grand_total.is_finite()) {
      t.branch = BoxBoxBranch::FiniteFallback;
      t.verdict = true;
      for (std::size_t e : live)
        for (std::size_t g : model_.outgoing(model_.edge(e).to))
          if (!sat[model_.edge(g).to]) t.verdict = false;
      return t;
    }

    t.branch = BoxBoxBranch::Infinite;
    const std::size_t zeta = t.grand_total.index();
    t.zeta = zeta;
    Cardinal card_sum[2];
    Cardinal heavy[2];
    std::vector<Bundle> sums[2];
    for (std::size_t e : live) {
      const Edge& edge = model_.edge(e);
      for (int x = 0; x < 2; ++x) {
        const Cardinal c = count(edge.to, sat, x == 0);
        card_sum[x] += edge.multiplicity * c;
        if (c == t.grand_total) heavy[x] += edge.multiplicity;
        sums[x].emplace_back(edge.multiplicity, Ordinal::from_cardinal(c));
      }
    }
    int rank[2];
    for (int x = 0; x < 2; ++x) {
      if (card_sum[x].is_zero()) rank[x] = -1;
      else if (heavy[x] == t.grand_total) rank[x] = 2;
      else if (card_sum[x] == t.grand_total) rank[x] = 1;
      else rank[x] = 0;
    }
    t.rank_pos = rank[0];
    t.rank_neg = rank[1];
    t.verdict = rank[0] > rank[1];
    t.sum_h_pos = transfinite_sum(sums[0]);
    t.sum_h_neg = transfinite_sum(sums[1]);

    if (verify_) {
      ++rank_checks_;
      const bool reference = class_compare(t.sum_h_pos, t.sum_h_neg, zeta) == ClassOrder::Greater;
      auto ref_rank = [zeta](const Ordinal& sum) {
        return sum.is_zero() ? -1 : static_cast<int>(log(sum, zeta));
      };
      if (reference != t.verdict || ref_rank(t.sum_h_pos) != rank[0] || ref_rank(t.sum_h_neg) != rank[1])
        throw std::logic_error("duplex box rank shortcut disagrees with the ordinal sums at world '" + t.world + "'");
    }
    return t;
  }

  const KripkeModel& model_;
  bool verify_;
  bool record_ = false;
  std::size_t rank_checks_ = 0;
  std::vector<RankTrace> traces_;
  // The stored Formula keeps the node behind the key alive.
  std::map<const void*, std::pair<Formula, Column>> memo_;
};

inline bool eval(const KripkeModel& m, WorldIndex s, const Formula& f) { return Checker(m).eval(s, f); }

inline std::vector<bool> eval_all(const KripkeModel& m, const Formula& f) { return Checker(m).eval_all(f); }

inline bool box_sat(const KripkeModel& m, WorldIndex s, const Formula& operand) {
  return Checker(m).box_sat(s, operand);
}

inline RankTrace boxbox_sat(const KripkeModel& m, WorldIndex s, const Formula& operand) {
  return Checker(m).boxbox_sat(s, operand);
}

inline std::string format_trace(const RankTrace& t) {
  std::ostringstream os;
  os << "[2]" << (t.formula.empty() ? std::string("?") : "(" + t.formula + ")") << " at " << t.world << ": "
     << (t.verdict ? "true" : "false") << "\n";
  os << "  kappa = " << t.kappa << ", lambda = " << t.lambda << ", |sum h| = " << t.grand_total << "\n";
  os << "  sum h = " << t.sum_h << "\n";
  if (t.branch == BoxBoxBranch::FiniteFallback) {
    os << "  branch = finite (every grandchild)\n";
    return os.str();
  }
  os << "  branch = infinite, zeta = " << *t.zeta << "\n";
  os << "  sum h+ = " << t.sum_h_pos << ", rank+ = " << *t.rank_pos << "\n";
  os << "  sum h- = " << t.sum_h_neg << ", rank- = " << *t.rank_neg << "\n";
  return os.str();
}

}  // namespace tml
